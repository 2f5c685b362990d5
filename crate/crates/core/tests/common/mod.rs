//! Arrangement corpus shared by the integration tests.
#![allow(dead_code)]

use bs3_core::arrangement::{parse_arrangement, singular_points, validate, Arrangement, LinearForm};
use bs3_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ZIEGLER_F: &str = "x,y,z,x+3z,x+y+z,x+2y+3z,2x+y+z,2x+3y+z,2x+3y+4z";
pub const ZIEGLER_G: &str = "x,y,z,x+5z,x+y+z,x+3y+5z,2x+y+z,2x+3y+z,2x+3y+4z";
pub const BRAID: &str = "x,y,z,x-y,x-z,y-z";

#[derive(Debug, Clone)]
pub struct Entry {
    pub label: String,
    pub arrangement: Arrangement,
    pub generic: bool,
}

pub fn arr(text: &str) -> Arrangement {
    parse_arrangement(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn is_generic(a: &Arrangement) -> bool {
    singular_points(a).iter().all(|p| p.multiplicity == 2)
}

fn random_forms(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Vec<LinearForm> {
    (0..d)
        .filter_map(|_| {
            let [a, b, c] = [0; 3].map(|_| rng.gen_range(-bound..=bound));
            LinearForm::from_integers(a, b, c).ok()
        })
        .collect()
}

/// Random valid arrangements of degree `d`; `generic` asks for no triple points.
pub fn random_arrangements(seed: u64, d: usize, bound: i64, generic: bool, count: usize) -> Vec<Arrangement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Arrangement> = Vec::new();
    while out.len() < count {
        let forms = random_forms(&mut rng, d, bound);
        if forms.len() != d {
            continue;
        }
        match validate(forms) {
            Ok(a) if generic && !is_generic(&a) => {}
            Ok(a) if out.contains(&a) => {}
            Ok(a) => out.push(a),
            Err(Error::NotReduced(_) | Error::NotEssential(_) | Error::Decomposable) => {}
            Err(e) => panic!("unexpected validation error {e}"),
        }
    }
    out
}

/// An `m`-fold point at `(0 : 0 : 1)` together with extra lines off it.
fn multiple_point(m: usize, extra: &[&str]) -> String {
    let mut forms = vec!["x".to_string(), "y".to_string()];
    forms.extend((1..m - 1).map(|k| format!("{k}x+y")));
    forms.extend(extra.iter().map(|s| s.to_string()));
    forms.join(",")
}

pub fn corpus() -> Vec<Entry> {
    let mut entries = Vec::new();
    let mut push = |label: String, a: Arrangement, generic: bool| {
        entries.push(Entry { label, arrangement: a, generic })
    };
    push("four lines".into(), arr("x,y,z,x+y+z"), true);
    for (d, n) in [(4, 3), (5, 4), (6, 3)] {
        for (i, a) in random_arrangements(100 + d as u64, d, 5, true, n).into_iter().enumerate() {
            push(format!("generic d={d} #{i}"), a, true);
        }
    }
    push("braid".into(), arr(BRAID), false);
    push("non-Fano".into(), arr("x,y,z,x+y,x+z,y+z,x+y+z"), false);
    push("X3".into(), arr("x,y,z,x+y,x+z,y+z"), false);
    push("B3".into(), arr("x,y,z,x+y,x-y,x+z,x-z,y+z,y-z"), false);
    push("deleted B3".into(), arr("x,y,z,x+y,x-y,x+z,x-z,y+z"), false);
    push("B3 minus two".into(), arr("x,y,z,x+y,x-y,x+z,x-z"), false);
    push("braid plus x+y+z".into(), arr("x,y,z,x-y,x-z,y-z,x+y+z"), false);
    for (m, extra) in [
        (3, &["z", "x+2y+3z"][..]),
        (3, &["z", "x-y+z", "2x+y-z"][..]),
        (4, &["z", "x+y+z"][..]),
        (4, &["z", "x+5y-2z", "3x+y+z"][..]),
        (5, &["z", "x+3y+7z"][..]),
        (5, &["z", "x+y+z", "2x-y+3z"][..]),
    ] {
        let text = multiple_point(m, extra);
        push(format!("{m}-fold point + {} lines", extra.len()), arr(&text), false);
    }
    push("Ziegler f".into(), arr(ZIEGLER_F), false);
    push("Ziegler g".into(), arr(ZIEGLER_G), false);
    for d in 4..=7 {
        for (i, a) in random_arrangements(7 * d as u64, d, 2, false, 6).into_iter().enumerate() {
            let generic = is_generic(&a);
            push(format!("random d={d} #{i}"), a, generic);
        }
    }
    entries
}
