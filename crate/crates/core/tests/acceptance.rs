//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use bs3_core::arrangement::{full_root_report, ArrangementRootReport};
use bs3_core::bsroots::{
    check_partial_symmetry, homogeneous_taxonomy, new_roots, reconstruct_zero_set, roots_isolated,
    small_roots, xi_set, RootSet,
};
use bs3_core::graded::{graded_dimension, graded_dimension_std};
use bs3_core::groebner::{buchberger, Ideal, Limits, MonomialOrder};
use bs3_core::milnor::milnor_profile;
use bs3_core::polyring::{int, monomials_of_degree, parse_polynomial, rat, Polynomial, WeightSystem};
use common::{arr, corpus, Entry, ZIEGLER_F, ZIEGLER_G};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Computed {
    entry: Entry,
    report: Result<ArrangementRootReport, String>,
}

fn ziegler_pair() -> Outcome {
    let mut reports = Vec::new();
    for text in [ZIEGLER_F, ZIEGLER_G] {
        let start = Instant::now();
        let r = full_root_report(&arr(text), &Limits::default()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        check(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
        reports.push((r, elapsed));
    }
    let (f, tf) = &reports[0];
    let (g, tg) = &reports[1];
    let (wf, wg) = (&f.conditions.witness, &g.conditions.witness);
    let h0 = |r: &ArrangementRootReport, q| r.profile.h0.get(&int(q));
    check(h0(f, 8) == 1 && h0(f, 13) == 1, || format!("h0 of f at 8, 13: {}", f.profile.h0))?;
    check(h0(g, 8) == 0 && h0(g, 13) == 0, || format!("h0 of g at 8, 13: {}", g.profile.h0))?;
    check(wf.sheaf_dim_e == 42 && wg.sheaf_dim_e == 42, || "sheaf dimension at twist 13".into())?;
    check(wf.milnor_dim_at_2d_minus_5 == 43 && wg.milnor_dim_at_2d_minus_5 == 42, || {
        format!("[R/(∂)]_13 = {} / {}", wf.milnor_dim_at_2d_minus_5, wg.milnor_dim_at_2d_minus_5)
    })?;
    check(wf.gamma_at_d_minus_1 == 65 && wg.gamma_at_d_minus_1 == 66, || {
        format!("twist-8 sections {} / {}", wf.gamma_at_d_minus_1, wg.gamma_at_d_minus_1)
    })?;
    check(wf.der_log0_at_d_minus_2 == 24 && wg.der_log0_at_d_minus_2 == 24, || "Der_7".into())?;
    check(wf.binomial_term == 42, || "C(10,2) - 3".into())?;
    let diff = f.full_zero_set.difference(&g.full_zero_set);
    check(diff == [rat(-16, 9)].into_iter().collect(), || format!("f \\ g = {diff}"))?;
    check(g.full_zero_set.is_subset(&f.full_zero_set), || "g has roots f lacks".into())?;
    Ok(format!(
        "h0_8 = h0_13 = 1 vs 0; 42 < 43, 42 = 42; 65 < 66, 66 = 66; difference {{-16/9}} ({tf:.1?}, {tg:.1?})"
    ))
}

fn ok_reports(computed: &[Computed]) -> Result<Vec<(&Entry, &ArrangementRootReport)>, String> {
    computed
        .iter()
        .map(|c| match &c.report {
            Ok(r) => Ok((&c.entry, r)),
            Err(e) => Err(format!("{}: {e}", c.entry.label)),
        })
        .collect()
}

fn condition_equivalence(computed: &[Computed]) -> Outcome {
    check(computed.len() >= 40, || format!("corpus has only {} arrangements", computed.len()))?;
    let reports = ok_reports(computed)?;
    let mut present = 0;
    for (e, r) in &reports {
        let b = r.conditions.booleans();
        check(b.iter().all(|&x| x == b[0]), || format!("{}: conditions {b:?}", e.label))?;
        present += b[0] as usize;
    }
    Ok(format!(
        "{} arrangements, six conditions agree on all ({present} with the extra root)",
        reports.len()
    ))
}

fn isolated_formula() -> Outcome {
    let w = WeightSystem::standard(3);
    let roots = |s: &str| -> Result<RootSet, String> {
        let f = parse_polynomial(s, 3).map_err(|e| e.to_string())?;
        let p = milnor_profile(&f, &w, &Limits::default()).map_err(|e| e.to_string())?;
        roots_isolated(&p).map_err(|e| e.to_string())
    };
    let q = roots("x^2+y^2+z^2")?;
    let c = roots("x^3+y^3+z^3")?;
    check(q == [rat(-3, 2), int(-1)].into_iter().collect(), || format!("quadric {q}"))?;
    let want: RootSet = [int(-2), rat(-5, 3), rat(-4, 3), int(-1)].into_iter().collect();
    check(c == want, || format!("Fermat cubic {c}"))?;
    Ok(format!("quadric {q}, Fermat cubic {c}"))
}

fn degree_symmetry(computed: &[Computed]) -> Outcome {
    let mut nonempty = 0;
    for (e, r) in ok_reports(computed)? {
        let h0 = &r.profile.h0;
        let Some(tau) = h0.min_degree() else { continue };
        nonempty += 1;
        let d = int(e.arrangement.degree() as i64);
        let top = &d * int(3) - int(6) - tau;
        let mut t = tau.clone();
        while t <= top {
            check(h0.get(&t) > 0, || format!("{}: gap at {t} in {h0}", e.label))?;
            let mirror = &top + tau - &t;
            check(h0.get(&t) == h0.get(&mirror), || format!("{}: asymmetric {h0}", e.label))?;
            t += int(1);
        }
        check(h0.len() == h0.support().iter().filter(|q| *q >= tau && *q <= &top).count(), || {
            format!("{}: support {h0} leaves [{tau}, {top}]", e.label)
        })?;
    }
    Ok(format!("support is [τ, 3d-6-τ] with symmetric dims on {nonempty} arrangements; others have H⁰ = 0"))
}

fn partial_symmetry(computed: &[Computed]) -> Outcome {
    let reports = ok_reports(computed)?;
    for (e, r) in &reports {
        let s = check_partial_symmetry(&r.full_zero_set, &xi_set(&r.profile));
        check(s.is_symmetric(), || format!("{}: {} not mirrored", e.label, s.asymmetric_outside_xi))?;
    }
    Ok(format!("zero set outside Ξ_f is σ-closed on {} arrangements", reports.len()))
}

fn containment(computed: &[Computed]) -> Outcome {
    let reports = ok_reports(computed)?;
    for (e, r) in &reports {
        let n = new_roots(&r.profile);
        check(n.is_subset(&r.full_zero_set), || format!("{}: new roots {n}", e.label))?;
        let small = small_roots(&r.profile);
        let window = r.full_zero_set.in_open_closed(&int(-3), &int(-2));
        check(small == window, || format!("{}: small {small} vs {window}", e.label))?;
    }
    Ok(format!("new roots contained and small roots match on {} arrangements", reports.len()))
}

fn taxonomy(computed: &[Computed]) -> Outcome {
    let reports = ok_reports(computed)?;
    let mut with_tau = 0;
    for (e, r) in &reports {
        let interval = r.interval_roots();
        let rebuilt = if r.profile.h0.is_empty() {
            reconstruct_zero_set(&RootSet::new(), &interval)
        } else {
            with_tau += 1;
            homogeneous_taxonomy(&r.profile, &interval).map_err(|err| err.to_string())?.reconstructed
        };
        check(rebuilt == r.full_zero_set, || {
            format!("{}: rebuilt {rebuilt} vs {}", e.label, r.full_zero_set)
        })?;
    }
    Ok(format!(
        "reconstruction exact on {} arrangements ({with_tau} through τ, the rest with Υ empty)",
        reports.len()
    ))
}

fn random_homogeneous(rng: &mut ChaCha8Rng, w: &WeightSystem) -> Polynomial {
    loop {
        let deg = int(rng.gen_range(1..=5));
        let monos = monomials_of_degree(w, &deg);
        let mut p = Polynomial::zero(3);
        for _ in 0..rng.gen_range(1..=4) {
            let m = monos[rng.gen_range(0..monos.len())];
            p.add_term(m, int(rng.gen_range(-3..=3)));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let w = WeightSystem::standard(3);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut compared = 0;
    for i in 0..100 {
        let n = rng.gen_range(1..=3);
        let ideal = Ideal::new(3, (0..n).map(|_| random_homogeneous(&mut rng, &w)).collect());
        let gb = buchberger(&ideal, &MonomialOrder::grevlex(3)).map_err(|e| e.to_string())?;
        for q in 0..=8 {
            let q = int(q);
            let la = graded_dimension(&ideal, &w, &q).map_err(|e| e.to_string())?;
            let std = graded_dimension_std(&gb, &w, &q);
            check(la == std, || format!("ideal #{i} {ideal} degree {q}: {la} vs {std}"))?;
            compared += 1;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("100 ideals, {compared} graded pieces agree ({elapsed:.1?})"))
}

fn generic_corroboration(computed: &[Computed]) -> Outcome {
    let mut seen = [0usize; 2];
    for (e, r) in ok_reports(computed)? {
        let d = e.arrangement.degree() as i64;
        if !e.generic || !(4..=5).contains(&d) {
            continue;
        }
        let mut want: RootSet = (3..=2 * d - 2).map(|j| rat(-j, d)).collect();
        want.insert(int(-1));
        check(r.full_zero_set == want, || format!("{}: {} vs {want}", e.label, r.full_zero_set))?;
        check(r.conditions.cond_b, || format!("{}: condition (b) fails", e.label))?;
        seen[(d - 4) as usize] += 1;
    }
    check(seen[0] > 0 && seen[1] > 0, || format!("generic arrangements seen: {seen:?}"))?;
    Ok(format!("{} generic d=4 and {} generic d=5 arrangements match", seen[0], seen[1]))
}

fn main() {
    let start = Instant::now();
    let computed: Vec<Computed> = corpus()
        .into_iter()
        .map(|entry| {
            let report =
                full_root_report(&entry.arrangement, &Limits::default()).map_err(|e| e.to_string());
            Computed { entry, report }
        })
        .collect();
    println!("corpus of {} arrangements computed in {:.1?}", computed.len(), start.elapsed());

    let results: Vec<(&str, Outcome)> = vec![
        ("Ziegler pair reproduction", ziegler_pair()),
        ("condition equivalence", condition_equivalence(&computed)),
        ("isolated formula", isolated_formula()),
        ("degree symmetry and interval structure", degree_symmetry(&computed)),
        ("partial symmetry", partial_symmetry(&computed)),
        ("containment", containment(&computed)),
        ("taxonomy reconstruction", taxonomy(&computed)),
        ("oracle equivalence", oracle_equivalence()),
        ("generic corroboration", generic_corroboration(&computed)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
