//! Report assembly. Every field is a plain string, number, boolean, list or map so
//! that JSON and text output carry exactly the same content.

use bs3_core::arrangement::{full_root_report, Arrangement};
use bs3_core::bsroots::{
    blf_roots, new_roots, roots_isolated, small_roots, tlct_holds, upsilon, xi_set, RootSet,
};
use bs3_core::graded::DegreeData;
use bs3_core::groebner::Limits;
use bs3_core::milnor::{milnor_profile, MilnorProfile};
use bs3_core::polyring::{Polynomial, Rational, WeightSystem};
use bs3_core::Result;
use num_traits::ToPrimitive;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Degree table serialized as a map in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees(Vec<(String, usize)>);

impl From<&DegreeData> for Degrees {
    fn from(d: &DegreeData) -> Self {
        Degrees(d.entries().map(|(q, n)| (q.to_string(), *n)).collect())
    }
}

impl Serialize for Degrees {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (q, n) in &self.0 {
            map.serialize_entry(q, n)?;
        }
        map.end()
    }
}

fn roots(r: &RootSet) -> Vec<String> {
    r.iter().map(Rational::to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lct_lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forms: Option<String>,
    pub step_cap: u64,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Milnor(MilnorResult),
    Isolated(IsolatedResult),
    Lqh(LqhResult),
    Arrangement(Box<ArrangementResult>),
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Input,
    pub result: Outcome,
    /// Hypotheses the caller asserted and the tool did not verify.
    pub assertions: Vec<String>,
    pub timing_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct MilnorResult {
    pub polynomial: String,
    pub weights: String,
    pub wdeg_f: String,
    pub weight_sum: String,
    pub jacobian: Vec<String>,
    pub is_isolated: bool,
    pub milnor_algebra_degrees: Option<Degrees>,
    pub h0: Degrees,
    pub blf_roots: Vec<String>,
}

pub fn milnor(f: &Polynomial, w: &WeightSystem, limits: &Limits) -> Result<MilnorResult> {
    let p = milnor_profile(f, w, limits)?;
    Ok(MilnorResult {
        polynomial: p.f.to_string(),
        weights: w.to_string(),
        wdeg_f: p.wdeg_f.to_string(),
        weight_sum: p.weight_sum().to_string(),
        jacobian: p.jacobian.generators().iter().map(|g| g.to_string()).collect(),
        is_isolated: p.is_isolated,
        milnor_algebra_degrees: p.milnor_algebra_degrees.as_ref().map(Degrees::from),
        h0: Degrees::from(&p.h0),
        blf_roots: roots(&blf_roots(&p)),
    })
}

#[derive(Debug, Serialize)]
pub struct IsolatedResult {
    pub polynomial: String,
    pub weights: String,
    pub wdeg_f: String,
    pub milnor_algebra_degrees: Option<Degrees>,
    pub roots: Vec<String>,
}

pub fn isolated(f: &Polynomial, w: &WeightSystem, limits: &Limits) -> Result<IsolatedResult> {
    let p = milnor_profile(f, w, limits)?;
    let r = roots_isolated(&p)?;
    Ok(IsolatedResult {
        polynomial: p.f.to_string(),
        weights: w.to_string(),
        wdeg_f: p.wdeg_f.to_string(),
        milnor_algebra_degrees: p.milnor_algebra_degrees.as_ref().map(Degrees::from),
        roots: roots(&r),
    })
}

#[derive(Debug, Serialize)]
pub struct Tlct {
    pub lambda: String,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct LqhResult {
    pub polynomial: String,
    pub weights: String,
    pub wdeg_f: String,
    pub weight_sum: String,
    pub h0: Degrees,
    pub new_roots: Vec<String>,
    pub xi_set: Vec<String>,
    pub small_roots: Vec<String>,
    pub blf_roots: Vec<String>,
    /// Smallest degree of `H⁰`, reported for the standard grading only.
    pub tau: Option<i64>,
    pub upsilon: Option<Vec<String>>,
    pub tlct: Option<Tlct>,
}

fn tau_and_upsilon(p: &MilnorProfile) -> (Option<i64>, Option<Vec<String>>) {
    if !p.weights.is_standard() {
        return (None, None);
    }
    let tau = p.h0.min_degree().and_then(|t| t.to_integer().to_i64());
    let d = p.wdeg_f.to_integer().to_i64();
    match (tau, d) {
        (Some(t), Some(d)) => (Some(t), Some(roots(&upsilon(t, d)))),
        _ => (None, None),
    }
}

pub fn lqh(
    f: &Polynomial,
    w: &WeightSystem,
    lambda: Option<&Rational>,
    limits: &Limits,
) -> Result<LqhResult> {
    let p = milnor_profile(f, w, limits)?;
    let tlct = match lambda {
        Some(l) => Some(Tlct { lambda: l.to_string(), holds: tlct_holds(&p, l)? }),
        None => None,
    };
    let (tau, upsilon) = tau_and_upsilon(&p);
    Ok(LqhResult {
        polynomial: p.f.to_string(),
        weights: w.to_string(),
        wdeg_f: p.wdeg_f.to_string(),
        weight_sum: p.weight_sum().to_string(),
        h0: Degrees::from(&p.h0),
        new_roots: roots(&new_roots(&p)),
        xi_set: roots(&xi_set(&p)),
        small_roots: roots(&small_roots(&p)),
        blf_roots: roots(&blf_roots(&p)),
        tau,
        upsilon,
        tlct,
    })
}

#[derive(Debug, Serialize)]
pub struct Point {
    pub point: String,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize)]
pub struct Conditions {
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
    pub g: bool,
    pub consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub h0_at_d_minus_1: usize,
    pub h0_at_2d_minus_5: usize,
    pub regularity: i64,
    pub sheaf_dim_e: usize,
    pub milnor_dim_at_2d_minus_5: usize,
    pub milnor_dim_at_d_minus_1: usize,
    pub h1_at_2d_minus_5: usize,
    pub h1_at_d_minus_1: usize,
    pub der_log0_at_d_minus_2: usize,
    pub binomial_term: usize,
    pub gamma_at_d_minus_1: usize,
    pub relation_space_dim: usize,
    pub length_three_span_dim: usize,
}

#[derive(Debug, Serialize)]
pub struct ArrangementResult {
    pub degree: usize,
    pub forms: Vec<String>,
    pub singular_points: Vec<Point>,
    pub h0: Degrees,
    pub comb_roots: Vec<String>,
    pub non_comb_root: String,
    pub non_comb_present: bool,
    pub full_zero_set: Vec<String>,
    pub xi_set: Vec<String>,
    pub conditions: Conditions,
    pub witness: Witness,
}

pub fn arrangement(a: &Arrangement, limits: &Limits) -> Result<ArrangementResult> {
    let r = full_root_report(a, limits)?;
    let c = &r.conditions;
    let w = &c.witness;
    Ok(ArrangementResult {
        degree: a.degree(),
        forms: a.forms().iter().map(|l| l.to_string()).collect(),
        singular_points: r
            .singular_points
            .iter()
            .map(|z| {
                let [x, y, t] = &z.point;
                Point { point: format!("({x} : {y} : {t})"), multiplicity: z.multiplicity }
            })
            .collect(),
        h0: Degrees::from(&r.profile.h0),
        comb_roots: roots(&r.comb_roots),
        non_comb_root: r.non_comb_root.to_string(),
        non_comb_present: r.non_comb_present,
        full_zero_set: roots(&r.full_zero_set),
        xi_set: roots(&xi_set(&r.profile)),
        conditions: Conditions {
            b: c.cond_b,
            c: c.cond_c,
            d: c.cond_d,
            e: c.cond_e,
            f: c.cond_f,
            g: c.cond_g,
            consistent: c.consistent,
        },
        witness: Witness {
            h0_at_d_minus_1: w.h0_at_d_minus_1,
            h0_at_2d_minus_5: w.h0_at_2d_minus_5,
            regularity: w.regularity,
            sheaf_dim_e: w.sheaf_dim_e,
            milnor_dim_at_2d_minus_5: w.milnor_dim_at_2d_minus_5,
            milnor_dim_at_d_minus_1: w.milnor_dim_at_d_minus_1,
            h1_at_2d_minus_5: w.h1_at_2d_minus_5,
            h1_at_d_minus_1: w.h1_at_d_minus_1,
            der_log0_at_d_minus_2: w.der_log0_at_d_minus_2,
            binomial_term: w.binomial_term,
            gamma_at_d_minus_1: w.gamma_at_d_minus_1,
            relation_space_dim: w.relation_space_dim,
            length_three_span_dim: w.length_three_span_dim,
        },
    })
}
