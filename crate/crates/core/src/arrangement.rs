//! Central line arrangements in `C³`: validation, intersection combinatorics,
//! formality, the equivalent conditions for the non-combinatorial root, and the
//! full zero set of `b_f`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::bsroots::{new_roots, RootSet};
use crate::error::{Error, Result};
use crate::groebner::Limits;
use crate::linalg::{span_dimension, RationalMatrix};
use crate::milnor::{der_log0_graded_dimension, milnor_profile, MilnorProfile};
use crate::polyring::{int, parse_polynomial, Monomial, Polynomial, Rational, WeightSystem};

/// A linear form `a x + b y + c z`, scaled so its first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coefficients: [Rational; 3],
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales so the first nonzero entry is 1; `None` for the zero vector.
fn normalize(v: [Rational; 3]) -> Option<[Rational; 3]> {
    let lead = v.iter().find(|c| !c.is_zero())?.clone();
    Some(v.map(|c| c / &lead))
}

impl LinearForm {
    pub fn new(coefficients: [Rational; 3]) -> Result<Self> {
        let coefficients = normalize(coefficients)
            .ok_or_else(|| Error::InvalidArgument("linear form with all coefficients zero".into()))?;
        Ok(LinearForm { coefficients })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new([int(a), int(b), int(c)])
    }

    /// Parses one form in the polynomial grammar; it must be homogeneous of degree 1.
    pub fn parse(text: &str) -> Result<Self> {
        let p = parse_polynomial(text, 3)?;
        if p.is_zero() || p.total_degree() != Some(1) || p.terms().any(|(m, _)| m.degree() != 1) {
            return Err(Error::InvalidArgument(format!("'{}' is not a linear form", text.trim())));
        }
        Self::new([0, 1, 2].map(|i| p.coefficient(&Monomial::var(i))))
    }

    pub fn coefficients(&self) -> &[Rational; 3] {
        &self.coefficients
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.coefficients)
    }

    pub fn vanishes_at(&self, point: &[Rational; 3]) -> bool {
        dot(&self.coefficients, point).is_zero()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Parses a comma-separated list of linear forms.
pub fn parse_forms(text: &str) -> Result<Vec<LinearForm>> {
    text.split(',').map(LinearForm::parse).collect()
}

/// A central, essential, reduced, indecomposable arrangement of lines in `P²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    forms: Vec<LinearForm>,
}

impl Arrangement {
    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn degree(&self) -> usize {
        self.forms.len()
    }

    /// The product of the forms.
    pub fn defining_polynomial(&self) -> Polynomial {
        self.forms.iter().fold(Polynomial::one(3), |acc, l| &acc * &l.to_polynomial())
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.forms.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn normal_rank(forms: &[&LinearForm]) -> usize {
    let rows: Vec<Vec<Rational>> = forms.iter().map(|l| l.coefficients.to_vec()).collect();
    span_dimension(&rows).expect("rows of length 3")
}

pub fn validate(forms: Vec<LinearForm>) -> Result<Arrangement> {
    for (i, l) in forms.iter().enumerate() {
        if forms[..i].contains(l) {
            return Err(Error::NotReduced(format!("the form {l} appears twice")));
        }
    }
    let rank = normal_rank(&forms.iter().collect::<Vec<_>>());
    if rank < 3 {
        return Err(Error::NotEssential(rank));
    }
    if !is_indecomposable(&forms) {
        return Err(Error::Decomposable);
    }
    Ok(Arrangement { forms })
}

/// Parses and validates a comma-separated list of forms.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    validate(parse_forms(text)?)
}

/// False iff the normals split into two nonempty blocks whose ranks add up to 3,
/// i.e. the product factors into polynomials in disjoint sets of variables.
pub fn is_indecomposable(forms: &[LinearForm]) -> bool {
    let d = forms.len();
    if d < 2 {
        return true;
    }
    let total = normal_rank(&forms.iter().collect::<Vec<_>>());
    // Masks always put form 0 in the first block.
    (0u64..(1u64 << (d - 1)) - 1).all(|mask| {
        let (mut first, mut second) = (vec![&forms[0]], Vec::new());
        for (i, l) in forms.iter().enumerate().skip(1) {
            if mask & (1 << (i - 1)) != 0 {
                first.push(l);
            } else {
                second.push(l);
            }
        }
        normal_rank(&first) + normal_rank(&second) != total
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SingularPoint {
    /// Projective coordinates with first nonzero entry 1.
    pub point: [Rational; 3],
    pub multiplicity: usize,
    /// Indices of the forms through the point, ascending.
    pub lines: Vec<usize>,
}

impl fmt::Display for SingularPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.point;
        write!(f, "({a} : {b} : {c}) m={}", self.multiplicity)
    }
}

pub fn singular_points(a: &Arrangement) -> Vec<SingularPoint> {
    let mut points: BTreeSet<[Rational; 3]> = BTreeSet::new();
    for (i, l) in a.forms.iter().enumerate() {
        for m in &a.forms[i + 1..] {
            let p = normalize(cross(&l.coefficients, &m.coefficients))
                .expect("distinct lines meet in a point");
            points.insert(p);
        }
    }
    points
        .into_iter()
        .map(|point| {
            let lines: Vec<usize> =
                (0..a.forms.len()).filter(|&k| a.forms[k].vanishes_at(&point)).collect();
            SingularPoint { multiplicity: lines.len(), point, lines }
        })
        .collect()
}

/// `{-k/d : 3 ≤ k ≤ 2d-3} ∪ ⋃_z {-i/m_z : 2 ≤ i ≤ 2m_z - 2}`.
pub fn comb_roots(a: &Arrangement) -> RootSet {
    comb_roots_from(a.degree(), &singular_points(a))
}

fn comb_roots_from(d: usize, points: &[SingularPoint]) -> RootSet {
    let d = d as i64;
    let mut roots: RootSet = (3..=2 * d - 3).map(|k| int(-k) / int(d)).collect();
    for z in points {
        let m = z.multiplicity as i64;
        for i in 2..=2 * m - 2 {
            roots.insert(int(-i) / int(m));
        }
    }
    roots
}

/// The non-combinatorial candidate `(-2d + 2)/d`.
pub fn non_comb_root(a: &Arrangement) -> Rational {
    let d = a.degree() as i64;
    int(-2 * d + 2) / int(d)
}

/// Dimension of the space of linear relations among the normals, `d - 3`.
pub fn relation_space_dimension(a: &Arrangement) -> usize {
    let cols: Vec<Vec<Rational>> = a.forms.iter().map(|l| l.coefficients.to_vec()).collect();
    RationalMatrix::from_columns(&cols, 3).expect("columns of length 3").kernel_dimension()
}

/// The relation `α l_i + β l_j + γ l_k = 0` among three concurrent normals, embedded in `Q^d`.
fn triple_relation(a: &Arrangement, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let (u, v, w) = (&a.forms[i].coefficients, &a.forms[j].coefficients, &a.forms[k].coefficients);
    let rows: Vec<[Rational; 3]> =
        (0..3).map(|r| [u[r].clone(), v[r].clone(), w[r].clone()]).collect();
    let kernel = (0..3)
        .flat_map(|p| (p + 1..3).map(move |q| (p, q)))
        .map(|(p, q)| cross(&rows[p], &rows[q]))
        .find(|c| c.iter().any(|x| !x.is_zero()))
        .expect("three distinct normals have rank 2");
    let mut rel = vec![Rational::zero(); a.degree()];
    rel[i] = kernel[0].clone();
    rel[j] = kernel[1].clone();
    rel[k] = kernel[2].clone();
    rel
}

/// Dimension of the span of the length-3 relations, one per concurrent triple.
pub fn length_three_span_dimension(a: &Arrangement) -> usize {
    let mut relations = Vec::new();
    for z in singular_points(a) {
        let l = &z.lines;
        for x in 0..l.len() {
            for y in x + 1..l.len() {
                for w in y + 1..l.len() {
                    relations.push(triple_relation(a, l[x], l[y], l[w]));
                }
            }
        }
    }
    span_dimension(&relations).expect("relations share a length")
}

pub fn is_formal(a: &Arrangement) -> bool {
    length_three_span_dimension(a) == relation_space_dimension(a)
}

/// Every dimension entering the six conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessDims {
    pub degree: usize,
    pub h0_at_d_minus_1: usize,
    pub h0_at_2d_minus_5: usize,
    pub regularity: i64,
    /// Length of the Jacobian scheme: global sections of the sheafified Milnor algebra at any twist.
    pub sheaf_dim_e: usize,
    pub milnor_dim_at_2d_minus_5: usize,
    pub milnor_dim_at_d_minus_1: usize,
    /// `dim H¹_m(R/(∂f))` at twists `2d - 5` and `d - 1`.
    pub h1_at_2d_minus_5: usize,
    pub h1_at_d_minus_1: usize,
    pub der_log0_at_d_minus_2: usize,
    /// `C(d+1, 2) - 3`.
    pub binomial_term: usize,
    /// Sections at twist `d - 1` read off the four-term sequence
    /// `0 → H⁰_q → [R/(∂f)]_q → Γ_q → H¹_q → 0`
    /// with `H¹_{d-1}` replaced by `Der(-log_0 f)_{d-2}`.
    pub gamma_at_d_minus_1: usize,
    pub relation_space_dim: usize,
    pub length_three_span_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
    pub cond_e: bool,
    pub cond_f: bool,
    pub cond_g: bool,
    pub witness: WitnessDims,
    pub consistent: bool,
}

impl ConditionReport {
    pub fn booleans(&self) -> [bool; 6] {
        [self.cond_b, self.cond_c, self.cond_d, self.cond_e, self.cond_f, self.cond_g]
    }
}

fn as_usize(q: i64) -> Result<usize> {
    usize::try_from(q).map_err(|_| Error::Precondition(format!("twist {q} is negative")))
}

fn conditions_from_profile(a: &Arrangement, profile: &MilnorProfile) -> Result<ConditionReport> {
    let d = a.degree() as i64;
    let data = profile.saturation_data();
    let (q_b, q_c) = (d - 1, 2 * d - 5);
    let h0_at_d_minus_1 = profile.h0.get(&int(q_b));
    let h0_at_2d_minus_5 = profile.h0.get(&int(q_c));
    let regularity = data.regularity_report()?.regularity;
    let sheaf_dim_e = data.sheaf_dimension_e()?;
    let milnor_dim_at_2d_minus_5 = data.quotient_dim(&int(q_c));
    let milnor_dim_at_d_minus_1 = data.quotient_dim(&int(q_b));
    let der_log0_at_d_minus_2 =
        der_log0_graded_dimension(&profile.f, &profile.weights, &int(d - 2))?;
    let binomial_term = binomial(as_usize(d + 1)?, 2) - 3;
    let gamma_at_d_minus_1 = milnor_dim_at_d_minus_1 - h0_at_d_minus_1 + der_log0_at_d_minus_2;
    let relation_space_dim = relation_space_dimension(a);
    let length_three_span_dim = length_three_span_dimension(a);
    let witness = WitnessDims {
        degree: a.degree(),
        h0_at_d_minus_1,
        h0_at_2d_minus_5,
        regularity,
        sheaf_dim_e,
        milnor_dim_at_2d_minus_5,
        milnor_dim_at_d_minus_1,
        h1_at_2d_minus_5: data.h1_dimension(q_c)?,
        h1_at_d_minus_1: data.h1_dimension(q_b)?,
        der_log0_at_d_minus_2,
        binomial_term,
        gamma_at_d_minus_1,
        relation_space_dim,
        length_three_span_dim,
    };
    let cond_b = h0_at_d_minus_1 > 0;
    let cond_c = h0_at_2d_minus_5 > 0;
    let cond_d = regularity == 2 * d - 5;
    let cond_e = sheaf_dim_e < milnor_dim_at_2d_minus_5;
    let cond_f = gamma_at_d_minus_1 < der_log0_at_d_minus_2 + binomial_term;
    let cond_g = length_three_span_dim != relation_space_dim;
    let all = [cond_b, cond_c, cond_d, cond_e, cond_f, cond_g];
    Ok(ConditionReport {
        cond_b,
        cond_c,
        cond_d,
        cond_e,
        cond_f,
        cond_g,
        witness,
        consistent: all.iter().all(|&c| c == cond_b),
    })
}

pub fn arrangement_profile(a: &Arrangement, limits: &Limits) -> Result<MilnorProfile> {
    milnor_profile(&a.defining_polynomial(), &WeightSystem::standard(3), limits)
}

pub fn condition_report(a: &Arrangement, limits: &Limits) -> Result<ConditionReport> {
    conditions_from_profile(a, &arrangement_profile(a, limits)?)
}

#[derive(Debug, Clone)]
pub struct ArrangementRootReport {
    pub comb_roots: RootSet,
    pub non_comb_root: Rational,
    pub non_comb_present: bool,
    pub full_zero_set: RootSet,
    pub conditions: ConditionReport,
    pub singular_points: Vec<SingularPoint>,
    pub profile: MilnorProfile,
}

pub fn full_root_report(a: &Arrangement, limits: &Limits) -> Result<ArrangementRootReport> {
    let profile = arrangement_profile(a, limits)?;
    let conditions = conditions_from_profile(a, &profile)?;
    if !conditions.consistent {
        return Err(Error::Inconsistent(format!(
            "conditions (b)-(g) disagree: {:?}",
            conditions.booleans()
        )));
    }
    let points = singular_points(a);
    let comb = comb_roots_from(a.degree(), &points);
    let non_comb_root = non_comb_root(a);
    let non_comb_present = conditions.cond_b;
    let mut full_zero_set = comb.clone();
    if non_comb_present {
        full_zero_set.insert(non_comb_root.clone());
    }
    // Every new root must already be present; a miss means the degree data is wrong.
    if !new_roots(&profile).is_subset(&full_zero_set) {
        return Err(Error::Inconsistent("new roots escape the assembled zero set".into()));
    }
    Ok(ArrangementRootReport {
        comb_roots: comb,
        non_comb_root,
        non_comb_present,
        full_zero_set,
        conditions,
        singular_points: points,
        profile,
    })
}

impl ArrangementRootReport {
    /// Zeroes in `[-1, 0)`, which depend only on the intersection lattice.
    pub fn interval_roots(&self) -> RootSet {
        self.full_zero_set.in_closed_open(&-Rational::one(), &Rational::zero())
    }
}
