//! Root sets of Bernstein–Sato polynomials assembled from the degrees of
//! `H⁰_m(R/(∂f))`.
//!
//! For a reduced locally quasi-homogeneous `f` with weights `w` and weighted
//! degree `D`, every `t` in the support of `H⁰_m(R/(∂f))` produces the root
//! `-(t + Σw)/D`. The same support controls the failure of symmetry about `-1`,
//! the roots in `(-3, -2]`, and the twisted logarithmic comparison theorem.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::milnor::MilnorProfile;
use crate::polyring::{int, Rational};

/// A finite set of rationals, iterated in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct RootSet {
    roots: BTreeSet<Rational>,
}

impl RootSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, r: Rational) {
        self.roots.insert(r);
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.roots.contains(r)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.roots.iter()
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.roots.iter().cloned().collect()
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        self.roots.union(&other.roots).cloned().collect()
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        self.roots.difference(&other.roots).cloned().collect()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.roots.is_subset(&other.roots)
    }

    pub fn map<F: Fn(&Rational) -> Rational>(&self, f: F) -> RootSet {
        self.roots.iter().map(f).collect()
    }

    pub fn filter<F: Fn(&Rational) -> bool>(&self, f: F) -> RootSet {
        self.roots.iter().filter(|r| f(r)).cloned().collect()
    }

    /// Elements in the half-open interval `(lo, hi]`.
    pub fn in_open_closed(&self, lo: &Rational, hi: &Rational) -> RootSet {
        self.filter(|r| r > lo && r <= hi)
    }

    /// Elements in the open interval `(lo, hi)`.
    pub fn in_open(&self, lo: &Rational, hi: &Rational) -> RootSet {
        self.filter(|r| r > lo && r < hi)
    }

    /// Elements in the half-open interval `[lo, hi)`.
    pub fn in_closed_open(&self, lo: &Rational, hi: &Rational) -> RootSet {
        self.filter(|r| r >= lo && r < hi)
    }

    pub fn sigma_image(&self) -> RootSet {
        self.map(sigma)
    }
}

impl FromIterator<Rational> for RootSet {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RootSet { roots: iter.into_iter().collect() }
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The involution `α ↦ -2 - α` about `-1`.
pub fn sigma(a: &Rational) -> Rational {
    -int(2) - a
}

fn shifted_support(profile: &MilnorProfile) -> impl Iterator<Item = Rational> + '_ {
    let sw = profile.weight_sum();
    profile.h0.support().into_iter().map(move |t| -(t + &sw) / &profile.wdeg_f)
}

/// Zeroes of `b_f` for an isolated quasi-homogeneous singularity: `-(t + Σw)/D` over the
/// degrees `t` of the Milnor algebra, together with `-1`.
pub fn roots_isolated(profile: &MilnorProfile) -> Result<RootSet> {
    let degrees = profile.milnor_algebra_degrees.as_ref().ok_or(Error::NotIsolated)?;
    let sw = profile.weight_sum();
    let mut roots: RootSet =
        degrees.support().into_iter().map(|t| -(t + &sw) / &profile.wdeg_f).collect();
    roots.insert(-Rational::one());
    Ok(roots)
}

/// Zeroes of `B(L_{f,s+2})`, all of which are zeroes of `b_f`.
pub fn new_roots(profile: &MilnorProfile) -> RootSet {
    shifted_support(profile).collect()
}

/// Zeroes of `B(L_f)`: `(-t + 2D - Σw)/D` over the support of `H⁰_m(R/(∂f))`.
/// The empty set stands for `B(L_f) = 1`.
pub fn blf_roots(profile: &MilnorProfile) -> RootSet {
    let d = &profile.wdeg_f;
    let sw = profile.weight_sum();
    profile
        .h0
        .support()
        .into_iter()
        .map(|t| (-t + d * int(2) - &sw) / d)
        .collect()
}

/// `Ξ_f = Z(B(L_{f,s+2})) ∪ Z(B(L_{f,s+1}))`, the obstruction to symmetry about `-1`.
pub fn xi_set(profile: &MilnorProfile) -> RootSet {
    let base = new_roots(profile);
    let shifted = base.map(|r| r + Rational::one());
    base.union(&shifted)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub xi_set: RootSet,
    /// Pairs `(α, σ(α))` with `α ≤ σ(α)`, both in the supplied zeroes outside `Ξ_f`.
    pub sigma_pairs: Vec<(Rational, Rational)>,
    /// Zeroes outside `Ξ_f` whose reflection is not among the zeroes outside `Ξ_f`.
    pub asymmetric_outside_xi: RootSet,
}

impl SymmetryReport {
    pub fn is_symmetric(&self) -> bool {
        self.asymmetric_outside_xi.is_empty()
    }
}

pub fn check_partial_symmetry(zeros: &RootSet, xi: &RootSet) -> SymmetryReport {
    let outside = zeros.difference(xi);
    let asymmetric = outside.filter(|a| !outside.contains(&sigma(a)));
    let sigma_pairs = outside
        .iter()
        .filter(|a| **a <= sigma(a) && outside.contains(&sigma(a)))
        .map(|a| (a.clone(), sigma(a)))
        .collect();
    SymmetryReport { xi_set: xi.clone(), sigma_pairs, asymmetric_outside_xi: asymmetric }
}

/// Zeroes of `b_f` in `(-3, -2]`; these are exactly the new roots in that window.
pub fn small_roots(profile: &MilnorProfile) -> RootSet {
    new_roots(profile).in_open_closed(&int(-3), &int(-2))
}

/// Whether the twisted logarithmic comparison theorem holds for `λ ≤ 0`:
/// it fails exactly when `-(λ - 2) D - Σw` is a degree of `H⁰_m(R/(∂f))`.
pub fn tlct_holds(profile: &MilnorProfile, lambda: &Rational) -> Result<bool> {
    if lambda.is_positive() {
        return Err(Error::Precondition(format!("twist λ = {lambda} must be ≤ 0")));
    }
    let t = -(lambda - int(2)) * &profile.wdeg_f - profile.weight_sum();
    Ok(profile.h0.get(&t) == 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousTaxonomy {
    pub tau: i64,
    pub degree: i64,
    pub upsilon: RootSet,
    /// Zeroes in `(-3, -2]`.
    pub window_small: RootSet,
    /// The supplied zeroes in `[-1, 0)`.
    pub interval_roots: RootSet,
    /// The full zero set determined by `τ`, `deg f`, and the `[-1, 0)` zeroes.
    pub reconstructed: RootSet,
}

/// `Υ_f = (1/d) (Z ∩ [-3d + τ + 3, -(τ + 3)])`.
pub fn upsilon(tau: i64, d: i64) -> RootSet {
    (-3 * d + tau + 3..=-(tau + 3)).map(|k| int(k) / int(d)).collect()
}

/// Assembles a zero set from its guaranteed part `Υ_f` and its `[-1, 0)` part:
/// `(-3, -2]` from `Υ_f`; `(-2, -1)` from `Υ_f` and reflections of the `(-1, 0)` zeroes;
/// `[-1, 0)` from the supplied zeroes and `Υ_f`.
pub fn reconstruct_zero_set(upsilon: &RootSet, interval_roots: &RootSet) -> RootSet {
    let (m3, m2, m1, zero) = (int(-3), int(-2), int(-1), Rational::zero());
    let small = upsilon.in_open_closed(&m3, &m2);
    let middle = upsilon
        .in_open(&m2, &m1)
        .union(&interval_roots.in_open(&m1, &zero).sigma_image());
    let top = interval_roots.union(&upsilon.in_closed_open(&m1, &zero));
    small.union(&middle).union(&top)
}

/// The zero set of a homogeneous `f` (standard grading) from `τ = min deg H⁰_m(R/(∂f))`,
/// `deg f`, and the zeroes in `[-1, 0)` supplied by the caller.
pub fn homogeneous_taxonomy(
    profile: &MilnorProfile,
    interval_roots: &RootSet,
) -> Result<HomogeneousTaxonomy> {
    if !profile.weights.is_standard() {
        return Err(Error::Precondition("homogeneous taxonomy needs weights (1,1,1)".into()));
    }
    let tau = profile
        .h0
        .min_degree()
        .ok_or_else(|| Error::Precondition("H⁰_m(R/(∂f)) vanishes, so τ is undefined".into()))?
        .to_integer()
        .to_i64()
        .expect("degree fits in i64");
    let (m1, zero) = (int(-1), Rational::zero());
    if interval_roots.iter().any(|r| *r < m1 || *r >= zero) {
        return Err(Error::InvalidArgument(format!(
            "interval roots {interval_roots} must lie in [-1, 0)"
        )));
    }
    let degree = profile.wdeg_f.to_integer().to_i64().expect("degree fits in i64");
    let ups = upsilon(tau, degree);
    let reconstructed = reconstruct_zero_set(&ups, interval_roots);
    Ok(HomogeneousTaxonomy {
        tau,
        degree,
        window_small: ups.in_open_closed(&int(-3), &int(-2)),
        upsilon: ups,
        interval_roots: interval_roots.clone(),
        reconstructed,
    })
}
