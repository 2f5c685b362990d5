//! Jacobian ideal, Milnor algebra degree data, and graded pieces of the
//! logarithmic derivations annihilating `f`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::{DegreeData, SaturationData};
use crate::groebner::{Ideal, Limits};
use crate::linalg::RationalMatrix;
use crate::polyring::{monomials_of_degree, Monomial, Polynomial, Rational, WeightSystem};

/// The partial derivatives of `f`; vanishing partials are dropped.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let partials = (0..f.nvars()).map(|i| f.derivative(i)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(f.nvars(), partials))
}

/// Everything the root formulas need to know about `f`.
#[derive(Debug, Clone)]
pub struct MilnorProfile {
    pub f: Polynomial,
    pub weights: WeightSystem,
    pub wdeg_f: Rational,
    pub jacobian: Ideal,
    /// Graded pieces of `H⁰_m(R/(∂f))`.
    pub h0: DegreeData,
    pub is_isolated: bool,
    /// Graded pieces of the Milnor algebra; `None` when it is infinite-dimensional.
    pub milnor_algebra_degrees: Option<DegreeData>,
    data: SaturationData,
}

impl MilnorProfile {
    pub fn saturation_data(&self) -> &SaturationData {
        &self.data
    }

    pub fn weight_sum(&self) -> Rational {
        self.weights.weight_sum()
    }
}

pub fn milnor_profile(f: &Polynomial, w: &WeightSystem, limits: &Limits) -> Result<MilnorProfile> {
    let wdeg_f = f
        .wdeg(w)?
        .ok_or_else(|| Error::NotHomogeneous(format!("{f} under weights ({w})")))?;
    let jacobian = jacobian_ideal(f)?;
    let data = SaturationData::new(&jacobian, w, limits)?;
    let h0 = data.h0();
    let pure_powers: Vec<Option<u16>> = (0..f.nvars())
        .map(|i| {
            data.basis()
                .leading_monomials()
                .iter()
                .filter(|m| (0..f.nvars()).all(|k| k == i || m.exponent(k) == 0))
                .map(|m| m.exponent(i))
                .filter(|&e| e > 0)
                .min()
        })
        .collect();
    let is_isolated = pure_powers.iter().all(Option::is_some);
    let milnor_algebra_degrees = if is_isolated {
        let bounds: Vec<u16> = pure_powers.into_iter().map(Option::unwrap).collect();
        Some(standard_monomial_degrees(&data, w, &bounds))
    } else {
        None
    };
    Ok(MilnorProfile {
        f: f.clone(),
        weights: w.clone(),
        wdeg_f,
        jacobian,
        h0,
        is_isolated,
        milnor_algebra_degrees,
        data,
    })
}

/// Degrees of the (finitely many) standard monomials of an Artinian quotient whose
/// leading ideal contains `x_i^{bounds[i]}`.
fn standard_monomial_degrees(data: &SaturationData, w: &WeightSystem, bounds: &[u16]) -> DegreeData {
    let mut counts: std::collections::BTreeMap<Rational, usize> = Default::default();
    let mut exps = vec![0u16; bounds.len()];
    loop {
        let m = Monomial::new(&exps);
        if data.basis().is_standard(&m) {
            *counts.entry(m.wdeg(w)).or_default() += 1;
        }
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return DegreeData::from_pairs(counts);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// `dim Der_R(-log_0 f)_k`: the kernel of `⊕_i R_{k+w_i} → R_{k+wdeg f}`,
/// `(a_1, .., a_n) ↦ Σ a_i ∂_i f`.
pub fn der_log0_graded_dimension(f: &Polynomial, w: &WeightSystem, k: &Rational) -> Result<usize> {
    let d = f
        .wdeg(w)?
        .ok_or_else(|| Error::NotHomogeneous(format!("{f} under weights ({w})")))?;
    let target = monomials_of_degree(w, &(k + &d));
    let index: HashMap<_, _> = target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut columns = Vec::new();
    for i in 0..f.nvars() {
        let partial = f.derivative(i)?;
        for m in monomials_of_degree(w, &(k + w.weight(i))) {
            let mut col = vec![Rational::zero(); target.len()];
            for (pm, c) in partial.terms() {
                col[index[&(*pm * m)]] = c.clone();
            }
            columns.push(col);
        }
    }
    if columns.is_empty() {
        return Ok(0);
    }
    if target.is_empty() {
        return Ok(columns.len());
    }
    // Rank of the column set equals rank of its transpose; rows are cheaper to build.
    let rank = RationalMatrix::from_rows(columns.clone())?.rank();
    Ok(columns.len() - rank)
}
