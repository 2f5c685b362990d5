//! Graded pieces of quotients `R/I` for weighted-homogeneous ideals, the zeroth and
//! first local cohomology with respect to `m = (x, y, z)`, and regularity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with_limits, saturate_irrelevant, GroebnerBasis, Ideal, Limits, MonomialOrder,
};
use crate::linalg::RationalMatrix;
use crate::polyring::{attained_degrees, int, monomials_of_degree, Rational, WeightSystem};

/// Finite map from weighted degree to a positive dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeData {
    entries: BTreeMap<Rational, usize>,
}

impl DegreeData {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `dim` at degree `q`; zero dimensions are not stored.
    pub fn insert(&mut self, q: Rational, dim: usize) {
        if dim > 0 {
            self.entries.insert(q, dim);
        } else {
            self.entries.remove(&q);
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Rational, usize)>>(pairs: I) -> Self {
        let mut d = Self::new();
        for (q, n) in pairs {
            d.insert(q, n);
        }
        d
    }

    pub fn get(&self, q: &Rational) -> usize {
        self.entries.get(q).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<Rational> {
        self.entries.keys().cloned().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, &usize)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn min_degree(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    pub fn max_degree(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    pub fn total_dimension(&self) -> usize {
        self.entries.values().sum()
    }
}

impl fmt::Display for DegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(q, n)| format!("{q}:{n}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub h0_max: Option<i64>,
    pub h1_max: Option<i64>,
    pub regularity: i64,
    /// Stabilized Hilbert function of `R/I^sat`; absent when the quotient is a hypersurface ring.
    pub sheaf_dim_e: Option<usize>,
}

/// `dim (R/I)_q` from the rank of the span of monomial multiples of the generators.
pub fn graded_dimension(ideal: &Ideal, w: &WeightSystem, q: &Rational) -> Result<usize> {
    let degrees = ideal.generator_degrees(w)?;
    let monos = monomials_of_degree(w, q);
    if monos.is_empty() {
        return Ok(0);
    }
    let index: HashMap<_, _> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for (g, d) in ideal.generators().iter().zip(degrees) {
        for m in monomials_of_degree(w, &(q - d)) {
            let mut row = vec![Rational::zero(); monos.len()];
            for (gm, c) in g.terms() {
                row[index[&(*gm * m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(monos.len());
    }
    let rank = RationalMatrix::from_rows(rows)?.rank();
    Ok(monos.len() - rank)
}

/// `dim (R/I)_q` as the number of standard monomials of degree `q` for a Gröbner basis of
/// a homogeneous ideal (any monomial order).
pub fn graded_dimension_std(gb: &GroebnerBasis, w: &WeightSystem, q: &Rational) -> usize {
    monomials_of_degree(w, q).iter().filter(|m| gb.is_standard(m)).count()
}

/// Gröbner data for a weighted-homogeneous ideal and its saturation `I : m^∞`,
/// computed once and queried degree by degree.
#[derive(Debug, Clone)]
pub struct SaturationData {
    weights: WeightSystem,
    basis: GroebnerBasis,
    saturated: GroebnerBasis,
    generator_bound: Rational,
    saturated_bound: Rational,
}

impl SaturationData {
    pub fn new(ideal: &Ideal, w: &WeightSystem, limits: &Limits) -> Result<Self> {
        let degrees = ideal.generator_degrees(w)?;
        let order = MonomialOrder::grevlex(ideal.nvars()).with_weights(w);
        let basis = buchberger_with_limits(ideal, &order, limits)?;
        let sat = saturate_irrelevant(ideal, w, limits)?;
        let saturated = buchberger_with_limits(&sat, &order, limits)?;
        let saturated_bound = saturated
            .elements()
            .iter()
            .filter_map(|g| g.wdeg(w).ok().flatten())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(SaturationData {
            weights: w.clone(),
            basis,
            saturated,
            generator_bound: degrees.into_iter().max().unwrap_or_else(Rational::zero),
            saturated_bound,
        })
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn saturated_basis(&self) -> &GroebnerBasis {
        &self.saturated
    }

    pub fn is_saturated(&self) -> bool {
        self.basis.contains_ideal(&self.saturated.ideal())
    }

    /// `dim (R/I)_q`.
    pub fn quotient_dim(&self, q: &Rational) -> usize {
        graded_dimension_std(&self.basis, &self.weights, q)
    }

    /// `dim (R/I^sat)_q`.
    pub fn saturated_quotient_dim(&self, q: &Rational) -> usize {
        graded_dimension_std(&self.saturated, &self.weights, q)
    }

    /// `dim H⁰_m(R/I)_q = dim (I^sat/I)_q`.
    pub fn h0_at(&self, q: &Rational) -> usize {
        self.quotient_dim(q) - self.saturated_quotient_dim(q)
    }

    /// All nonzero graded pieces of `H⁰_m(R/I)`.
    ///
    /// Once `I_q = I^sat_q` on a window of length `max w_i` starting beyond the top
    /// generator degree of `I^sat`, every higher piece vanishes as well, so the scan stops.
    pub fn h0(&self) -> DegreeData {
        let max_w = self.weights.max_weight();
        let mut data = DegreeData::new();
        let mut limit = &self.saturated_bound + &max_w * int(4) + Rational::one();
        let mut zero_run: Option<Rational> = None;
        let mut done_below = -Rational::one();
        loop {
            for q in attained_degrees(&self.weights, &limit) {
                if q <= done_below {
                    continue;
                }
                let dim = self.h0_at(&q);
                data.insert(q.clone(), dim);
                if dim > 0 {
                    zero_run = None;
                } else if q >= self.saturated_bound && zero_run.is_none() {
                    zero_run = Some(q.clone());
                }
                if let Some(start) = &zero_run {
                    if &q - start >= max_w {
                        return data;
                    }
                }
                done_below = q;
            }
            limit = &limit * int(2);
        }
    }

    fn require_standard(&self) -> Result<()> {
        if self.weights.is_standard() {
            Ok(())
        } else {
            Err(Error::Precondition("sheaf and regularity data need the standard grading".into()))
        }
    }

    fn stabilization_start(&self) -> i64 {
        let bound = (&self.generator_bound * int(3)).max(self.saturated_bound.clone());
        bound.ceil().to_integer().to_i64().expect("degree fits in i64")
    }

    /// Eventual constant value of `dim (R/I^sat)_q`, which is the length of the
    /// zero-dimensional projective scheme cut out by `I`.
    pub fn sheaf_dimension_e(&self) -> Result<usize> {
        self.require_standard()?;
        let start = self.stabilization_start();
        let vals: Vec<usize> =
            (start..start + 3).map(|q| self.saturated_quotient_dim(&int(q))).collect();
        if vals.windows(2).all(|p| p[0] == p[1]) {
            Ok(vals[0])
        } else {
            Err(Error::Precondition(format!(
                "Hilbert function of R/I^sat is not eventually constant (values {vals:?} from degree {start}); the projective scheme is not zero-dimensional"
            )))
        }
    }

    /// `dim H¹_m(R/I)_q = e - dim (R/I^sat)_q`.
    pub fn h1_dimension(&self, q: i64) -> Result<usize> {
        let e = self.sheaf_dimension_e()?;
        let d = self.saturated_quotient_dim(&int(q));
        e.checked_sub(d).ok_or_else(|| {
            Error::Inconsistent(format!("dim (R/I^sat)_{q} = {d} exceeds stabilized value {e}"))
        })
    }

    pub fn regularity_report(&self) -> Result<RegularityReport> {
        self.require_standard()?;
        let h0 = self.h0();
        let h0_max = h0.max_degree().map(|q| q.to_integer().to_i64().expect("degree fits"));
        let (h1_max, sheaf_dim_e, top) = match self.sheaf_dimension_e() {
            Ok(e) => {
                let start = self.stabilization_start();
                let h1_max = if e == 0 {
                    None
                } else {
                    (-1..start).filter(|&q| self.saturated_quotient_dim(&int(q)) < e).max()
                };
                (h1_max, Some(e), h1_max.map(|q| q + 1))
            }
            Err(err) => {
                // A hypersurface ring R/(g) is Cohen–Macaulay of dimension 2 with
                // top local cohomology ending in degree deg(g) - 3.
                let els = self.saturated.elements();
                if els.len() != 1 {
                    return Err(err);
                }
                let d = els[0].total_degree().expect("nonzero generator") as i64;
                (None, None, Some(d - 1))
            }
        };
        let regularity = [h0_max, top].into_iter().flatten().max().unwrap_or(0);
        Ok(RegularityReport { h0_max, h1_max, regularity, sheaf_dim_e })
    }
}

pub fn h0_degree_data(ideal: &Ideal, w: &WeightSystem, limits: &Limits) -> Result<DegreeData> {
    Ok(SaturationData::new(ideal, w, limits)?.h0())
}

pub fn sheaf_dimension_e(ideal: &Ideal, limits: &Limits) -> Result<usize> {
    SaturationData::new(ideal, &WeightSystem::standard(ideal.nvars()), limits)?.sheaf_dimension_e()
}

pub fn h1_dimension(ideal: &Ideal, q: i64, limits: &Limits) -> Result<usize> {
    SaturationData::new(ideal, &WeightSystem::standard(ideal.nvars()), limits)?.h1_dimension(q)
}

pub fn regularity_report(ideal: &Ideal, limits: &Limits) -> Result<RegularityReport> {
    SaturationData::new(ideal, &WeightSystem::standard(ideal.nvars()), limits)?
        .regularity_report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(3, gens.iter().map(|s| parse_polynomial(s, 3).unwrap()).collect())
    }

    fn std3() -> WeightSystem {
        WeightSystem::standard(3)
    }

    fn dd(pairs: &[(i64, usize)]) -> DegreeData {
        DegreeData::from_pairs(pairs.iter().map(|&(q, n)| (int(q), n)))
    }

    #[test]
    fn graded_dimension_examples() {
        assert_eq!(graded_dimension(&ideal(&["x^2", "y^2", "z^2"]), &std3(), &int(2)).unwrap(), 3);
        assert_eq!(graded_dimension(&ideal(&["x"]), &std3(), &int(5)).unwrap(), 6);
        assert_eq!(graded_dimension(&Ideal::zero(3), &std3(), &int(3)).unwrap(), 10);
        assert!(matches!(
            graded_dimension(&ideal(&["x^2 + y"]), &std3(), &int(2)),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn h0_examples() {
        let l = Limits::default();
        assert_eq!(
            h0_degree_data(&ideal(&["x^2", "y^2", "z^2"]), &std3(), &l).unwrap(),
            dd(&[(0, 1), (1, 3), (2, 3), (3, 1)])
        );
        assert_eq!(
            h0_degree_data(&ideal(&["x^2", "x*y", "x*z"]), &std3(), &l).unwrap(),
            dd(&[(1, 1)])
        );
        assert!(h0_degree_data(&ideal(&["x"]), &std3(), &l).unwrap().is_empty());
    }

    #[test]
    fn h0_with_weights() {
        // (x, y^2) is saturated: z is a nonzerodivisor.
        let w = WeightSystem::from_integers(&[3, 2, 1]).unwrap();
        let l = Limits::default();
        assert!(h0_degree_data(&ideal(&["x", "y^2"]), &w, &l).unwrap().is_empty());
        // Artinian quotient of (x, y, z^2) with weights (3, 2, 1): 1 and z.
        assert_eq!(h0_degree_data(&ideal(&["x", "y", "z^2"]), &w, &l).unwrap(), dd(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn sheaf_dimension_examples() {
        let l = Limits::default();
        assert_eq!(sheaf_dimension_e(&ideal(&["x", "y"]), &l).unwrap(), 1);
        assert_eq!(sheaf_dimension_e(&ideal(&["x^2", "y"]), &l).unwrap(), 2);
        assert!(matches!(sheaf_dimension_e(&ideal(&["x"]), &l), Err(Error::Precondition(_))));
        assert_eq!(h1_dimension(&ideal(&["x", "y"]), 0, &l).unwrap(), 0);
    }

    #[test]
    fn regularity_examples() {
        let l = Limits::default();
        let r = regularity_report(&ideal(&["x^2", "y^2", "z^2"]), &l).unwrap();
        assert_eq!((r.h0_max, r.h1_max, r.regularity), (Some(3), None, 3));
        let r = regularity_report(&ideal(&["x"]), &l).unwrap();
        assert_eq!(r.regularity, 0);
        let r = regularity_report(&ideal(&["x", "y"]), &l).unwrap();
        assert_eq!((r.h0_max, r.h1_max, r.regularity, r.sheaf_dim_e), (None, Some(-1), 0, Some(1)));
    }
}
