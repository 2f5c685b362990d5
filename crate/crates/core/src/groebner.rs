//! Buchberger's algorithm over Q and the ideal operations built on it:
//! elimination, colon by a power of a polynomial, intersection, and
//! saturation with respect to the irrelevant ideal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, WeightSystem, MAX_VARS};

pub const DEFAULT_STEP_CAP: u64 = 10_000_000;

/// Resource limits shared by every Gröbner computation in a pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub step_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { step_cap: DEFAULT_STEP_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// The first `k` variables compared lexicographically, ties broken by
    /// (weighted) grevlex on the remaining variables.
    Block(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    nvars: usize,
    /// Integer grading used by the grevlex part; all ones unless weighted.
    grading: [i64; MAX_VARS],
}

type Key = [i64; MAX_VARS + 2];

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn block(elim_count: usize, nvars: usize) -> Self {
        assert!(elim_count < nvars, "block order must keep at least one variable");
        Self::new(OrderKind::Block(elim_count), nvars)
    }

    fn new(kind: OrderKind, nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars));
        let mut grading = [0; MAX_VARS];
        grading[..nvars].fill(1);
        MonomialOrder { kind, nvars, grading }
    }

    /// Uses the weighted degree (weights scaled to coprime integers) in the grevlex part.
    /// For block orders the weights cover all variables; those of the lex block are ignored.
    pub fn with_weights(mut self, w: &WeightSystem) -> Self {
        assert_eq!(w.len(), self.nvars, "weight count must match variable count");
        let l = w.weights().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = w.weights().iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (i, v) in ints.iter().enumerate() {
            self.grading[i] = i64::try_from(v / &g).expect("weight too large");
        }
        self
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn key(&self, m: &Monomial) -> Key {
        let e = |i: usize| m.exponent(i) as i64;
        let n = self.nvars;
        let mut k = [0i64; MAX_VARS + 2];
        let mut slot = 0;
        let start = match self.kind {
            OrderKind::Lex => {
                for i in 0..n {
                    k[i] = e(i);
                }
                return k;
            }
            OrderKind::Grevlex => 0,
            OrderKind::Block(b) => {
                for i in 0..b {
                    k[slot] = e(i);
                    slot += 1;
                }
                b
            }
        };
        k[slot] = (start..n).map(|i| self.grading[i] * e(i)).sum();
        slot += 1;
        for i in (start..n).rev() {
            k[slot] = -e(i);
            slot += 1;
        }
        k
    }

    /// Degree used for the sugar strategy: the grading, with lex-block variables weighted 1.
    fn sugar(&self, m: &Monomial) -> i64 {
        let lex_end = match self.kind {
            OrderKind::Lex => self.nvars,
            OrderKind::Grevlex => 0,
            OrderKind::Block(b) => b,
        };
        (0..self.nvars)
            .map(|i| if i < lex_end { 1 } else { self.grading[i] } * m.exponent(i) as i64)
            .sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

#[derive(Debug, Clone)]
struct Term {
    key: Key,
    mono: Monomial,
    coeff: Rational,
}

/// Terms sorted by descending key; the leading term is first.
#[derive(Debug, Clone)]
struct Poly {
    terms: Vec<Term>,
    sugar: i64,
}

impl Poly {
    fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term { key: order.key(m), mono: *m, coeff: c.clone() })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        let sugar = p.terms().map(|(m, _)| order.sugar(m)).max().unwrap_or(0);
        Poly { terms, sugar }
    }

    fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().map(|t| (t.mono, t.coeff.clone())))
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some(first) = self.terms.first() {
            if !first.coeff.is_one() {
                let inv = first.coeff.recip();
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }
}

fn add_key(a: &Key, b: &Key) -> Key {
    let mut k = *a;
    for i in 0..k.len() {
        k[i] += b[i];
    }
    k
}

struct Reducer<'a> {
    order: &'a MonomialOrder,
    steps: u64,
    cap: u64,
}

impl Reducer<'_> {
    /// Fully reduces `p` modulo the monic polynomials `basis` (skipping index `skip`).
    fn reduce(&mut self, p: &Poly, basis: &[Poly], skip: Option<usize>) -> Result<Poly> {
        let mut work: BTreeMap<Key, (Monomial, Rational)> =
            p.terms.iter().map(|t| (t.key, (t.mono, t.coeff.clone()))).collect();
        let mut rem = Vec::new();
        let mut sugar = p.sugar;
        while let Some((key, (mono, coeff))) = work.pop_last() {
            let divisor = basis
                .iter()
                .enumerate()
                .find(|(i, g)| Some(*i) != skip && !g.is_zero() && g.lm().divides(&mono));
            match divisor {
                Some((_, g)) => {
                    self.steps += 1;
                    if self.steps > self.cap {
                        return Err(Error::ResourceLimit(self.cap));
                    }
                    let q = g.lm().quotient_of(&mono);
                    let qkey = self.order.key(&q);
                    sugar = sugar.max(g.sugar + self.order.sugar(&q));
                    for t in &g.terms[1..] {
                        let k = add_key(&qkey, &t.key);
                        let delta = -(&coeff * &t.coeff);
                        match work.entry(k) {
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert((q * t.mono, delta));
                            }
                            std::collections::btree_map::Entry::Occupied(mut o) => {
                                o.get_mut().1 += delta;
                                if o.get().1.is_zero() {
                                    o.remove();
                                }
                            }
                        }
                    }
                }
                None => rem.push(Term { key, mono, coeff }),
            }
        }
        Ok(Poly { terms: rem, sugar })
    }

    fn s_polynomial(&self, f: &Poly, g: &Poly) -> Poly {
        let l = f.lm().lcm(g.lm());
        let qf = f.lm().quotient_of(&l);
        let qg = g.lm().quotient_of(&l);
        let (kf, kg) = (self.order.key(&qf), self.order.key(&qg));
        let mut work: BTreeMap<Key, (Monomial, Rational)> = BTreeMap::new();
        for t in &f.terms[1..] {
            work.insert(add_key(&kf, &t.key), (qf * t.mono, t.coeff.clone()));
        }
        for t in &g.terms[1..] {
            let k = add_key(&kg, &t.key);
            match work.entry(k) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert((qg * t.mono, -t.coeff.clone()));
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    o.get_mut().1 -= &t.coeff;
                    if o.get().1.is_zero() {
                        o.remove();
                    }
                }
            }
        }
        let terms = work
            .into_iter()
            .rev()
            .map(|(key, (mono, coeff))| Term { key, mono, coeff })
            .collect();
        let sugar = (f.sugar + self.order.sugar(&qf)).max(g.sugar + self.order.sugar(&qg));
        Poly { terms, sugar }
    }
}

/// A finitely generated ideal. An empty generator list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Self {
        assert!(generators.iter().all(|g| g.nvars() == nvars), "ring mismatch");
        Ideal { nvars, generators: generators.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn from_generators(generators: Vec<Polynomial>) -> Self {
        let n = generators.first().expect("at least one generator").nvars();
        Self::new(n, generators)
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, vec![Polynomial::one(nvars)])
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Weighted degrees of the generators if every generator is weighted-homogeneous.
    pub fn generator_degrees(&self, w: &WeightSystem) -> Result<Vec<Rational>> {
        self.generators
            .iter()
            .map(|g| {
                g.wdeg(w)?.ok_or_else(|| Error::NotHomogeneous(format!("generator {g}")))
            })
            .collect()
    }

    pub fn is_homogeneous(&self, w: &WeightSystem) -> bool {
        self.generator_degrees(w).is_ok()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A reduced Gröbner basis: monic, no leading monomial divides another's term.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|p| p.to_polynomial(self.order.nvars)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| *p.lm()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lm().is_one()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.order.nvars, self.elements())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let mut r = Reducer { order: &self.order, steps: 0, cap: u64::MAX };
        let reduced = r
            .reduce(&Poly::from_polynomial(p, &self.order), &self.polys, None)
            .expect("uncapped reduction");
        reduced.to_polynomial(self.order.nvars)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether every element of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// True when `m` is not divisible by any leading monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.polys.iter().any(|p| p.lm().divides(m))
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let mut r = Reducer { order: &self.order, steps: 0, cap: u64::MAX };
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = r.s_polynomial(&self.polys[i], &self.polys[j]);
                if !r.reduce(&s, &self.polys, None).expect("uncapped").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reducedness: monic, and no term of an element is divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            p.terms[0].coeff.is_one()
                && p.terms.iter().all(|t| {
                    self.polys.iter().enumerate().all(|(j, q)| i == j || !q.lm().divides(&t.mono))
                })
        })
    }
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_limits(ideal, order, &Limits::default())
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: i64,
    lcm: Key,
    i: usize,
    j: usize,
}

pub fn buchberger_with_limits(
    ideal: &Ideal,
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    assert_eq!(ideal.nvars, order.nvars, "order and ideal live in different rings");
    let mut red = Reducer { order, steps: 0, cap: limits.step_cap };
    let mut basis: Vec<Poly> = Vec::new();
    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let mut inputs: Vec<Poly> =
        ideal.generators.iter().map(|g| Poly::from_polynomial(g, order)).collect();
    inputs.sort_by(|a, b| a.terms[0].key.cmp(&b.terms[0].key).then(a.sugar.cmp(&b.sugar)));

    let insert = |h: Poly,
                      basis: &mut Vec<Poly>,
                      queue: &mut BTreeSet<PairKey>,
                      pending: &mut BTreeSet<(usize, usize)>| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.lm().lcm(h.lm());
            let sugar = (g.sugar + order.sugar(&g.lm().quotient_of(&l)))
                .max(h.sugar + order.sugar(&h.lm().quotient_of(&l)));
            queue.insert(PairKey { sugar, lcm: order.key(&l), i, j });
            pending.insert((i, j));
        }
        basis.push(h);
    };

    for g in inputs {
        let mut h = red.reduce(&g, &basis, None)?;
        if !h.is_zero() {
            h.make_monic();
            insert(h, &mut basis, &mut queue, &mut pending);
        }
    }

    while let Some(pk) = queue.pop_first() {
        let (i, j) = (pk.i, pk.j);
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lm().is_coprime(fj.lm()) {
            continue;
        }
        let l = fi.lm().lcm(fj.lm());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = red.s_polynomial(fi, fj);
        let mut h = red.reduce(&s, &basis, None)?;
        if !h.is_zero() {
            h.make_monic();
            if h.lm().is_one() {
                basis = vec![h];
                break;
            }
            insert(h, &mut basis, &mut queue, &mut pending);
        }
    }

    // Minimalize, then interreduce.
    let mut minimal: Vec<Poly> = Vec::new();
    for (idx, p) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, q)| {
            k != idx && q.lm().divides(p.lm()) && (q.lm() != p.lm() || k < idx)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    minimal.sort_by(|a, b| a.terms[0].key.cmp(&b.terms[0].key));
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let head = Poly { terms: vec![minimal[k].terms[0].clone()], sugar: minimal[k].sugar };
        let tail = Poly { terms: minimal[k].terms[1..].to_vec(), sugar: minimal[k].sugar };
        let mut t = red.reduce(&tail, &minimal, Some(k))?;
        let mut terms = head.terms;
        terms.append(&mut t.terms);
        let mut p = Poly { terms, sugar: minimal[k].sugar };
        p.make_monic();
        reduced.push(p);
    }
    Ok(GroebnerBasis { order: order.clone(), polys: reduced })
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

/// Generators of `I ∩ Q[x_{k+1}, ..., x_n]`, expressed in the remaining variables.
pub fn eliminate(ideal: &Ideal, drop_count: usize, limits: &Limits) -> Result<Ideal> {
    eliminate_with_grading(ideal, drop_count, None, limits)
}

fn eliminate_with_grading(
    ideal: &Ideal,
    drop_count: usize,
    weights: Option<&WeightSystem>,
    limits: &Limits,
) -> Result<Ideal> {
    let n = ideal.nvars;
    if drop_count >= n {
        return Err(Error::InvalidArgument(format!(
            "cannot eliminate {drop_count} of {n} variables"
        )));
    }
    if drop_count == 0 {
        return Ok(ideal.clone());
    }
    let mut order = MonomialOrder::block(drop_count, n);
    if let Some(w) = weights {
        order = order.with_weights(w);
    }
    let gb = buchberger_with_limits(ideal, &order, limits)?;
    let kept = gb
        .elements()
        .into_iter()
        .filter(|g| !g.involves_any(0..drop_count))
        .map(|g| g.without_leading_variables(drop_count))
        .collect();
    Ok(Ideal::new(n - drop_count, kept))
}

/// `I : g^∞`, by adjoining `t`, adding `t g - 1`, and eliminating `t`.
pub fn saturate_by_poly(ideal: &Ideal, g: &Polynomial, limits: &Limits) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::InvalidArgument("cannot saturate by the zero polynomial".into()));
    }
    let n = ideal.nvars;
    let t = Polynomial::var(n + 1, 0);
    let mut gens: Vec<Polynomial> =
        ideal.generators.iter().map(|p| p.with_leading_variable()).collect();
    gens.push(&(&t * &g.with_leading_variable()) - &Polynomial::one(n + 1));
    eliminate(&Ideal::new(n + 1, gens), 1, limits)
}

/// `I ∩ J`, as the `t`-free part of `t I + (1 - t) J`.
pub fn ideal_intersection(i: &Ideal, j: &Ideal, limits: &Limits) -> Result<Ideal> {
    intersection_with_grading(i, j, None, limits)
}

fn intersection_with_grading(
    a: &Ideal,
    b: &Ideal,
    weights: Option<&WeightSystem>,
    limits: &Limits,
) -> Result<Ideal> {
    if a.nvars != b.nvars {
        return Err(Error::InvalidArgument("ideals live in different rings".into()));
    }
    let n = a.nvars;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(n));
    }
    let t = Polynomial::var(n + 1, 0);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let mut gens: Vec<Polynomial> =
        a.generators.iter().map(|p| &t * &p.with_leading_variable()).collect();
    gens.extend(b.generators.iter().map(|p| &one_minus_t * &p.with_leading_variable()));
    let ext = weights.map(|w| w.with_leading(Rational::one())).transpose()?;
    eliminate_with_grading(&Ideal::new(n + 1, gens), 1, ext.as_ref(), limits)
}

/// `I : x_i^∞` for an ideal homogeneous under `w`: compute a weighted grevlex basis
/// with `x_i` last and strip the largest power of `x_i` from each element.
pub fn saturate_by_variable(
    ideal: &Ideal,
    var: usize,
    w: &WeightSystem,
    limits: &Limits,
) -> Result<Ideal> {
    let n = ideal.nvars;
    if var >= n {
        return Err(Error::IndexOutOfRange { index: var, count: n });
    }
    ideal.generator_degrees(w)?;
    // perm[k] = original index placed in slot k; `var` goes last.
    let mut perm: Vec<usize> = (0..n).filter(|&k| k != var).collect();
    perm.push(var);
    let mut inverse = vec![0; n];
    for (slot, &orig) in perm.iter().enumerate() {
        inverse[orig] = slot;
    }
    let permute = |p: &Polynomial, map: &[usize]| {
        Polynomial::from_terms(n, p.terms().map(|(m, c)| (m.permuted(map), c.clone())))
    };
    let pw = WeightSystem::new(perm.iter().map(|&k| w.weight(k).clone()).collect())?;
    let permuted = Ideal::new(n, ideal.generators.iter().map(|g| permute(g, &perm)).collect());
    let order = MonomialOrder::grevlex(n).with_weights(&pw);
    let gb = buchberger_with_limits(&permuted, &order, limits)?;
    let last = n - 1;
    let gens = gb
        .elements()
        .into_iter()
        .map(|g| {
            let k = g.terms().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
            let divided = Polynomial::from_terms(
                n,
                g.terms().map(|(m, c)| {
                    let mut e = *m.exponents();
                    e[last] -= k;
                    (Monomial::new(&e[..n]), c.clone())
                }),
            );
            permute(&divided, &inverse)
        })
        .collect();
    Ok(Ideal::new(n, gens))
}

/// `I : m^∞ = ∩_i (I : x_i^∞)` for an ideal homogeneous under `w`.
pub fn saturate_irrelevant(ideal: &Ideal, w: &WeightSystem, limits: &Limits) -> Result<Ideal> {
    let n = ideal.nvars;
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    ideal.generator_degrees(w)?;
    let order = MonomialOrder::grevlex(n).with_weights(w);
    let base = buchberger_with_limits(ideal, &order, limits)?;
    let mut colons = Vec::new();
    for i in 0..n {
        let c = saturate_by_variable(ideal, i, w, limits)?;
        if base.contains_ideal(&c) {
            // I : x_i^∞ = I forces I : m^∞ = I.
            return Ok(base.ideal());
        }
        colons.push(c);
    }
    let mut acc: Option<Ideal> = None;
    for c in colons {
        let is_unit = c.generators.iter().any(|g| g.is_constant());
        if is_unit {
            continue;
        }
        acc = Some(match acc {
            None => c,
            Some(a) => intersection_with_grading(&a, &c, Some(w), limits)?,
        });
    }
    let sat = acc.unwrap_or_else(|| Ideal::unit(n));
    Ok(buchberger_with_limits(&sat, &order, limits)?.ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(3, gens.iter().map(|s| p(s)).collect())
    }

    fn gb(gens: &[&str]) -> GroebnerBasis {
        buchberger(&ideal(gens), &MonomialOrder::grevlex(3)).unwrap()
    }

    fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
        let o = MonomialOrder::grevlex(a.nvars());
        let ga = buchberger(a, &o).unwrap();
        let gb = buchberger(b, &o).unwrap();
        ga.contains_ideal(b) && gb.contains_ideal(a)
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(gb(&["x"]).elements(), vec![p("x")]);
        let g = gb(&["x^2+y^2", "x^2-y^2"]);
        let mut els: Vec<String> = g.elements().iter().map(|e| e.to_string()).collect();
        els.sort();
        assert_eq!(els, vec!["x^2", "y^2"]);
        let g = gb(&["3x^2", "3y^2", "3z^2"]);
        let mut els: Vec<String> = g.elements().iter().map(|e| e.to_string()).collect();
        els.sort();
        assert_eq!(els, vec!["x^2", "y^2", "z^2"]);
    }

    #[test]
    fn basis_is_reduced_and_closed_under_s_pairs() {
        for order in [MonomialOrder::grevlex(3), MonomialOrder::lex(3), MonomialOrder::block(1, 3)] {
            let g = buchberger(&ideal(&["x^2*y - z", "x*y^2 - x", "y*z^2 + x^3"]), &order).unwrap();
            assert!(g.satisfies_buchberger_criterion());
            assert!(g.is_reduced());
        }
    }

    #[test]
    fn normal_form_examples() {
        let g = gb(&["x^2", "y^2", "z^2"]);
        assert!(g.normal_form(&p("x^3")).is_zero());
        assert_eq!(g.normal_form(&p("x*y*z")), p("x*y*z"));
        assert_eq!(g.normal_form(&p("x^2*y + z")), p("z"));
    }

    #[test]
    fn elimination_examples() {
        // Ring (t, x, y) is encoded in three slots with t first.
        let i = ideal(&["x*y - 1", "x*z"]);
        let e = eliminate(&i, 1, &Limits::default()).unwrap();
        assert_eq!(e.nvars(), 2);
        assert!(same_ideal(&e, &Ideal::new(2, vec![parse_polynomial("y", 2).unwrap()])));
        let e = eliminate(&ideal(&["y"]), 1, &Limits::default()).unwrap();
        assert!(same_ideal(&e, &Ideal::new(2, vec![parse_polynomial("x", 2).unwrap()])));
        let e = eliminate(&ideal(&["x - y"]), 1, &Limits::default()).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn saturation_by_polynomial_examples() {
        let l = Limits::default();
        // I = x (x, y, z): the single colon I : x is (x, y, z), and since x^2 ∈ I
        // the saturation I : x^∞ is the unit ideal.
        let s = saturate_by_poly(&ideal(&["x^2", "x*y", "x*z"]), &p("x"), &l).unwrap();
        assert!(same_ideal(&s, &Ideal::unit(3)));
        let g = gb(&["x^2", "x*y", "x*z"]);
        for v in ["x", "y", "z"] {
            assert!(g.contains(&(&p(v) * &p("x"))));
        }
        assert!(!g.contains(&p("x")));
        assert!(g.contains(&(&p("x") * &p("x"))));
        let s = saturate_by_poly(&ideal(&["x"]), &p("y"), &l).unwrap();
        assert!(same_ideal(&s, &ideal(&["x"])));
        let s = saturate_by_poly(&ideal(&["x^2"]), &p("x"), &l).unwrap();
        assert!(same_ideal(&s, &Ideal::unit(3)));
        assert!(saturate_by_poly(&ideal(&["x"]), &Polynomial::zero(3), &l).is_err());
    }

    #[test]
    fn intersection_examples() {
        let l = Limits::default();
        let r = ideal_intersection(&ideal(&["x"]), &ideal(&["y"]), &l).unwrap();
        assert!(same_ideal(&r, &ideal(&["x*y"])));
        let r = ideal_intersection(&ideal(&["x"]), &ideal(&["x"]), &l).unwrap();
        assert!(same_ideal(&r, &ideal(&["x"])));
        let r = ideal_intersection(&ideal(&["x", "y"]), &ideal(&["z"]), &l).unwrap();
        assert!(same_ideal(&r, &ideal(&["x*z", "y*z"])));
    }

    #[test]
    fn irrelevant_saturation_examples() {
        let l = Limits::default();
        let w = WeightSystem::standard(3);
        let s = saturate_irrelevant(&ideal(&["x^2", "x*y", "x*z"]), &w, &l).unwrap();
        assert!(same_ideal(&s, &ideal(&["x"])));
        let s = saturate_irrelevant(&ideal(&["x^2", "y^2", "z^2"]), &w, &l).unwrap();
        assert!(same_ideal(&s, &Ideal::unit(3)));
        let s = saturate_irrelevant(&ideal(&["x"]), &w, &l).unwrap();
        assert!(same_ideal(&s, &ideal(&["x"])));
    }

    #[test]
    fn variable_saturation_agrees_with_localization() {
        let l = Limits::default();
        let w = WeightSystem::standard(3);
        let i = ideal(&["x^2*y - x*z^2", "x*y^2", "y^3 - x*z^2"]);
        for v in 0..3 {
            let fast = saturate_by_variable(&i, v, &w, &l).unwrap();
            let slow = saturate_by_poly(&i, &Polynomial::var(3, v), &l).unwrap();
            assert!(same_ideal(&fast, &slow), "variable {v}");
        }
    }

    #[test]
    fn step_cap_is_enforced() {
        let tiny = Limits { step_cap: 3 };
        let r = buchberger_with_limits(
            &ideal(&["x^3 - y*z^2", "y^3 - x^2*z", "z^3 - x*y^2"]),
            &MonomialOrder::lex(3),
            &tiny,
        );
        assert_eq!(r.unwrap_err(), Error::ResourceLimit(3));
    }
}
