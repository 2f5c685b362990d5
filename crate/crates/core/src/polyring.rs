//! Sparse polynomials over the rationals in at most [`MAX_VARS`] variables,
//! weighted gradings, and the text grammar used for input.
//!
//! The user-facing ring is `Q[x, y, z]`. A fourth slot exists so that
//! elimination can adjoin an auxiliary variable without a second monomial type.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type WeightedDegree = Rational;

pub const MAX_VARS: usize = 4;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` (optionally signed) into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: '{text}'"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator { pos: t.find('/').unwrap_or(0) });
    }
    Ok(Rational::new(num, den))
}

/// Positive rational weights, one per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<Rational>,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() || weights.len() > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "expected between 1 and {MAX_VARS} weights, got {}",
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight(w.to_string()));
        }
        Ok(WeightSystem { weights })
    }

    pub fn from_integers(weights: &[i64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| int(w)).collect())
    }

    /// All weights equal to one.
    pub fn standard(n: usize) -> Self {
        WeightSystem { weights: vec![Rational::one(); n] }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let ws = text.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Self::new(ws)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight_sum(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|w| w.is_one())
    }

    pub fn max_weight(&self) -> Rational {
        self.weights.iter().max().cloned().unwrap_or_else(Rational::one)
    }

    /// Prepends a variable of the given weight (used for auxiliary elimination variables).
    pub fn with_leading(&self, w: Rational) -> Result<Self> {
        let mut weights = vec![w];
        weights.extend(self.weights.iter().cloned());
        Self::new(weights)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Exponent vector. Slots beyond the ring's variable count are always zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = Monomial::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn wdeg(&self, w: &WeightSystem) -> Rational {
        let mut d = Rational::zero();
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                d += w.weight(i) * int(e as i64);
            }
        }
        d
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Moves exponents according to `perm`: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut m = Monomial::default();
        for (i, &p) in perm.iter().enumerate() {
            m.exps[i] = self.exps[p];
        }
        m
    }

    /// Shifts every exponent one slot to the right, freeing slot 0.
    pub fn shifted_right(&self) -> Monomial {
        assert_eq!(self.exps[MAX_VARS - 1], 0, "no free variable slot");
        let mut m = Monomial::default();
        m.exps[1..].copy_from_slice(&self.exps[..MAX_VARS - 1]);
        m
    }

    /// Drops the first `k` slots, which must be zero.
    pub fn shifted_left(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        let mut m = Monomial::default();
        m.exps[..MAX_VARS - k].copy_from_slice(&self.exps[k..]);
        m
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    // Exponents add under multiplication.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut m = self;
        for i in 0..MAX_VARS {
            m.exps[i] += rhs.exps[i];
        }
        m
    }
}

/// Graded reverse lexicographic comparison by total degree.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for i in (0..MAX_VARS).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// All monomials in `n` variables of weighted degree exactly `q`, in ascending
/// lexicographic order of exponent vectors.
pub fn monomials_of_degree(w: &WeightSystem, q: &Rational) -> Vec<Monomial> {
    let n = w.len();
    let mut out = Vec::new();
    if q.is_negative() {
        return out;
    }
    let mut exps = [0u16; MAX_VARS];
    fn rec(
        i: usize,
        n: usize,
        remaining: Rational,
        w: &WeightSystem,
        exps: &mut [u16; MAX_VARS],
        out: &mut Vec<Monomial>,
    ) {
        if i + 1 == n {
            let e = &remaining / w.weight(i);
            if e.is_integer() && !e.is_negative() {
                let e: i64 = e.to_integer().try_into().expect("exponent overflow");
                exps[i] = e as u16;
                out.push(Monomial { exps: *exps });
                exps[i] = 0;
            }
            return;
        }
        let mut e = 0u16;
        let mut rem = remaining;
        while !rem.is_negative() {
            exps[i] = e;
            rec(i + 1, n, rem.clone(), w, exps, out);
            rem -= w.weight(i);
            e += 1;
        }
        exps[i] = 0;
    }
    rec(0, n, q.clone(), w, &mut exps, &mut out);
    out.sort();
    out
}

/// Number of monomials of weighted degree `q`.
pub fn count_monomials(w: &WeightSystem, q: &Rational) -> usize {
    monomials_of_degree(w, q).len()
}

/// Weighted degrees attained by monomials, in increasing order, up to and including `limit`.
pub fn attained_degrees(w: &WeightSystem, limit: &Rational) -> Vec<Rational> {
    let mut degs: Vec<Rational> = vec![Rational::zero()];
    let mut frontier = vec![Rational::zero()];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Rational::zero());
    while let Some(d) = frontier.pop() {
        for wi in w.weights() {
            let nd = &d + wi;
            if &nd <= limit && seen.insert(nd.clone()) {
                degs.push(nd.clone());
                frontier.push(nd);
            }
        }
    }
    degs.sort();
    degs
}

/// A polynomial with exact rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "unsupported variable count {nvars}");
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::term(nvars, Monomial::var(i), Rational::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// A linear form `a_0 x_0 + ... + a_{n-1} x_{n-1}`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs.len(),
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i), c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.exps[self.nvars..].iter().all(|&e| e == 0));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (*k * *m, a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i` (zero-based).
    pub fn derivative(&self, i: usize) -> Result<Self> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, count: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e > 0 {
                let mut dm = *m;
                dm.exps[i] -= 1;
                out.add_term(dm, c * int(e as i64));
            }
        }
        Ok(out)
    }

    /// Weighted degree of every term, or `None` if they differ.
    pub fn wdeg(&self, w: &WeightSystem) -> Result<Option<WeightedDegree>> {
        self.check_weights(w)?;
        let mut degs = self.terms.keys().map(|m| m.wdeg(w));
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        Ok(if degs.all(|d| d == first) { Some(first) } else { None })
    }

    pub fn is_quasi_homogeneous(&self, w: &WeightSystem) -> Result<bool> {
        Ok(self.wdeg(w)?.is_some())
    }

    /// The weighted Euler derivation `sum_i w_i x_i d/dx_i` applied to `self`.
    pub fn euler_apply(&self, w: &WeightSystem) -> Result<Self> {
        self.check_weights(w)?;
        Ok(Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (*m, c * m.wdeg(w))),
        ))
    }

    fn check_weights(&self, w: &WeightSystem) -> Result<()> {
        if w.len() != self.nvars {
            return Err(Error::InvalidArgument(format!(
                "{} weights supplied for {} variables",
                w.len(),
                self.nvars
            )));
        }
        Ok(())
    }

    /// Substitutes `images[i]` for variable `i`. All images must live in one ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images[0].nvars;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exps[i];
                if e > 0 {
                    t = &t * &img.pow(e as u32);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Re-embeds into a ring with a fresh variable in slot 0.
    pub fn with_leading_variable(&self) -> Self {
        assert!(self.nvars < MAX_VARS);
        Polynomial {
            nvars: self.nvars + 1,
            terms: self.terms.iter().map(|(m, c)| (m.shifted_right(), c.clone())).collect(),
        }
    }

    /// Drops the first `k` variables, which must not occur.
    pub fn without_leading_variables(&self, k: usize) -> Self {
        assert!(k < self.nvars);
        Polynomial {
            nvars: self.nvars - k,
            terms: self.terms.iter().map(|(m, c)| (m.shifted_left(k), c.clone())).collect(),
        }
    }

    pub fn involves_any(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.keys().any(|m| vars.clone().any(|i| m.exps[i] > 0))
    }

    /// Terms in canonical display order (descending grevlex).
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut ts: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        ts.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        ts
    }

    /// Divides by the leading coefficient (in display order). Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.sorted_terms().first() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn variable_name(nvars: usize, i: usize) -> String {
        if nvars <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut vars = Vec::new();
            for i in 0..self.nvars {
                match m.exps[i] {
                    0 => {}
                    1 => vars.push(Self::variable_name(self.nvars, i)),
                    e => vars.push(format!("{}^{}", Self::variable_name(self.nvars, i), e)),
                }
            }
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", a, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

/// Parses a polynomial in `variable_count` variables named `x, y, z` (or `x1, x2, x3`).
pub fn parse_polynomial(text: &str, variable_count: usize) -> Result<Polynomial> {
    if variable_count == 0 || variable_count > 3 {
        return Err(Error::InvalidArgument(format!(
            "variable count must be 1, 2 or 3, got {variable_count}"
        )));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars: variable_count };
    p.polynomial()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.to_string() })
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        let mut sign = Rational::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coefficient()?;
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                            return self.err("expected variable after '*'");
                        }
                        Ok((self.monomials()?, coeff))
                    }
                    Some(c) if c.is_ascii_alphabetic() => Ok((self.monomials()?, coeff)),
                    _ => Ok((Monomial::one(), coeff)),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => Ok((self.monomials()?, Rational::one())),
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num = self.unsigned()?;
        if self.peek() == Some(b'/') {
            let slash = self.pos;
            self.pos += 1;
            let den = self.unsigned()?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator { pos: slash });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn monomials(&mut self) -> Result<Monomial> {
        let mut m = Monomial::one();
        loop {
            let i = self.variable()?;
            let mut e = 1u16;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let k = self.unsigned()?;
                e = u16::try_from(k).or_else(|_| self.err("exponent too large"))?;
            }
            m.exps[i] = m.exps[i]
                .checked_add(e)
                .map_or_else(|| self.err("exponent too large"), Ok)?;
            match self.peek() {
                Some(b'*') => {
                    // Lookahead: '*' must be followed by another variable here.
                    self.pos += 1;
                    match self.peek() {
                        Some(c) if c.is_ascii_alphabetic() => continue,
                        _ => return self.err("expected variable after '*'"),
                    }
                }
                Some(c) if c.is_ascii_alphabetic() => continue,
                _ => return Ok(m),
            }
        }
    }

    fn variable(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let idx = match name {
            "x" | "x1" => Some(0),
            "y" | "x2" => Some(1),
            "z" | "x3" => Some(2),
            _ => None,
        };
        match idx {
            Some(i) if i < self.nvars => Ok(i),
            _ => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
        }
    }
}
