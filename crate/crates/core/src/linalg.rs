//! Dense exact linear algebra over the rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination after clearing
//! denominators row by row, so every intermediate value is an integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        let nrows = rows.len();
        Ok(RationalMatrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>], rows: usize) -> Result<Self> {
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::InvalidArgument("ragged matrix columns".into()));
        }
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale_row(&mut self, i: usize, c: &Rational) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| integer_row(&self.data[i * self.cols..(i + 1) * self.cols]))
            .filter(|r| r.iter().any(|v| !v.is_zero()))
            .collect();
        bareiss_rank(rows, self.cols)
    }

    /// Dimension of the right kernel `{v : M v = 0}`.
    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
}

/// Fraction-free Gaussian elimination; consumes the rows.
pub(crate) fn bareiss_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let nrows = rows.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        // Smallest nonzero pivot keeps entries shorter.
        let pivot = (rank..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].bits());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = &prow[col];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            if factor.is_zero() {
                for v in row[col + 1..].iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * pv / &prev;
                    }
                }
            } else {
                for j in col + 1..cols {
                    let v = &row[j] * pv - &factor * &prow[j];
                    row[j] = v / &prev;
                }
            }
            row[col] = BigInt::zero();
        }
        prev = pv.clone();
        rank += 1;
    }
    rank
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

pub fn kernel_dimension(m: &RationalMatrix) -> usize {
    m.kernel_dimension()
}

/// Dimension of the span of the given vectors, which must share a length.
pub fn span_dimension(vectors: &[Vec<Rational>]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    Ok(RationalMatrix::from_rows(vectors.to_vec())?.rank())
}
