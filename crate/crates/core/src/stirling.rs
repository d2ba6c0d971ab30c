//! Unsigned Stirling numbers of the first kind.
//!
//! `s(n, k)` is the coefficient of `x^k` in the rising factorial
//! `x(x+1)⋯(x+n-1)`, so each row of the triangle sums to `n!`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::DEFAULT_TABLE_BOUND;

/// Triangle of unsigned Stirling numbers of the first kind, rows `0..=n_max`.
#[derive(Debug, Clone)]
pub struct StirlingTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    /// Builds the triangle through row `n_max` under the default bound.
    pub fn build(n_max: usize) -> Result<Self, Error> {
        Self::build_with_bound(n_max, DEFAULT_TABLE_BOUND)
    }

    /// Builds the triangle through row `n_max`; `bound` is an explicit
    /// opt-in cap for large tables.
    pub fn build_with_bound(n_max: usize, bound: usize) -> Result<Self, Error> {
        if n_max > bound {
            return Err(Error::Capacity {
                needed: n_max,
                bound,
            });
        }
        let mut rows = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 0..n_max {
            let prev = &rows[n];
            let mut row = vec![BigInt::zero(); n + 2];
            // s(n+1, k) = n*s(n, k) + s(n, k-1)
            for k in 0..=n + 1 {
                let mut v = BigInt::zero();
                if k <= n {
                    v += BigInt::from(n) * &prev[k];
                }
                if k >= 1 {
                    v += &prev[k - 1];
                }
                row[k] = v;
            }
            rows.push(row);
        }
        Ok(StirlingTriangle { rows })
    }

    /// Number of rows stored (`n_max + 1`).
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// `s(n, k)`; zero for `k > n`.
    pub fn entry(&self, n: usize, k: usize) -> BigInt {
        if n >= self.rows.len() {
            panic!("row {n} not built (have {})", self.rows.len());
        }
        if k > n {
            BigInt::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

/// Builds the triangle through row `n_max` (default bound).
pub fn build_stirling(n_max: usize) -> Result<StirlingTriangle, Error> {
    StirlingTriangle::build(n_max)
}
