//! Exact Cauchy numbers of the second kind by two independent routes.
//!
//! `c_n = ∫_0^1 x(x+1)⋯(x+n-1) dx`. Route (a) expands the rising factorial
//! with unsigned Stirling numbers of the first kind and integrates term by
//! term: `c_n = Σ_k s(n,k)/(k+1)`. Route (b) inverts the power series of
//! `(1+t)ln(1+t)/t`, whose reciprocal generates `(-1)^n c_n/n!`. The two
//! routes share no intermediate results, so exact agreement is a strong
//! cross-check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{factorial, ExactRational};
use crate::stirling::StirlingTriangle;
use crate::DEFAULT_TABLE_BOUND;

/// Maclaurin coefficients of `(1+t)·ln(1+t)/t`:
/// `a_0 = 1`, `a_j = (-1)^(j-1)/(j(j+1))` for `j ≥ 1`.
#[derive(Debug, Clone)]
pub struct SeriesCoeffs {
    a: Vec<ExactRational>,
}

impl SeriesCoeffs {
    pub fn generate(n_max: usize) -> Self {
        let mut a = Vec::with_capacity(n_max + 1);
        a.push(ExactRational::one());
        for j in 1..=n_max {
            let mag = ExactRational::new(BigInt::one(), BigInt::from(j) * BigInt::from(j + 1));
            a.push(if j % 2 == 1 { mag } else { -mag });
        }
        SeriesCoeffs { a }
    }

    pub fn coeff(&self, j: usize) -> &ExactRational {
        &self.a[j]
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// Cached exact values `c_0..=c_n_max` and their normalizations `μ_n = c_n/n!`.
#[derive(Debug, Clone)]
pub struct CauchyTable {
    c: Vec<ExactRational>,
    mu: Vec<ExactRational>,
}

impl CauchyTable {
    /// Builds the table through `n_max` by the series route (default bound).
    pub fn build(n_max: usize) -> Result<Self, Error> {
        Self::build_with_bound(n_max, DEFAULT_TABLE_BOUND)
    }

    /// Builds the table through `n_max`; `bound` is an explicit opt-in cap.
    pub fn build_with_bound(n_max: usize, bound: usize) -> Result<Self, Error> {
        if n_max > bound {
            return Err(Error::Capacity {
                needed: n_max,
                bound,
            });
        }
        Ok(series_table(n_max))
    }

    pub fn n_max(&self) -> usize {
        self.c.len() - 1
    }

    /// `c_n`. Panics when `n` is beyond the table; use [`CauchyTable::get_c`]
    /// for a checked lookup.
    pub fn c(&self, n: usize) -> &ExactRational {
        &self.c[n]
    }

    /// `μ_n = c_n/n!`.
    pub fn mu(&self, n: usize) -> &ExactRational {
        &self.mu[n]
    }

    pub fn get_c(&self, n: usize) -> Result<&ExactRational, Error> {
        self.c.get(n).ok_or(Error::Capacity {
            needed: n,
            bound: self.n_max(),
        })
    }

    pub fn get_mu(&self, n: usize) -> Result<&ExactRational, Error> {
        self.mu.get(n).ok_or(Error::Capacity {
            needed: n,
            bound: self.n_max(),
        })
    }

    pub fn mu_slice(&self) -> &[ExactRational] {
        &self.mu
    }

    pub fn c_slice(&self) -> &[ExactRational] {
        &self.c
    }
}

fn series_table(n_max: usize) -> CauchyTable {
    let coeffs = SeriesCoeffs::generate(n_max);
    // b_n solves Σ_{j=0}^n a_j b_{n-j} = [n = 0]; then c_n = (-1)^n n! b_n.
    let mut b: Vec<ExactRational> = Vec::with_capacity(n_max + 1);
    b.push(ExactRational::one());
    for n in 1..=n_max {
        let mut acc = ExactRational::zero();
        for j in 1..=n {
            acc += coeffs.coeff(j) * &b[n - j];
        }
        b.push(-acc);
    }
    let mut c = Vec::with_capacity(n_max + 1);
    let mut mu = Vec::with_capacity(n_max + 1);
    for (n, bn) in b.into_iter().enumerate() {
        let mun = if n % 2 == 0 { bn } else { -bn };
        c.push(&mun * ExactRational::from_integer(factorial(n)));
        mu.push(mun);
    }
    CauchyTable { c, mu }
}

/// Route (b): full table of `c_n` via power-series inversion.
pub fn cauchy_via_series(n_max: usize) -> Result<CauchyTable, Error> {
    CauchyTable::build(n_max)
}

/// Route (a): `c_n = Σ_{k=0}^n s(n,k)/(k+1)` from a Stirling triangle.
pub fn cauchy_via_stirling(n: usize, tri: &StirlingTriangle) -> Result<ExactRational, Error> {
    if n >= tri.rows() {
        return Err(Error::Capacity {
            needed: n,
            bound: tri.rows().saturating_sub(1),
        });
    }
    let mut acc = ExactRational::zero();
    for (k, s) in tri.row(n).iter().enumerate() {
        if !s.is_zero() {
            acc += ExactRational::new(s.clone(), BigInt::from(k + 1));
        }
    }
    Ok(acc)
}

/// Rising factorial `x(x+1)⋯(x+n-1)`; `1` for `n = 0`.
pub fn rising_factorial(x: &ExactRational, n: usize) -> ExactRational {
    let mut acc = ExactRational::one();
    for i in 0..n {
        acc *= x + ExactRational::from_integer(BigInt::from(i));
    }
    acc
}

/// Falling factorial `x(x-1)⋯(x-n+1)`; `1` for `n = 0`.
pub fn falling_factorial(x: &ExactRational, n: usize) -> ExactRational {
    let mut acc = ExactRational::one();
    for i in 0..n {
        acc *= x - ExactRational::from_integer(BigInt::from(i));
    }
    acc
}

/// The seven leading values `c_0..=c_6`, frozen for regression checks.
pub fn reference_values() -> Vec<ExactRational> {
    use crate::rational::rat;
    vec![
        rat(1, 1),
        rat(1, 2),
        rat(5, 6),
        rat(9, 4),
        rat(251, 30),
        rat(475, 12),
        rat(19087, 84),
    ]
}
