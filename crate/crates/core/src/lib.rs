//! Exact and high-precision machinery for Cauchy numbers of the second kind.
//!
//! The sequence in question is `c_n = ∫_0^1 x(x+1)⋯(x+n-1) dx`, a strictly
//! positive, log-convex sequence of rationals whose normalization
//! `μ_n = c_n/n!` is a completely monotonic (Hausdorff moment) sequence.
//!
//! The crate provides:
//!
//! * two independent exact routes to `c_n` over arbitrary-precision
//!   rationals ([`cauchy`]), cross-checkable bit for bit;
//! * arbitrary-precision quadrature of the integral representation
//!   `μ_n = ∫_0^∞ du / (u (π² + ln²u) (1+u)^n)` and its relatives
//!   ([`quad`]), serving as an independent numerical oracle;
//! * exact finite-difference tables over `μ_n` with complete-monotonicity
//!   and minimality probes ([`diff`]);
//! * exact determinant checks for Hankel-type matrices built from the
//!   sequence ([`matrix`]);
//! * majorization machinery and exact product/power inequality suites
//!   ([`majorize`], [`ineq`]).
//!
//! Every inequality check works in exact rational arithmetic and produces a
//! structured [`report::CheckReport`] with per-case margins.

pub mod cauchy;
pub mod diff;
pub mod error;
pub mod ineq;
pub mod majorize;
pub mod matrix;
pub mod quad;
pub mod rational;
pub mod report;
pub mod stirling;
pub mod suites;

pub use cauchy::{
    cauchy_via_series, cauchy_via_stirling, falling_factorial, rising_factorial, CauchyTable,
    SeriesCoeffs,
};
pub use error::Error;
pub use rational::ExactRational;
pub use report::{CaseRecord, CheckReport, ExactValue};
pub use stirling::StirlingTriangle;

/// Default cap on table indices; larger tables must be requested explicitly
/// because entry bit lengths grow super-exponentially in `n`.
pub const DEFAULT_TABLE_BOUND: usize = 256;
