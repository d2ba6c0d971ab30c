//! Arbitrary-precision quadrature of the integral representations.
//!
//! The semi-infinite integrals all share the weight `1/(u (π² + ln²u))`.
//! Substituting `u = e^v` and then `v = π·tan θ` absorbs that weight
//! exactly and leaves a bounded smooth integrand on `(-π/2, π/2)`:
//!
//! ```text
//! ∫_0^∞ G(u) du / (u (π² + ln²u))  =  (1/π) ∫_{-π/2}^{π/2} G(e^{π tan θ}) dθ
//! ```
//!
//! Evaluation is guarded near the endpoints: once `π·tan θ` leaves the
//! exponent budget of the float backend, `G` is replaced by its exact
//! one-sided limit, whose neglected tail is below rounding.

mod engine;
mod float;
mod integrand;
mod rules;

pub use engine::{closed_form_f, QuadEngine, QuadResult, REFINEMENT_ORDERS};
pub use float::{bigfloat_from_rational, le, lt, FloatCtx, GUARD_BITS};
pub use integrand::{transform_integrand, IntegrandSpec, TransformedIntegrand};
pub use rules::RuleKind;

pub use astro_float::BigFloat;
