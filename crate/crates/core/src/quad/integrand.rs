//! Integrand specifications and their transformed, guarded evaluations.

use astro_float::BigFloat;
use num_traits::{Signed, ToPrimitive, Zero};

use super::float::{le, FloatCtx};
use crate::error::Error;
use crate::rational::{ratio_string, ExactRational};

/// Which integral to evaluate. All kinds share the weight
/// `1/(u (π² + ln²u))` over `u ∈ (0, ∞)`:
///
/// * `CauchyMoment(n)`: `G(u) = (1+u)^{-n}`, value `c_n/n!`;
/// * `FAt(z)`: `G(u) = (u+1)/(u+1+z)`, value `z/((1+z)ln(1+z))`;
/// * `HAt(n, t)`: `G(u) = (u+1)/(u+1+t)^{n+1}`;
/// * `HGeneral(s, t)`: as `HAt` with real order `s ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegrandSpec {
    CauchyMoment { n: usize },
    FAt { z: ExactRational },
    HAt { n: usize, t: ExactRational },
    HGeneral { s: ExactRational, t: ExactRational },
}

impl IntegrandSpec {
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            IntegrandSpec::CauchyMoment { .. } => Ok(()),
            IntegrandSpec::FAt { z } => {
                if z <= &-ExactRational::from_integer(1.into()) {
                    Err(Error::Domain(format!(
                        "F requires z > -1, got {}",
                        ratio_string(z)
                    )))
                } else {
                    Ok(())
                }
            }
            IntegrandSpec::HAt { t, .. } => {
                if t.is_negative() {
                    Err(Error::Domain(format!(
                        "h requires t >= 0, got {}",
                        ratio_string(t)
                    )))
                } else {
                    Ok(())
                }
            }
            IntegrandSpec::HGeneral { s, t } => {
                if s.is_negative() {
                    Err(Error::Domain(format!(
                        "h requires s >= 0, got {}",
                        ratio_string(s)
                    )))
                } else if t.is_negative() {
                    Err(Error::Domain(format!(
                        "h requires t >= 0, got {}",
                        ratio_string(t)
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            IntegrandSpec::CauchyMoment { n } => format!("cauchy_moment(n={n})"),
            IntegrandSpec::FAt { z } => format!("F(z={})", ratio_string(z)),
            IntegrandSpec::HAt { n, t } => format!("h(n={n}, t={})", ratio_string(t)),
            IntegrandSpec::HGeneral { s, t } => {
                format!("h(s={}, t={})", ratio_string(s), ratio_string(t))
            }
        }
    }
}

/// Exponent of `(denominator)` in the `h` kinds, either an integer (fast
/// power) or a general real exponent.
#[derive(Debug, Clone)]
enum PowerExp {
    Int(usize),
    Real(BigFloat),
}

/// Spec parameters converted to working precision, ready for node-wise
/// evaluation.
#[derive(Debug, Clone)]
pub(crate) struct PreparedIntegrand {
    kind: PreparedKind,
    inv_pi: BigFloat,
}

#[derive(Debug, Clone)]
enum PreparedKind {
    Moment {
        n: usize,
    },
    F {
        z: BigFloat,
        /// 1/(π(1+z)), the exact θ → -π/2 limit.
        low_limit: BigFloat,
    },
    H {
        t: BigFloat,
        exponent: PowerExp,
        /// True when the θ → +π/2 limit is 1/π rather than 0 (order zero).
        flat_high: bool,
        /// (1/π)·(1+t)^{-(order+1)}, the exact θ → -π/2 limit.
        low_limit: BigFloat,
    },
}

/// Classification of `w = e^{π tan θ}` at a node.
#[derive(Debug, Clone)]
pub(crate) enum WClass {
    /// `π tan θ` above the guard threshold: use the `u → ∞` limit.
    Huge,
    /// `π tan θ` below the negative threshold: use the `u → 0` limit.
    Tiny,
    Finite(BigFloat),
}

impl PreparedIntegrand {
    pub(crate) fn new(spec: &IntegrandSpec, ctx: &mut FloatCtx) -> Result<Self, Error> {
        spec.validate()?;
        let pi = ctx.pi();
        let inv_pi = ctx.recip(&pi);
        let kind = match spec {
            IntegrandSpec::CauchyMoment { n } => PreparedKind::Moment { n: *n },
            IntegrandSpec::FAt { z } => {
                let zf = ctx.from_rational(z);
                let denom = ctx.add(&ctx.one(), &zf);
                let low_limit = ctx.div(&inv_pi, &denom);
                PreparedKind::F { z: zf, low_limit }
            }
            IntegrandSpec::HAt { n, t } => {
                let tf = ctx.from_rational(t);
                let exponent = PowerExp::Int(n + 1);
                let base = ctx.add(&ctx.one(), &tf);
                let low_limit = ctx.div(&inv_pi, &ctx.powi(&base, n + 1));
                PreparedKind::H {
                    t: tf,
                    exponent,
                    flat_high: *n == 0,
                    low_limit,
                }
            }
            IntegrandSpec::HGeneral { s, t } => {
                let tf = ctx.from_rational(t);
                let s_plus_1 = s + ExactRational::from_integer(1.into());
                let exponent = if s.denom() == &num_bigint::BigInt::from(1) {
                    match s.numer().to_usize() {
                        Some(k) => PowerExp::Int(k + 1),
                        None => {
                            return Err(Error::Domain(format!(
                                "s too large: {}",
                                ratio_string(s)
                            )))
                        }
                    }
                } else {
                    PowerExp::Real(ctx.from_rational(&s_plus_1))
                };
                let base = ctx.add(&ctx.one(), &tf);
                let denom = match &exponent {
                    PowerExp::Int(k) => ctx.powi(&base, *k),
                    PowerExp::Real(e) => ctx.pow(&base, e),
                };
                let low_limit = ctx.div(&inv_pi, &denom);
                PreparedKind::H {
                    t: tf,
                    exponent,
                    flat_high: s.is_zero(),
                    low_limit,
                }
            }
        };
        Ok(PreparedIntegrand { kind, inv_pi })
    }

    /// Value of the transformed integrand (including the `1/π` factor)
    /// given the classified `w` at the node.
    pub(crate) fn eval(&self, w: &WClass, ctx: &mut FloatCtx) -> BigFloat {
        match (&self.kind, w) {
            (PreparedKind::Moment { n }, WClass::Huge) => {
                if *n == 0 {
                    self.inv_pi.clone()
                } else {
                    ctx.zero()
                }
            }
            (PreparedKind::Moment { .. }, WClass::Tiny) => self.inv_pi.clone(),
            (PreparedKind::Moment { n }, WClass::Finite(w)) => {
                let base = ctx.add(&ctx.one(), w);
                ctx.div(&self.inv_pi, &ctx.powi(&base, *n))
            }
            (PreparedKind::F { .. }, WClass::Huge) => self.inv_pi.clone(),
            (PreparedKind::F { low_limit, .. }, WClass::Tiny) => low_limit.clone(),
            (PreparedKind::F { z, .. }, WClass::Finite(w)) => {
                let wp1 = ctx.add(w, &ctx.one());
                let denom = ctx.add(&wp1, z);
                ctx.mul(&self.inv_pi, &ctx.div(&wp1, &denom))
            }
            (PreparedKind::H { flat_high, .. }, WClass::Huge) => {
                if *flat_high {
                    self.inv_pi.clone()
                } else {
                    ctx.zero()
                }
            }
            (PreparedKind::H { low_limit, .. }, WClass::Tiny) => low_limit.clone(),
            (PreparedKind::H { t, exponent, .. }, WClass::Finite(w)) => {
                let wp1 = ctx.add(w, &ctx.one());
                let base = ctx.add(&wp1, t);
                let denom = match exponent {
                    PowerExp::Int(k) => ctx.powi(&base, *k),
                    PowerExp::Real(e) => ctx.pow(&base, e),
                };
                ctx.mul(&self.inv_pi, &ctx.div(&wp1, &denom))
            }
        }
    }
}

/// Guard threshold on `π tan θ` in natural-log units. The float backend
/// only overflows near 1.5e9 (binary exponent limit), so 1e8 leaves ample
/// headroom while sitting far beyond the transition region of every
/// supported integrand; replacing the tail by its analytic limit there
/// changes the value by at most `e^{-s·1e8}` for decay order `s`.
const GUARD_LN_LIMIT: f64 = 1.0e8;

pub(crate) fn guard_threshold(ctx: &FloatCtx) -> BigFloat {
    ctx.from_f64(GUARD_LN_LIMIT)
}

/// Classifies `w = e^{π tan θ}`, evaluating the exponential only when safe.
pub(crate) fn classify_theta(
    theta: &BigFloat,
    half_pi: &BigFloat,
    limit: &BigFloat,
    ctx: &mut FloatCtx,
) -> WClass {
    // Closed endpoints map to the one-sided limits.
    if !le(&theta.abs(), half_pi) || theta.cmp(half_pi) == Some(0) {
        return if theta.is_positive() {
            WClass::Huge
        } else {
            WClass::Tiny
        };
    }
    if theta.cmp(&half_pi.neg()) == Some(0) {
        return WClass::Tiny;
    }
    let pi = ctx.pi();
    let tan_theta = ctx.tan(theta);
    let ln_w = ctx.mul(&pi, &tan_theta);
    if !le(&ln_w, limit) {
        WClass::Huge
    } else if !le(&ln_w.neg(), limit) {
        WClass::Tiny
    } else {
        WClass::Finite(ctx.exp(&ln_w))
    }
}

/// A transformed integrand: a smooth, overflow-safe function of
/// `θ ∈ [-π/2, π/2]` whose integral over that interval equals the original
/// semi-infinite integral.
pub struct TransformedIntegrand {
    prepared: PreparedIntegrand,
    ctx: FloatCtx,
    half_pi: BigFloat,
    limit: BigFloat,
}

/// Builds the transformed integrand at the given requested precision.
pub fn transform_integrand(
    spec: &IntegrandSpec,
    precision: usize,
) -> Result<TransformedIntegrand, Error> {
    let mut ctx = FloatCtx::with_guard(precision);
    let prepared = PreparedIntegrand::new(spec, &mut ctx)?;
    let pi = ctx.pi();
    let half_pi = ctx.div(&pi, &ctx.from_usize(2));
    let limit = guard_threshold(&ctx);
    Ok(TransformedIntegrand {
        prepared,
        ctx,
        half_pi,
        limit,
    })
}

impl TransformedIntegrand {
    /// Evaluates at `θ`; finite for every `θ ∈ [-π/2, π/2]` including the
    /// closed endpoints.
    pub fn eval(&mut self, theta: &BigFloat) -> BigFloat {
        let w = classify_theta(theta, &self.half_pi, &self.limit, &mut self.ctx);
        self.prepared.eval(&w, &mut self.ctx)
    }

    pub fn eval_f64(&mut self, theta: f64) -> BigFloat {
        let t = self.ctx.from_f64(theta);
        self.eval(&t)
    }

    pub fn precision(&self) -> usize {
        self.ctx.precision()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn close(a: &BigFloat, b: f64, tol: f64) -> bool {
        let ctx = FloatCtx::new(96);
        le(
            &ctx.sub(a, &ctx.from_f64(b)).abs(),
            &ctx.from_f64(tol),
        )
    }

    #[test]
    fn validation() {
        assert!(IntegrandSpec::FAt { z: rat_int(-1) }.validate().is_err());
        assert!(IntegrandSpec::FAt { z: rat(-3, 2) }.validate().is_err());
        assert!(IntegrandSpec::FAt { z: rat(-9, 10) }.validate().is_ok());
        assert!(IntegrandSpec::HAt { n: 0, t: rat(-1, 2) }.validate().is_err());
        assert!(IntegrandSpec::HGeneral { s: rat(-1, 2), t: rat_int(0) }
            .validate()
            .is_err());
    }

    #[test]
    fn transformed_values_at_zero() {
        let inv_pi = 1.0 / std::f64::consts::PI;
        // moment n=0: constant 1/π.
        let mut f = transform_integrand(&IntegrandSpec::CauchyMoment { n: 0 }, 96).unwrap();
        assert!(close(&f.eval_f64(0.0), inv_pi, 1e-15));
        assert!(close(&f.eval_f64(1.2), inv_pi, 1e-15));
        // moment n=1 at θ=0: w = 1, value 1/(2π).
        let mut f = transform_integrand(&IntegrandSpec::CauchyMoment { n: 1 }, 96).unwrap();
        assert!(close(&f.eval_f64(0.0), inv_pi / 2.0, 1e-15));
        // h(0, t=0) at θ=0: (w+1)/(w+1) = 1, value 1/π.
        let mut f = transform_integrand(
            &IntegrandSpec::HAt { n: 0, t: rat_int(0) },
            96,
        )
        .unwrap();
        assert!(close(&f.eval_f64(0.0), inv_pi, 1e-15));
    }

    #[test]
    fn endpoint_guards_do_not_overflow() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let specs = [
            IntegrandSpec::CauchyMoment { n: 0 },
            IntegrandSpec::CauchyMoment { n: 7 },
            IntegrandSpec::FAt { z: rat_int(1000) },
            IntegrandSpec::HAt { n: 3, t: rat(1, 2) },
            IntegrandSpec::HGeneral { s: rat(1, 2), t: rat_int(2) },
        ];
        for spec in &specs {
            let mut f = transform_integrand(spec, 128).unwrap();
            for theta in [
                half_pi - 1e-15,
                -(half_pi - 1e-15),
                half_pi,
                -half_pi,
                half_pi - 1e-3,
            ] {
                let v = f.eval_f64(theta);
                assert!(!v.is_inf() && !v.is_nan(), "{} at {theta}", spec.describe());
            }
        }
    }

    #[test]
    fn high_endpoint_limits() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let inv_pi = 1.0 / std::f64::consts::PI;
        // F → 1/π at +π/2; moment n≥1 → 0; h with t: low side → (1+t)^{-(n+1)}/π.
        let mut f = transform_integrand(&IntegrandSpec::FAt { z: rat_int(5) }, 96).unwrap();
        assert!(close(&f.eval_f64(half_pi), inv_pi, 1e-15));
        assert!(close(&f.eval_f64(-half_pi), inv_pi / 6.0, 1e-15));
        let mut f = transform_integrand(&IntegrandSpec::CauchyMoment { n: 4 }, 96).unwrap();
        assert!(f.eval_f64(half_pi).is_zero());
        assert!(close(&f.eval_f64(-half_pi), inv_pi, 1e-15));
        let mut f =
            transform_integrand(&IntegrandSpec::HAt { n: 1, t: rat_int(1) }, 96).unwrap();
        assert!(close(&f.eval_f64(-half_pi), inv_pi / 4.0, 1e-15));
    }
}
