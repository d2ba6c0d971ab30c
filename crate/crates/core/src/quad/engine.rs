//! Nested-refinement integration engine.
//!
//! The rule of order `m` is compared with the rule of order `2m`; the
//! absolute difference is the a-posteriori error estimate. Node tables are
//! built once per order and shared read-only across evaluations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use astro_float::BigFloat;
use num_traits::Zero;

use super::float::{le, FloatCtx, GUARD_BITS};
use super::integrand::{classify_theta, guard_threshold, IntegrandSpec, PreparedIntegrand, WClass};
use super::rules::{build_rule, RuleKind};
use crate::error::Error;
use crate::rational::{factorial, ExactRational};

/// Orders of the refinement ladder; integration stops at the first order
/// whose difference from the previous one is within tolerance.
pub const REFINEMENT_ORDERS: [usize; 7] = [16, 32, 64, 128, 256, 512, 1024];

/// A high-precision value with an a-posteriori error estimate.
#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: BigFloat,
    /// Nonnegative estimate `|I_m - I_{m/2}|` of the absolute error.
    pub error_estimate: BigFloat,
    pub nodes_used: usize,
    /// True when the estimate reached the requested tolerance.
    pub converged: bool,
}

struct NodeTable {
    /// `(rule weight, classified w = e^{π tan θ})` per node.
    nodes: Vec<(BigFloat, WClass)>,
}

/// Integration engine with a fixed rule, precision, and shared node cache.
pub struct QuadEngine {
    rule: RuleKind,
    precision: usize,
    tables: Mutex<HashMap<usize, Arc<NodeTable>>>,
}

impl QuadEngine {
    /// Gauss–Legendre engine delivering results at `precision` bits
    /// (internal work uses `precision + GUARD_BITS`).
    pub fn new(precision: usize) -> Self {
        Self::with_rule(RuleKind::GaussLegendre, precision)
    }

    pub fn with_rule(rule: RuleKind, precision: usize) -> Self {
        QuadEngine {
            rule,
            precision: precision.max(64),
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn rule(&self) -> RuleKind {
        self.rule
    }

    fn working_precision(&self) -> usize {
        self.precision + GUARD_BITS
    }

    fn node_table(&self, order: usize, ctx: &mut FloatCtx) -> Arc<NodeTable> {
        if let Some(t) = self.tables.lock().unwrap().get(&order) {
            return Arc::clone(t);
        }
        let pi = ctx.pi();
        let half_pi = ctx.div(&pi, &ctx.from_usize(2));
        let limit = guard_threshold(ctx);
        let rule = build_rule(self.rule, order, ctx);
        let nodes = rule
            .into_iter()
            .map(|(x, w)| {
                let theta = ctx.mul(&x, &half_pi);
                (w, classify_theta(&theta, &half_pi, &limit, ctx))
            })
            .collect();
        let table = Arc::new(NodeTable { nodes });
        self.tables
            .lock()
            .unwrap()
            .entry(order)
            .or_insert(table)
            .clone()
    }

    fn weighted_sum(
        &self,
        table: &NodeTable,
        prepared: &PreparedIntegrand,
        ctx: &mut FloatCtx,
    ) -> BigFloat {
        let mut acc = ctx.zero();
        for (w, class) in &table.nodes {
            let g = prepared.eval(class, ctx);
            if !g.is_zero() {
                acc = ctx.add(&acc, &ctx.mul(w, &g));
            }
        }
        // Scale from (-1, 1) to (-π/2, π/2).
        let pi = ctx.pi();
        let half_pi = ctx.div(&pi, &ctx.from_usize(2));
        ctx.mul(&acc, &half_pi)
    }

    /// Integrates the spec to absolute tolerance `tol` (exact rational,
    /// converted once at working precision).
    pub fn integrate(&self, spec: &IntegrandSpec, tol: &ExactRational) -> Result<QuadResult, Error> {
        use num_traits::Signed;
        spec.validate()?;
        if !tol.is_positive() {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
        let mut ctx = FloatCtx::new(self.working_precision());
        let prepared = PreparedIntegrand::new(spec, &mut ctx)?;
        let tol_f = ctx.from_rational(tol);

        let mut nodes_used = 0usize;
        let mut prev: Option<BigFloat> = None;
        let mut last_estimate: Option<BigFloat> = None;
        let mut last_value = ctx.zero();
        for order in REFINEMENT_ORDERS {
            let table = self.node_table(order, &mut ctx);
            let value = self.weighted_sum(&table, &prepared, &mut ctx);
            nodes_used += table.nodes.len();
            if let Some(coarse) = prev {
                let estimate = ctx.sub(&value, &coarse).abs();
                if le(&estimate, &tol_f) {
                    return Ok(self.finish(value, estimate, nodes_used, true, &ctx));
                }
                last_estimate = Some(estimate);
            }
            last_value = value.clone();
            prev = Some(value);
        }
        let estimate = last_estimate.unwrap_or_else(|| ctx.zero());
        Ok(self.finish(last_value, estimate, nodes_used, false, &ctx))
    }

    fn finish(
        &self,
        mut value: BigFloat,
        mut estimate: BigFloat,
        nodes_used: usize,
        converged: bool,
        ctx: &FloatCtx,
    ) -> QuadResult {
        ctx.round_to(&mut value, self.precision);
        ctx.round_to(&mut estimate, self.precision);
        QuadResult {
            value,
            error_estimate: estimate.abs(),
            nodes_used,
            converged,
        }
    }

    /// `F(z) = z/((1+z)ln(1+z))` by quadrature, `z > -1`.
    pub fn eval_f(&self, z: &ExactRational, tol: &ExactRational) -> Result<QuadResult, Error> {
        self.integrate(&IntegrandSpec::FAt { z: z.clone() }, tol)
    }

    /// `h_n(t) = ∫_0^∞ (u+1) du / (u (π²+ln²u) (u+1+t)^{n+1})`.
    pub fn eval_h(
        &self,
        n: usize,
        t: &ExactRational,
        tol: &ExactRational,
    ) -> Result<QuadResult, Error> {
        self.integrate(&IntegrandSpec::HAt { n, t: t.clone() }, tol)
    }

    /// As [`QuadEngine::eval_h`] with real order `s ≥ 0`.
    pub fn eval_h_general(
        &self,
        s: &ExactRational,
        t: &ExactRational,
        tol: &ExactRational,
    ) -> Result<QuadResult, Error> {
        self.integrate(
            &IntegrandSpec::HGeneral {
                s: s.clone(),
                t: t.clone(),
            },
            tol,
        )
    }

    /// `k`-th derivative of `h_ℓ` at `t`, via the exact identity
    /// `h_ℓ^(k)(t) = (-1)^k (ℓ+k)!/ℓ! · h_{ℓ+k}(t)`.
    pub fn eval_h_derivative(
        &self,
        ell: usize,
        k: usize,
        t: &ExactRational,
        tol: &ExactRational,
    ) -> Result<QuadResult, Error> {
        let inner = self.eval_h(ell + k, t, tol)?;
        let ctx = FloatCtx::new(self.working_precision());
        let factor = ctx.from_bigint(&(factorial(ell + k) / factorial(ell)));
        let mut value = ctx.mul(&inner.value, &factor);
        if k % 2 == 1 {
            value = value.neg();
        }
        let mut estimate = ctx.mul(&inner.error_estimate, &factor);
        ctx.round_to(&mut value, self.precision);
        ctx.round_to(&mut estimate, self.precision);
        Ok(QuadResult {
            value,
            error_estimate: estimate.abs(),
            nodes_used: inner.nodes_used,
            converged: inner.converged,
        })
    }

    /// |quadrature value − exact| at the engine's precision.
    pub fn deviation(&self, result: &QuadResult, exact: &ExactRational) -> BigFloat {
        let ctx = FloatCtx::new(self.working_precision());
        ctx.sub(&result.value, &ctx.from_rational(exact)).abs()
    }
}

/// Closed form `F(z) = z/((1+z)ln(1+z))` (`1` at `z = 0`) at the given
/// precision, for comparison against the quadrature.
pub fn closed_form_f(z: &ExactRational, precision: usize) -> Result<BigFloat, Error> {
    if z <= &-ExactRational::from_integer(1.into()) {
        return Err(Error::Domain("F requires z > -1".into()));
    }
    let mut ctx = FloatCtx::with_guard(precision);
    if z.is_zero() {
        let mut one = ctx.one();
        ctx.round_to(&mut one, precision);
        return Ok(one);
    }
    let zf = ctx.from_rational(z);
    let zp1 = ctx.add(&ctx.one(), &zf);
    let ln = ctx.ln(&zp1);
    let mut v = ctx.div(&zf, &ctx.mul(&zp1, &ln));
    ctx.round_to(&mut v, precision);
    Ok(v)
}
