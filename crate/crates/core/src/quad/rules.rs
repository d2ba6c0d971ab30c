//! Quadrature rules on `(-1, 1)` at arbitrary precision.
//!
//! Gauss–Legendre is the reference rule; Clenshaw–Curtis is available as an
//! alternative strategy for cross-checking. Both return `(node, weight)`
//! pairs computed at the context's working precision.

use astro_float::BigFloat;

use super::float::FloatCtx;

/// Selectable quadrature rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    GaussLegendre,
    ClenshawCurtis,
}

pub fn build_rule(kind: RuleKind, order: usize, ctx: &mut FloatCtx) -> Vec<(BigFloat, BigFloat)> {
    match kind {
        RuleKind::GaussLegendre => gauss_legendre(order, ctx),
        RuleKind::ClenshawCurtis => clenshaw_curtis(order, ctx),
    }
}

/// Legendre value and derivative at `x` via the three-term recurrence.
fn legendre_pair(
    coeffs: &[(BigFloat, BigFloat)],
    m: usize,
    x: &BigFloat,
    ctx: &FloatCtx,
) -> (BigFloat, BigFloat) {
    let mut p0 = ctx.one();
    let mut p1 = x.clone();
    for (a, b) in coeffs {
        // p_{i+1} = a_i x p_i - b_i p_{i-1},  a_i = (2i+1)/(i+1), b_i = i/(i+1)
        let p2 = ctx.sub(&ctx.mul(&ctx.mul(a, x), &p1), &ctx.mul(b, &p0));
        p0 = p1;
        p1 = p2;
    }
    // P'_m = m (x P_m - P_{m-1}) / (x^2 - 1)
    let num = ctx.mul(
        &ctx.from_usize(m),
        &ctx.sub(&ctx.mul(x, &p1), &p0),
    );
    let den = ctx.sub(&ctx.mul(x, x), &ctx.one());
    (p1, ctx.div(&num, &den))
}

fn legendre_pair_f64(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for i in 1..m {
        let p2 = ((2 * i + 1) as f64 * x * p1 - i as f64 * p0) / (i + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    (p1, m as f64 * (x * p1 - p0) / (x * x - 1.0))
}

/// Gauss–Legendre nodes and weights of the given order.
///
/// Newton iteration from double-precision seeds; the iteration count is
/// fixed from the working precision (quadratic convergence doubles the
/// correct bits each step).
pub fn gauss_legendre(order: usize, ctx: &mut FloatCtx) -> Vec<(BigFloat, BigFloat)> {
    assert!(order >= 2, "order must be at least 2");
    let p = ctx.precision();
    // The f64 pre-refined seed carries ~50 correct bits; each step doubles.
    let iters = ((p as f64 / 45.0).log2().ceil() as usize).max(1) + 2;
    let coeffs: Vec<(BigFloat, BigFloat)> = (1..order)
        .map(|i| {
            let a = ctx.div(&ctx.from_usize(2 * i + 1), &ctx.from_usize(i + 1));
            let b = ctx.div(&ctx.from_usize(i), &ctx.from_usize(i + 1));
            (a, b)
        })
        .collect();

    let two = ctx.from_usize(2);
    let mut out: Vec<(BigFloat, BigFloat)> = Vec::with_capacity(order);
    for k in 1..=order / 2 {
        let mut seed =
            (std::f64::consts::PI * (k as f64 - 0.25) / (order as f64 + 0.5)).cos();
        for _ in 0..40 {
            let (pm, d) = legendre_pair_f64(order, seed);
            let dx = pm / d;
            seed -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let mut x = ctx.from_f64(seed);
        for _ in 0..iters {
            let (pm, d) = legendre_pair(&coeffs, order, &x, ctx);
            x = ctx.sub(&x, &ctx.div(&pm, &d));
        }
        // One more derivative evaluation at the settled node.
        let (_, dp) = legendre_pair(&coeffs, order, &x, ctx);
        let one_minus_x2 = ctx.sub(&ctx.one(), &ctx.mul(&x, &x));
        let w = ctx.div(&two, &ctx.mul(&one_minus_x2, &ctx.mul(&dp, &dp)));
        out.push((x.neg(), w.clone()));
        out.push((x, w));
    }
    if order % 2 == 1 {
        let x = ctx.zero();
        let (_, dp) = legendre_pair(&coeffs, order, &x, ctx);
        let w = ctx.div(&two, &ctx.mul(&dp, &dp));
        out.push((x, w));
    }
    out.sort_by(|(a, _), (b, _)| a.cmp(b).unwrap_or(0).cmp(&0));
    out
}

/// Clenshaw–Curtis nodes `cos(kπ/m)` and weights for even `order = m`
/// (`m + 1` nodes including both endpoints).
pub fn clenshaw_curtis(order: usize, ctx: &mut FloatCtx) -> Vec<(BigFloat, BigFloat)> {
    assert!(order >= 2 && order % 2 == 0, "order must be even and >= 2");
    let m = order;
    let pi = ctx.pi();
    // cos(iπ/m) for i = 0..=m; indices beyond m fold back by symmetry.
    let mut cos_table = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let angle = ctx.div(&ctx.mul(&pi, &ctx.from_usize(i)), &ctx.from_usize(m));
        cos_table.push(ctx.cos(&angle));
    }
    let cos_at = |idx: usize| -> &BigFloat {
        let r = idx % (2 * m);
        let r = if r > m { 2 * m - r } else { r };
        &cos_table[r]
    };

    let mut out = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut sum = ctx.one();
        for j in 1..=m / 2 {
            let b = if 2 * j == m { 1 } else { 2 };
            let term = ctx.div(
                &ctx.mul(&ctx.from_usize(b), cos_at(2 * j * k)),
                &ctx.from_usize(4 * j * j - 1),
            );
            sum = ctx.sub(&sum, &term);
        }
        let c = if k == 0 || k == m { 1 } else { 2 };
        let w = ctx.div(&ctx.mul(&ctx.from_usize(c), &sum), &ctx.from_usize(m));
        out.push((cos_table[k].clone(), w));
    }
    out
}
