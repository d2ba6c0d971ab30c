//! Sweep runners used by the command-line `verify` command and the
//! acceptance tests. Exhaustive bounds are pinned here; randomized
//! extensions draw from a seeded generator recorded in the report.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cauchy::CauchyTable;
use crate::diff::{
    build_diff_table, check_complete_monotonicity, log_convexity_report, minimality_probe,
    MinimalityProbe,
};
use crate::error::Error;
use crate::ineq::{
    check_cubic_forms, check_majorization_product_shifted, check_pair_dominance, check_power_bound,
};
use crate::majorize::{majorization_pairs, MajPair};
use crate::matrix::{
    check_hankel_alternating, check_hankel_signed, check_hankel_unsigned, check_moment_gram_det,
    check_moment_product,
};
use crate::rational::{ratio_string, ExactRational};
use crate::report::CheckReport;

/// Exhaustive bounds for the Hankel determinant sweeps.
pub const HANKEL_N_BOUND: usize = 6;
pub const HANKEL_M_BOUND: usize = 4;
pub const HANKEL_ENTRY_BOUND: usize = 4;
/// Exhaustive bounds for the majorization product sweep.
pub const MAJORIZATION_M_BOUND: usize = 3;
pub const MAJORIZATION_ENTRY_BOUND: usize = 6;
/// Exhaustive bounds for the power inequality sweep.
pub const POWER_ELL_BOUND: usize = 3;
pub const POWER_N_BOUND: usize = 8;
/// Exhaustive bounds for the pair dominance sweep.
pub const PAIR_ELL_BOUND: usize = 3;
pub const PAIR_N_BOUND: usize = 8;
/// Exhaustive bounds for the cubic forms sweep.
pub const CUBIC_NM_BOUND: usize = 5;
pub const CUBIC_ELL_BOUND: usize = 3;
/// Exhaustive bounds for the normalized product/Gram sweeps.
pub const GRAM_M_BOUND: usize = 4;
pub const GRAM_ENTRY_BOUND: usize = 4;
pub const PRODUCT_M_BOUND: usize = 3;
pub const PRODUCT_ENTRY_BOUND: usize = 4;
/// Randomized extension sizes.
const RANDOM_HANKEL_CASES: usize = 32;
const RANDOM_MAJORIZATION_CASES: usize = 32;
const RANDOM_HANKEL_N_MAX: usize = 8;
const RANDOM_HANKEL_ENTRY_MAX: usize = 8;
const RANDOM_MAJORIZATION_ENTRY_MAX: usize = 10;

/// Table size needed to run every fixed-bound sweep.
pub fn fixed_sweep_table_requirement() -> usize {
    let hankel = HANKEL_N_BOUND + 2 * HANKEL_ENTRY_BOUND;
    let hankel_random = RANDOM_HANKEL_N_MAX + 2 * RANDOM_HANKEL_ENTRY_MAX;
    let cubic = CUBIC_ELL_BOUND + CUBIC_NM_BOUND + 2 * CUBIC_NM_BOUND;
    let power = POWER_ELL_BOUND + POWER_N_BOUND;
    let gram = 2 * GRAM_ENTRY_BOUND;
    let product = PRODUCT_ENTRY_BOUND * (PRODUCT_M_BOUND + 1);
    let majorization = 2 + RANDOM_MAJORIZATION_ENTRY_MAX;
    [hankel, hankel_random, cubic, power, gram, product, majorization]
        .into_iter()
        .max()
        .unwrap()
}

/// Complete monotonicity of `μ_n` over `k + n ≤ depth`.
pub fn sweep_complete_monotonicity(
    table: &CauchyTable,
    depth: usize,
) -> Result<CheckReport, Error> {
    let dt = build_diff_table(table, depth)?;
    Ok(check_complete_monotonicity(&dt))
}

/// Minimality probe with the witness (or its absence) recorded.
pub fn run_minimality(
    table: &CauchyTable,
    epsilon: &ExactRational,
    depth: usize,
) -> Result<(CheckReport, MinimalityProbe), Error> {
    let dt = build_diff_table(table, depth)?;
    let probe = minimality_probe(&dt, epsilon)?;
    let mut report = CheckReport::new("minimality", 0);
    report.set_param("epsilon", ratio_string(epsilon));
    report.set_param("depth", depth);
    report.set_param(
        "witness",
        match probe.violation_order {
            Some(k) => format!("k={k}"),
            None => format!("not found within depth {depth}"),
        },
    );
    report.set_param(
        "min_d0",
        crate::rational::decimal_string(&probe.min_entry, 24),
    );
    report.set_param("min_d0_at", probe.min_at);
    // The probe is informational: the case below asserts only the exact
    // reduction "violation reported iff d[k][0] < epsilon at the witness".
    match probe.violation_order {
        Some(k) => {
            let witness = probe.d0_sequence[k].clone();
            report.push_case(
                format!("witness k={k}: d[k][0] < epsilon"),
                &witness,
                epsilon,
                &witness < epsilon,
                &(epsilon - &witness),
            );
        }
        None => {
            let min = probe.min_entry.clone();
            report.push_case(
                format!("no witness: min d[k][0] >= epsilon, k <= {depth}"),
                &min,
                epsilon,
                &min >= epsilon,
                &(&min - epsilon),
            );
        }
    }
    Ok((report, probe))
}

/// Log-convexity of `c_n` through `n_bound`.
pub fn sweep_log_convexity(table: &CauchyTable, n_bound: usize) -> Result<CheckReport, Error> {
    if n_bound > table.n_max() {
        return Err(Error::Capacity {
            needed: n_bound,
            bound: table.n_max(),
        });
    }
    let mut report = log_convexity_report(&table.c_slice()[..=n_bound]);
    report.set_param("n_bound", n_bound);
    Ok(report)
}

fn index_multisets(len: usize, max_entry: usize) -> Vec<Vec<usize>> {
    crate::majorize::descending_tuples(len, max_entry)
}

/// Hankel sweeps: signed, unsigned, and literal alternating-prefactor form,
/// exhaustive over `n ≤ 6`, `m ≤ 4`, entries `≤ 4`, plus seeded random
/// tuples. Returns `(signed, unsigned, alternating)`.
pub fn sweep_hankel(
    table: &CauchyTable,
    seed: u64,
) -> Result<(CheckReport, CheckReport, CheckReport), Error> {
    let mut signed = CheckReport::new("hankel-signed", seed);
    let mut unsigned = CheckReport::new("hankel-unsigned", seed);
    let mut alternating = CheckReport::new("hankel-alternating", seed);
    for r in [&mut signed, &mut unsigned, &mut alternating] {
        r.set_param("n_bound", HANKEL_N_BOUND);
        r.set_param("m_bound", HANKEL_M_BOUND);
        r.set_param("entry_bound", HANKEL_ENTRY_BOUND);
        r.set_param("random_cases", RANDOM_HANKEL_CASES);
    }
    for n in 0..=HANKEL_N_BOUND {
        for m in 1..=HANKEL_M_BOUND {
            for a in index_multisets(m, HANKEL_ENTRY_BOUND) {
                signed.merge(check_hankel_signed(n, &a, table)?);
                unsigned.merge(check_hankel_unsigned(n, &a, table)?);
                alternating.merge(check_hankel_alternating(n, &a, table)?);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_HANKEL_CASES {
        let n = rng.gen_range(0..=RANDOM_HANKEL_N_MAX);
        let m = rng.gen_range(1..=HANKEL_M_BOUND);
        let mut a: Vec<usize> = (0..m)
            .map(|_| rng.gen_range(0..=RANDOM_HANKEL_ENTRY_MAX))
            .collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        signed.merge(check_hankel_signed(n, &a, table)?);
        unsigned.merge(check_hankel_unsigned(n, &a, table)?);
    }
    Ok((signed, unsigned, alternating))
}

/// Majorization product sweep: exhaustive pairs for `m ≤ 3`, entries `≤ 6`,
/// plus seeded random pairs with entries `≤ 10`.
pub fn sweep_majorization(table: &CauchyTable, seed: u64) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("majorization-product", seed);
    report.set_param("m_bound", MAJORIZATION_M_BOUND);
    report.set_param("entry_bound", MAJORIZATION_ENTRY_BOUND);
    report.set_param("random_cases", RANDOM_MAJORIZATION_CASES);
    for m in 1..=MAJORIZATION_M_BOUND {
        for pair in majorization_pairs(m, MAJORIZATION_ENTRY_BOUND) {
            report.merge(check_majorization_product_shifted(&pair, 0, table)?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut produced = 0usize;
    while produced < RANDOM_MAJORIZATION_CASES {
        let m = rng.gen_range(2..=4usize);
        let mut mu: Vec<usize> = (0..m)
            .map(|_| rng.gen_range(0..=RANDOM_MAJORIZATION_ENTRY_MAX))
            .collect();
        mu.sort_unstable_by(|x, y| y.cmp(x));
        // Robin Hood transfer: move one unit from a larger to a smaller
        // entry; the result is majorized by the original.
        let mut lambda = mu.clone();
        let hi = 0usize;
        let lo = m - 1;
        if lambda[hi] == lambda[lo] {
            continue;
        }
        lambda[hi] -= 1;
        lambda[lo] += 1;
        let pair = match MajPair::verify(lambda, mu) {
            Ok(p) => p,
            Err(_) => continue,
        };
        report.merge(check_majorization_product_shifted(&pair, 0, table)?);
        produced += 1;
    }
    Ok(report)
}

/// Shifted majorization products for shifts `1..=2` over pairs with
/// `m ≤ 2`, entries `≤ 4`.
pub fn sweep_majorization_shifted(table: &CauchyTable) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("majorization-shifted", 0);
    report.set_param("shifts", "1..=2");
    report.set_param("m_bound", 2);
    report.set_param("entry_bound", 4);
    for shift in 1..=2usize {
        for m in 1..=2usize {
            for pair in majorization_pairs(m, 4) {
                report.merge(check_majorization_product_shifted(&pair, shift, table)?);
            }
        }
    }
    Ok(report)
}

/// Power inequality sweep: all `ℓ ≤ 3`, `0 < k < n ≤ 8`.
pub fn sweep_power_bound(table: &CauchyTable) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("power-bound", 0);
    report.set_param("ell_bound", POWER_ELL_BOUND);
    report.set_param("n_bound", POWER_N_BOUND);
    for ell in 0..=POWER_ELL_BOUND {
        for n in 2..=POWER_N_BOUND {
            for k in 1..n {
                report.merge(check_power_bound(ell, n, k, table)?);
            }
        }
    }
    Ok(report)
}

/// Pair dominance sweep: all `ℓ ≤ 3`, `n ≤ 8`, and every `(k, m)`
/// satisfying the hypothesis.
pub fn sweep_pair_dominance(table: &CauchyTable) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("pair-dominance", 0);
    report.set_param("ell_bound", PAIR_ELL_BOUND);
    report.set_param("n_bound", PAIR_N_BOUND);
    for ell in 0..=PAIR_ELL_BOUND {
        for n in 0..=PAIR_N_BOUND {
            for k in n.div_ceil(2)..=n {
                for m in n.div_ceil(2)..=k {
                    report.merge(check_pair_dominance(ell, n, k, m, table)?);
                }
            }
        }
    }
    Ok(report)
}

/// Cubic forms sweep: `1 ≤ n, m ≤ 5`, `ℓ ≤ 3`.
pub fn sweep_cubic_forms(table: &CauchyTable) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("cubic-forms", 0);
    report.set_param("nm_bound", CUBIC_NM_BOUND);
    report.set_param("ell_bound", CUBIC_ELL_BOUND);
    for n in 1..=CUBIC_NM_BOUND {
        for m in 1..=CUBIC_NM_BOUND {
            for ell in 0..=CUBIC_ELL_BOUND {
                report.merge(check_cubic_forms(n, m, ell, table)?);
            }
        }
    }
    Ok(report)
}

/// Normalized product inequality sweep: `m ≤ 3`, `a0 ≤ 4`, entries `≤ 4`.
pub fn sweep_moment_product(table: &CauchyTable) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("moment-product", 0);
    report.set_param("m_bound", PRODUCT_M_BOUND);
    report.set_param("entry_bound", PRODUCT_ENTRY_BOUND);
    for a0 in 0..=PRODUCT_ENTRY_BOUND {
        for m in 1..=PRODUCT_M_BOUND {
            for a in index_multisets(m, PRODUCT_ENTRY_BOUND) {
                report.merge(check_moment_product(a0, &a, table)?);
            }
        }
    }
    Ok(report)
}

/// Normalized Gram determinant sweep: `m ≤ 4`, entries `≤ 4`.
pub fn sweep_moment_gram(table: &CauchyTable) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("moment-gram-det", 0);
    report.set_param("m_bound", GRAM_M_BOUND);
    report.set_param("entry_bound", GRAM_ENTRY_BOUND);
    for m in 1..=GRAM_M_BOUND {
        for a in index_multisets(m, GRAM_ENTRY_BOUND) {
            report.merge(check_moment_gram_det(&a, table)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::cauchy_via_series;

    #[test]
    fn fixed_requirement_covers_sweeps() {
        let n = fixed_sweep_table_requirement();
        assert!(n >= 24);
        let table = cauchy_via_series(n).unwrap();
        sweep_hankel(&table, 42).unwrap();
        sweep_cubic_forms(&table).unwrap();
        sweep_moment_product(&table).unwrap();
    }

    #[test]
    fn pair_dominance_enumeration_respects_hypothesis() {
        let table = cauchy_via_series(16).unwrap();
        let report = sweep_pair_dominance(&table).unwrap();
        assert!(report.all_passed());
        assert!(report.total() > 0);
    }

    #[test]
    fn deterministic_random_extensions() {
        let table = cauchy_via_series(fixed_sweep_table_requirement()).unwrap();
        let a = sweep_majorization(&table, 7).unwrap();
        let b = sweep_majorization(&table, 7).unwrap();
        assert_eq!(a.cases.len(), b.cases.len());
        for (x, y) in a.cases.iter().zip(b.cases.iter()) {
            assert_eq!(x, y);
        }
        let c = sweep_majorization(&table, 8).unwrap();
        assert_eq!(a.cases.len(), c.cases.len());
        assert!(a.cases.iter().zip(c.cases.iter()).any(|(x, y)| x != y));
    }
}
