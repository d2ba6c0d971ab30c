//! Exact finite-difference analysis of the normalized sequence `μ_n = c_n/n!`.
//!
//! A nonnegative sequence is completely monotonic when all alternating
//! differences `(-1)^k Δ^k μ_n` are nonnegative. The table stores
//! `d[k][n] = (-1)^k Δ^k μ_n`, built by the two-term recurrence
//! `d[k+1][n] = d[k][n] - d[k][n+1]` and spot-validated against the binomial
//! sum `(-1)^k Σ_m (-1)^m C(k,m) μ_{n+k-m}`.

use num_traits::{Signed, Zero};

use crate::cauchy::CauchyTable;
use crate::error::Error;
use crate::rational::{binomial, ratio_string, ExactRational};
use crate::report::CheckReport;

/// Triangular table of signed differences, `d[k][n]` for `k + n ≤ depth`.
#[derive(Debug, Clone)]
pub struct DiffTable {
    d: Vec<Vec<ExactRational>>,
}

impl DiffTable {
    /// Builds the table from an arbitrary moment sequence; depth is
    /// `mu.len() - 1`.
    pub fn from_moments(mu: &[ExactRational]) -> Self {
        assert!(!mu.is_empty(), "need at least one moment");
        let mut d: Vec<Vec<ExactRational>> = Vec::with_capacity(mu.len());
        d.push(mu.to_vec());
        for k in 0..mu.len() - 1 {
            let prev = &d[k];
            let row: Vec<ExactRational> = (0..prev.len() - 1)
                .map(|n| &prev[n] - &prev[n + 1])
                .collect();
            d.push(row);
        }
        DiffTable { d }
    }

    /// Maximum `k + n` covered.
    pub fn depth(&self) -> usize {
        self.d.len() - 1
    }

    /// `(-1)^k Δ^k μ_n`; requires `k + n ≤ depth`.
    pub fn entry(&self, k: usize, n: usize) -> &ExactRational {
        &self.d[k][n]
    }

    /// The column `d[k][0]` for `k = 0..=depth`.
    pub fn leading_column(&self) -> Vec<ExactRational> {
        self.d.iter().map(|row| row[0].clone()).collect()
    }

    /// Recomputes `d[k][n]` from the binomial sum; used to guard the
    /// recurrence against implementation error.
    pub fn binomial_entry(mu: &[ExactRational], k: usize, n: usize) -> ExactRational {
        let mut acc = ExactRational::zero();
        for m in 0..=k {
            let term = ExactRational::from_integer(binomial(k, m)) * &mu[n + k - m];
            // (-1)^k * (-1)^m = (-1)^(k+m)
            if (k + m) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// Builds the signed difference table for `μ_n = c_n/n!` with `k + n ≤ depth`,
/// validating a deterministic sample of entries against the binomial form.
pub fn build_diff_table(table: &CauchyTable, depth: usize) -> Result<DiffTable, Error> {
    if depth > table.n_max() {
        return Err(Error::Capacity {
            needed: depth,
            bound: table.n_max(),
        });
    }
    let mu = &table.mu_slice()[..=depth];
    let dt = DiffTable::from_moments(mu);
    for (k, n) in sample_points(depth) {
        if dt.entry(k, n) != &DiffTable::binomial_entry(mu, k, n) {
            return Err(Error::Internal(format!(
                "difference table mismatch between recurrence and binomial sum at (k={k}, n={n})"
            )));
        }
    }
    Ok(dt)
}

fn sample_points(depth: usize) -> Vec<(usize, usize)> {
    let mut pts = vec![(0, 0)];
    for k in [1, 2, depth / 2, depth] {
        if k <= depth {
            pts.push((k, 0));
            pts.push((k, depth - k));
            if depth - k >= 1 {
                pts.push((k, 1));
            }
        }
    }
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Checks that every table entry is nonnegative. The report records the
/// minimum entry and its location.
pub fn check_complete_monotonicity(dt: &DiffTable) -> CheckReport {
    let mut report = CheckReport::new("complete-monotonicity", 0);
    report.set_param("depth", dt.depth());
    let zero = ExactRational::zero();
    let mut min_entry: Option<(ExactRational, usize, usize)> = None;
    for k in 0..=dt.depth() {
        for n in 0..=dt.depth() - k {
            let v = dt.entry(k, n);
            if min_entry.as_ref().map_or(true, |(m, _, _)| v < m) {
                min_entry = Some((v.clone(), k, n));
            }
            report.push_ge_case(format!("k={k} n={n}"), v, &zero);
        }
    }
    if let Some((m, k, n)) = min_entry {
        report.set_param("min_entry", crate::rational::decimal_string(&m, 24));
        report.set_param("min_entry_exact", ratio_string(&m));
        report.set_param("min_at", format!("(k={k}, n={n})"));
    }
    report
}

/// Result of the minimality probe: decreasing `μ_0` by `epsilon` destroys
/// complete monotonicity iff some `d[k][0] < epsilon`, because `μ_0` enters
/// `(-1)^k Δ^k μ_0` with coefficient `+1` and no other table entry at all.
#[derive(Debug, Clone)]
pub struct MinimalityProbe {
    pub epsilon: ExactRational,
    /// First `k` with `d[k][0] < epsilon`, if one exists within the depth.
    pub violation_order: Option<usize>,
    /// The examined column `d[k][0]`, `k = 0..=depth`.
    pub d0_sequence: Vec<ExactRational>,
    /// Smallest examined value and where it occurred.
    pub min_entry: ExactRational,
    pub min_at: usize,
}

/// Searches `k = 0..=depth` for the first `k` with `d[k][0] < epsilon`.
pub fn minimality_probe(dt: &DiffTable, epsilon: &ExactRational) -> Result<MinimalityProbe, Error> {
    if !epsilon.is_positive() {
        return Err(Error::Domain(format!(
            "epsilon must be positive, got {}",
            ratio_string(epsilon)
        )));
    }
    let column = dt.leading_column();
    let violation_order = column.iter().position(|v| v < epsilon);
    let (min_at, min_entry) = column
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, v)| (i, v.clone()))
        .expect("column is nonempty");
    Ok(MinimalityProbe {
        epsilon: epsilon.clone(),
        violation_order,
        d0_sequence: column,
        min_entry,
        min_at,
    })
}

/// Checks `c_{n+1}^2 ≤ c_n c_{n+2}` for all `0 ≤ n ≤ n_max - 2`.
pub fn check_log_convexity(table: &CauchyTable) -> CheckReport {
    let mut report = log_convexity_report(table.c_slice());
    report.set_param("n_max", table.n_max());
    report
}

/// Log-convexity report over an arbitrary positive sequence.
pub fn log_convexity_report(values: &[ExactRational]) -> CheckReport {
    let mut report = CheckReport::new("logconvex", 0);
    for n in 0..values.len().saturating_sub(2) {
        let lhs = &values[n + 1] * &values[n + 1];
        let rhs = &values[n] * &values[n + 2];
        report.push_le_case(format!("n={n}"), &lhs, &rhs);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::cauchy_via_series;
    use crate::rational::{rat, rat_int};

    #[test]
    fn leading_entries() {
        let table = cauchy_via_series(10).unwrap();
        let dt = build_diff_table(&table, 10).unwrap();
        assert_eq!(dt.entry(0, 0), &rat_int(1));
        assert_eq!(dt.entry(1, 0), &rat(1, 2));
        assert_eq!(dt.entry(2, 0), &rat(5, 12));
    }

    #[test]
    fn capacity_error() {
        let table = cauchy_via_series(5).unwrap();
        assert!(matches!(
            build_diff_table(&table, 6),
            Err(Error::Capacity { needed: 6, bound: 5 })
        ));
    }

    #[test]
    fn binomial_and_recurrence_agree() {
        let table = cauchy_via_series(40).unwrap();
        let dt = build_diff_table(&table, 40).unwrap();
        let mu = &table.mu_slice()[..=40];
        for k in 0..=40 {
            for n in 0..=40 - k {
                assert_eq!(
                    dt.entry(k, n),
                    &DiffTable::binomial_entry(mu, k, n),
                    "(k={k}, n={n})"
                );
            }
        }
    }

    #[test]
    fn cm_holds_for_cauchy_moments() {
        let table = cauchy_via_series(60).unwrap();
        let dt = build_diff_table(&table, 60).unwrap();
        let report = check_complete_monotonicity(&dt);
        assert!(report.all_passed());
        assert_eq!(report.total(), 61 * 62 / 2);
    }

    #[test]
    fn cm_constant_sequence() {
        let mu = vec![rat_int(1), rat_int(1), rat_int(1)];
        let dt = DiffTable::from_moments(&mu);
        assert!(check_complete_monotonicity(&dt).all_passed());
        assert!(dt.entry(1, 0).is_zero());
        assert!(dt.entry(2, 0).is_zero());
    }

    #[test]
    fn cm_increasing_sequence_fails() {
        let mu = vec![rat_int(1), rat_int(2)];
        let dt = DiffTable::from_moments(&mu);
        let report = check_complete_monotonicity(&dt);
        assert!(!report.all_passed());
        assert_eq!(report.counterexamples.len(), 1);
        assert_eq!(report.counterexamples[0].inputs, "k=1 n=0");
        assert_eq!(dt.entry(1, 0), &rat_int(-1));
    }

    #[test]
    fn rows_are_nonincreasing_in_n() {
        // Differences of a CM sequence are themselves CM, so each row must
        // be nonnegative and nonincreasing across n.
        let table = cauchy_via_series(40).unwrap();
        let dt = build_diff_table(&table, 40).unwrap();
        for k in 0..=39 {
            for n in 0..39 - k {
                assert!(dt.entry(k, n) >= dt.entry(k, n + 1), "(k={k}, n={n})");
            }
        }
    }

    #[test]
    fn probe_examples() {
        let table = cauchy_via_series(10).unwrap();
        let dt = build_diff_table(&table, 10).unwrap();
        let p = minimality_probe(&dt, &rat(3, 4)).unwrap();
        assert_eq!(p.violation_order, Some(1));
        let p = minimality_probe(&dt, &rat_int(2)).unwrap();
        assert_eq!(p.violation_order, Some(0));
        assert!(minimality_probe(&dt, &rat_int(0)).is_err());
        assert!(minimality_probe(&dt, &rat(-1, 2)).is_err());
    }

    #[test]
    fn leading_column_strictly_decreasing() {
        let table = cauchy_via_series(80).unwrap();
        let dt = build_diff_table(&table, 80).unwrap();
        let col = dt.leading_column();
        for k in 0..80 {
            assert!(col[k] > col[k + 1], "k={k}");
        }
        assert!(col.iter().all(|v| v.is_positive()));
    }

    #[test]
    fn log_convexity_margins() {
        let table = cauchy_via_series(8).unwrap();
        let report = check_log_convexity(&table);
        assert!(report.all_passed());
        assert_eq!(report.cases[0].margin.numerator, "7");
        assert_eq!(report.cases[0].margin.denominator, "12");
        assert_eq!(report.cases[1].margin.numerator, "31");
        assert_eq!(report.cases[1].margin.denominator, "72");
    }

    #[test]
    fn log_convexity_boundary_equality() {
        // A geometric (here constant) sequence sits exactly on the boundary.
        let report = log_convexity_report(&[rat_int(1), rat_int(1), rat_int(1)]);
        assert!(report.all_passed());
        assert_eq!(report.cases.len(), 1);
        assert_eq!(report.cases[0].margin.numerator, "0");
    }
}
