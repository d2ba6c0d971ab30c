//! Exact determinants over rationals and Hankel-type positivity checks.
//!
//! Matrices indexed by sums `a_i + a_j` of a fixed tuple arise from the
//! moment structure of the sequence; their determinants must be nonnegative.
//! Determinants are computed by fraction-free (Bareiss) elimination after
//! clearing every entry to a common integer denominator, so no intermediate
//! rational reduction is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cauchy::CauchyTable;
use crate::error::Error;
use crate::rational::ExactRational;
use crate::report::CheckReport;

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone)]
pub struct ExactMatrix {
    order: usize,
    entries: Vec<ExactRational>,
}

impl ExactMatrix {
    pub fn new(order: usize, entries: Vec<ExactRational>) -> Result<Self, Error> {
        if entries.len() != order * order {
            return Err(Error::LengthMismatch {
                left: entries.len(),
                right: order * order,
            });
        }
        Ok(ExactMatrix { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> ExactRational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i * self.order + j]
    }
}

/// Exact determinant; the empty matrix has determinant 1.
pub fn det_exact(mat: &ExactMatrix) -> ExactRational {
    let m = mat.order();
    if m == 0 {
        return ExactRational::one();
    }
    // Clear to integers: common denominator over all entries.
    let mut denom = BigInt::one();
    for e in &mat.entries {
        denom = denom.lcm(e.denom());
    }
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let e = mat.entry(i, j);
                    e.numer() * (&denom / e.denom())
                })
                .collect()
        })
        .collect();

    // Bareiss fraction-free elimination; every division below is exact.
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return ExactRational::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det_int = if sign < 0 {
        -a[m - 1][m - 1].clone()
    } else {
        a[m - 1][m - 1].clone()
    };
    let denom_pow = num_traits::pow::pow(denom, m);
    ExactRational::new(det_int, denom_pow)
}

fn tuple_key(a: &[usize]) -> String {
    let joined = a
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("({joined})")
}

fn require_index(table: &CauchyTable, needed: usize) -> Result<(), Error> {
    if needed > table.n_max() {
        Err(Error::Capacity {
            needed,
            bound: table.n_max(),
        })
    } else {
        Ok(())
    }
}

/// Checks `det((-1)^{a_i+a_j} c_{n+a_i+a_j}) ≥ 0`.
///
/// Extracting `(-1)^{a_i}` from each row and `(-1)^{a_j}` from each column
/// shows this determinant equals the unsigned `det(c_{n+a_i+a_j})`; both are
/// computed and must agree exactly.
pub fn check_hankel_signed(
    n: usize,
    a: &[usize],
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    let m = a.len();
    let max_a = a.iter().copied().max().unwrap_or(0);
    require_index(table, n + 2 * max_a)?;
    let signed = ExactMatrix::from_fn(m, |i, j| {
        let c = table.c(n + a[i] + a[j]).clone();
        if (a[i] + a[j]) % 2 == 0 {
            c
        } else {
            -c
        }
    });
    let plain = ExactMatrix::from_fn(m, |i, j| table.c(n + a[i] + a[j]).clone());
    let det_signed = det_exact(&signed);
    let det_plain = det_exact(&plain);
    if det_signed != det_plain {
        return Err(Error::Internal(format!(
            "sign extraction identity violated at n={n} a={}",
            tuple_key(a)
        )));
    }
    let mut report = CheckReport::new("hankel-signed", 0);
    report.push_ge_case(
        format!("m={m} n={n} a={}", tuple_key(a)),
        &det_signed,
        &ExactRational::zero(),
    );
    Ok(report)
}

/// Evaluates the literal `(-1)^{mn} det(c_{n+a_i+a_j}) ≥ 0` claim and
/// records its truth value verbatim; no correction is applied.
pub fn check_hankel_alternating(
    n: usize,
    a: &[usize],
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    let m = a.len();
    let max_a = a.iter().copied().max().unwrap_or(0);
    require_index(table, n + 2 * max_a)?;
    let plain = ExactMatrix::from_fn(m, |i, j| table.c(n + a[i] + a[j]).clone());
    let det = det_exact(&plain);
    let value = if (m * n) % 2 == 0 { det } else { -det };
    let mut report = CheckReport::new("hankel-alternating", 0);
    report.push_ge_case(
        format!("m={m} n={n} a={}", tuple_key(a)),
        &value,
        &ExactRational::zero(),
    );
    Ok(report)
}

/// Checks the unsigned `det(c_{n+a_i+a_j}) ≥ 0`.
pub fn check_hankel_unsigned(
    n: usize,
    a: &[usize],
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    let m = a.len();
    let max_a = a.iter().copied().max().unwrap_or(0);
    require_index(table, n + 2 * max_a)?;
    let plain = ExactMatrix::from_fn(m, |i, j| table.c(n + a[i] + a[j]).clone());
    let det = det_exact(&plain);
    let mut report = CheckReport::new("hankel-unsigned", 0);
    report.push_ge_case(
        format!("m={m} n={n} a={}", tuple_key(a)),
        &det,
        &ExactRational::zero(),
    );
    Ok(report)
}

/// Checks `det(c_{a_i+a_j}/(a_i+a_j)!) ≥ 0`, i.e. the Gram-type matrix of
/// normalized values `μ_{a_i+a_j}`.
pub fn check_moment_gram_det(a: &[usize], table: &CauchyTable) -> Result<CheckReport, Error> {
    let m = a.len();
    let max_a = a.iter().copied().max().unwrap_or(0);
    require_index(table, 2 * max_a)?;
    let mat = ExactMatrix::from_fn(m, |i, j| table.mu(a[i] + a[j]).clone());
    let det = det_exact(&mat);
    let mut report = CheckReport::new("moment-gram-det", 0);
    report.push_ge_case(
        format!("m={m} a={}", tuple_key(a)),
        &det,
        &ExactRational::zero(),
    );
    Ok(report)
}

/// Checks `(μ_{a0})^{m-1} μ_Σ ≥ Π_k μ_{a0+a_k}` with `Σ = a0 + Σ_k a_k`,
/// all in exact arithmetic.
pub fn check_moment_product(
    a0: usize,
    a: &[usize],
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    let m = a.len();
    if m == 0 {
        return Err(Error::Domain("need at least one index".into()));
    }
    let total: usize = a0 + a.iter().sum::<usize>();
    require_index(table, total.max(a0 + a.iter().copied().max().unwrap_or(0)))?;
    let mut lhs = table.mu(total).clone();
    for _ in 1..m {
        lhs *= table.mu(a0);
    }
    let mut rhs = ExactRational::one();
    for &ak in a {
        rhs *= table.mu(a0 + ak);
    }
    let mut report = CheckReport::new("moment-product", 0);
    report.push_ge_case(format!("a0={a0} a={}", tuple_key(a)), &lhs, &rhs);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::cauchy_via_series;
    use crate::rational::{rat, rat_int};

    fn identity(m: usize) -> ExactMatrix {
        ExactMatrix::from_fn(m, |i, j| if i == j { rat_int(1) } else { rat_int(0) })
    }

    /// Cofactor-expansion oracle, independent of the Bareiss path.
    fn det_cofactor(mat: &ExactMatrix) -> ExactRational {
        let m = mat.order();
        if m == 0 {
            return ExactRational::one();
        }
        if m == 1 {
            return mat.entry(0, 0).clone();
        }
        let mut acc = ExactRational::zero();
        for j in 0..m {
            let minor = ExactMatrix::from_fn(m - 1, |r, c| {
                mat.entry(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = mat.entry(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_basics() {
        assert_eq!(det_exact(&identity(3)), rat_int(1));
        let mat = ExactMatrix::new(2, vec![rat_int(1), rat(1, 2), rat(1, 2), rat(5, 6)]).unwrap();
        assert_eq!(det_exact(&mat), rat(7, 12));
        let dup =
            ExactMatrix::new(2, vec![rat(1, 3), rat(2, 5), rat(1, 3), rat(2, 5)]).unwrap();
        assert_eq!(det_exact(&dup), rat_int(0));
        let empty = ExactMatrix::new(0, vec![]).unwrap();
        assert_eq!(det_exact(&empty), rat_int(1));
    }

    #[test]
    fn det_with_zero_pivot() {
        // Leading entry zero forces a row swap.
        let mat = ExactMatrix::new(
            3,
            vec![
                rat_int(0),
                rat_int(1),
                rat_int(2),
                rat_int(1),
                rat_int(0),
                rat_int(3),
                rat_int(4),
                rat_int(5),
                rat_int(0),
            ],
        )
        .unwrap();
        assert_eq!(det_exact(&mat), det_cofactor(&mat));
    }

    #[test]
    fn det_matches_cofactor_small_grid() {
        // Deterministic grid of rational matrices up to order 4.
        let vals = [rat(-3, 2), rat_int(0), rat(2, 3), rat_int(1), rat(7, 5)];
        for m in 1..=4usize {
            for salt in 0..8usize {
                let mat = ExactMatrix::from_fn(m, |i, j| {
                    vals[(i * 3 + j * 5 + salt * 7) % vals.len()].clone()
                });
                assert_eq!(det_exact(&mat), det_cofactor(&mat), "m={m} salt={salt}");
            }
        }
    }

    #[test]
    fn hankel_signed_examples() {
        let table = cauchy_via_series(12).unwrap();
        let r = check_hankel_signed(0, &[0], &table).unwrap();
        assert_eq!(r.cases[0].lhs.numerator, "1");
        let r = check_hankel_signed(0, &[0, 1], &table).unwrap();
        assert_eq!(r.cases[0].lhs.numerator, "7");
        assert_eq!(r.cases[0].lhs.denominator, "12");
        let r = check_hankel_signed(1, &[0, 1], &table).unwrap();
        assert_eq!(r.cases[0].lhs.numerator, "31");
        assert_eq!(r.cases[0].lhs.denominator, "72");
        assert!(r.all_passed());
    }

    #[test]
    fn hankel_alternating_counterexample() {
        let table = cauchy_via_series(12).unwrap();
        let r = check_hankel_alternating(0, &[0], &table).unwrap();
        assert!(r.all_passed());
        let r = check_hankel_alternating(1, &[0], &table).unwrap();
        assert!(!r.all_passed());
        assert_eq!(r.counterexamples[0].lhs.numerator, "-1");
        assert_eq!(r.counterexamples[0].lhs.denominator, "2");
        let r = check_hankel_alternating(1, &[0, 1], &table).unwrap();
        assert!(r.all_passed());
    }

    #[test]
    fn moment_gram_examples() {
        let table = cauchy_via_series(12).unwrap();
        let r = check_moment_gram_det(&[0], &table).unwrap();
        assert_eq!(r.cases[0].lhs.numerator, "1");
        let r = check_moment_gram_det(&[0, 1], &table).unwrap();
        assert_eq!(r.cases[0].lhs.numerator, "1");
        assert_eq!(r.cases[0].lhs.denominator, "6");
        let r = check_moment_gram_det(&[1, 1], &table).unwrap();
        assert_eq!(r.cases[0].lhs.numerator, "0");
        assert!(r.all_passed());
    }

    #[test]
    fn moment_product_examples() {
        let table = cauchy_via_series(16).unwrap();
        // m = 1 is always an equality.
        let r = check_moment_product(3, &[2], &table).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.cases[0].margin.numerator, "0");
        let r = check_moment_product(0, &[1, 1], &table).unwrap();
        assert!(r.all_passed()); // 5/12 >= 1/4
        let r = check_moment_product(1, &[1, 1], &table).unwrap();
        assert!(r.all_passed()); // 3/16 >= 25/144
        assert_eq!(r.cases[0].lhs.numerator, "3");
        assert_eq!(r.cases[0].lhs.denominator, "16");
    }

    #[test]
    fn capacity_errors() {
        let table = cauchy_via_series(4).unwrap();
        assert!(check_hankel_signed(3, &[1, 2], &table).is_err());
        assert!(check_moment_gram_det(&[3], &table).is_err());
        assert!(check_moment_product(2, &[2, 2], &table).is_err());
    }

    #[test]
    fn gram_leading_principal_minors_nonnegative() {
        // For every strictly increasing tuple, all leading principal minors
        // of the normalized Gram matrix are nonnegative.
        let table = cauchy_via_series(12).unwrap();
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        for a in 0..=5usize {
            tuples.push(vec![a]);
            for b in a + 1..=5 {
                tuples.push(vec![a, b]);
                for c in b + 1..=5 {
                    tuples.push(vec![a, b, c]);
                    for d in c + 1..=5 {
                        tuples.push(vec![a, b, c, d]);
                    }
                }
            }
        }
        for tuple in tuples {
            for len in 1..=tuple.len() {
                let r = check_moment_gram_det(&tuple[..len], &table).unwrap();
                assert!(r.all_passed(), "prefix {:?}", &tuple[..len]);
            }
        }
    }
}
