//! Exact product and power inequalities over the sequence `c_n`.

use num_traits::{One, Zero};

use crate::cauchy::CauchyTable;
use crate::error::Error;
use crate::majorize::MajPair;
use crate::rational::ExactRational;
use crate::report::CheckReport;

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

fn product_over(table: &CauchyTable, shift: usize, idx: &[usize]) -> ExactRational {
    let mut acc = ExactRational::one();
    for &i in idx {
        acc *= table.c(shift + i);
    }
    acc
}

/// For a verified pair `λ ⪯ μ`, checks `Π c_{λ_i} ≤ Π c_{μ_i}`.
pub fn check_majorization_product(
    pair: &MajPair,
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    check_majorization_product_shifted(pair, 0, table)
}

/// Shifted family: `Π c_{n+λ_i} ≤ Π c_{n+μ_i}`; `n = 0` is the plain form.
pub fn check_majorization_product_shifted(
    pair: &MajPair,
    n: usize,
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    require_index(table, n + pair.max_entry())?;
    let lhs = product_over(table, n, pair.lambda());
    let rhs = product_over(table, n, pair.mu());
    let mut report = CheckReport::new(
        if n == 0 {
            "majorization-product"
        } else {
            "majorization-shifted"
        },
        0,
    );
    report.push_le_case(
        format!(
            "n={n} lambda={} mu={}",
            tuple_key(pair.lambda()),
            tuple_key(pair.mu())
        ),
        &lhs,
        &rhs,
    );
    Ok(report)
}

/// Checks `(c_{ℓ+k})^n ≤ (c_{ℓ+n})^k (c_ℓ)^{n-k}` for `n > k > 0`, `ℓ ≥ 0`.
pub fn check_power_bound(
    ell: usize,
    n: usize,
    k: usize,
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    if !(n > k && k > 0) {
        return Err(Error::Domain(format!(
            "power bound requires n > k > 0, got n={n} k={k}"
        )));
    }
    require_index(table, ell + n)?;
    let lhs = num_traits::pow::pow(table.c(ell + k).clone(), n);
    let rhs = num_traits::pow::pow(table.c(ell + n).clone(), k)
        * num_traits::pow::pow(table.c(ell).clone(), n - k);
    let mut report = CheckReport::new("power-bound", 0);
    report.push_le_case(format!("ell={ell} n={n} k={k}"), &lhs, &rhs);
    Ok(report)
}

/// Checks `c_{ℓ+k} c_{ℓ+n-k} ≥ c_{ℓ+m} c_{ℓ+n-m}` under the hypothesis
/// `n ≥ k ≥ m`, `k ≥ n-k`, `m ≥ n-m`. Calls outside the hypothesis are
/// domain errors, not failures.
pub fn check_pair_dominance(
    ell: usize,
    n: usize,
    k: usize,
    m: usize,
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    if !(n >= k && k >= m) {
        return Err(Error::Domain(format!(
            "pair dominance requires n >= k >= m, got n={n} k={k} m={m}"
        )));
    }
    if k < n - k || m < n - m {
        return Err(Error::Domain(format!(
            "pair dominance requires k >= n-k and m >= n-m, got n={n} k={k} m={m}"
        )));
    }
    require_index(table, ell + n.max(k))?;
    let lhs = table.c(ell + k) * table.c(ell + n - k);
    let rhs = table.c(ell + m) * table.c(ell + n - m);
    let mut report = CheckReport::new("pair-dominance", 0);
    report.push_ge_case(format!("ell={ell} n={n} k={k} m={m}"), &lhs, &rhs);
    Ok(report)
}

/// The three cubic combinations of `c`-values built from indices
/// `(ℓ, n, m)`; each must be nonnegative, with ordering tied to `m` vs `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicForms {
    pub g: ExactRational,
    pub h: ExactRational,
    pub i: ExactRational,
}

/// Computes the three cubic forms:
///
/// ```text
/// g = c_{ℓ+n+2m} c_ℓ² - c_{ℓ+n+m} c_{ℓ+m} c_ℓ - c_{ℓ+n} c_{ℓ+2m} c_ℓ + c_{ℓ+n} c_{ℓ+m}²
/// h = c_{ℓ+n+2m} c_ℓ² - 2 c_{ℓ+n+m} c_{ℓ+m} c_ℓ + c_{ℓ+n} c_{ℓ+m}²
/// i = c_{ℓ+n+2m} c_ℓ² - 2 c_{ℓ+n} c_{ℓ+2m} c_ℓ + c_{ℓ+n} c_{ℓ+m}²
/// ```
pub fn cubic_forms(
    n: usize,
    m: usize,
    ell: usize,
    table: &CauchyTable,
) -> Result<CubicForms, Error> {
    if n == 0 || m == 0 {
        return Err(Error::Domain(format!(
            "cubic forms require n, m >= 1, got n={n} m={m}"
        )));
    }
    require_index(table, ell + n + 2 * m)?;
    let c0 = table.c(ell);
    let cn = table.c(ell + n);
    let cm = table.c(ell + m);
    let c2m = table.c(ell + 2 * m);
    let cnm = table.c(ell + n + m);
    let cn2m = table.c(ell + n + 2 * m);

    let lead = cn2m * c0 * c0;
    let cross_nm = cnm * cm * c0;
    let cross_n2m = cn * c2m * c0;
    let tail = cn * cm * cm;

    let g = &lead - &cross_nm - &cross_n2m + &tail;
    let h = &lead - &cross_nm - &cross_nm + &tail;
    let i = &lead - &cross_n2m - &cross_n2m + &tail;
    Ok(CubicForms { g, h, i })
}

/// Checks the sign structure of the cubic forms: `g ≥ 0`, `h ≥ 0`,
/// `h ⋚ g` exactly as `m ⋚ n`, and `i ≥ g` whenever `n ≥ m`.
pub fn check_cubic_forms(
    n: usize,
    m: usize,
    ell: usize,
    table: &CauchyTable,
) -> Result<CheckReport, Error> {
    let forms = cubic_forms(n, m, ell, table)?;
    let zero = ExactRational::zero();
    let key = |what: &str| format!("n={n} m={m} ell={ell} {what}");
    let mut report = CheckReport::new("cubic-forms", 0);
    report.push_ge_case(key("g>=0"), &forms.g, &zero);
    report.push_ge_case(key("h>=0"), &forms.h, &zero);
    match m.cmp(&n) {
        std::cmp::Ordering::Less => report.push_le_case(key("h<=g (m<n)"), &forms.h, &forms.g),
        std::cmp::Ordering::Equal => {
            let margin = &forms.g - &forms.h;
            report.push_case(
                key("h=g (m=n)"),
                &forms.h,
                &forms.g,
                forms.h == forms.g,
                &margin,
            );
        }
        std::cmp::Ordering::Greater => report.push_ge_case(key("h>=g (m>n)"), &forms.h, &forms.g),
    }
    if n >= m {
        report.push_ge_case(key("i>=g (n>=m)"), &forms.i, &forms.g);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::cauchy_via_series;
    use crate::majorize::MajPair;
    use crate::rational::rat;

    #[test]
    fn majorization_product_examples() {
        let table = cauchy_via_series(8).unwrap();
        let p = MajPair::verify(vec![1, 1], vec![2, 0]).unwrap();
        let r = check_majorization_product(&p, &table).unwrap();
        assert!(r.all_passed()); // 1/4 <= 5/6

        let p = MajPair::verify(vec![2, 2, 2], vec![3, 2, 1]).unwrap();
        let r = check_majorization_product(&p, &table).unwrap();
        assert!(r.all_passed()); // 125/216 <= 15/16
        assert_eq!(r.cases[0].lhs.numerator, "125");
        assert_eq!(r.cases[0].rhs.numerator, "15");
        assert_eq!(r.cases[0].rhs.denominator, "16");

        let p = MajPair::verify(vec![5, 3], vec![5, 3]).unwrap();
        let r = check_majorization_product(&p, &table).unwrap();
        assert_eq!(r.cases[0].margin.numerator, "0");
    }

    #[test]
    fn shifted_examples() {
        let table = cauchy_via_series(8).unwrap();
        let p = MajPair::verify(vec![1, 1], vec![2, 0]).unwrap();
        let r = check_majorization_product_shifted(&p, 2, &table).unwrap();
        assert!(r.all_passed()); // 81/16 <= 251/36
        assert_eq!(r.cases[0].lhs.numerator, "81");
        assert_eq!(r.cases[0].rhs.numerator, "251");
        let p = MajPair::verify(vec![2, 2], vec![3, 1]).unwrap();
        let r = check_majorization_product_shifted(&p, 1, &table).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.cases[0].lhs.numerator, "81");
        assert_eq!(r.cases[0].rhs.numerator, "251");
    }

    #[test]
    fn power_bound_examples() {
        let table = cauchy_via_series(8).unwrap();
        assert!(check_power_bound(0, 2, 1, &table).unwrap().all_passed());
        assert!(check_power_bound(0, 3, 2, &table).unwrap().all_passed());
        assert!(check_power_bound(1, 2, 1, &table).unwrap().all_passed());
        assert!(check_power_bound(0, 2, 2, &table).is_err());
        assert!(check_power_bound(0, 2, 0, &table).is_err());
    }

    #[test]
    fn pair_dominance_examples() {
        let table = cauchy_via_series(8).unwrap();
        let r = check_pair_dominance(0, 4, 3, 2, &table).unwrap();
        assert!(r.all_passed()); // 9/8 >= 25/36
        let r = check_pair_dominance(0, 4, 2, 2, &table).unwrap();
        assert_eq!(r.cases[0].margin.numerator, "0");
        let r = check_pair_dominance(1, 4, 3, 2, &table).unwrap();
        assert!(r.all_passed()); // 251/36 >= 81/16
        assert!(check_pair_dominance(0, 4, 1, 1, &table).is_err());
        assert!(check_pair_dominance(0, 3, 3, 1, &table).is_err());
    }

    #[test]
    fn cubic_forms_spot_value() {
        let table = cauchy_via_series(8).unwrap();
        let f = cubic_forms(1, 1, 0, &table).unwrap();
        assert_eq!(f.g, rat(37, 24));
        assert_eq!(f.h, rat(37, 24));
        assert_eq!(f.i, rat(37, 24));
        let r = check_cubic_forms(1, 1, 0, &table).unwrap();
        assert!(r.all_passed());
    }

    #[test]
    fn cubic_forms_branches() {
        let table = cauchy_via_series(24).unwrap();
        // m < n: h <= g; m > n: h >= g.
        let r = check_cubic_forms(2, 1, 0, &table).unwrap();
        assert!(r.all_passed());
        let r = check_cubic_forms(1, 2, 0, &table).unwrap();
        assert!(r.all_passed());
        let f_small = cubic_forms(2, 1, 0, &table).unwrap();
        assert!(f_small.h <= f_small.g);
        let f_big = cubic_forms(1, 2, 0, &table).unwrap();
        assert!(f_big.h >= f_big.g);
        assert!(cubic_forms(0, 1, 0, &table).is_err());
    }
}
