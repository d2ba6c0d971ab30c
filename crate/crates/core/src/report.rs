//! Structured pass/fail records for verification suites.
//!
//! Reports carry every checked case with exact lossless values, so a
//! failing inequality can be re-examined without rerunning the suite.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::rational::{decimal_string, ExactRational};

/// Digits used for the human-readable decimal rendering inside reports.
pub const REPORT_DECIMAL_DIGITS: usize = 24;

/// A rational serialized losslessly (numerator/denominator as decimal
/// strings) plus a rounded decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub numerator: String,
    pub denominator: String,
    pub decimal: String,
}

impl From<&ExactRational> for ExactValue {
    fn from(r: &ExactRational) -> Self {
        ExactValue {
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
            decimal: decimal_string(r, REPORT_DECIMAL_DIGITS),
        }
    }
}

/// One checked inequality instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    /// Rendered case key, e.g. `n=2 m=1 a=(0,1)`.
    pub inputs: String,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
    pub holds: bool,
    /// Signed slack; non-negative exactly when the case holds.
    pub margin: ExactValue,
}

/// Aggregated result of one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub cases: Vec<CaseRecord>,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<CaseRecord>,
    pub seed: u64,
    pub version: String,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        CheckReport {
            suite: suite.into(),
            parameters: BTreeMap::new(),
            cases: Vec::new(),
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn set_param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.into(), value.to_string());
    }

    /// Records a case where `holds` must equal `margin ≥ 0`.
    pub fn push_case(
        &mut self,
        inputs: String,
        lhs: &ExactRational,
        rhs: &ExactRational,
        holds: bool,
        margin: &ExactRational,
    ) {
        let case = CaseRecord {
            inputs,
            lhs: lhs.into(),
            rhs: rhs.into(),
            holds,
            margin: margin.into(),
        };
        if holds {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.counterexamples.push(case.clone());
        }
        self.cases.push(case);
    }

    /// Records a `lhs ≤ rhs` case; margin is `rhs - lhs`.
    pub fn push_le_case(&mut self, inputs: String, lhs: &ExactRational, rhs: &ExactRational) {
        let margin = rhs - lhs;
        self.push_case(inputs, lhs, rhs, lhs <= rhs, &margin);
    }

    /// Records a `lhs ≥ rhs` case; margin is `lhs - rhs`.
    pub fn push_ge_case(&mut self, inputs: String, lhs: &ExactRational, rhs: &ExactRational) {
        let margin = lhs - rhs;
        self.push_case(inputs, lhs, rhs, lhs >= rhs, &margin);
    }

    /// Appends all cases of `other` (same suite) to `self`.
    pub fn merge(&mut self, other: CheckReport) {
        debug_assert_eq!(self.suite, other.suite);
        self.passed += other.passed;
        self.failed += other.failed;
        self.cases.extend(other.cases);
        self.counterexamples.extend(other.counterexamples);
        for (k, v) in other.parameters {
            self.parameters.entry(k).or_insert(v);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn total(&self) -> usize {
        self.cases.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn counts_stay_consistent() {
        let mut r = CheckReport::new("demo", 7);
        r.push_le_case("a".into(), &rat(1, 4), &rat(5, 6));
        r.push_le_case("b".into(), &rat(5, 6), &rat(1, 4));
        assert_eq!(r.passed, 1);
        assert_eq!(r.failed, 1);
        assert_eq!(r.passed + r.failed, r.total());
        assert_eq!(r.counterexamples.len(), 1);
        assert_eq!(r.counterexamples[0].inputs, "b");
        assert!(!r.all_passed());
    }

    #[test]
    fn exact_value_roundtrip() {
        let v = ExactValue::from(&rat(-251, 30));
        assert_eq!(v.numerator, "-251");
        assert_eq!(v.denominator, "30");
        assert!(v.decimal.starts_with("-8.3666666666666666666"));
    }
}
