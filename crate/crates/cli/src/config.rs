//! Run configuration: defaults, environment, canonical form.

use std::collections::BTreeMap;

use cauchy_core::rational::{parse_rational, ratio_string, ExactRational};
use cauchy_core::Error;

/// Environment variable holding the default precision in bits.
pub const PRECISION_ENV: &str = "CAUCHY_PRECISION";
/// Default precision when neither flag nor environment specify one.
pub const DEFAULT_PRECISION: usize = 128;
/// Default absolute tolerance for quadrature commands.
pub const DEFAULT_TOL: &str = "1e-12";
/// Default sweep bound for bound-scaled verification suites.
pub const DEFAULT_N_BOUND: usize = 60;
/// Default minimality probe depth.
pub const DEFAULT_DEPTH: usize = 200;
/// Default seed for randomized sweep extensions.
pub const DEFAULT_SEED: u64 = 42;
/// Default epsilon for the minimality probe.
pub const DEFAULT_EPSILON: &str = "1/1000";

/// Output format of every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// Resolves the precision: flag wins over environment over default.
pub fn resolve_precision(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(p) = flag {
        return validate_precision(p);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(v) => {
            let p: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{PRECISION_ENV}={v:?} is not a bit count")))?;
            validate_precision(p)
        }
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn validate_precision(p: usize) -> Result<usize, Error> {
    if p < 64 {
        Err(Error::Domain(format!("precision must be at least 64 bits, got {p}")))
    } else if p > 1 << 20 {
        Err(Error::Domain(format!("precision {p} is unreasonably large")))
    } else {
        Ok(p)
    }
}

/// Parses a tolerance or parameter given as an exact decimal/rational string.
pub fn parse_exact(name: &str, s: &str) -> Result<ExactRational, Error> {
    parse_rational(s).map_err(|_| Error::Parse(format!("--{name} {s:?} is not a number")))
}

/// Canonical key/value view of a verify run; identical configurations
/// produce identical maps.
#[allow(clippy::too_many_arguments)]
pub fn canonical_verify_config(
    suites: &[String],
    n_bound: usize,
    epsilon: &ExactRational,
    depth: usize,
    seed: u64,
    precision: usize,
    format: Format,
) -> BTreeMap<String, String> {
    let mut sorted: Vec<String> = suites.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut map = BTreeMap::new();
    map.insert("command".into(), "verify".into());
    map.insert("suites".into(), sorted.join(","));
    map.insert("n_bound".into(), n_bound.to_string());
    map.insert("epsilon".into(), ratio_string(epsilon));
    map.insert("depth".into(), depth.to_string());
    map.insert("seed".into(), seed.to_string());
    map.insert("precision".into(), precision.to_string());
    map.insert(
        "format".into(),
        match format {
            Format::Plain => "plain",
            Format::Csv => "csv",
            Format::Json => "json",
        }
        .into(),
    );
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_forms_canonicalize_identically() {
        let a = parse_exact("epsilon", "0.001").unwrap();
        let b = parse_exact("epsilon", "1/1000").unwrap();
        let ca = canonical_verify_config(
            &["all".into()],
            60,
            &a,
            200,
            42,
            128,
            Format::Json,
        );
        let cb = canonical_verify_config(
            &["all".into()],
            60,
            &b,
            200,
            42,
            128,
            Format::Json,
        );
        assert_eq!(ca, cb);
        assert_eq!(ca["epsilon"], "1/1000");
    }

    #[test]
    fn suite_lists_are_sorted_and_deduped() {
        let eps = parse_exact("epsilon", "1/1000").unwrap();
        let c = canonical_verify_config(
            &["logconvex".into(), "cm".into(), "logconvex".into()],
            60,
            &eps,
            200,
            42,
            128,
            Format::Plain,
        );
        assert_eq!(c["suites"], "cm,logconvex");
    }

    #[test]
    fn precision_validation() {
        assert!(resolve_precision(Some(32)).is_err());
        assert_eq!(resolve_precision(Some(256)).unwrap(), 256);
    }
}
