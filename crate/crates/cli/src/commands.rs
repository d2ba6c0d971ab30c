//! The four subcommands: compute, quad, verify, eval.

use std::collections::BTreeMap;

use serde::Serialize;

use cauchy_core::cauchy::{cauchy_via_stirling, CauchyTable};
use cauchy_core::quad::{closed_form_f, le, FloatCtx, IntegrandSpec, QuadEngine, QuadResult};
use cauchy_core::rational::{decimal_string, ratio_string, ExactRational};
use cauchy_core::report::{CheckReport, ExactValue};
use cauchy_core::stirling::StirlingTriangle;
use cauchy_core::suites;
use cauchy_core::{Error, DEFAULT_TABLE_BOUND};

use crate::config::Format;
use crate::output::{csv_field, emit, report_csv_rows, report_plain_summary};

/// Decimal digits carried by a rendering at `bits` of binary precision.
fn digits_for(bits: usize) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2).floor() as usize
}

pub struct CommandOutput {
    pub text: String,
    pub exit: u8,
}

fn ok(text: String) -> Result<CommandOutput, Error> {
    Ok(CommandOutput { text, exit: 0 })
}

fn exit_with(text: String, exit: u8) -> Result<CommandOutput, Error> {
    Ok(CommandOutput { text, exit })
}

// ---------------------------------------------------------------- compute

#[derive(Serialize)]
struct ComputeRow {
    n: usize,
    c: ExactValue,
    mu: ExactValue,
}

pub fn compute(
    n_max: usize,
    table_bound: Option<usize>,
    precision: usize,
    format: Format,
    out: Option<&str>,
) -> Result<CommandOutput, Error> {
    let bound = table_bound.unwrap_or(DEFAULT_TABLE_BOUND);
    let table = CauchyTable::build_with_bound(n_max, bound)?;
    let tri = StirlingTriangle::build_with_bound(n_max, bound)?;
    for n in 0..=n_max {
        let via_stirling = cauchy_via_stirling(n, &tri)?;
        if &via_stirling != table.c(n) {
            let text = format!(
                "route disagreement at n={n}: stirling {} vs series {}\n",
                ratio_string(&via_stirling),
                ratio_string(table.c(n))
            );
            return exit_with(text, 2);
        }
    }
    let digits = digits_for(precision);
    let text = match format {
        Format::Plain => {
            let mut s = String::new();
            s.push_str(&format!("{:>5}  {:28}  {:28}  decimal\n", "n", "c_n", "c_n/n!"));
            for n in 0..=n_max {
                s.push_str(&format!(
                    "{:>5}  {:28}  {:28}  {}\n",
                    n,
                    ratio_string(table.c(n)),
                    ratio_string(table.mu(n)),
                    decimal_string(table.c(n), digits)
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,c_n,mu_n,c_n_decimal,mu_n_decimal\n");
            for n in 0..=n_max {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    n,
                    csv_field(&ratio_string(table.c(n))),
                    csv_field(&ratio_string(table.mu(n))),
                    decimal_string(table.c(n), digits),
                    decimal_string(table.mu(n), digits)
                ));
            }
            s
        }
        Format::Json => {
            let rows: Vec<ComputeRow> = (0..=n_max)
                .map(|n| ComputeRow {
                    n,
                    c: table.c(n).into(),
                    mu: table.mu(n).into(),
                })
                .collect();
            let mut doc = serde_json::Map::new();
            doc.insert("n_max".into(), n_max.into());
            doc.insert("precision".into(), precision.into());
            doc.insert("routes_agree".into(), true.into());
            doc.insert("values".into(), serde_json::to_value(rows).unwrap());
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    };
    emit(out, &text).map_err(|e| Error::Internal(e.to_string()))?;
    ok(String::new())
}

// ------------------------------------------------------------------- quad

#[derive(Serialize)]
struct QuadOutput {
    n: usize,
    value: String,
    error_estimate: String,
    nodes_used: usize,
    converged: bool,
    exact_mu: ExactValue,
    deviation: String,
    tol: String,
    precision: usize,
}

pub fn quad(
    n: usize,
    tol: &ExactRational,
    precision: usize,
    format: Format,
    out: Option<&str>,
) -> Result<CommandOutput, Error> {
    let table = CauchyTable::build_with_bound(n, n.max(8))?;
    let engine = QuadEngine::new(precision);
    let result = engine.integrate(&IntegrandSpec::CauchyMoment { n }, tol)?;
    let deviation = engine.deviation(&result, table.mu(n));

    let ten_tol = tol * ExactRational::from_integer(10.into());
    let ctx = FloatCtx::with_guard(precision);
    let within = le(&deviation, &ctx.from_rational(&ten_tol));

    let payload = QuadOutput {
        n,
        value: format!("{}", result.value),
        error_estimate: format!("{}", result.error_estimate),
        nodes_used: result.nodes_used,
        converged: result.converged,
        exact_mu: table.mu(n).into(),
        deviation: format!("{deviation}"),
        tol: ratio_string(tol),
        precision,
    };
    let text = match format {
        Format::Plain => format!(
            "mu_{n} quadrature  {}\nerror estimate    {}\nnodes used        {}\nconverged         {}\nexact mu_{n}       {} = {}\n|deviation|       {}\n",
            payload.value,
            payload.error_estimate,
            payload.nodes_used,
            payload.converged,
            ratio_string(table.mu(n)),
            payload.exact_mu.decimal,
            payload.deviation,
        ),
        Format::Csv => format!(
            "n,value,error_estimate,nodes_used,converged,exact_mu,deviation\n{},{},{},{},{},{},{}\n",
            n,
            payload.value,
            payload.error_estimate,
            payload.nodes_used,
            payload.converged,
            csv_field(&ratio_string(table.mu(n))),
            payload.deviation,
        ),
        Format::Json => serde_json::to_string_pretty(&payload).unwrap() + "\n",
    };
    emit(out, &text).map_err(|e| Error::Internal(e.to_string()))?;
    if !result.converged {
        return exit_with(String::new(), 3);
    }
    if !within {
        return exit_with(String::new(), 1);
    }
    ok(String::new())
}

// ----------------------------------------------------------------- verify

#[derive(Serialize)]
pub struct Discrepancy {
    pub suite: String,
    pub witness: String,
    pub value: ExactValue,
    pub literal_failures: usize,
    pub literal_passes: usize,
    pub note: String,
    pub report: CheckReport,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub version: String,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
    pub suites: Vec<CheckReport>,
    pub discrepancies: Vec<Discrepancy>,
    pub passed: usize,
    pub failed: usize,
}

const SUITE_NAMES: [&str; 9] = [
    "cm",
    "minimality",
    "logconvex",
    "hankel",
    "majorization",
    "power",
    "pair-dominance",
    "cubic",
    "moment",
];

pub struct Selection {
    enabled: Vec<&'static str>,
}

impl Selection {
    pub fn parse(requested: &[String]) -> Result<Self, Error> {
        let mut names: Vec<String> = Vec::new();
        for item in requested {
            for part in item.split(',') {
                let part = part.trim();
                if !part.is_empty() {
                    names.push(part.to_string());
                }
            }
        }
        if names.is_empty() {
            names.push("all".into());
        }
        let mut enabled = Vec::new();
        for name in &names {
            if name == "all" {
                enabled = SUITE_NAMES.to_vec();
                break;
            }
            match SUITE_NAMES.iter().find(|s| *s == name) {
                Some(s) => enabled.push(*s),
                None => {
                    return Err(Error::Parse(format!(
                        "unknown suite {name:?}; available: all, {}",
                        SUITE_NAMES.join(", ")
                    )))
                }
            }
        }
        enabled.sort();
        enabled.dedup();
        Ok(Selection { enabled })
    }

    fn has(&self, name: &str) -> bool {
        self.enabled.iter().any(|s| *s == name)
    }

    pub fn names(&self) -> Vec<String> {
        self.enabled.iter().map(|s| s.to_string()).collect()
    }
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    selection: &Selection,
    n_bound: usize,
    epsilon: &ExactRational,
    depth: usize,
    seed: u64,
    precision: usize,
    format: Format,
    out: Option<&str>,
) -> Result<CommandOutput, Error> {
    // Size the table for every enabled suite.
    let mut need = suites::fixed_sweep_table_requirement();
    if selection.has("cm") || selection.has("logconvex") {
        need = need.max(n_bound);
    }
    if selection.has("minimality") {
        need = need.max(depth);
    }
    let table = CauchyTable::build_with_bound(need, need)?;

    let mut reports: Vec<CheckReport> = Vec::new();
    let mut discrepancies: Vec<Discrepancy> = Vec::new();

    if selection.has("cm") {
        reports.push(suites::sweep_complete_monotonicity(&table, n_bound)?);
    }
    if selection.has("minimality") {
        let (report, _) = suites::run_minimality(&table, epsilon, depth)?;
        reports.push(report);
    }
    if selection.has("logconvex") {
        reports.push(suites::sweep_log_convexity(&table, n_bound)?);
    }
    if selection.has("hankel") {
        let (signed, unsigned, alternating) = suites::sweep_hankel(&table, seed)?;
        reports.push(signed);
        reports.push(unsigned);
        let witness = alternating
            .cases
            .iter()
            .find(|c| c.inputs == "m=1 n=1 a=(0)")
            .cloned();
        let (witness_key, witness_value) = match witness {
            Some(c) => (c.inputs.clone(), c.lhs.clone()),
            None => ("m=1 n=1 a=(0)".to_string(), (&ExactRational::from_integer((-1).into()) / ExactRational::from_integer(2.into())).as_value()),
        };
        discrepancies.push(Discrepancy {
            suite: alternating.suite.clone(),
            witness: witness_key,
            value: witness_value,
            literal_failures: alternating.failed,
            literal_passes: alternating.passed,
            note: "the (-1)^(m*n)-signed determinant is negative whenever m*n is odd and \
                   the determinant is positive; the unsigned determinant stays nonnegative \
                   across the sweep (see hankel-unsigned)"
                .into(),
            report: alternating,
        });
    }
    if selection.has("majorization") {
        reports.push(suites::sweep_majorization(&table, seed)?);
        reports.push(suites::sweep_majorization_shifted(&table)?);
    }
    if selection.has("power") {
        reports.push(suites::sweep_power_bound(&table)?);
    }
    if selection.has("pair-dominance") {
        reports.push(suites::sweep_pair_dominance(&table)?);
    }
    if selection.has("cubic") {
        reports.push(suites::sweep_cubic_forms(&table)?);
    }
    if selection.has("moment") {
        reports.push(suites::sweep_moment_product(&table)?);
        reports.push(suites::sweep_moment_gram(&table)?);
    }

    for r in &mut reports {
        r.seed = seed;
    }

    let passed: usize = reports.iter().map(|r| r.passed).sum();
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let report = VerifyReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        config: crate::config::canonical_verify_config(
            &selection.names(),
            n_bound,
            epsilon,
            depth,
            seed,
            precision,
            format,
        ),
        suites: reports,
        discrepancies,
        passed,
        failed,
    };

    let text = match format {
        Format::Plain => {
            let mut s = String::new();
            for r in &report.suites {
                report_plain_summary(r, &mut s);
                for (k, v) in &r.parameters {
                    if k == "witness" || k == "min_entry" || k == "min_at" || k == "min_d0" {
                        s.push_str(&format!("  {k}: {v}\n"));
                    }
                }
            }
            for d in &report.discrepancies {
                s.push_str(&format!(
                    "discrepancy {}: witness {} value {} ({} literal failures, {} passes)\n  note: {}\n",
                    d.suite, d.witness, d.value.decimal, d.literal_failures, d.literal_passes, d.note
                ));
            }
            s.push_str(&format!(
                "total passed {} failed {} (seed {})\n",
                report.passed, report.failed, report.seed
            ));
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,inputs,lhs,rhs,holds,margin\n");
            for r in &report.suites {
                report_csv_rows(r, &mut s);
            }
            for d in &report.discrepancies {
                report_csv_rows(&d.report, &mut s);
            }
            s
        }
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
    };
    emit(out, &text).map_err(|e| Error::Internal(e.to_string()))?;
    if failed > 0 {
        return exit_with(String::new(), 1);
    }
    ok(String::new())
}

trait AsValue {
    fn as_value(&self) -> ExactValue;
}

impl AsValue for ExactRational {
    fn as_value(&self) -> ExactValue {
        self.into()
    }
}

// ------------------------------------------------------------------- eval

#[derive(Serialize)]
struct EvalOutput {
    kind: String,
    parameters: BTreeMap<String, String>,
    value: String,
    error_estimate: String,
    nodes_used: usize,
    converged: bool,
    closed_form: Option<String>,
    deviation: Option<String>,
    precision: usize,
}

pub enum EvalRequest {
    F { z: ExactRational },
    H { n: usize, t: ExactRational },
    Hs { s: ExactRational, t: ExactRational },
}

pub fn eval(
    request: &EvalRequest,
    tol: &ExactRational,
    precision: usize,
    format: Format,
    out: Option<&str>,
) -> Result<CommandOutput, Error> {
    let engine = QuadEngine::new(precision);
    let mut params = BTreeMap::new();
    let (kind, result, closed): (&str, QuadResult, Option<String>) = match request {
        EvalRequest::F { z } => {
            params.insert("z".into(), ratio_string(z));
            let r = engine.eval_f(z, tol)?;
            let cf = closed_form_f(z, precision)?;
            let ctx = FloatCtx::with_guard(precision);
            let dev = ctx.sub(&r.value, &cf).abs();
            params.insert("deviation".into(), format!("{dev}"));
            ("F", r, Some(format!("{cf}")))
        }
        EvalRequest::H { n, t } => {
            params.insert("n".into(), n.to_string());
            params.insert("t".into(), ratio_string(t));
            (("h"), engine.eval_h(*n, t, tol)?, None)
        }
        EvalRequest::Hs { s, t } => {
            params.insert("s".into(), ratio_string(s));
            params.insert("t".into(), ratio_string(t));
            ("hs", engine.eval_h_general(s, t, tol)?, None)
        }
    };
    let deviation = params.remove("deviation");
    let payload = EvalOutput {
        kind: kind.into(),
        parameters: params,
        value: format!("{}", result.value),
        error_estimate: format!("{}", result.error_estimate),
        nodes_used: result.nodes_used,
        converged: result.converged,
        closed_form: closed,
        deviation,
    precision,
    };
    let text = match format {
        Format::Plain => {
            let mut s = format!(
                "{} value        {}\nerror estimate  {}\nnodes used      {}\nconverged       {}\n",
                payload.kind, payload.value, payload.error_estimate, payload.nodes_used, payload.converged
            );
            if let Some(cf) = &payload.closed_form {
                s.push_str(&format!("closed form     {cf}\n"));
            }
            if let Some(d) = &payload.deviation {
                s.push_str(&format!("|deviation|     {d}\n"));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("kind,value,error_estimate,nodes_used,converged,closed_form,deviation\n");
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                payload.kind,
                payload.value,
                payload.error_estimate,
                payload.nodes_used,
                payload.converged,
                payload.closed_form.as_deref().unwrap_or(""),
                payload.deviation.as_deref().unwrap_or(""),
            ));
            s
        }
        Format::Json => serde_json::to_string_pretty(&payload).unwrap() + "\n",
    };
    emit(out, &text).map_err(|e| Error::Internal(e.to_string()))?;
    ok(String::new())
}
