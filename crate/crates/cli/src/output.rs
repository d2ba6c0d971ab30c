//! Output sinks and small formatting helpers.

use std::fs;
use std::io::Write;

use cauchy_core::report::CheckReport;

/// Writes `content` to `--out FILE` or stdout.
pub fn emit(out: Option<&str>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Escapes a CSV field (quotes when needed).
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV line per case, suite name first.
pub fn report_csv_rows(report: &CheckReport, rows: &mut String) {
    for case in &report.cases {
        rows.push_str(&format!(
            "{},{},{},{},{},{}\n",
            csv_field(&report.suite),
            csv_field(&case.inputs),
            csv_field(&format!("{}/{}", case.lhs.numerator, case.lhs.denominator)),
            csv_field(&format!("{}/{}", case.rhs.numerator, case.rhs.denominator)),
            case.holds,
            csv_field(&format!(
                "{}/{}",
                case.margin.numerator, case.margin.denominator
            )),
        ));
    }
}

/// Plain-text suite summary block.
pub fn report_plain_summary(report: &CheckReport, out: &mut String) {
    out.push_str(&format!(
        "suite {:24} passed {:6} failed {:3}\n",
        report.suite, report.passed, report.failed
    ));
    for c in &report.counterexamples {
        out.push_str(&format!(
            "  counterexample: {} (lhs {}, rhs {}, margin {})\n",
            c.inputs, c.lhs.decimal, c.rhs.decimal, c.margin.decimal
        ));
    }
}
