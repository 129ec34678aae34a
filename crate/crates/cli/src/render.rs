//! Reports as JSON values (sorted keys) and as plain text.

use std::fmt::Write;

use jjalg::classify::FlagDatum;
use jjalg::{Condition, Field, Report};
use serde_json::{json, Value};

use crate::doc::{matrix_rows, vector_strs};

/// What a command produced, and whether every check in it passed.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

pub fn condition_json(c: &Condition) -> Value {
    json!({
        "name": c.name,
        "passed": c.passed(),
        "witnesses": c.witnesses,
    })
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "passed": r.passed(),
        "conditions": r.conditions.iter().map(condition_json).collect::<Vec<_>>(),
    })
}

/// One line per condition, with up to five witnesses for failures.
pub fn report_text(title: &str, r: &Report) -> String {
    let mut out = format!("{title}: {}\n", verdict(r.passed()));
    for c in &r.conditions {
        let _ = write!(out, "  {:<28} {}", c.name, verdict(c.passed()));
        if !c.passed() {
            let shown: Vec<String> = c.witnesses.iter().take(5).map(|w| format!("{w:?}")).collect();
            let more = c.witnesses.len().saturating_sub(5);
            let _ = write!(out, " at {}", shown.join(" "));
            if more > 0 {
                let _ = write!(out, " (+{more} more)");
            }
        }
        out.push('\n');
    }
    out
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn flag_json<F: Field>(k: &F, fd: &FlagDatum<F>) -> Value {
    json!({
        "d": matrix_rows(k, &fd.d),
        "lambda": vector_strs(k, &fd.lambda),
        "a0": vector_strs(k, &fd.a0),
        "alpha0": k.format(&fd.alpha0),
    })
}

pub fn flag_text<F: Field>(k: &F, fd: &FlagDatum<F>) -> String {
    let rows: Vec<String> = matrix_rows(k, &fd.d).iter().map(|r| r.join(" ")).collect();
    format!(
        "D = [{}], λ = ({}), a₀ = ({}), α₀ = {}",
        rows.join("; "),
        vector_strs(k, &fd.lambda).join(", "),
        vector_strs(k, &fd.a0).join(", "),
        k.format(&fd.alpha0)
    )
}

pub fn rows_text(rows: &[Vec<String>]) -> String {
    let lines: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
    format!("[{}]", lines.join("; "))
}
