//! Task runner and verification suites behind the `quiver-ext` binary.

pub mod commands;
pub mod suites;

use quiver_ext::dsl::{parse_workspace_with, ParseOptions, Workspace};
use quiver_ext::fixtures;
use quiver_ext::report::{serialize_report_pretty, Meta, Report};
use quiver_ext::{Field, Result};

pub use commands::{run_task, Outcome, RunOptions, Status, Task};

/// Workspace used when none is given.
pub const DEFAULT_WORKSPACE: &str = "f2_degeneration";

/// Loads a bundled workspace by name, or reads a file.
pub fn load_workspace(source: &str, field: Option<Field>, truncation_cap: Option<usize>) -> Result<Workspace> {
    let text = match fixtures::source(source) {
        Some(src) => src.to_string(),
        None => std::fs::read_to_string(source)
            .map_err(|e| quiver_ext::Error::Semantic(format!("cannot read workspace {source}: {e}")))?,
    };
    let mut opts = ParseOptions {
        field,
        ..ParseOptions::default()
    };
    if let Some(cap) = truncation_cap {
        opts.truncation_cap = cap;
    }
    parse_workspace_with(&text, &opts)
}

/// The full JSON report for an outcome.
pub fn json_report(ws: &Workspace, outcome: &Outcome) -> String {
    let report = Report {
        meta: Some(Meta::of(ws)),
        tasks: outcome.reports.clone(),
    };
    serialize_report_pretty(&report)
}

/// Human-readable rendering: one block per task.
pub fn text_report(outcome: &Outcome) -> String {
    let mut out = String::new();
    if !outcome.suites.is_empty() {
        for s in &outcome.suites {
            out.push_str(&format!(
                "{:<15} {} ({} cases, {} ms)\n",
                s.name,
                if s.passed() { "PASS" } else { "FAIL" },
                s.cases,
                s.elapsed.as_millis()
            ));
            for f in &s.failures {
                out.push_str(&format!("  {}: {}\n", f.case, f.detail));
            }
        }
        return out;
    }
    for t in &outcome.reports {
        out.push_str(&format!("{} {}\n", t.task, t.inputs));
        out.push_str(&format!("  result: {}\n", t.result));
        if let Some(serde_json::Value::Object(c)) = &t.certificate {
            for (k, v) in c {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        for w in &t.warnings {
            out.push_str(&format!("  warning: {w}\n"));
        }
    }
    out
}
