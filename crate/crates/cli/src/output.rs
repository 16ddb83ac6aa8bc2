//! Report renderers.
//!
//! Text output is aligned for reading; machine output is versioned
//! JSON with a fixed field order and no volatile data, so two runs
//! with the same inputs produce identical bytes.

use std::io::{self, Write};

use serde::Serialize;

use kervaire_core::report::{Category, Report, Status};

/// Schema version of the machine output.
pub const FORMAT_VERSION: u32 = 1;

fn status_token(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Mismatch => "mismatch",
    }
}

pub fn render_text(report: &Report, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "== {} ==", report.title())?;
    let name_width = report
        .checks()
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in report.checks() {
        write!(
            out,
            "{:8} {:8} {:name_width$}  ",
            c.status.as_str(),
            c.category.as_str(),
            c.name
        )?;
        if c.computed == c.expected {
            write!(out, "{}", c.computed)?;
        } else {
            let against = match c.category {
                Category::Identity => "expected",
                Category::Recorded => "recorded",
            };
            write!(out, "{} ({} {})", c.computed, against, c.expected)?;
        }
        if c.note.is_empty() {
            writeln!(out)?;
        } else {
            writeln!(out, "  [{}]", c.note)?;
        }
    }
    let passed = report
        .checks()
        .iter()
        .filter(|c| c.status == Status::Pass)
        .count();
    writeln!(
        out,
        "{} checks: {} pass, {} hard failures, {} recorded mismatches",
        report.checks().len(),
        passed,
        report.hard_failures(),
        report.mismatches()
    )
}

#[derive(Serialize)]
struct MachineReport<'a> {
    format_version: u32,
    tool: &'static str,
    version: &'static str,
    title: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    checks: Vec<MachineCheck<'a>>,
    summary: Summary,
}

#[derive(Serialize)]
struct MachineCheck<'a> {
    name: &'a str,
    category: &'a str,
    status: &'a str,
    computed: &'a str,
    expected: &'a str,
    note: &'a str,
}

#[derive(Serialize)]
struct Summary {
    checks: usize,
    passed: usize,
    hard_failures: usize,
    recorded_mismatches: usize,
    clean: bool,
}

pub fn render_machine(report: &Report, seed: Option<u64>, out: &mut impl Write) -> io::Result<()> {
    let checks: Vec<MachineCheck> = report
        .checks()
        .iter()
        .map(|c| MachineCheck {
            name: &c.name,
            category: c.category.as_str(),
            status: status_token(c.status),
            computed: &c.computed,
            expected: &c.expected,
            note: &c.note,
        })
        .collect();
    let passed = report
        .checks()
        .iter()
        .filter(|c| c.status == Status::Pass)
        .count();
    let doc = MachineReport {
        format_version: FORMAT_VERSION,
        tool: "kervaire",
        version: env!("CARGO_PKG_VERSION"),
        title: report.title(),
        seed,
        checks,
        summary: Summary {
            checks: report.checks().len(),
            passed,
            hard_failures: report.hard_failures(),
            recorded_mismatches: report.mismatches(),
            clean: report.is_clean(),
        },
    };
    let rendered = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    writeln!(out, "{rendered}")
}
