//! Text, JSON and CSV renderings of analyses, check runs and spectrum
//! scans. All renderers are pure string builders; the CLI decides where
//! the bytes go.

use std::fmt::Write;

use crate::catalog::SpectrumReport;
use crate::checks::CheckResult;
use crate::power::{AnalysisReport, GroupAnalysis};

/// Key/value table for one analysis.
pub fn analysis_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group:            {}", report.group);
    let _ = writeln!(out, "order:            {}", report.order);
    let _ = writeln!(out, "exponent:         {}", report.exponent);
    let _ = writeln!(
        out,
        "cyclic:           {}",
        if report.cyclic { "yes" } else { "no" }
    );
    let _ = writeln!(out, "subgroups:        {}", report.subgroups);
    let powers = report
        .power_subgroups
        .iter()
        .map(|p| format!("G^{} (order {})", p.exponent, p.order))
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(out, "power subgroups:  {powers}");
    let _ = writeln!(out, "k (non-power):    {}", report.k);
    let orders = if report.non_power_orders.is_empty() {
        "-".to_string()
    } else {
        report
            .non_power_orders
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "non-power orders: {orders}");
    out
}

/// The analysis as a JSON object with fixed field names.
pub fn analysis_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// One CSV row per subgroup record, preceded by a header row.
pub fn analysis_csv(analysis: &GroupAnalysis) -> String {
    let mut out = String::from("group,subgroup_order,normal,is_power,power_exponent,elements\n");
    for r in &analysis.records {
        let exponent = r.power_exponent.map(|m| m.to_string()).unwrap_or_default();
        let elements = r
            .set
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            analysis.group.name(),
            r.order,
            r.normal,
            r.is_power(),
            exponent,
            elements
        );
    }
    out
}

/// One line per check, then a summary line.
pub fn check_report_text(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        match &r.witness {
            None => {
                let _ = writeln!(
                    out,
                    "[{}] {:<30} {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.group
                );
            }
            Some(w) => {
                let _ = writeln!(
                    out,
                    "[{}] {:<30} {}: {w}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.group
                );
            }
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {} failed", results.len(), failed);
    out
}

/// Per-k rows with witness lists. Every k up to the bound gets a row, and
/// empty rows are labeled as absence of evidence at this order bound only.
pub fn spectrum_text(report: &SpectrumReport) -> String {
    const LISTED: usize = 8;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "k-spectrum over {} groups of order <= {}",
        report.groups_scanned, report.max_order
    );
    for (k, witnesses) in &report.by_k {
        if witnesses.is_empty() {
            let _ = writeln!(out, "k={k:<3} no witness up to this order bound");
        } else {
            let shown = witnesses
                .iter()
                .take(LISTED)
                .map(String::as_str)
                .collect::<Vec<_>>()
                .join(", ");
            let more = witnesses.len().saturating_sub(LISTED);
            if more > 0 {
                let _ = writeln!(
                    out,
                    "k={k:<3} {} witnesses: {shown}, +{more} more",
                    witnesses.len()
                );
            } else {
                let _ = writeln!(out, "k={k:<3} {} witnesses: {shown}", witnesses.len());
            }
        }
    }
    if report.above_k_max > 0 {
        let _ = writeln!(
            out,
            "{} groups have k > {} (not listed)",
            report.above_k_max, report.k_max
        );
    }
    out
}

pub fn spectrum_json(report: &SpectrumReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// One witness spec per line.
pub fn search_text(k: usize, witnesses: &[String]) -> String {
    let mut out = String::new();
    if witnesses.is_empty() {
        let _ = writeln!(out, "no group with k={k} in this catalog");
    } else {
        for w in witnesses {
            let _ = writeln!(out, "{w}");
        }
    }
    out
}
