//! Flat row and LaTeX renderings shared by the command-line front end.

use std::fmt::Write;

use super::table::TableReport;
use super::RoofRecord;

pub const CSV_COLUMNS: [&str; 10] = [
    "family",
    "r",
    "diagram",
    "dim_W",
    "dim_V1",
    "dim_V2",
    "index_V1",
    "index_V2",
    "homogeneous",
    "notes",
];

pub const TABLE_CSV_COLUMNS: [&str; 7] = [
    "family", "r", "label", "diagram", "expected", "computed", "status",
];

fn triple((d, a, b): (u64, i64, i64)) -> String {
    format!("({d},{a},{b})")
}

pub fn records_csv_rows(records: &[RoofRecord]) -> Vec<Vec<String>> {
    records
        .iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.r.to_string(),
                r.diagram_text(),
                r.dim_w.to_string(),
                r.dim_v1.to_string(),
                r.dim_v2.to_string(),
                r.index_v1.to_string(),
                r.index_v2.to_string(),
                r.homogeneous.to_string(),
                r.notes.join("; "),
            ]
        })
        .collect()
}

pub fn table_csv_rows(report: &TableReport) -> Vec<Vec<String>> {
    report
        .rows
        .iter()
        .map(|row| {
            vec![
                row.family.to_string(),
                row.r.to_string(),
                row.label.clone(),
                row.diagram.clone(),
                triple(row.expected),
                triple(row.computed),
                if row.pass { "pass" } else { "FAIL" }.into(),
            ]
        })
        .collect()
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('^', "\\^{}")
}

fn latex_tabular(header: &str, lines: impl Iterator<Item = String>) -> String {
    let mut out = String::from("\\begin{tabular}{lll}\n\\hline\n");
    writeln!(out, "{header} \\\\").unwrap();
    out.push_str("\\hline\n");
    for line in lines {
        writeln!(out, "{line} \\\\").unwrap();
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

/// Columns: type, marked diagram, `(dim V_i, r_{V_1}, r_{V_2})`.
pub fn records_latex(records: &[RoofRecord]) -> String {
    latex_tabular(
        "Type & Marked diagram & $(\\dim V_i, r_{V_1}, r_{V_2})$",
        records.iter().map(|r| {
            format!(
                "{} & \\texttt{{{}}} & {}",
                r.family.latex_label(r.r),
                latex_escape(&r.diagram_text()),
                triple((r.dim_v1, r.index_v1, r.index_v2))
            )
        }),
    )
}

pub fn table_latex(report: &TableReport) -> String {
    latex_tabular(
        "Type & Marked diagram & $(\\dim V_i, r_{V_1}, r_{V_2})$",
        report.rows.iter().map(|row| {
            format!(
                "{} & \\texttt{{{}}} & {}",
                row.family.latex_label(row.r),
                latex_escape(&row.diagram),
                triple(row.computed)
            )
        }),
    )
}
