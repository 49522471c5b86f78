use serde::Serialize;

use super::family::Family;
use super::{is_roof, RoofRecord};
use crate::homog::gp_invariants;

pub type Triple = (u64, i64, i64);

/// One family instance compared against its closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: Family,
    pub r: u32,
    pub label: String,
    pub diagram: String,
    pub expected: Triple,
    pub computed: Triple,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub r_max: u32,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Test hook: perturbs the computed `index_V1` of the row labelled `label`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFault {
    pub label: String,
}

pub fn verify_table(r_max: u32) -> TableReport {
    verify_table_with_fault(r_max, None)
}

pub fn verify_table_with_fault(r_max: u32, fault: Option<&TableFault>) -> TableReport {
    let mut rows = Vec::new();
    for r in 2..=r_max {
        for family in Family::KNOWN {
            if !family.admits(r) {
                continue;
            }
            let mut row = compute_row(family, r);
            if fault.is_some_and(|f| f.label == row.label) {
                row.computed.1 += 1;
                row.pass = false;
                row.detail = Some("injected fault".into());
            }
            if row.computed != row.expected {
                row.pass = false;
            }
            rows.push(row);
        }
    }
    TableReport { r_max, rows }
}

fn compute_row(family: Family, r: u32) -> TableRow {
    let expected = family.expected_triple(r).expect("admissible r");
    let label = family.instance_label(r);
    let Some(schema) = family.schema_diagram(r) else {
        let rec = RoofRecord::g2_dagger();
        let computed = (rec.dim_v1, rec.index_v1, rec.index_v2);
        let consistent = rec.dim_v1 == rec.dim_v2 && rec.r == r;
        return TableRow {
            family,
            r,
            label,
            diagram: rec.diagram_text(),
            expected,
            computed,
            pass: consistent && computed == expected,
            detail: (!consistent).then(|| "dim V1 != dim V2 or wrong r".into()),
        };
    };
    let marks = schema.mark_list();
    let v1 = gp_invariants(&schema.with_marks([marks[0]]).expect("mark"));
    let v2 = gp_invariants(&schema.with_marks([marks[1]]).expect("mark"));
    let computed = (
        v1.dim,
        v1.index().expect("one mark"),
        v2.index().expect("one mark"),
    );
    let mut problems = Vec::new();
    if v1.dim != v2.dim {
        problems.push(format!("dim V1 = {} but dim V2 = {}", v1.dim, v2.dim));
    }
    let roof_r = is_roof(&schema);
    if roof_r != Some(r) {
        problems.push(format!("is_roof gives {roof_r:?}"));
    }
    TableRow {
        family,
        r,
        label,
        diagram: schema.to_string(),
        expected,
        computed,
        pass: problems.is_empty() && computed == expected,
        detail: (!problems.is_empty()).then(|| problems.join("; ")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row<'a>(rep: &'a TableReport, label: &str) -> &'a TableRow {
        rep.rows.iter().find(|r| r.label == label).unwrap()
    }

    #[test]
    fn sporadic_rows() {
        let rep = verify_table(4);
        assert!(rep.all_pass());
        assert_eq!(row(&rep, "F4").computed, (20, 5, 7));
        assert_eq!(row(&rep, "G2").computed, (5, 3, 5));
        assert_eq!(row(&rep, "G2^dagger").computed, (5, 5, 5));
        assert_eq!(row(&rep, "D4").computed, (6, 6, 6));
    }

    #[test]
    fn r_two_rows() {
        let rep = verify_table(2);
        let labels: Vec<&str> = rep.rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["A1xA1", "A2^M", "C2", "G2"]);
    }

    #[test]
    fn fault_is_reported() {
        let fault = TableFault { label: "D5".into() };
        let rep = verify_table_with_fault(6, Some(&fault));
        let bad: Vec<&str> = rep.failures().map(|r| r.label.as_str()).collect();
        assert_eq!(bad, ["D5"]);
        assert_eq!(row(&rep, "D5").computed, (10, 9, 8));
    }
}
