//! Roofs of `P^{r-1}`-bundles: recognition on marked diagrams, exhaustive
//! enumeration, the known families, and the classification filters.
//!
//! A two-marked diagram `(D, {i, j})` is a roof exactly when both fibers
//! `(D \ {i}, {j})` and `(D \ {j}, {i})` are the same projective space
//! `P^{r-1}`; `-K` then has coefficient vector `(r, r)`.

mod classify;
mod family;
mod render;
mod table;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use num_traits::ToPrimitive;

use crate::chow::{canonical_class_pe, mukai_pair_check, BundleChowRing};
use crate::dynkin::{Diagram, MarkedDiagram};
use crate::homog::{fibration_fiber, gp_invariants, is_projective_space};
use crate::root_system::SimpleType;

pub use classify::{
    classify_simple_kequiv, Classification, ClassificationQuery, FamilyClass, RConstraint, Rule,
};
pub use family::{name_family, Family, FamilyMatch};
pub use render::{
    records_csv_rows, records_latex, table_csv_rows, table_latex, CSV_COLUMNS, TABLE_CSV_COLUMNS,
};
pub use table::{verify_table, verify_table_with_fault, TableFault, TableReport, TableRow};

/// `Some(r)` iff `md` has two marks and both fibrations are `P^{r-1}`-fibrations.
pub fn is_roof(md: &MarkedDiagram) -> Option<u32> {
    let marks = md.mark_list();
    let [i, j] = marks.as_slice() else {
        return None;
    };
    let ri = is_projective_space(&fibration_fiber(md, *i).ok()?)?;
    let rj = is_projective_space(&fibration_fiber(md, *j).ok()?)?;
    if ri != rj {
        return None;
    }
    let inv = gp_invariants(md);
    assert_eq!(
        inv.index_entries(),
        vec![ri as i64, ri as i64],
        "roof {md} must have -K = {ri}(ω_i + ω_j)"
    );
    Some(ri)
}

/// One recognised roof with the invariants of `W` and of its two targets
/// `V_1 = G/P(i)`, `V_2 = G/P(j)` for marks `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoofRecord {
    pub family: Family,
    pub r: u32,
    #[serde(serialize_with = "serialize_diagram")]
    pub diagram: Option<MarkedDiagram>,
    #[serde(rename = "dim_W")]
    pub dim_w: u64,
    #[serde(rename = "dim_V1")]
    pub dim_v1: u64,
    #[serde(rename = "dim_V2")]
    pub dim_v2: u64,
    #[serde(rename = "index_V1")]
    pub index_v1: i64,
    #[serde(rename = "index_V2")]
    pub index_v2: i64,
    pub homogeneous: bool,
    pub notes: Vec<String>,
}

fn serialize_diagram<S: Serializer>(d: &Option<MarkedDiagram>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&diagram_text(d))
}

fn diagram_text(d: &Option<MarkedDiagram>) -> String {
    d.as_ref()
        .map(|m| m.to_string())
        .unwrap_or_else(|| "non-homogeneous".into())
}

impl RoofRecord {
    /// Builds the record of a roof diagram. The stored diagram is the family's
    /// standard representative when one lies in the automorphism orbit.
    pub fn from_diagram(md: &MarkedDiagram, r: u32) -> Self {
        let naming = name_family(md);
        let family = match naming.r {
            Some(nr) if nr == r => naming.family,
            _ => Family::Unknown,
        };
        let display = family
            .schema_diagram(r)
            .filter(|s| md.automorphic_images().contains(s))
            .unwrap_or_else(|| {
                md.automorphic_images()
                    .into_iter()
                    .min_by_key(|m| m.to_string())
                    .expect("orbit contains self")
            });
        let marks = display.mark_list();
        let w = gp_invariants(&display);
        let v1 = gp_invariants(&display.with_marks([marks[0]]).expect("mark"));
        let v2 = gp_invariants(&display.with_marks([marks[1]]).expect("mark"));
        let mut notes = Vec::new();
        if family != Family::Unknown {
            notes.push(family.variety_name(r));
        }
        if family == Family::ProductA && display != family.schema_diagram(r).expect("admits r") {
            notes.push(format!(
                "presented by {}; C_m marked at node 1 is P^(2m-1)",
                display
            ));
        }
        RoofRecord {
            family,
            r,
            dim_w: w.dim,
            dim_v1: v1.dim,
            dim_v2: v2.dim,
            index_v1: v1.index().expect("one mark"),
            index_v2: v2.index().expect("one mark"),
            homogeneous: true,
            notes,
            diagram: Some(display),
        }
    }

    /// The non-homogeneous roof `P(G)` over `Q^5`, `G` an Ottaviani bundle.
    /// The invariants of `Q^5` are taken from `B3:1`, and the index of `W`
    /// from the anticanonical class of `P(G)`.
    pub fn g2_dagger() -> Self {
        let q5 = gp_invariants(&MarkedDiagram::parse("B3:1").expect("valid"));
        let ring = BundleChowRing::ottaviani();
        let neg_k = canonical_class_pe(&ring, q5.index().expect("one mark"));
        let r = ring.rank();
        let c1 = ring.c1().to_integer().to_i64().expect("small c1");
        let mukai = mukai_pair_check(q5.index().expect("one mark"), c1, r, q5.dim as u32)
            .expect("positive data");
        RoofRecord {
            family: Family::G2Dagger,
            r,
            diagram: None,
            dim_w: q5.dim + r as u64 - 1,
            dim_v1: q5.dim,
            dim_v2: q5.dim,
            index_v1: q5.index().expect("one mark"),
            index_v2: q5.index().expect("one mark"),
            homogeneous: false,
            notes: vec![
                Family::G2Dagger.variety_name(3),
                "Ottaviani bundle: stable, rank 3, (c1,c2,c3) = (2,2,2)".into(),
                format!("-K = {}", neg_k),
                mukai.message,
            ],
        }
    }

    pub fn diagram_text(&self) -> String {
        diagram_text(&self.diagram)
    }

    pub fn label(&self) -> String {
        self.family.instance_label(self.r)
    }

    pub fn total_rank(&self) -> usize {
        self.diagram
            .as_ref()
            .map(|d| d.diagram().total_rank())
            .unwrap_or(0)
    }

    /// Dimension additivity on both sides and, for homogeneous records, the
    /// `(r, r)` anticanonical vector and the stored target indices.
    pub fn check_invariants(&self) -> Result<(), String> {
        let r1 = self.r as u64 - 1;
        if self.dim_w != self.dim_v1 + r1 || self.dim_w != self.dim_v2 + r1 {
            return Err(format!(
                "dim W = {} but dim V = ({}, {}) with r = {}",
                self.dim_w, self.dim_v1, self.dim_v2, self.r
            ));
        }
        if let Some(md) = &self.diagram {
            let w = gp_invariants(md);
            if w.index_entries() != vec![self.r as i64; 2] {
                return Err(format!("index vector {:?} != (r, r)", w.index_entries()));
            }
            if w.dim != self.dim_w {
                return Err(format!("dim W recomputed as {}", w.dim));
            }
            let marks = md.mark_list();
            for (m, idx) in marks.iter().zip([self.index_v1, self.index_v2]) {
                let v = gp_invariants(&md.with_marks([*m]).map_err(|e| e.to_string())?);
                if v.index() != Some(idx) {
                    return Err(format!(
                        "index of G/P({m}) is {:?}, stored {idx}",
                        v.index()
                    ));
                }
            }
        }
        Ok(())
    }

    fn sort_key(&self) -> (u32, Family, usize, String) {
        (self.r, self.family, self.total_rank(), self.diagram_text())
    }
}

/// Every candidate scanned by [`enumerate_roofs`]: one simple factor with two
/// marks, or two factors (unordered) with one mark each.
pub fn candidate_diagrams(max_total_rank: usize) -> Vec<MarkedDiagram> {
    let types = SimpleType::all_up_to_rank(max_total_rank);
    let mut out = Vec::new();
    for &t in &types {
        let d = Diagram::simple(t);
        let n = t.rank();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(MarkedDiagram::new(d.clone(), [i, j]).expect("valid marks"));
            }
        }
    }
    for (a, &t1) in types.iter().enumerate() {
        for &t2 in &types[a..] {
            if t1.rank() + t2.rank() > max_total_rank {
                continue;
            }
            let d = Diagram::new(vec![t1, t2]).expect("two factors");
            for i in 1..=t1.rank() {
                for j in 1..=t2.rank() {
                    out.push(
                        MarkedDiagram::new(d.clone(), [i, t1.rank() + j]).expect("valid marks"),
                    );
                }
            }
        }
    }
    out
}

/// All roofs with total rank at most `max_total_rank`, deduplicated up to
/// diagram automorphisms and sorted by `(r, family, rank)`. The
/// non-homogeneous `G2^dagger` record is appended whenever `r_filter` admits
/// `r = 3`. Candidates are evaluated on the current rayon pool.
pub fn enumerate_roofs(max_total_rank: usize, r_filter: Option<u32>) -> Vec<RoofRecord> {
    let found: Vec<(String, RoofRecord)> = candidate_diagrams(max_total_rank)
        .par_iter()
        .filter_map(|md| {
            let r = is_roof(md)?;
            if r_filter.is_some_and(|want| want != r) {
                return None;
            }
            Some((md.orbit_key(), RoofRecord::from_diagram(md, r)))
        })
        .collect();
    let unique: BTreeMap<String, RoofRecord> = found.into_iter().collect();
    let mut records: Vec<RoofRecord> = unique.into_values().collect();
    if r_filter.is_none_or(|r| r == 3) {
        records.push(RoofRecord::g2_dagger());
    }
    records.sort_by_key(RoofRecord::sort_key);
    records
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roof(s: &str) -> Option<u32> {
        is_roof(&MarkedDiagram::parse(s).unwrap())
    }

    #[test]
    fn is_roof_examples() {
        assert_eq!(roof("A4:2,3"), Some(3));
        assert_eq!(roof("A4:1,3"), None);
        assert_eq!(roof("C2:1,2"), Some(2));
        assert_eq!(roof("A2*A2:1,4"), Some(3));
        assert_eq!(roof("F4:2,3"), Some(3));
        assert_eq!(roof("G2:1,2"), Some(2));
        assert_eq!(roof("D4:1,3"), Some(4));
        assert_eq!(roof("A4:1"), None);
    }

    fn labels(records: &[RoofRecord]) -> Vec<String> {
        records.iter().map(|r| r.label()).collect()
    }

    #[test]
    fn rank_two_scan() {
        let recs = enumerate_roofs(2, None);
        assert_eq!(labels(&recs), ["A1xA1", "A2^M", "C2", "G2", "G2^dagger"]);
        for r in &recs {
            r.check_invariants().unwrap();
        }
    }

    #[test]
    fn rank_four_fiber_three() {
        let recs = enumerate_roofs(4, Some(3));
        assert_eq!(labels(&recs), ["A2xA2", "A3^M", "A4^G", "F4", "G2^dagger"]);
        assert!(enumerate_roofs(4, Some(2))
            .iter()
            .all(|r| r.family != Family::G2Dagger));
    }

    #[test]
    fn records_use_standard_representatives() {
        let recs = enumerate_roofs(4, Some(4));
        let diagrams: Vec<String> = recs.iter().map(|r| r.diagram_text()).collect();
        assert_eq!(diagrams, ["C2*C2:1,3", "A4:1,4", "D4:3,4"]);
        assert_eq!(recs[0].family, Family::ProductA);
        assert_eq!(recs[0].notes.len(), 2);
    }

    #[test]
    fn g2_dagger_record() {
        let g = RoofRecord::g2_dagger();
        assert_eq!(
            (g.r, g.dim_w, g.dim_v1, g.dim_v2, g.index_v1, g.index_v2),
            (3, 7, 5, 5, 5, 5)
        );
        assert!(!g.homogeneous);
        assert_eq!(g.diagram_text(), "non-homogeneous");
        g.check_invariants().unwrap();
    }
}
