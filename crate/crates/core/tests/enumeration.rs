use std::collections::BTreeSet;

use proptest::prelude::*;
use roofscope::dynkin::{Diagram, MarkedDiagram};
use roofscope::homog::gp_invariants;
use roofscope::roofs::{enumerate_roofs, is_roof, name_family, Family, RoofRecord};
use roofscope::root_system::{SimpleType, TypeLetter};

/// Brute-force roof test that avoids the projective-space templates: each
/// fiber `(D \ {i}, {j})` must be a Fano of dimension `m` and index `m + 1`,
/// hence `P^m`, with the same `m` on both sides.
fn oracle_roof(md: &MarkedDiagram) -> Option<u32> {
    let marks = md.mark_list();
    let mut rs = Vec::new();
    for (keep, other) in [(marks[0], marks[1]), (marks[1], marks[0])] {
        let fiber = MarkedDiagram::new(md.diagram().remove_node(keep).ok()?, [other]).ok()?;
        let inv = gp_invariants(&fiber);
        if inv.index()? != inv.dim as i64 + 1 {
            return None;
        }
        rs.push(inv.dim as u32 + 1);
    }
    (rs[0] == rs[1]).then_some(rs[0])
}

/// Every two-marked diagram of total rank at most `max`, including both
/// orders of a product.
fn brute_force(max: usize) -> BTreeSet<String> {
    let types = SimpleType::all_up_to_rank(max);
    let mut keys = BTreeSet::new();
    let mut consider = |md: MarkedDiagram| {
        if let Some(r) = oracle_roof(&md) {
            assert_eq!(is_roof(&md), Some(r), "{md}");
            keys.insert(md.orbit_key());
        } else {
            assert_eq!(is_roof(&md), None, "{md}");
        }
    };
    for &a in &types {
        let n = a.rank();
        for i in 1..=n {
            for j in i + 1..=n {
                consider(MarkedDiagram::new(Diagram::simple(a), [i, j]).unwrap());
            }
        }
        for &b in &types {
            if n + b.rank() > max {
                continue;
            }
            let d = Diagram::new(vec![a, b]).unwrap();
            for i in 1..=n {
                for j in n + 1..=n + b.rank() {
                    consider(MarkedDiagram::new(d.clone(), [i, j]).unwrap());
                }
            }
        }
    }
    keys
}

/// The family instances of total rank at most 8.
fn expected_rank_eight() -> Vec<(&'static str, &'static str)> {
    vec![
        ("A1xA1", "A1*A1:1,2"),
        ("A2xA2", "A2*A2:1,4"),
        ("A3xA3", "A3*A3:1,6"),
        ("A3xA3", "A3*C2:1,4"),
        ("A3xA3", "C2*C2:1,3"),
        ("A4xA4", "A4*A4:1,8"),
        ("A5xA5", "A5*C3:1,6"),
        ("A5xA5", "C3*C3:1,4"),
        ("A7xA7", "C4*C4:1,5"),
        ("A2^M", "A2:1,2"),
        ("A3^M", "A3:1,3"),
        ("A4^M", "A4:1,4"),
        ("A5^M", "A5:1,5"),
        ("A6^M", "A6:1,6"),
        ("A7^M", "A7:1,7"),
        ("A8^M", "A8:1,8"),
        ("A4^G", "A4:2,3"),
        ("A6^G", "A6:3,4"),
        ("A8^G", "A8:4,5"),
        ("C2", "C2:1,2"),
        ("C5", "C5:3,4"),
        ("C8", "C8:5,6"),
        ("D4", "D4:3,4"),
        ("D5", "D5:4,5"),
        ("D6", "D6:5,6"),
        ("D7", "D7:6,7"),
        ("D8", "D8:7,8"),
        ("F4", "F4:2,3"),
        ("G2", "G2:1,2"),
    ]
}

#[test]
fn rank_eight_is_exactly_the_known_families() {
    let records = enumerate_roofs(8, None);
    let homogeneous: Vec<&RoofRecord> = records.iter().filter(|r| r.homogeneous).collect();
    assert_eq!(records.len(), homogeneous.len() + 1);
    let dagger: Vec<&RoofRecord> = records.iter().filter(|r| !r.homogeneous).collect();
    assert_eq!(dagger.len(), 1);
    assert_eq!(dagger[0].family, Family::G2Dagger);

    let got: BTreeSet<(String, String)> = homogeneous
        .iter()
        .map(|r| (r.label(), r.diagram.as_ref().unwrap().orbit_key()))
        .collect();
    let want: BTreeSet<(String, String)> = expected_rank_eight()
        .into_iter()
        .map(|(l, d)| (l.to_string(), MarkedDiagram::parse(d).unwrap().orbit_key()))
        .collect();
    assert_eq!(got, want);
    assert_eq!(homogeneous.len(), want.len());

    for r in &records {
        r.check_invariants().unwrap();
        assert_ne!(r.family, Family::Unknown);
    }
    assert!(homogeneous.iter().all(|r| r
        .diagram
        .as_ref()
        .unwrap()
        .diagram()
        .factors()
        .iter()
        .all(|t| t.letter() != TypeLetter::E)));
}

#[test]
fn brute_force_scan_agrees() {
    let records = enumerate_roofs(8, None);
    let keys: BTreeSet<String> = records
        .iter()
        .filter_map(|r| r.diagram.as_ref().map(|d| d.orbit_key()))
        .collect();
    assert_eq!(brute_force(8), keys);
}

#[test]
fn fiber_filter_three() {
    let labels: Vec<String> = enumerate_roofs(8, Some(3))
        .iter()
        .map(|r| r.label())
        .collect();
    assert_eq!(labels, ["A2xA2", "A3^M", "A4^G", "F4", "G2^dagger"]);
}

#[test]
fn sorted_by_r_then_family() {
    let records = enumerate_roofs(8, None);
    for w in records.windows(2) {
        assert!((w[0].r, w[0].family) <= (w[1].r, w[1].family));
    }
}

fn roof_diagrams() -> Vec<MarkedDiagram> {
    enumerate_roofs(6, None)
        .into_iter()
        .filter_map(|r| r.diagram)
        .collect()
}

proptest! {
    #[test]
    fn naming_is_automorphism_invariant(md in proptest::sample::select(roof_diagrams())) {
        let base = name_family(&md);
        for img in md.automorphic_images() {
            prop_assert_eq!(name_family(&img), base);
            prop_assert_eq!(is_roof(&img), base.r);
        }
    }
}
