//! Invariants of rational homogeneous varieties `G/P(I)` read off marked
//! Dynkin diagrams.
//!
//! With `Φ+` the positive roots and `Φ+_L` those supported on unmarked nodes:
//!
//! * `dim G/P(I) = |Φ+| - |Φ+_L|`
//! * `-K = Σ_{i ∈ I} <σ, α_i^∨> ω_i` where `σ` is the sum of `Φ+ \ Φ+_L`
//! * the Picard number is `|I|`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dynkin::{ComponentShape, MarkedDiagram};
use crate::error::{Error, Result};
use crate::root_system::{positive_roots, TypeLetter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyInvariants {
    pub dim: u64,
    pub picard: usize,
    /// Coefficient of `ω_i` in `-K`, keyed by mark.
    pub index_vector: BTreeMap<usize, i64>,
}

impl VarietyInvariants {
    pub fn index_entries(&self) -> Vec<i64> {
        self.index_vector.values().copied().collect()
    }

    /// Fano index of a Picard-rank-one variety.
    pub fn index(&self) -> Option<i64> {
        match self.index_entries().as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }

    /// Largest `r` with `-K = r H` for an integral class `H`: the gcd of the
    /// coefficient vector, since the `ω_i` form a basis of the Picard group.
    pub fn divisibility(&self) -> i64 {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        self.index_vector.values().fold(0, |g, &c| gcd(g, c))
    }
}

pub fn gp_invariants(md: &MarkedDiagram) -> VarietyInvariants {
    let diagram = md.diagram();
    let nodes: Vec<usize> = diagram.nodes().collect();
    let cartan = diagram.cartan();
    let roots = positive_roots(&cartan);
    let marked: Vec<(usize, usize)> = md
        .marks()
        .iter()
        .map(|m| (*m, nodes.iter().position(|n| n == m).expect("mark present")))
        .collect();
    let mut sigma = vec![0i64; nodes.len()];
    let mut outside = 0u64;
    for r in &roots {
        if marked.iter().any(|&(_, k)| r[k] != 0) {
            outside += 1;
            for (s, c) in sigma.iter_mut().zip(r) {
                *s += c;
            }
        }
    }
    let index_vector = marked
        .iter()
        .map(|&(m, k)| (m, cartan.pair(&sigma, k)))
        .collect();
    VarietyInvariants {
        dim: outside,
        picard: md.marks().len(),
        index_vector,
    }
}

/// `Some(r)` iff `G/P` is `P^{r-1}`. Unmarked components are points and are
/// ignored; the single marked component must be `A_m` marked at an end
/// (`P^m`) or `C_m` marked at its short end, position 1 (`P^{2m-1}`).
pub fn is_projective_space(md: &MarkedDiagram) -> Option<u32> {
    let (kept, _) = md.split_unmarked().ok()?;
    if kept.marks().len() != 1 {
        return None;
    }
    let mark = *kept.marks().iter().next()?;
    let shapes = kept.diagram().classify_components().ok()?;
    let [shape] = shapes.as_slice() else {
        return None;
    };
    projective_template(shape, mark)
}

fn projective_template(shape: &ComponentShape, mark: usize) -> Option<u32> {
    let m = shape.ty.rank() as u32;
    let pos = shape.position_of(mark)? as u32;
    match shape.ty.letter() {
        TypeLetter::A if pos == 1 || pos == m => Some(m + 1),
        TypeLetter::C if pos == 1 => Some(2 * m),
        _ => None,
    }
}

/// Fiber of `G/P({i, j}) -> G/P({keep})`: the diagram with `keep` removed,
/// marked at the other mark.
pub fn fibration_fiber(md: &MarkedDiagram, keep: usize) -> Result<MarkedDiagram> {
    if md.marks().len() != 2 {
        return Err(Error::MarkCount {
            expected: 2,
            got: md.marks().len(),
        });
    }
    if !md.marks().contains(&keep) {
        return Err(Error::NotAMark(keep));
    }
    let other = *md.marks().iter().find(|&&m| m != keep).expect("two marks");
    MarkedDiagram::new(md.diagram().remove_node(keep)?, [other])
}

/// A fiber with its point components split off.
#[derive(Debug, Clone)]
pub struct FiberReport {
    pub keep: usize,
    pub fiber: MarkedDiagram,
    pub dropped: Vec<ComponentShape>,
    pub invariants: VarietyInvariants,
    pub projective_r: Option<u32>,
}

pub fn fiber_report(md: &MarkedDiagram, keep: usize) -> Result<FiberReport> {
    let fiber = fibration_fiber(md, keep)?;
    let (kept, dropped) = fiber.split_unmarked()?;
    Ok(FiberReport {
        keep,
        invariants: gp_invariants(&kept),
        projective_r: is_projective_space(&kept),
        fiber: kept,
        dropped,
    })
}
