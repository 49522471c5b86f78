use std::fmt;

use serde::{Serialize, Serializer};

use crate::dynkin::{Diagram, MarkedDiagram};
use crate::homog::is_projective_space;
use crate::root_system::{SimpleType, TypeLetter};

/// The eight known roof families, plus `Unknown`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `P^{r-1} x P^{r-1}`.
    ProductA,
    /// `Fl(1, r; r+1)`.
    MukaiA,
    /// `Fl(r-1, r; 2r-1)`, `r >= 3`.
    GrassmannA,
    /// Isotropic flags `(r-1, r)` in `C^{3r-2}`, `r` even.
    SymplecticC,
    /// `OG(r-1; 2r)`, `r >= 4`.
    OrthogonalD,
    F4,
    G2,
    /// The non-homogeneous roof over `Q^5`.
    G2Dagger,
    Unknown,
}

impl Family {
    pub const KNOWN: [Family; 8] = [
        Family::ProductA,
        Family::MukaiA,
        Family::GrassmannA,
        Family::SymplecticC,
        Family::OrthogonalD,
        Family::F4,
        Family::G2,
        Family::G2Dagger,
    ];

    pub fn schema_label(&self) -> &'static str {
        match self {
            Family::ProductA => "A_{r-1}xA_{r-1}",
            Family::MukaiA => "A_r^M",
            Family::GrassmannA => "A_{2r-2}^G",
            Family::SymplecticC => "C_{3r/2-1}",
            Family::OrthogonalD => "D_r",
            Family::F4 => "F_4",
            Family::G2 => "G_2",
            Family::G2Dagger => "G_2^dagger",
            Family::Unknown => "unknown",
        }
    }

    /// Label of the member with fibers `P^{r-1}`, e.g. `A4^G` for `r = 3`.
    pub fn instance_label(&self, r: u32) -> String {
        match self {
            Family::ProductA => format!("A{}xA{}", r - 1, r - 1),
            Family::MukaiA => format!("A{r}^M"),
            Family::GrassmannA => format!("A{}^G", 2 * r - 2),
            Family::SymplecticC => format!("C{}", (3 * r / 2).saturating_sub(1)),
            Family::OrthogonalD => format!("D{r}"),
            Family::F4 => "F4".into(),
            Family::G2 => "G2".into(),
            Family::G2Dagger => "G2^dagger".into(),
            Family::Unknown => "unknown".into(),
        }
    }

    pub fn latex_label(&self, r: u32) -> String {
        match self {
            Family::ProductA => format!("$A_{{{}}}\\times A_{{{}}}$", r - 1, r - 1),
            Family::MukaiA => format!("$A_{{{r}}}^M$"),
            Family::GrassmannA => format!("$A_{{{}}}^G$", 2 * r - 2),
            Family::SymplecticC => format!("$C_{{{}}}$", (3 * r / 2).saturating_sub(1)),
            Family::OrthogonalD => format!("$D_{{{r}}}$"),
            Family::F4 => "$F_4$".into(),
            Family::G2 => "$G_2$".into(),
            Family::G2Dagger => "$G_2^\\dagger$".into(),
            Family::Unknown => "unknown".into(),
        }
    }

    pub fn admits(&self, r: u32) -> bool {
        match self {
            Family::ProductA | Family::MukaiA => r >= 2,
            Family::GrassmannA => r >= 3,
            Family::SymplecticC => r >= 2 && r.is_multiple_of(2),
            Family::OrthogonalD => r >= 4,
            Family::F4 | Family::G2Dagger => r == 3,
            Family::G2 => r == 2,
            Family::Unknown => false,
        }
    }

    /// The one admissible `r` of a sporadic family.
    pub fn fixed_r(&self) -> Option<u32> {
        match self {
            Family::F4 | Family::G2Dagger => Some(3),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    /// The standard marked diagram of the member with parameter `r`.
    pub fn schema_diagram(&self, r: u32) -> Option<MarkedDiagram> {
        if !self.admits(r) {
            return None;
        }
        let r = r as usize;
        let single = |letter, rank, marks: [usize; 2]| {
            let t = SimpleType::new(letter, rank).ok()?;
            MarkedDiagram::new(Diagram::simple(t), marks).ok()
        };
        match self {
            Family::ProductA => {
                let t = SimpleType::new(TypeLetter::A, r - 1).ok()?;
                let d = Diagram::new(vec![t, t]).ok()?;
                MarkedDiagram::new(d, [1, 2 * r - 2]).ok()
            }
            Family::MukaiA => single(TypeLetter::A, r, [1, r]),
            Family::GrassmannA => single(TypeLetter::A, 2 * r - 2, [r - 1, r]),
            Family::SymplecticC => single(TypeLetter::C, 3 * r / 2 - 1, [r - 1, r]),
            Family::OrthogonalD => single(TypeLetter::D, r, [r - 1, r]),
            Family::F4 => single(TypeLetter::F, 4, [2, 3]),
            Family::G2 => single(TypeLetter::G, 2, [1, 2]),
            Family::G2Dagger | Family::Unknown => None,
        }
    }

    /// Closed form of `(dim V_i, index V_1, index V_2)`.
    pub fn expected_triple(&self, r: u32) -> Option<(u64, i64, i64)> {
        if !self.admits(r) {
            return None;
        }
        let (ru, ri) = (r as u64, r as i64);
        Some(match self {
            Family::ProductA => (ru - 1, ri, ri),
            Family::MukaiA => (ru, ri + 1, ri + 1),
            Family::GrassmannA => (ru * (ru - 1), 2 * ri - 1, 2 * ri - 1),
            Family::SymplecticC => (3 * ru * (ru - 1) / 2, 2 * ri, 2 * ri - 1),
            Family::OrthogonalD => (ru * (ru - 1) / 2, 2 * ri - 2, 2 * ri - 2),
            Family::F4 => (20, 5, 7),
            Family::G2 => (5, 3, 5),
            Family::G2Dagger => (5, 5, 5),
            Family::Unknown => return None,
        })
    }

    /// Standard name of the roof variety.
    pub fn variety_name(&self, r: u32) -> String {
        match self {
            Family::ProductA => format!("P^{} x P^{}", r - 1, r - 1),
            Family::MukaiA => format!("Fl(1,{r};{}) = P(T_P^{r})", r + 1),
            Family::GrassmannA => format!("Fl({},{r};{})", r - 1, 2 * r - 1),
            Family::SymplecticC => format!("SFl({},{r};{})", r - 1, 3 * r - 2),
            Family::OrthogonalD => format!("OG({};{})", r - 1, 2 * r),
            Family::F4 => "F4/P(2,3)".into(),
            Family::G2 => "G2/B".into(),
            Family::G2Dagger => "P(G) over Q^5".into(),
            Family::Unknown => String::new(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.schema_label())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.schema_label())
    }
}

/// Result of matching a marked diagram against the family schemata.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyMatch {
    pub family: Family,
    pub r: Option<u32>,
}

impl FamilyMatch {
    const UNKNOWN: FamilyMatch = FamilyMatch {
        family: Family::Unknown,
        r: None,
    };
}

/// Names the family of a full two-marked diagram, up to diagram
/// automorphisms. Products of two projective spaces count as
/// `A_{r-1} x A_{r-1}` whichever factor types present them (`C_m` marked at
/// node 1 is `P^{2m-1}`).
pub fn name_family(md: &MarkedDiagram) -> FamilyMatch {
    if !md.diagram().is_full() || md.marks().len() != 2 {
        return FamilyMatch::UNKNOWN;
    }
    let factors = md.diagram().factors();
    if factors.len() == 2 {
        let marks = md.mark_list();
        let (k0, _) = md.diagram().factor_of(marks[0]).expect("mark in range");
        let (k1, _) = md.diagram().factor_of(marks[1]).expect("mark in range");
        if k0 == k1 {
            return FamilyMatch::UNKNOWN;
        }
        let r0 = md
            .with_marks([marks[0]])
            .ok()
            .and_then(|m| is_projective_space(&m));
        let r1 = md
            .with_marks([marks[1]])
            .ok()
            .and_then(|m| is_projective_space(&m));
        return match (r0, r1) {
            (Some(a), Some(b)) if a == b && a >= 2 => FamilyMatch {
                family: Family::ProductA,
                r: Some(a),
            },
            _ => FamilyMatch::UNKNOWN,
        };
    }
    let images = md.automorphic_images();
    let max_r = 2 * factors[0].rank() as u32 + 2;
    for family in Family::KNOWN {
        for r in 2..=max_r {
            if let Some(schema) = family.schema_diagram(r) {
                if images.contains(&schema) {
                    return FamilyMatch { family, r: Some(r) };
                }
            }
        }
    }
    FamilyMatch::UNKNOWN
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> (Family, Option<u32>) {
        let m = name_family(&MarkedDiagram::parse(s).unwrap());
        (m.family, m.r)
    }

    #[test]
    fn naming_examples() {
        assert_eq!(name("A6:3,4"), (Family::GrassmannA, Some(4)));
        assert_eq!(name("D5:4,5"), (Family::OrthogonalD, Some(5)));
        assert_eq!(name("C5:3,4"), (Family::SymplecticC, Some(4)));
        assert_eq!(name("A2:1,2"), (Family::MukaiA, Some(2)));
        assert_eq!(name("A2*A2:1,3"), (Family::ProductA, Some(3)));
        assert_eq!(name("C2*C2:1,3"), (Family::ProductA, Some(4)));
        assert_eq!(name("D4:1,3"), (Family::OrthogonalD, Some(4)));
        assert_eq!(name("A4:1,3"), (Family::Unknown, None));
        assert_eq!(name("A4:1"), (Family::Unknown, None));
    }

    #[test]
    fn schema_diagrams_serialise() {
        let s = |f: Family, r| f.schema_diagram(r).map(|m| m.to_string());
        assert_eq!(s(Family::ProductA, 3).as_deref(), Some("A2*A2:1,4"));
        assert_eq!(s(Family::SymplecticC, 2).as_deref(), Some("C2:1,2"));
        assert_eq!(s(Family::SymplecticC, 3), None);
        assert_eq!(s(Family::OrthogonalD, 3), None);
        assert_eq!(s(Family::G2Dagger, 3), None);
    }

    #[test]
    fn labels() {
        assert_eq!(Family::SymplecticC.instance_label(4), "C5");
        assert_eq!(Family::ProductA.instance_label(2), "A1xA1");
        assert_eq!(Family::GrassmannA.instance_label(3), "A4^G");
    }
}
