use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::family::Family;

/// Constraint on the fiber parameter `r` attached to a family in a
/// classification result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RConstraint {
    Any,
    Exactly(u32),
    AtMost(u32),
}

impl RConstraint {
    fn contains(&self, r: u32) -> bool {
        match *self {
            RConstraint::Any => true,
            RConstraint::Exactly(e) => r == e,
            RConstraint::AtMost(m) => r <= m,
        }
    }

    fn meet(self, other: RConstraint) -> Option<RConstraint> {
        use RConstraint::*;
        match (self, other) {
            (Any, c) | (c, Any) => Some(c),
            (Exactly(a), b) | (b, Exactly(a)) => b.contains(a).then_some(Exactly(a)),
            (AtMost(a), AtMost(b)) => Some(AtMost(a.min(b))),
        }
    }

    /// Restricts to the values `family` admits; `None` if nothing is left,
    /// and a single surviving value becomes `Exactly`.
    fn normalise(self, family: Family) -> Option<RConstraint> {
        if let Some(r) = family.fixed_r() {
            return self.contains(r).then_some(RConstraint::Exactly(r));
        }
        match self {
            RConstraint::Any => Some(self),
            RConstraint::Exactly(r) => family.admits(r).then_some(self),
            RConstraint::AtMost(m) => {
                let allowed: Vec<u32> = (2..=m).filter(|&r| family.admits(r)).collect();
                match allowed.as_slice() {
                    [] => None,
                    [r] => Some(RConstraint::Exactly(*r)),
                    _ => Some(self),
                }
            }
        }
    }
}

/// The four classification cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// Symplectic `X_i`: Mukai flops only.
    Symplectic,
    /// `r <= 2`.
    SmallCodim,
    /// `r >= dim Y - dim M - 2`.
    LargeCodim,
    /// `dim X <= 8`, equivalently `dim W <= 7`.
    SmallDim,
}

impl Rule {
    pub fn describe(&self) -> &'static str {
        match self {
            Rule::Symplectic => "symplectic: Mukai flop",
            Rule::SmallCodim => "r <= 2",
            Rule::LargeCodim => "r >= dim Y - dim M - 2",
            Rule::SmallDim => "dim X <= 8",
        }
    }

    fn families(&self) -> Vec<(Family, RConstraint)> {
        use RConstraint::*;
        match self {
            Rule::Symplectic => vec![(Family::MukaiA, Any)],
            Rule::SmallCodim => vec![
                (Family::ProductA, Exactly(2)),
                (Family::MukaiA, Exactly(2)),
                (Family::SymplecticC, Exactly(2)),
                (Family::G2, Exactly(2)),
            ],
            Rule::LargeCodim => vec![
                (Family::ProductA, Any),
                (Family::MukaiA, Any),
                (Family::SymplecticC, Exactly(2)),
                (Family::OrthogonalD, Exactly(4)),
                (Family::G2Dagger, Exactly(3)),
            ],
            Rule::SmallDim => vec![
                (Family::ProductA, AtMost(3)),
                (Family::MukaiA, AtMost(3)),
                (Family::SymplecticC, Exactly(2)),
                (Family::G2, Exactly(2)),
                (Family::G2Dagger, Exactly(3)),
            ],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

/// Numerical data of a simple K-equivalent map `X_1 ⇢ X_2` in codimension
/// `r`, blown up along `Y_i` with common base `M` of the roof bundles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassificationQuery {
    pub dim_x: Option<u64>,
    pub r: Option<u32>,
    /// `dim Y_i - dim M`, the dimension `n` of the fibers `V_i`.
    pub fiber_gap: Option<u64>,
    pub symplectic: bool,
}

impl ClassificationQuery {
    /// `dim W = n + r - 1` with `n = dim Y - dim M`.
    pub fn dim_w(&self) -> Option<u64> {
        Some(self.fiber_gap? + self.r? as u64 - 1)
    }

    pub fn applicable_rules(&self) -> Vec<Rule> {
        let mut rules = Vec::new();
        if self.symplectic {
            rules.push(Rule::Symplectic);
        }
        if self.r.is_some_and(|r| r <= 2) {
            rules.push(Rule::SmallCodim);
        }
        if let (Some(r), Some(n)) = (self.r, self.fiber_gap) {
            if r as i64 >= n as i64 - 2 {
                rules.push(Rule::LargeCodim);
            }
        }
        if self.dim_x.is_some_and(|d| d <= 8) || self.dim_w().is_some_and(|d| d <= 7) {
            rules.push(Rule::SmallDim);
        }
        rules
    }
}

/// A family in a classification result with its admissible `r` and the
/// rules that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    pub family: Family,
    pub r: RConstraint,
    pub rules: Vec<Rule>,
}

impl FamilyClass {
    pub fn label(&self) -> String {
        match self.r {
            RConstraint::Exactly(r) => self.family.instance_label(r),
            RConstraint::Any => self.family.schema_label().to_string(),
            RConstraint::AtMost(m) => format!("{} (r<={m})", self.family.schema_label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Families(Vec<FamilyClass>),
    /// No case applies to the query.
    NoClassification,
}

impl Classification {
    pub fn labels(&self) -> Option<Vec<String>> {
        match self {
            Classification::Families(f) => Some(f.iter().map(FamilyClass::label).collect()),
            Classification::NoClassification => None,
        }
    }
}

/// Intersects the family lists of every applicable rule, then keeps the
/// members compatible with the query's `r` and with each family's own
/// constraint on `r`.
pub fn classify_simple_kequiv(q: &ClassificationQuery) -> Classification {
    let rules = q.applicable_rules();
    let Some((first, rest)) = rules.split_first() else {
        return Classification::NoClassification;
    };
    let mut acc: BTreeMap<Family, RConstraint> = first.families().into_iter().collect();
    for rule in rest {
        let next: BTreeMap<Family, RConstraint> = rule.families().into_iter().collect();
        acc = acc
            .into_iter()
            .filter_map(|(f, c)| Some((f, c.meet(*next.get(&f)?)?)))
            .collect();
    }
    let wanted = q.r.map_or(RConstraint::Any, RConstraint::Exactly);
    let families = acc
        .into_iter()
        .filter_map(|(family, c)| {
            let r = c.meet(wanted)?.normalise(family)?;
            Some(FamilyClass {
                family,
                r,
                rules: rules.clone(),
            })
        })
        .collect();
    Classification::Families(families)
}
