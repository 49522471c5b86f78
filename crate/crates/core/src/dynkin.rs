//! Marked Dynkin diagrams: text grammar, graph model and node surgery.
//!
//! Grammar (no whitespace):
//!
//! ```text
//! diagram := factor ("*" factor)? ":" marks
//! factor  := letter rank
//! marks   := index ("," index)*
//! ```
//!
//! Mark indices are global and 1-based, continuing across the `*` join, so
//! `A2*A2:1,4` marks the first node of the first factor and the last node of
//! the second. `B2` is accepted on input and rewritten to `C2` with its two
//! nodes exchanged; the canonical form sorts marks.
//!
//! Arrows point from the long-root node to the short-root node.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::root_system::{CartanMatrix, SimpleType, TypeLetter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    /// The long end of a multiple bond.
    pub long: Option<usize>,
}

impl Edge {
    /// `(from, to)` for multiple bonds, pointing long to short.
    pub fn arrow(&self) -> Option<(usize, usize)> {
        self.long.map(|l| {
            if l == self.a {
                (self.a, self.b)
            } else {
                (self.b, self.a)
            }
        })
    }
}

/// A (possibly residual) Dynkin diagram: the surviving nodes of an ambient
/// diagram built from one or two simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    factors: Vec<SimpleType>,
    ambient: CartanMatrix,
    nodes: BTreeSet<usize>,
}

impl Diagram {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() || factors.len() > 2 {
            return Err(Error::FactorCount(factors.len()));
        }
        let blocks: Vec<_> = factors.iter().map(SimpleType::cartan).collect();
        let ambient = CartanMatrix::direct_sum(&blocks);
        let nodes = (1..=ambient.rank()).collect();
        Ok(Diagram {
            factors,
            ambient,
            nodes,
        })
    }

    pub fn simple(t: SimpleType) -> Self {
        Diagram::new(vec![t]).expect("one factor")
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    /// Rank of the ambient diagram, removed nodes included.
    pub fn total_rank(&self) -> usize {
        self.ambient.rank()
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.contains(&node)
    }

    pub fn is_full(&self) -> bool {
        self.nodes.len() == self.total_rank()
    }

    /// Factor index and 1-based position inside that factor.
    pub fn factor_of(&self, node: usize) -> Option<(usize, usize)> {
        let mut off = 0;
        for (k, f) in self.factors.iter().enumerate() {
            if node > off && node <= off + f.rank() {
                return Some((k, node - off));
            }
            off += f.rank();
        }
        None
    }

    fn ambient_entry(&self, i: usize, j: usize) -> i64 {
        self.ambient.entry(i - 1, j - 1)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let nodes: Vec<usize> = self.nodes().collect();
        let mut out = Vec::new();
        for (k, &a) in nodes.iter().enumerate() {
            for &b in &nodes[k + 1..] {
                let ab = self.ambient_entry(a, b);
                let ba = self.ambient_entry(b, a);
                if ab == 0 {
                    continue;
                }
                let multiplicity = ab.abs().max(ba.abs()) as u8;
                let long = if multiplicity == 1 {
                    None
                } else if ab == -1 {
                    Some(a)
                } else {
                    Some(b)
                };
                out.push(Edge {
                    a,
                    b,
                    multiplicity,
                    long,
                });
            }
        }
        out
    }

    /// Cartan matrix on the surviving nodes, in increasing node order.
    pub fn cartan(&self) -> CartanMatrix {
        let idx: Vec<usize> = self.nodes().map(|n| n - 1).collect();
        self.ambient.restrict(&idx)
    }

    /// Rebuilds a Cartan matrix (rows in the order of `nodes`) from edges.
    pub fn cartan_from_edges(nodes: &[usize], edges: &[Edge]) -> CartanMatrix {
        let n = nodes.len();
        let pos = |g: usize| nodes.iter().position(|&x| x == g).expect("edge node");
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for e in edges {
            let (a, b) = (pos(e.a), pos(e.b));
            match e.arrow() {
                None => {
                    m[a][b] = -1;
                    m[b][a] = -1;
                }
                Some((l, s)) => {
                    let (l, s) = (pos(l), pos(s));
                    m[l][s] = -1;
                    m[s][l] = -(e.multiplicity as i64);
                }
            }
        }
        CartanMatrix::from_rows(m)
    }

    pub fn remove_node(&self, node: usize) -> Result<Diagram> {
        if !self.contains(node) {
            return Err(Error::MissingNode(node));
        }
        let mut d = self.clone();
        d.nodes.remove(&node);
        Ok(d)
    }

    pub fn remove_nodes(&self, nodes: &BTreeSet<usize>) -> Result<Diagram> {
        let mut d = self.clone();
        for &n in nodes {
            d = d.remove_node(n)?;
        }
        Ok(d)
    }

    /// Connected components as sorted node lists, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.nodes() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in self.nodes() {
                    if !seen.contains(&w) && self.ambient_entry(v, w) != 0 {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn classify_components(&self) -> Result<Vec<ComponentShape>> {
        self.components()
            .iter()
            .map(|c| self.classify_component(c))
            .collect()
    }

    /// Identifies one connected node set as a simple type with an explicit
    /// Bourbaki-position map.
    pub fn classify_component(&self, comp: &[usize]) -> Result<ComponentShape> {
        let idx: Vec<usize> = comp.iter().map(|n| n - 1).collect();
        let local = self.ambient.restrict(&idx);
        let n = comp.len();
        for letter in [
            TypeLetter::A,
            TypeLetter::B,
            TypeLetter::C,
            TypeLetter::D,
            TypeLetter::E,
            TypeLetter::F,
            TypeLetter::G,
        ] {
            let Ok(ty) = SimpleType::new(letter, n) else {
                continue;
            };
            let target = ty.cartan();
            let embeddings = embeddings(&target, &local);
            let best = if letter == TypeLetter::D {
                embeddings
                    .into_iter()
                    .map(|e| e.iter().map(|&i| comp[i]).collect::<Vec<_>>())
                    .min_by_key(|e| (e[n - 2], e.clone()))
            } else {
                embeddings
                    .into_iter()
                    .map(|e| e.iter().map(|&i| comp[i]).collect::<Vec<_>>())
                    .min()
            };
            if let Some(embedding) = best {
                return Ok(ComponentShape { ty, embedding });
            }
        }
        Err(Error::UnrecognizedComponent(comp.to_vec()))
    }

    /// The connected component containing `node`.
    pub fn component_of(&self, node: usize) -> Option<Vec<usize>> {
        self.components().into_iter().find(|c| c.contains(&node))
    }
}

/// All bijections `pos -> local index` with `target[p][q] == local[e[p]][e[q]]`.
fn embeddings(target: &CartanMatrix, local: &CartanMatrix) -> Vec<Vec<usize>> {
    fn extend(
        target: &CartanMatrix,
        local: &CartanMatrix,
        partial: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let p = partial.len();
        if p == target.rank() {
            out.push(partial.clone());
            return;
        }
        for cand in 0..local.rank() {
            if used[cand] {
                continue;
            }
            let consistent = partial.iter().enumerate().all(|(q, &lq)| {
                target.entry(p, q) == local.entry(cand, lq)
                    && target.entry(q, p) == local.entry(lq, cand)
            });
            if consistent {
                used[cand] = true;
                partial.push(cand);
                extend(target, local, partial, used, out);
                partial.pop();
                used[cand] = false;
            }
        }
    }
    let mut out = Vec::new();
    if target.rank() == local.rank() {
        let mut used = vec![false; local.rank()];
        extend(target, local, &mut Vec::new(), &mut used, &mut out);
    }
    out
}

/// A connected component recognised as a simple type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentShape {
    pub ty: SimpleType,
    /// `embedding[p - 1]` is the global node at Bourbaki position `p`.
    pub embedding: Vec<usize>,
}

impl ComponentShape {
    /// 1-based Bourbaki position of a global node.
    pub fn position_of(&self, node: usize) -> Option<usize> {
        self.embedding
            .iter()
            .position(|&g| g == node)
            .map(|p| p + 1)
    }

    pub fn contains(&self, node: usize) -> bool {
        self.embedding.contains(&node)
    }
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.embedding.iter().map(|n| n.to_string()).collect();
        write!(f, "{}{{{}}}", self.ty, nodes.join(","))
    }
}

/// A diagram together with its marked node set `I`; the diagram of `G/P(I)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedDiagram {
    diagram: Diagram,
    marks: BTreeSet<usize>,
}

impl MarkedDiagram {
    pub fn new(diagram: Diagram, marks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in marks {
            if m == 0 || m > diagram.total_rank() {
                return Err(Error::NodeOutOfRange {
                    node: m,
                    max: diagram.total_rank(),
                });
            }
            if !diagram.contains(m) {
                return Err(Error::MissingNode(m));
            }
            if !set.insert(m) {
                return Err(Error::DuplicateMark(m));
            }
        }
        if set.is_empty() {
            return Err(Error::NoMarks);
        }
        Ok(MarkedDiagram {
            diagram,
            marks: set,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).marked_diagram()
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn mark_list(&self) -> Vec<usize> {
        self.marks.iter().copied().collect()
    }

    pub fn with_marks(&self, marks: impl IntoIterator<Item = usize>) -> Result<Self> {
        MarkedDiagram::new(self.diagram.clone(), marks)
    }

    /// Drops every component carrying no mark. Returns the pruned diagram and
    /// the dropped components (each contributes a point).
    pub fn split_unmarked(&self) -> Result<(MarkedDiagram, Vec<ComponentShape>)> {
        let mut dropped = Vec::new();
        let mut drop_nodes = BTreeSet::new();
        for comp in self.diagram.components() {
            if comp.iter().all(|n| !self.marks.contains(n)) {
                dropped.push(self.diagram.classify_component(&comp)?);
                drop_nodes.extend(comp);
            }
        }
        let diagram = self.diagram.remove_nodes(&drop_nodes)?;
        Ok((
            MarkedDiagram {
                diagram,
                marks: self.marks.clone(),
            },
            dropped,
        ))
    }

    /// Images under diagram automorphisms: chain reversal of `A_n`, fork
    /// permutations of `D_n` (all of `S_3` for `D_4`), the `E_6` flip, and
    /// reordering of the two factors. Only defined for full diagrams.
    pub fn automorphic_images(&self) -> Vec<MarkedDiagram> {
        assert!(self.diagram.is_full(), "automorphisms of residual diagram");
        let factors = self.diagram.factors();
        let per_factor: Vec<Vec<Vec<usize>>> =
            factors.iter().map(|f| factor_automorphisms(*f)).collect();
        let offsets: Vec<usize> = factors
            .iter()
            .scan(0, |acc, f| {
                let o = *acc;
                *acc += f.rank();
                Some(o)
            })
            .collect();
        let mut choices: Vec<Vec<usize>> = vec![vec![]];
        for autos in &per_factor {
            choices = choices
                .into_iter()
                .flat_map(|c| {
                    (0..autos.len()).map(move |k| {
                        let mut c = c.clone();
                        c.push(k);
                        c
                    })
                })
                .collect();
        }
        let orders: Vec<Vec<usize>> = if factors.len() == 2 {
            vec![vec![0, 1], vec![1, 0]]
        } else {
            vec![vec![0]]
        };
        let mut out = Vec::new();
        for choice in &choices {
            for order in &orders {
                let new_factors: Vec<SimpleType> = order.iter().map(|&k| factors[k]).collect();
                let mut new_offset = vec![0; factors.len()];
                let mut acc = 0;
                for &k in order {
                    new_offset[k] = acc;
                    acc += factors[k].rank();
                }
                let marks = self.marks.iter().map(|&m| {
                    let (k, pos) = self.diagram.factor_of(m).expect("mark in range");
                    debug_assert_eq!(m, offsets[k] + pos);
                    let image = per_factor[k][choice[k]][pos - 1];
                    new_offset[k] + image
                });
                let d = Diagram::new(new_factors).expect("same factors");
                out.push(MarkedDiagram::new(d, marks).expect("automorphism keeps marks valid"));
            }
        }
        out.sort_by_key(|m| m.to_string());
        out.dedup();
        out
    }

    /// Smallest serialisation over the automorphism orbit.
    pub fn orbit_key(&self) -> String {
        self.automorphic_images()
            .iter()
            .map(|m| m.to_string())
            .min()
            .expect("orbit contains self")
    }
}

/// Position permutations (`perm[p - 1]` = image of `p`) of one simple factor.
fn factor_automorphisms(t: SimpleType) -> Vec<Vec<usize>> {
    let n = t.rank();
    let id: Vec<usize> = (1..=n).collect();
    match t.letter() {
        TypeLetter::A if n >= 2 => vec![id.clone(), (1..=n).rev().collect()],
        TypeLetter::D if n == 4 => {
            let legs = [1usize, 3, 4];
            let mut out = Vec::new();
            for &a in &legs {
                for &b in &legs {
                    for &c in &legs {
                        if a != b && b != c && a != c {
                            out.push(vec![a, 2, b, c]);
                        }
                    }
                }
            }
            out
        }
        TypeLetter::D => {
            let mut swap = id.clone();
            swap.swap(n - 2, n - 1);
            vec![id, swap]
        }
        TypeLetter::E if n == 6 => vec![id, vec![6, 2, 5, 4, 3, 1]],
        _ => vec![id],
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        if self.diagram.is_full() {
            let factors: Vec<String> = self
                .diagram
                .factors()
                .iter()
                .map(|t| t.to_string())
                .collect();
            write!(f, "{}:{}", factors.join("*"), marks.join(","))
        } else {
            let comps: Vec<String> = match self.diagram.classify_components() {
                Ok(c) => c.iter().map(|c| c.to_string()).collect(),
                Err(_) => self
                    .diagram
                    .components()
                    .iter()
                    .map(|c| format!("?{c:?}"))
                    .collect(),
            };
            let body = if comps.is_empty() {
                "empty".to_string()
            } else {
                comps.join("+")
            };
            write!(f, "{}:{}", body, marks.join(","))
        }
    }
}

impl FromStr for MarkedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MarkedDiagram::parse(s)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a decimal number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Syntax {
            column: start + 1,
            message: "number too large".into(),
        })
    }

    /// Returns the factor and whether it was written as `B2`.
    fn factor(&mut self) -> Result<(SimpleType, bool)> {
        let c = match self.peek() {
            Some(c) if c.is_ascii_uppercase() => c,
            Some(_) => return Err(self.syntax("expected a type letter")),
            None => return Err(self.syntax("unexpected end of input, expected a type letter")),
        };
        let letter = TypeLetter::from_char(c)?;
        self.pos += 1;
        let rank = self.number()?;
        if letter == TypeLetter::B && rank == 2 {
            return Ok((SimpleType::new(TypeLetter::C, 2)?, true));
        }
        Ok((SimpleType::new(letter, rank)?, false))
    }

    fn marked_diagram(&mut self) -> Result<MarkedDiagram> {
        let mut factors = vec![self.factor()?];
        if self.peek() == Some('*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        match self.peek() {
            Some(':') => self.pos += 1,
            Some('*') => return Err(self.syntax("at most two factors are supported")),
            Some(_) => return Err(self.syntax("expected '*', ':' or end of input")),
            None => return Err(Error::NoMarks),
        }
        let mut raw = vec![self.number()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            raw.push(self.number()?);
        }
        if self.peek().is_some() {
            return Err(self.syntax("unexpected trailing input"));
        }
        let total: usize = factors.iter().map(|(t, _)| t.rank()).sum();
        // B2 -> C2 exchanges the two nodes of that factor.
        let mut offset = 0;
        let mut relabel: Vec<usize> = (0..=total).collect();
        for (t, was_b2) in &factors {
            if *was_b2 {
                relabel.swap(offset + 1, offset + 2);
            }
            offset += t.rank();
        }
        let mut seen = BTreeSet::new();
        let mut marks = Vec::new();
        for m in raw {
            if m == 0 || m > total {
                return Err(Error::NodeOutOfRange {
                    node: m,
                    max: total,
                });
            }
            if !seen.insert(m) {
                return Err(Error::DuplicateMark(m));
            }
            marks.push(relabel[m]);
        }
        let diagram = Diagram::new(factors.into_iter().map(|(t, _)| t).collect())?;
        MarkedDiagram::new(diagram, marks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(s: &str) -> MarkedDiagram {
        MarkedDiagram::parse(s).unwrap()
    }

    fn shapes(d: &Diagram) -> Vec<String> {
        d.classify_components()
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect()
    }

    #[test]
    fn parse_examples() {
        let f = md("F4:2,3");
        assert_eq!(f.diagram().factors()[0].to_string(), "F4");
        assert_eq!(f.mark_list(), vec![2, 3]);

        let aa = md("A2*A2:1,4");
        assert_eq!(aa.diagram().factors().len(), 2);
        assert_eq!(aa.mark_list(), vec![1, 4]);
        assert_eq!(aa.diagram().factor_of(4), Some((1, 2)));

        let err = MarkedDiagram::parse("D3:1").unwrap_err();
        assert!(err.to_string().contains("A3"), "{err}");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            MarkedDiagram::parse("Z9:1").unwrap_err(),
            Error::UnknownLetter('Z')
        );
        assert!(matches!(
            MarkedDiagram::parse("A4:1, 2"),
            Err(Error::Syntax { column: 6, .. })
        ));
        assert!(matches!(
            MarkedDiagram::parse("A4:5"),
            Err(Error::NodeOutOfRange { node: 5, max: 4 })
        ));
        assert_eq!(
            MarkedDiagram::parse("A4:2,2").unwrap_err(),
            Error::DuplicateMark(2)
        );
        assert_eq!(MarkedDiagram::parse("A4").unwrap_err(), Error::NoMarks);
        assert!(matches!(
            MarkedDiagram::parse("A1*A1*A1:1"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            MarkedDiagram::parse("a4:1"),
            Err(Error::Syntax { column: 1, .. })
        ));
        assert!(matches!(
            MarkedDiagram::parse("A4:"),
            Err(Error::Syntax { column: 4, .. })
        ));
    }

    #[test]
    fn canonical_serialisation() {
        assert_eq!(md("A4:4,1").to_string(), "A4:1,4");
        assert_eq!(md("B2:1").to_string(), "C2:2");
        assert_eq!(md("A1*B2:1,3").to_string(), "A1*C2:1,2");
    }

    #[test]
    fn remove_node_examples() {
        let a3 = Diagram::simple(SimpleType::new(TypeLetter::A, 3).unwrap());
        assert_eq!(shapes(&a3.remove_node(2).unwrap()), ["A1{1}", "A1{3}"]);

        let f4 = Diagram::simple(SimpleType::new(TypeLetter::F, 4).unwrap());
        assert_eq!(shapes(&f4.remove_node(2).unwrap()), ["A1{1}", "A2{3,4}"]);

        let d4 = Diagram::simple(SimpleType::new(TypeLetter::D, 4).unwrap());
        assert_eq!(
            shapes(&d4.remove_node(2).unwrap()),
            ["A1{1}", "A1{3}", "A1{4}"]
        );
        assert_eq!(d4.remove_node(5).unwrap_err(), Error::MissingNode(5));
        let removed = d4.remove_node(2).unwrap();
        assert_eq!(removed.remove_node(2).unwrap_err(), Error::MissingNode(2));
    }

    #[test]
    fn classify_residuals() {
        let c4 = Diagram::simple(SimpleType::new(TypeLetter::C, 4).unwrap());
        assert_eq!(shapes(&c4.remove_node(4).unwrap()), ["A3{1,2,3}"]);

        let f4 = Diagram::simple(SimpleType::new(TypeLetter::F, 4).unwrap());
        let res = f4.remove_node(1).unwrap().classify_components().unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].ty.to_string(), "C3");
        assert_eq!(res[0].embedding, vec![4, 3, 2]);

        let res = f4.remove_node(4).unwrap().classify_components().unwrap();
        assert_eq!(res[0].ty.to_string(), "B3");
        assert_eq!(res[0].embedding, vec![1, 2, 3]);

        // residual double bond of rank two is reported as C2, short end first
        let b3 = Diagram::simple(SimpleType::new(TypeLetter::B, 3).unwrap());
        let res = b3.remove_node(1).unwrap().classify_components().unwrap();
        assert_eq!(res[0].ty.to_string(), "C2");
        assert_eq!(res[0].embedding, vec![3, 2]);
    }

    #[test]
    fn d_residual_prefers_small_fork_index() {
        let d6 = Diagram::simple(SimpleType::new(TypeLetter::D, 6).unwrap());
        let res = d6.remove_node(1).unwrap().classify_components().unwrap();
        assert_eq!(res[0].ty.to_string(), "D5");
        assert_eq!(res[0].embedding, vec![2, 3, 4, 5, 6]);
        let e7 = Diagram::simple(SimpleType::new(TypeLetter::E, 7).unwrap());
        let res = e7.remove_node(7).unwrap().classify_components().unwrap();
        assert_eq!(res[0].ty.to_string(), "E6");
        let res = e7.remove_node(1).unwrap().classify_components().unwrap();
        assert_eq!(res[0].ty.to_string(), "D6");
        assert_eq!(res[0].embedding, vec![7, 6, 5, 4, 2, 3]);
    }

    #[test]
    fn arrows_point_long_to_short() {
        let arrows = |t: TypeLetter, n: usize| -> Vec<(usize, usize)> {
            Diagram::simple(SimpleType::new(t, n).unwrap())
                .edges()
                .iter()
                .filter_map(|e| e.arrow())
                .collect()
        };
        assert_eq!(arrows(TypeLetter::B, 4), [(3, 4)]);
        assert_eq!(arrows(TypeLetter::C, 4), [(4, 3)]);
        assert_eq!(arrows(TypeLetter::F, 4), [(2, 3)]);
        assert_eq!(arrows(TypeLetter::G, 2), [(1, 2)]);
    }

    #[test]
    fn split_unmarked_drops_point_components() {
        let f = md("F4:2,3");
        let fiber = MarkedDiagram::new(f.diagram().remove_node(3).unwrap(), [2]).unwrap();
        let (kept, dropped) = fiber.split_unmarked().unwrap();
        assert_eq!(kept.to_string(), "A2{1,2}:2");
        assert_eq!(dropped.len(), 1);
        assert_eq!(dropped[0].to_string(), "A1{4}");
    }

    #[test]
    fn automorphic_images() {
        let d4 = md("D4:3,4");
        let imgs: Vec<String> = d4
            .automorphic_images()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(imgs, ["D4:1,3", "D4:1,4", "D4:3,4"]);
        let aa = md("A2*A2:1,4");
        assert_eq!(aa.orbit_key(), "A2*A2:1,3");
        let mixed = md("C2*A3:1,3");
        assert_eq!(mixed.orbit_key(), "A3*C2:1,4");
    }
}
