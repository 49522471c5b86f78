//! Root systems of semisimple Dynkin types with at most two simple factors.
//!
//! Nodes follow Bourbaki numbering:
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `B_n`: path, double bond `n-1 => n`, `α_n` short.
//! * `C_n`: path, double bond `n <= n-1`, `α_n` long.
//! * `D_n`: path `1 - ... - n-2`, fork `n-2 - n-1` and `n-2 - n`.
//! * `E_n`: chain `1 - 3 - 4 - ... - n`, with `2` attached to `4`.
//! * `F_4`: `1 - 2 => 3 - 4`, `α_1, α_2` long.
//! * `G_2`: `1 => 2` with `α_1` long.
//!
//! The Cartan matrix is stored row-by-coroot: `cartan[i][j] = <α_j, α_i^∨>`.
//! Across a bond between a long node `l` and a short node `s` of
//! multiplicity `m`, `cartan[l][s] = -1` and `cartan[s][l] = -m`.
//!
//! Rank-two and rank-three coincidences are canonicalised: `C_n` is admitted
//! for `n >= 2`, `B_n` only for `n >= 3` (`B_2` is `C_2` with the nodes
//! swapped), `D_n` for `n >= 4`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn from_char(c: char) -> Result<Self> {
        Ok(match c {
            'A' => TypeLetter::A,
            'B' => TypeLetter::B,
            'C' => TypeLetter::C,
            'D' => TypeLetter::D,
            'E' => TypeLetter::E,
            'F' => TypeLetter::F,
            'G' => TypeLetter::G,
            other => return Err(Error::UnknownLetter(other)),
        })
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }
}

/// A simple Dynkin type in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    letter: TypeLetter,
    rank: usize,
}

impl SimpleType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        use TypeLetter::*;
        let inadmissible = |reason: &str| Error::InadmissibleType {
            letter: letter.as_char(),
            rank,
            reason: reason.to_string(),
        };
        let ok = match letter {
            A => rank >= 1,
            B => match rank {
                0 => return Err(inadmissible("rank must be positive")),
                1 => return Err(inadmissible("canonical form A1 required")),
                2 => return Err(inadmissible("canonical form C2 required")),
                _ => true,
            },
            C => match rank {
                0 => return Err(inadmissible("rank must be positive")),
                1 => return Err(inadmissible("canonical form A1 required")),
                _ => true,
            },
            D => match rank {
                0 => return Err(inadmissible("rank must be positive")),
                1 => return Err(inadmissible("D1 is not a root system")),
                2 => return Err(inadmissible("canonical form A1*A1 required")),
                3 => return Err(inadmissible("canonical form A3 required")),
                _ => true,
            },
            E => match rank {
                6..=8 => true,
                3 => return Err(inadmissible("canonical form A2*A1 required")),
                4 => return Err(inadmissible("canonical form A4 required")),
                5 => return Err(inadmissible("canonical form D5 required")),
                _ => return Err(inadmissible("E_n is of finite type only for n = 6, 7, 8")),
            },
            F => rank == 4,
            G => rank == 2,
        };
        if ok {
            Ok(SimpleType { letter, rank })
        } else {
            Err(inadmissible("not a finite-type Dynkin diagram"))
        }
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible simple type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        use TypeLetter::*;
        let mut out = Vec::new();
        for letter in [A, B, C, D, E, F, G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(letter, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Bonds in Bourbaki positions (1-based): `(i, j, multiplicity, long end)`.
    pub(crate) fn bonds(&self) -> Vec<(usize, usize, u8, Option<usize>)> {
        use TypeLetter::*;
        let n = self.rank;
        let path = |upto: usize| (1..upto).map(|k| (k, k + 1, 1u8, None)).collect::<Vec<_>>();
        match self.letter {
            A => path(n),
            B => {
                let mut b = path(n - 1);
                b.push((n - 1, n, 2, Some(n - 1)));
                b
            }
            C => {
                let mut b = path(n - 1);
                b.push((n - 1, n, 2, Some(n)));
                b
            }
            D => {
                let mut b = path(n - 1);
                b.push((n - 2, n, 1, None));
                b
            }
            E => {
                let mut b = vec![(1, 3, 1, None), (2, 4, 1, None)];
                b.extend((3..n).map(|k| (k, k + 1, 1, None)));
                b
            }
            F => vec![(1, 2, 1, None), (2, 3, 2, Some(2)), (3, 4, 1, None)],
            G => vec![(1, 2, 3, Some(1))],
        }
    }

    pub fn cartan(&self) -> CartanMatrix {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, mult, long) in self.bonds() {
            let (i, j) = (i - 1, j - 1);
            match long {
                None => {
                    m[i][j] = -1;
                    m[j][i] = -1;
                }
                Some(l) => {
                    let l = l - 1;
                    let s = if l == i { j } else { i };
                    m[l][s] = -1;
                    m[s][l] = -(mult as i64);
                }
            }
        }
        CartanMatrix(m)
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.letter, n) {
            (TypeLetter::A, _) => n * (n + 1) / 2,
            (TypeLetter::B, _) | (TypeLetter::C, _) => n * n,
            (TypeLetter::D, _) => n * (n - 1),
            (TypeLetter::E, 6) => 36,
            (TypeLetter::E, 7) => 63,
            (TypeLetter::E, 8) => 120,
            (TypeLetter::F, _) => 24,
            (TypeLetter::G, _) => 6,
            _ => unreachable!("inadmissible type constructed"),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

/// Square integer matrix with `m[i][j] = <α_j, α_i^∨>` (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
        CartanMatrix(rows)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[CartanMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rank()).sum();
        let mut m = vec![vec![0i64; n]; n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rank() {
                for j in 0..b.rank() {
                    m[off + i][off + j] = b.0[i][j];
                }
            }
            off += b.rank();
        }
        CartanMatrix(m)
    }

    /// Principal submatrix on the given 0-based indices, in that order.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        CartanMatrix(
            idx.iter()
                .map(|&i| idx.iter().map(|&j| self.0[i][j]).collect())
                .collect(),
        )
    }

    /// `<v, α_i^∨>` for a vector `v` in the simple-root basis.
    pub fn pair(&self, v: &[i64], i: usize) -> i64 {
        v.iter().zip(&self.0[i]).map(|(a, b)| a * b).sum()
    }
}

/// A root written in the simple-root basis.
pub type Root = Vec<i64>;

/// Sort key used for every root list: height, then coefficients in
/// descending order, so the simple roots come in node order.
fn root_order(a: &Root, b: &Root) -> std::cmp::Ordering {
    let ha: i64 = a.iter().sum();
    let hb: i64 = b.iter().sum();
    ha.cmp(&hb).then_with(|| b.cmp(a))
}

/// Positive roots of a finite-type Cartan matrix, built height by height
/// from α-strings: for a positive root `β ≠ α_i` with string
/// `β - pα_i, ..., β + qα_i`, `p - q = <β, α_i^∨>`, and `p` is read off the
/// roots already found at lower heights.
pub fn positive_roots(cartan: &CartanMatrix) -> Vec<Root> {
    let n = cartan.rank();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut found: HashSet<Root> = HashSet::new();
    let mut all: Vec<Root> = Vec::new();
    let mut level: Vec<Root> = (0..n).map(unit).collect();
    while !level.is_empty() {
        for r in &level {
            found.insert(r.clone());
        }
        let mut next: Vec<Root> = Vec::new();
        for beta in &level {
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !found.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - cartan.pair(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    all.sort_by(root_order);
    all
}

/// Pairings `<λ, α_i^∨>` of a weight with every simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coord(&self, node: usize) -> Option<i64> {
        node.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    factors: Vec<SimpleType>,
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn construct(factors: &[SimpleType]) -> Result<Self> {
        if factors.is_empty() || factors.len() > 2 {
            return Err(Error::FactorCount(factors.len()));
        }
        let blocks: Vec<_> = factors.iter().map(SimpleType::cartan).collect();
        let cartan = CartanMatrix::direct_sum(&blocks);
        let positive_roots = positive_roots(&cartan);
        Ok(RootSystem {
            factors: factors.to_vec(),
            cartan,
            positive_roots,
        })
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `<v, α_node^∨>` with `node` 1-based.
    pub fn pairing(&self, v: &[i64], node: usize) -> Result<i64> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        if node == 0 || node > self.rank() {
            return Err(Error::NodeOutOfRange {
                node,
                max: self.rank(),
            });
        }
        Ok(self.cartan.pair(v, node - 1))
    }

    pub fn weight(&self, v: &[i64]) -> Result<Weight> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(Weight(
            (0..self.rank()).map(|i| self.cartan.pair(v, i)).collect(),
        ))
    }

    pub fn sum_positive_roots<F>(&self, mut select: F) -> Root
    where
        F: FnMut(&Root) -> bool,
    {
        let mut sum = vec![0i64; self.rank()];
        for r in self.positive_roots.iter().filter(|r| select(r)) {
            for (s, c) in sum.iter_mut().zip(r) {
                *s += c;
            }
        }
        sum
    }

    /// Every non-simple positive root is a simple root plus a positive root.
    pub fn is_saturated(&self) -> bool {
        let set: HashSet<&Root> = self.positive_roots.iter().collect();
        self.positive_roots.iter().all(|r| {
            if r.iter().sum::<i64>() == 1 {
                return true;
            }
            (0..r.len()).any(|i| {
                let mut d = r.clone();
                d[i] -= 1;
                d[i] >= 0 && set.contains(&d)
            })
        })
    }
}
