//! Chow rings of projectivised bundles over bases with cyclic cohomology.
//!
//! For a base `B` of dimension `n` whose rational cohomology is generated by
//! a hyperplane class `H` (`H^{n+1} = 0`, `deg H^n = d`) and a rank-`r`
//! bundle `E` with `c_k(E) = c_k H^k`, the ring of `P(E)` is
//! `Q[H, ξ] / (H^{n+1}, Σ_i (-1)^i c_i ξ^{r-i})` with `ξ = O_{P(E)}(1)`.
//! Normal forms have `ξ`-degree below `r`; the degree map is nonzero only on
//! `H^n ξ^{r-1}`, which has degree `d`.
//!
//! Coefficients are rational. On a quadric the Chow groups above the middle
//! are generated by linear subspaces, not by powers of `H` (on `Q^5`,
//! `H^3` is twice a plane), so integer data given in generator units must be
//! converted with [`CyclicBase::generators_to_h`] first.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    ProjectiveSpace,
    Quadric,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicBase {
    dim: u32,
    degree: i64,
    kind: BaseKind,
}

impl CyclicBase {
    pub fn new(dim: u32, degree: i64) -> Result<Self> {
        if degree <= 0 {
            return Err(Error::InvalidBundle(format!(
                "degree of H^n must be positive, got {degree}"
            )));
        }
        Ok(CyclicBase {
            dim,
            degree,
            kind: BaseKind::Other,
        })
    }

    pub fn projective_space(n: u32) -> Self {
        CyclicBase {
            dim: n,
            degree: 1,
            kind: BaseKind::ProjectiveSpace,
        }
    }

    pub fn quadric(n: u32) -> Self {
        CyclicBase {
            dim: n,
            degree: 2,
            kind: BaseKind::Quadric,
        }
    }

    /// `P<n>` or `Q<n>`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBundle(format!("base must be P<n> or Q<n>, got '{s}'"));
        let (head, tail) = s.split_at(s.chars().next().map(char::len_utf8).unwrap_or(0));
        let n: u32 = tail.parse().map_err(|_| bad())?;
        match head {
            "P" => Ok(CyclicBase::projective_space(n)),
            "Q" if n >= 1 => Ok(CyclicBase::quadric(n)),
            _ => Err(bad()),
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn kind(&self) -> BaseKind {
        self.kind
    }

    /// `k` with `-K_B = k H`, when known.
    pub fn anticanonical_index(&self) -> Option<i64> {
        match self.kind {
            BaseKind::ProjectiveSpace => Some(self.dim as i64 + 1),
            BaseKind::Quadric => Some(self.dim as i64),
            BaseKind::Other => None,
        }
    }

    /// Multiple of `H^k` equal to the generator of `A^k(B)`.
    pub fn generator_in_h(&self, k: u32) -> Result<Rational> {
        match self.kind {
            BaseKind::ProjectiveSpace => Ok(q(1)),
            BaseKind::Quadric => {
                let n = self.dim;
                if 2 * k < n {
                    Ok(q(1))
                } else if 2 * k > n {
                    Ok(Rational::new(BigInt::from(1), BigInt::from(2)))
                } else {
                    Err(Error::InvalidBundle(format!(
                        "A^{k}(Q^{n}) has rank two; no single generator"
                    )))
                }
            }
            BaseKind::Other => Err(Error::InvalidBundle(
                "generator units are only known for P^n and Q^n".into(),
            )),
        }
    }

    /// Converts Chern classes given as integers in generator units of
    /// `A^k(B)` to multiples of `H^k`.
    pub fn generators_to_h(&self, cherns: &[i64]) -> Result<Vec<Rational>> {
        cherns
            .iter()
            .enumerate()
            .map(|(i, &c)| Ok(q(c) * self.generator_in_h(i as u32 + 1)?))
            .collect()
    }
}

impl fmt::Display for CyclicBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BaseKind::ProjectiveSpace => write!(f, "P{}", self.dim),
            BaseKind::Quadric => write!(f, "Q{}", self.dim),
            BaseKind::Other => write!(f, "B(dim {}, deg {})", self.dim, self.degree),
        }
    }
}

/// A polynomial in `H` and `ξ`, stored as `(H exponent, ξ exponent) -> coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<(u32, u32), Rational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, h: u32, xi: u32) -> Self {
        let mut p = Poly::zero();
        p.add_term(h, xi, c);
        p
    }

    pub fn h() -> Self {
        Poly::monomial(q(1), 1, 0)
    }

    pub fn xi() -> Self {
        Poly::monomial(q(1), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, h: u32, xi: u32) -> Rational {
        self.0.get(&(h, xi)).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, h: u32, xi: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry((h, xi)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&(h, xi));
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for ((h, x), c) in other.terms() {
            out.add_term(h, x, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero();
        for ((h, x), v) in self.terms() {
            out.add_term(h, x, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for ((h1, x1), a) in self.terms() {
            for ((h2, x2), b) in other.terms() {
                out.add_term(h1 + h2, x1 + x2, a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(q(1)), |acc, _| acc.mul(self))
    }

    /// Total degrees `h + ξ` of the terms present.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.0.keys().map(|(h, x)| h + x).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Parses expressions over integers and rationals `a/b` with `H`, `xi`,
    /// `+ - *`, parentheses and non-negative integer powers `^`.
    pub fn parse(src: &str) -> Result<Poly> {
        ExprParser {
            chars: src.chars().collect(),
            pos: 0,
        }
        .parse()
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, name: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // ξ-degree first, then H-degree, both descending
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|((h1, x1), _), ((h2, x2), _)| x2.cmp(x1).then(h2.cmp(h1)));
        for (k, ((h, x), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            if !unit || (h == 0 && x == 0) {
                write!(f, "{mag}")?;
                if h > 0 || x > 0 {
                    write!(f, "*")?;
                }
            }
            fmt_power(f, "H", h)?;
            if h > 0 && x > 0 {
                write!(f, "*")?;
            }
            fmt_power(f, "xi", x)?;
        }
        Ok(())
    }
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn err(&self, message: &str) -> Error {
        Error::Expression {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        let p = self.expr()?;
        self.skip_ws();
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        self.skip_ws();
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.factor()?.scale(&q(-1)));
        }
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .to_u32()
                .ok_or_else(|| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    return Ok(Poly::constant(Rational::new(num, den)));
                }
                Ok(Poly::constant(Rational::from_integer(num)))
            }
            Some('H') => {
                self.pos += 1;
                Ok(Poly::h())
            }
            Some('x') if self.chars.get(self.pos + 1) == Some(&'i') => {
                self.pos += 2;
                Ok(Poly::xi())
            }
            Some(_) => Err(self.err("expected a number, H, xi or '('")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Chow ring of `P(E)` for a rank-`r` bundle `E` on a cyclic base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleChowRing {
    base: CyclicBase,
    rank: u32,
    /// `c_k(E) = cherns[k - 1] * H^k`.
    cherns: Vec<Rational>,
}

impl BundleChowRing {
    pub fn new(base: CyclicBase, rank: u32, cherns: Vec<Rational>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidBundle("rank must be positive".into()));
        }
        if cherns.len() != rank as usize {
            return Err(Error::InvalidBundle(format!(
                "expected {rank} Chern classes, got {}",
                cherns.len()
            )));
        }
        Ok(BundleChowRing { base, rank, cherns })
    }

    pub fn from_integers(base: CyclicBase, cherns: &[i64]) -> Result<Self> {
        BundleChowRing::new(
            base,
            cherns.len() as u32,
            cherns.iter().map(|&c| q(c)).collect(),
        )
    }

    /// `P(G)` for an Ottaviani bundle on `Q^5`: `(c_1, c_2, c_3) = (2, 2, 2)`
    /// in generator units, i.e. `(2H, 2H^2, H^3)`.
    pub fn ottaviani() -> Self {
        let base = CyclicBase::quadric(5);
        let cherns = base.generators_to_h(&[2, 2, 2]).expect("Q5 units");
        BundleChowRing::new(base, 3, cherns).expect("rank 3")
    }

    pub fn base(&self) -> &CyclicBase {
        &self.base
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn cherns(&self) -> &[Rational] {
        &self.cherns
    }

    pub fn c1(&self) -> Rational {
        self.cherns[0].clone()
    }

    /// `dim P(E) = n + r - 1`.
    pub fn top_degree(&self) -> u32 {
        self.base.dim + self.rank - 1
    }

    /// Normal form: `H`-degree at most `n`, `ξ`-degree below `r`, using
    /// `ξ^r = Σ_{i=1}^r (-1)^{i+1} c_i H^i ξ^{r-i}`.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let n = self.base.dim;
        let r = self.rank;
        let mut acc = Poly::zero();
        for ((h, x), c) in p.terms() {
            if h <= n {
                acc.add_term(h, x, c.clone());
            }
        }
        loop {
            let Some(top) = acc.0.keys().map(|&(_, x)| x).filter(|&x| x >= r).max() else {
                return acc;
            };
            let high: Vec<((u32, u32), Rational)> = acc
                .0
                .iter()
                .filter(|((_, x), _)| *x == top)
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            for ((h, x), c) in high {
                acc.0.remove(&(h, x));
                for i in 1..=r {
                    if h + i > n {
                        break;
                    }
                    let sign = if i % 2 == 1 { q(1) } else { q(-1) };
                    acc.add_term(h + i, x - i, &c * &sign * &self.cherns[i as usize - 1]);
                }
            }
        }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b))
    }

    pub fn pow(&self, a: &Poly, k: u32) -> Poly {
        let a = self.reduce(a);
        (0..k).fold(self.reduce(&Poly::constant(q(1))), |acc, _| {
            self.mul(&acc, &a)
        })
    }

    /// Degree of a class of top codimension `n + r - 1`.
    pub fn degree(&self, p: &Poly) -> Result<Rational> {
        let top = self.top_degree();
        let degrees = p.degrees();
        if degrees.iter().any(|&d| d != top) {
            return Err(Error::NotTopDegree {
                expected: top,
                detail: format!("term degrees {degrees:?}"),
            });
        }
        let normal = self.reduce(p);
        Ok(normal.coeff(self.base.dim, self.rank - 1) * q(self.base.degree))
    }

    /// The ring of `P(E ⊗ O(t))`; the same variety, with `ξ' = ξ + tH`.
    pub fn twisted(&self, t: i64) -> BundleChowRing {
        BundleChowRing {
            base: self.base.clone(),
            rank: self.rank,
            cherns: twist_cherns(&self.cherns, self.rank, t),
        }
    }

    /// Rewrites a class under `ξ -> ξ + shift * H`.
    pub fn substitute_xi(&self, p: &Poly, shift: i64) -> Poly {
        let image = Poly::xi().add(&Poly::h().scale(&q(shift)));
        let mut out = Poly::zero();
        for ((h, x), c) in p.terms() {
            let term = Poly::h().pow(h).mul(&image.pow(x)).scale(c);
            out = out.add(&term);
        }
        self.reduce(&out)
    }
}

/// `c_k(E ⊗ L) = Σ_{i=0}^{k} C(r-i, k-i) c_i(E) c_1(L)^{k-i}` with
/// `c_1(L) = tH` and every class an `H`-multiple.
pub fn twist_cherns(cherns: &[Rational], rank: u32, t: i64) -> Vec<Rational> {
    let r = rank as i64;
    (1..=r)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let ci = if i == 0 {
                        q(1)
                    } else {
                        cherns
                            .get(i as usize - 1)
                            .cloned()
                            .unwrap_or_else(Rational::zero)
                    };
                    ci * q(binomial(r - i, k - i)) * q(t.pow((k - i) as u32))
                })
                .fold(Rational::zero(), |a, b| a + b)
        })
        .collect()
}

/// `-K_{P(E)} = r ξ + (k - c_1) H` where `-K_B = kH`.
pub fn canonical_class_pe(ring: &BundleChowRing, base_index: i64) -> Poly {
    Poly::xi()
        .scale(&q(ring.rank as i64))
        .add(&Poly::h().scale(&(q(base_index) - ring.c1())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MukaiVerdict {
    pub pass: bool,
    pub rank: u32,
    pub dim: u32,
    /// Twist `t` with `c_1(E(t)) = c_1(V)` when the untwisted data fails.
    pub normalizing_twist: Option<i64>,
    pub message: String,
}

/// `(V, E)` with `c_1(V) = c_1(E)` in the `H`-generated Picard group; then
/// `-K_{P(E)} = r ξ`.
pub fn mukai_pair_check(
    index_of_v: i64,
    c1_of_e: i64,
    rank: u32,
    dim: u32,
) -> Result<MukaiVerdict> {
    if index_of_v <= 0 || c1_of_e <= 0 || rank == 0 || dim == 0 {
        return Err(Error::InvalidBundle(
            "index, c1, rank and dimension must be positive".into(),
        ));
    }
    if index_of_v == c1_of_e {
        return Ok(MukaiVerdict {
            pass: true,
            rank,
            dim,
            normalizing_twist: None,
            message: format!("c1(V) = c1(E) = {index_of_v}; -K_P(E) = {rank} xi"),
        });
    }
    let diff = index_of_v - c1_of_e;
    let twist = (diff % rank as i64 == 0).then(|| diff / rank as i64);
    let message = match twist {
        Some(t) => format!(
            "c1(V) = {index_of_v} != c1(E) = {c1_of_e}; E({t}) has c1 = {index_of_v} \
             (twist normalization, not part of the input data)"
        ),
        None => format!("c1(V) = {index_of_v} != c1(E) = {c1_of_e}; no twist of E matches"),
    };
    Ok(MukaiVerdict {
        pass: false,
        rank,
        dim,
        normalizing_twist: twist,
        message,
    })
}

/// Coefficient of `E` in `K_{Bl} - f^* K` for a smooth blow-up of
/// codimension `r`.
pub fn blowup_discrepancy(r: i64) -> Result<i64> {
    if r < 2 {
        return Err(Error::CodimensionTooSmall(r));
    }
    Ok(r - 1)
}

/// Two smooth blow-ups `f_i` of `X_i` along centres of codimension `r_i`
/// with a common exceptional divisor `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KEquivScenario {
    pub r1: i64,
    pub r2: i64,
    pub dim_x: i64,
    pub dim_m: Option<i64>,
}

impl KEquivScenario {
    pub fn new(r1: i64, r2: i64, dim_x: i64, dim_m: Option<i64>) -> Result<Self> {
        blowup_discrepancy(r1)?;
        blowup_discrepancy(r2)?;
        if r1.max(r2) > dim_x {
            return Err(Error::InvalidBundle(format!(
                "codimension exceeds dim X = {dim_x}"
            )));
        }
        Ok(KEquivScenario {
            r1,
            r2,
            dim_x,
            dim_m,
        })
    }

    pub fn dim_e(&self) -> i64 {
        self.dim_x - 1
    }

    pub fn dim_y(&self) -> Option<i64> {
        (self.r1 == self.r2).then_some(self.dim_x - self.r1)
    }

    pub fn check(&self) -> Result<ForcingReport> {
        kequiv_forces_equal_codim(self.r1, self.r2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingReport {
    pub consistent: bool,
    pub left: String,
    pub right: String,
    pub message: String,
}

/// With `f_1^*K_{X_1} = f_2^*K_{X_2}` the two expressions for `K` of the
/// common resolution agree only if the `E`-coefficients `r_i - 1` agree.
pub fn kequiv_forces_equal_codim(r1: i64, r2: i64) -> Result<ForcingReport> {
    let a1 = blowup_discrepancy(r1)?;
    let a2 = blowup_discrepancy(r2)?;
    let left = format!("f1^*K_X1 + {a1} E");
    let right = format!("f2^*K_X2 + {a2} E");
    let consistent = a1 == a2;
    let message = if consistent {
        format!("E-coefficients agree ({a1}); codim Y1 = codim Y2 = {r1}")
    } else {
        format!("E-coefficients {a1} != {a2}: K-equivalence forces r1 = r2")
    };
    Ok(ForcingReport {
        consistent,
        left,
        right,
        message,
    })
}

/// `c_1` of the conormal bundle `C_{Y/X}`: `-K_Y + K_X|_Y`, as `H`-multiples.
pub fn conormal_c1(neg_k_y: i64, k_x_restricted: i64) -> i64 {
    neg_k_y + k_x_restricted
}
