use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use roofscope::chow::{
    blowup_discrepancy, canonical_class_pe, kequiv_forces_equal_codim, twist_cherns,
    BundleChowRing, CyclicBase, Poly,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

/// Degree via Segre classes: `π_*(ξ^{r-1+k}) = s_k(E) H^k` with
/// `Σ s_k t^k = 1 / Σ (-1)^i c_i t^i`. Uses no ring reduction.
fn segre_degree(ring: &BundleChowRing, p: &Poly) -> BigRational {
    let n = ring.base().dim() as usize;
    let r = ring.rank() as i64;
    let mut denom = vec![q(0); n + 1];
    denom[0] = q(1);
    for (i, c) in ring.cherns().iter().enumerate() {
        if i < n {
            denom[i + 1] = if i % 2 == 0 { -c.clone() } else { c.clone() };
        }
    }
    let mut s = vec![q(0); n + 1];
    s[0] = q(1);
    for k in 1..=n {
        let mut acc = q(0);
        for i in 1..=k {
            acc -= &denom[i] * &s[k - i];
        }
        s[k] = acc;
    }
    let mut total = q(0);
    for ((h, x), c) in p.terms() {
        let k = x as i64 - r + 1;
        if k >= 0 && h as i64 + k == n as i64 {
            total += c * &s[k as usize];
        }
    }
    total * q(ring.base().degree())
}

fn tp(n: u32) -> BundleChowRing {
    let cherns: Vec<i64> = (1..=n as i64).map(|k| binom(n as i64 + 1, k)).collect();
    BundleChowRing::from_integers(CyclicBase::projective_space(n), &cherns).unwrap()
}

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

#[test]
fn hand_reduction_fixture() {
    // On P(T_P2): ξ^2 = 3Hξ - 3H^2, so ξ^3 = 3Hξ^2 - 3H^2ξ = 9H^2ξ - 3H^2ξ
    // = 6H^2ξ (H^3 = 0), deg(H^2ξ) = 1, and (2ξ)^3 = 8ξ^3 has degree 48.
    let ring = tp(2);
    assert_eq!(ring.degree(&p("(2xi)^3")).unwrap(), q(48));
    assert_eq!(segre_degree(&ring, &p("8xi^3")), q(48));
}

#[test]
fn anticanonical_degrees_agree_with_segre_oracle() {
    for n in 2..=6 {
        let ring = tp(n);
        let top = ring.top_degree();
        let k = canonical_class_pe(&ring, n as i64 + 1);
        let power = k.pow(top);
        assert_eq!(
            ring.degree(&power).unwrap(),
            segre_degree(&ring, &power),
            "P{n}"
        );
    }
}

#[test]
fn ottaviani_anticanonical_volume() {
    let ring = BundleChowRing::ottaviani();
    let neg_k = canonical_class_pe(&ring, 5);
    assert_eq!(neg_k, p("3xi + 3H"));
    let vol = ring.degree(&neg_k.pow(7)).unwrap();
    assert_eq!(vol, segre_degree(&ring, &neg_k.pow(7)));
    assert_eq!(vol, q(796_068));
    // the same variety as P(G(1)), where -K = 3ξ'
    let twisted = ring.twisted(1);
    assert_eq!(twisted.cherns(), &[q(5), q(9), q(6)]);
    assert_eq!(canonical_class_pe(&twisted, 5), p("3xi"));
    assert_eq!(twisted.degree(&p("(3xi)^7")).unwrap(), vol);
}

/// `c(T_{P^n}(t)) = (1 + (1+t)H)^{n+1} / (1 + tH)` from the Euler sequence.
fn euler_twist(n: i64, t: i64) -> Vec<BigRational> {
    let num: Vec<i64> = (0..=n + 1)
        .map(|k| binom(n + 1, k) * (1 + t).pow(k as u32))
        .collect();
    let mut out = vec![0i64; n as usize + 1];
    for k in 0..=n as usize {
        out[k] = num[k] - if k > 0 { t * out[k - 1] } else { 0 };
    }
    out[1..].iter().map(|&c| q(c)).collect()
}

#[test]
fn twist_matches_euler_sequence() {
    for n in 1..=6i64 {
        let ring = tp(n as u32);
        for t in -3..=3 {
            assert_eq!(
                twist_cherns(ring.cherns(), n as u32, t),
                euler_twist(n, t),
                "T_P{n}({t})"
            );
        }
    }
    assert_eq!(twist_cherns(&[q(3), q(3)], 2, -1), vec![q(1), q(1)]);
}

#[test]
fn forcing_on_the_grid() {
    for r1 in 2..=20 {
        assert_eq!(blowup_discrepancy(r1).unwrap(), r1 - 1);
        for r2 in 2..=20 {
            assert_eq!(
                kequiv_forces_equal_codim(r1, r2).unwrap().consistent,
                r1 == r2
            );
        }
    }
}

fn ring_strategy() -> impl Strategy<Value = BundleChowRing> {
    (1u32..=4, 1u32..=4, prop::bool::ANY).prop_flat_map(|(n, r, quadric)| {
        proptest::collection::vec(-4i64..=6, r as usize).prop_map(move |c| {
            let base = if quadric {
                CyclicBase::quadric(n)
            } else {
                CyclicBase::projective_space(n)
            };
            BundleChowRing::from_integers(base, &c).unwrap()
        })
    })
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((0u32..4, 0u32..5), -5i64..=5), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, ((h, x), c)| {
            acc.add(&Poly::monomial(q(c), h, x))
        })
    })
}

proptest! {
    #[test]
    fn reduction_is_a_ring_homomorphism(
        ring in ring_strategy(),
        a in poly_strategy(),
        b in poly_strategy(),
    ) {
        let ab = ring.reduce(&a.mul(&b));
        prop_assert_eq!(&ring.mul(&ring.reduce(&a), &ring.reduce(&b)), &ab);
        prop_assert_eq!(ring.reduce(&ab), ab);
        prop_assert_eq!(
            ring.reduce(&a.add(&b)),
            ring.reduce(&a).add(&ring.reduce(&b))
        );
    }

    #[test]
    fn degree_matches_segre_oracle(ring in ring_strategy(), hs in 0u32..8) {
        let top = ring.top_degree();
        let h = hs.min(top);
        let class = Poly::h().pow(h).mul(&Poly::xi().add(&Poly::h()).pow(top - h));
        prop_assert_eq!(ring.degree(&class).unwrap(), segre_degree(&ring, &class));
    }

    /// `P(E) = P(E(t))` with `ξ_{E(t)} = ξ_E + tH`.
    #[test]
    fn twist_invariance(ring in ring_strategy(), t in -3i64..=3, hs in 0u32..8) {
        let top = ring.top_degree();
        let h = hs.min(top);
        let tw = ring.twisted(t);
        let class_tw = Poly::h().pow(h).mul(&Poly::xi().pow(top - h));
        let class = ring.substitute_xi(&class_tw, t);
        prop_assert_eq!(ring.degree(&class).unwrap(), tw.degree(&class_tw).unwrap());
        let rt = ring.twisted(t).twisted(-t);
        prop_assert_eq!(rt.cherns(), ring.cherns());
    }
}
