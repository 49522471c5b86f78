use proptest::prelude::*;
use roofscope::dynkin::{Diagram, MarkedDiagram};
use roofscope::homog::{fibration_fiber, gp_invariants, is_projective_space};
use roofscope::root_system::{SimpleType, TypeLetter};

fn marked(letter: TypeLetter, n: usize, marks: &[usize]) -> MarkedDiagram {
    let t = SimpleType::new(letter, n).unwrap();
    MarkedDiagram::new(Diagram::simple(t), marks.iter().copied()).unwrap()
}

fn dim_index(md: &MarkedDiagram) -> (u64, i64) {
    let v = gp_invariants(md);
    (v.dim, v.index().unwrap())
}

#[test]
fn grassmannians() {
    for n in 1..=8usize {
        for k in 1..=n {
            let (d, i) = dim_index(&marked(TypeLetter::A, n, &[k]));
            assert_eq!(d, (k * (n + 1 - k)) as u64, "A{n}:{k}");
            assert_eq!(i, n as i64 + 1, "A{n}:{k}");
        }
    }
}

#[test]
fn isotropic_grassmannians() {
    // IG(k, 2n)
    for n in 2..=8usize {
        for k in 1..=n {
            let (d, i) = dim_index(&marked(TypeLetter::C, n, &[k]));
            assert_eq!(d, (k * (2 * n - k) - k * (k - 1) / 2) as u64, "C{n}:{k}");
            assert_eq!(i, (2 * n - k + 1) as i64, "C{n}:{k}");
        }
    }
}

#[test]
fn orthogonal_grassmannians() {
    // OG(k, 2n+1)
    for n in 3..=8usize {
        for k in 1..n {
            let (d, i) = dim_index(&marked(TypeLetter::B, n, &[k]));
            assert_eq!(
                d,
                (k * (2 * n + 1 - k) - k * (k + 1) / 2) as u64,
                "B{n}:{k}"
            );
            assert_eq!(i, (2 * n - k) as i64, "B{n}:{k}");
        }
        let (d, i) = dim_index(&marked(TypeLetter::B, n, &[n]));
        assert_eq!((d, i), ((n * (n + 1) / 2) as u64, 2 * n as i64), "B{n}:{n}");
    }
    // OG(k, 2n) and the spinor varieties
    for n in 4..=8usize {
        for k in 1..=n - 2 {
            let (d, i) = dim_index(&marked(TypeLetter::D, n, &[k]));
            assert_eq!(d, (k * (2 * n - k) - k * (k + 1) / 2) as u64, "D{n}:{k}");
            assert_eq!(i, (2 * n - k - 1) as i64, "D{n}:{k}");
        }
        for k in [n - 1, n] {
            let (d, i) = dim_index(&marked(TypeLetter::D, n, &[k]));
            assert_eq!(
                (d, i),
                ((n * (n - 1) / 2) as u64, 2 * n as i64 - 2),
                "D{n}:{k}"
            );
        }
    }
}

fn quadrics() -> Vec<String> {
    let mut q: Vec<String> = ["A3:2", "B3:3", "C2:2", "D4:3", "D4:4", "G2:2"]
        .map(String::from)
        .to_vec();
    q.extend((3..=8).map(|n| format!("B{n}:1")));
    q.extend((4..=8).map(|n| format!("D{n}:1")));
    q
}

/// Kobayashi-Ochiai: `index <= dim + 1`, with equality exactly for projective
/// space and `index = dim` exactly for the quadric.
#[test]
fn kobayashi_ochiai_over_all_maximal_parabolics() {
    let mut projective = 0;
    for t in SimpleType::all_up_to_rank(8) {
        for k in 1..=t.rank() {
            let md = MarkedDiagram::new(Diagram::simple(t), [k]).unwrap();
            let (d, i) = dim_index(&md);
            assert!(i <= d as i64 + 1, "{md}");
            let p = is_projective_space(&md);
            assert_eq!(p.is_some(), i == d as i64 + 1, "{md}");
            if let Some(r) = p {
                assert_eq!(r as u64, d + 1);
                projective += 1;
            }
            let quadric = quadrics().contains(&md.to_string());
            assert_eq!(i == d as i64, quadric, "{md}");
        }
    }
    // A_n at either end, A1 once, and C_n at node 1
    assert_eq!(projective, 2 * 7 + 1 + 7);
}

fn two_marked() -> impl Strategy<Value = MarkedDiagram> {
    let types = SimpleType::all_up_to_rank(6);
    proptest::sample::select(types)
        .prop_filter("needs two nodes", |t| t.rank() >= 2)
        .prop_flat_map(|t| {
            let n = t.rank();
            (Just(t), 1..=n, 1..=n).prop_filter("distinct", |(_, i, j)| i != j)
        })
        .prop_map(|(t, i, j)| MarkedDiagram::new(Diagram::simple(t), [i, j]).unwrap())
}

proptest! {
    /// `dim G/P(i,j) = dim G/P(i) + dim` of the fiber over it.
    #[test]
    fn tower_additivity(md in two_marked()) {
        let w = gp_invariants(&md).dim;
        for keep in md.mark_list() {
            let base = gp_invariants(&md.with_marks([keep]).unwrap()).dim;
            let fiber = gp_invariants(&fibration_fiber(&md, keep).unwrap()).dim;
            prop_assert_eq!(w, base + fiber);
        }
    }

    #[test]
    fn invariants_constant_on_automorphism_orbits(md in two_marked()) {
        let v = gp_invariants(&md);
        for img in md.automorphic_images() {
            let u = gp_invariants(&img);
            prop_assert_eq!(u.dim, v.dim);
            let mut a = u.index_entries();
            let mut b = v.index_entries();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
    }
}
