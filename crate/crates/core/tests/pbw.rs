use altq::pbw::*;
use altq::Gen;
use proptest::prelude::*;

/// Dense expansion of the product formula, one factor at a time.
fn dense_phi(d: usize, central_copies: usize) -> Vec<Vec<u64>> {
    let mut a = vec![vec![0u64; d + 1]; d + 1];
    a[0][0] = 1;
    let mut factors = Vec::new();
    for n in 1..=d {
        factors.push((n, n - 1));
        factors.push((n - 1, n));
        for _ in 0..=central_copies {
            factors.push((n, n));
        }
    }
    for (x, y) in factors {
        let mut b = vec![vec![0u64; d + 1]; d + 1];
        for i in 0..=d {
            for j in 0..=d - i {
                let mut p = 0;
                while x * p <= i && y * p <= j {
                    b[i][j] += a[i - x * p][j - y * p];
                    p += 1;
                    if x + y == 0 {
                        break;
                    }
                }
            }
        }
        a = b;
    }
    a
}

#[test]
fn low_degrees_by_hand() {
    let phi = hilbert_phi(8);
    assert_eq!(phi.get(0, 0), 1);
    assert_eq!(phi.get(1, 0), 1);
    assert_eq!(phi.get(0, 1), 1);
    // W0 W1, G1, G~1
    assert_eq!(phi.get(1, 1), 3);
    // W-1, W0 W0 W1, W0 G1, W0 G~1
    assert_eq!(phi.get(2, 1), 4);
    assert_eq!(phi.get(3, 0), 1);
}

#[test]
fn series_agrees_with_dense_expansion() {
    let d = 8;
    let phi = hilbert_phi(d as u32);
    let h = hilbert_h(d as u32);
    let dense = dense_phi(d, 1);
    let dense_h = dense_phi(d, 0);
    for i in 0..=d {
        for j in 0..=d - i {
            assert_eq!(phi.get(i as u32, j as u32), dense[i][j], "({i},{j})");
            assert_eq!(h.get(i as u32, j as u32), dense_h[i][j], "({i},{j})");
        }
    }
}

#[test]
fn census_matches_series_to_degree_eight() {
    let phi = hilbert_phi(8);
    assert_eq!(census(8, Basis::Central), phi);
    let h = hilbert_h(8);
    assert_eq!(census(8, Basis::QuotientMinusFirst), h);
    assert_eq!(census(8, Basis::QuotientPlusFirst), h);
    for r in pbw_reports(8) {
        assert!(r.passed(), "{:?}", r.details);
    }
}

#[test]
fn monomials_are_ordered() {
    let gens = Basis::Central.ordered_generators(4);
    let pos = |g: &Gen| gens.iter().position(|x| x == g).unwrap();
    for w in pbw_monomials(4, Basis::Central) {
        assert!(w.windows(2).all(|p| pos(&p[0]) <= pos(&p[1])), "{w:?}");
    }
    let at11: Vec<_> = pbw_monomials(2, Basis::QuotientPlusFirst)
        .into_iter()
        .filter(|w| w.iter().map(|g| g.deg()).fold((0, 0), |a, d| (a.0 + d.0, a.1 + d.1)) == (1, 1))
        .collect();
    assert_eq!(at11, vec![vec![Gen::Wp(0), Gen::Wm(0)], vec![Gen::G(0)]]);
}

proptest! {
    #[test]
    fn phi_is_symmetric(d in 0u32..12) {
        prop_assert!(hilbert_phi(d).is_symmetric());
        prop_assert!(hilbert_h(d).is_symmetric());
    }

    #[test]
    fn truncations_are_compatible(d in 1u32..10, e in 0u32..10) {
        let small = hilbert_phi(d.min(e));
        let big = hilbert_phi(d.max(e));
        for ((i, j), x) in small.iter() {
            prop_assert_eq!(big.get(i, j), x);
        }
    }
}
