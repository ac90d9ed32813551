use altq::classical::*;
use altq::free::comm;
use altq::matrix::RepMatrix;
use altq::{Gen, NCPoly, RatFuncQ};

fn r(n: i64) -> RatFuncQ {
    RatFuncQ::from_int(n)
}

fn x(g: Gen) -> NCPoly {
    NCPoly::gen(g)
}

#[test]
fn ns_r_matrix_solves_the_classical_equation() {
    let rep = check_ns_cybe();
    assert!(rep.passed(), "{:?}", rep.details);
}

#[test]
fn rational_r_matrix_solves_the_classical_equation() {
    let rep = check_cybe();
    assert!(rep.passed(), "{:?}", rep.details);
}

#[test]
fn polynomial_arithmetic() {
    let a = MPoly::monomial(2, 0, 1, 1).add(&MPoly::int(2, 1));
    let b = MPoly::monomial(2, 0, 1, 1).sub(&MPoly::int(2, 1));
    let want = MPoly::monomial(2, 0, 2, 1).sub(&MPoly::int(2, 1));
    assert_eq!(a.mul(&b), want);
    assert!(a.sub(&a).is_zero());
}

#[test]
fn low_loop_images_by_hand() {
    // w0 -> 2 E21 t, w1 -> 2 E12, g1 -> 8 E11 t, g~1 -> 8 E22 t
    let e = |i: usize, j: usize, c: i64| {
        let mut m = RepMatrix::zero(2);
        m.set(i, j, r(c));
        m
    };
    let at = |t: i32, m: RepMatrix| LoopElement::monomial((t, 0), m);
    assert_eq!(loop_image(Gen::Wm(0), Side::Right), at(1, e(1, 0, 2)));
    assert_eq!(loop_image(Gen::Wp(0), Side::Right), at(0, e(0, 1, 2)));
    assert_eq!(loop_image(Gen::G(0), Side::Right), at(1, e(0, 0, 8)));
    assert_eq!(loop_image(Gen::Gt(0), Side::Right), at(1, e(1, 1, 8)));
    assert_eq!(loop_image(Gen::Wm(1), Side::Left), at(-1, e(1, 0, 1)));
    assert_eq!(loop_image(Gen::Wp(1), Side::Left), at(-2, e(0, 1, 1)));
    // [w_0, w_1] = (g~1 - g1)/2 in the loop algebra
    let w0 = loop_image(Gen::Wm(0), Side::Right);
    let w1 = loop_image(Gen::Wp(0), Side::Right);
    let bracket = w0.mul(&w1).sub(&w1.mul(&w0));
    let half = loop_image(Gen::Gt(0), Side::Right)
        .sub(&loop_image(Gen::G(0), Side::Right))
        .scale(&RatFuncQ::from_ratio(1, 2));
    assert_eq!(bracket, half);
}

#[test]
fn loop_algebra_realizes_both_subalgebras() {
    let rep = loop_realization_check(4);
    assert!(rep.passed(), "{:?}", rep.details);
}

#[test]
fn classical_relations_shape() {
    let rels = classical_relations(0, &r(16));
    let ww = rels.get("cl-ww[0,0]").unwrap();
    let want = &comm(&x(Gen::Wm(0)), &x(Gen::Wp(0)))
        - &(&x(Gen::Gt(0)) - &x(Gen::G(0))).scale(&RatFuncQ::from_ratio(1, 2));
    assert_eq!(ww.poly, want);
    // trivially zero instances are dropped
    assert!(rels.get("cl-same.wm[0,0]").is_none());
}

#[test]
fn matrix_presentation_gives_the_classical_relations() {
    for order in 1..=3 {
        let c = classical_fm_equivalence(order).unwrap();
        assert!(c.equal(), "order {order}: {:?}", c);
    }
    assert!(extract_classical_fm(1).is_err());
}

#[test]
fn generators_specialize_without_poles() {
    let t = specialize_generators_q1(2).unwrap();
    let (w0, w1) = (x(Gen::Wm(0)), x(Gen::Wp(0)));
    let half = RatFuncQ::from_ratio(1, 2);
    let g1 = &(&(&w1 * &w0) - &(&w0 * &w1)) + &NCPoly::delta(1).scale(&half);
    assert_eq!(t[&Gen::G(0)], g1);
    let w_m1 = (&(&(&w0 * &w1) * &w0).scale(&r(2)) - &(&(&(&w0 * &w0) * &w1) + &(&(&w1 * &w0) * &w0)))
        .scale(&RatFuncQ::from_ratio(1, 16));
    assert_eq!(t[&Gen::Wm(1)], w_m1);
    assert_eq!(&t[&Gen::G(0)] + &t[&Gen::Gt(0)], NCPoly::delta(1));
}

#[test]
fn specialization_matches_the_loop_images() {
    let rep = specialization_check(3);
    assert!(rep.passed(), "{:?}", rep.details);
}
