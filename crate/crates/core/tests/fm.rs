use altq::fm::*;
use altq::free::comm;
use altq::scalar::consts::{qm, qp};
use altq::series::{LaurentSeriesMatrix, Series2};
use altq::span::span_membership;
use altq::{Error, FMParams, Gen, NCPoly, RatFuncQ};

fn params() -> FMParams {
    FMParams::default()
}

#[test]
fn ybe_holds_exactly() {
    let r = check_ybe();
    assert!(r.passed(), "{}", r.details);
}

#[test]
fn ybe_mutation_is_caught() {
    let broken = |x: (i32, i32)| {
        let mut m = r_matrix(x);
        let e = m.get(1, 2).add(&Series2::monomial((0, 0), RatFuncQ::one()));
        *m.get_mut(1, 2) = e;
        m
    };
    let r = check_ybe_with(&broken);
    assert!(!r.passed());
    assert!(r.details["offending_entry"]["row"].is_u64());
}

#[test]
fn permutation_properties() {
    let p = permutation();
    let id = LaurentSeriesMatrix::diagonal(&vec![RatFuncQ::one(); 4]);
    assert_eq!(p.mul(&p), id);
    // swaps the middle basis vectors
    assert_eq!(p.get(1, 2).coeff((0, 0)), Some(&RatFuncQ::one()));
    assert!(p.get(1, 1).is_zero());
    let r = r_matrix((1, -1));
    assert_eq!(p.mul(&r).mul(&p), r);
}

#[test]
fn k_matrix_entries() {
    let k = build_k(3, &params()).unwrap();
    // u q W0 U^{-1} = (q + q^-1) W0 u^-1
    assert_eq!(k.get(0, 0).coeff((-1, 0)), Some(&NCPoly::gen(Gen::W0).scale(&qp())));
    let c12 = &(&params().k_plus * &qp()) / &qm();
    assert_eq!(k.get(0, 1).coeff((0, 0)), Some(&NCPoly::constant(c12)));
    assert!(build_k(0, &params()).is_err());
}

#[test]
fn lowest_order_contains_first_linear_relation() {
    let rels = extract_fm_relations(2, &params(), Variant::Re).unwrap();
    let w0 = NCPoly::gen(Gen::W0);
    let w1 = NCPoly::gen(Gen::W1);
    let target = &(&NCPoly::gen(Gen::Gt(0)) - &NCPoly::gen(Gen::G(0))) - &comm(&w0, &w1).scale(&qp());
    // Some extracted coefficient is a scalar multiple of it.
    let hit = rels.iter().any(|r| {
        let mut one = altq::RelationSet::new();
        one.push("r", r.poly.clone());
        span_membership(&target, &one).is_some()
    });
    assert!(hit);
}

#[test]
fn too_small_truncation_is_rejected() {
    assert_eq!(
        extract_fm_relations(1, &params(), Variant::Re).unwrap_err(),
        Error::TruncationTooSmall { order: 1, min: 2 }
    );
}

#[test]
fn scalar_k_gives_no_relations() {
    let id = LaurentSeriesMatrix::diagonal(&[NCPoly::one(), NCPoly::one()]);
    for v in [Variant::Re, Variant::Rep] {
        assert!(relations_from_residual(&quadratic_residual(&id, v)).is_empty());
    }
}

#[test]
fn both_presentations_match_the_definition_at_order_3() {
    for v in [Variant::Re, Variant::Rep] {
        let eq = fm_equivalence(3, &params(), v).unwrap();
        assert!(eq.comparison.equal(), "{v:?}: {:?}", eq.comparison.counterexample);
        assert!(!eq.comparison.a_certificates.is_empty() && !eq.comparison.b_certificates.is_empty());
    }
}

#[test]
fn extraction_is_stable_under_truncation_growth() {
    let small = extract_fm_relations(3, &params(), Variant::Re).unwrap();
    let big = extract_fm_relations(4, &params(), Variant::Re).unwrap();
    for r in small.iter() {
        assert!(span_membership(&r.poly, &big).is_some(), "{}", r.label);
    }
}

#[test]
fn presentations_have_equal_spans() {
    let a = extract_fm_relations(4, &params(), Variant::Re).unwrap();
    let b = extract_fm_relations(4, &params(), Variant::Rep).unwrap();
    let w = |m: &altq::Mono| within_index(m, 3);
    let cmp = altq::span::compare_spans_within(&a, &b, Some(&w));
    assert!(cmp.equal(), "{:?}", cmp.counterexample);
}

#[test]
fn extracted_relations_are_homogeneous() {
    for r in extract_fm_relations(3, &params(), Variant::Rep).unwrap().iter() {
        assert!(r.poly.is_homogeneous(), "{}", r.label);
    }
}

#[test]
fn delta_expansion_is_literal() {
    let r = determinant_report(3, &params());
    assert!(r.passed(), "{}", r.details);
    assert!(r.details["gamma_coefficients_compared"].as_u64().unwrap() > 0);
}

#[test]
fn delta_with_generators_zeroed() {
    // Only the constant parts of K survive in the trace.
    let sd = sklyanin_delta(2, &params()).unwrap();
    let c = sd.gamma.coeff((0, 0)).cloned().unwrap_or_default();
    let rho = params().rho_bar().clone();
    let expect = &(&rho * &RatFuncQ::from_int(-2)) / &(&qm() * &qm() * RatFuncQ::from_int(2));
    assert_eq!(c, NCPoly::constant(expect));
}
