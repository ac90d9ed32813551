use altq::matrix::RepMatrix;
use altq::reps::*;
use altq::scalar::consts::{qdiff, qm, qp};
use altq::{FMParams, Gen, RatFuncQ};

fn r(n: i64) -> RatFuncQ {
    RatFuncQ::from_int(n)
}

fn n1(v: i64) -> DressConfig {
    DressConfig::new(&[1], vec![r(v)], FMParams::default()).unwrap()
}

#[test]
fn spin_modules_satisfy_uqsl2() {
    for two_j in 1..=3 {
        let rep = SpinRep::new(two_j);
        let rep_check = rep.check();
        assert!(rep_check.passed(), "{:?}", rep_check.details);
    }
}

#[test]
fn spin_parsing() {
    assert_eq!(parse_spin("1/2").unwrap(), 1);
    assert_eq!(parse_spin("1").unwrap(), 2);
    assert_eq!(parse_spin("3/2").unwrap(), 3);
    assert!(parse_spin("2/2").is_err());
    assert!(parse_spin("1/3").is_err());
    assert!(parse_spin("x").is_err());
}

#[test]
fn lax_operators_satisfy_yang_baxter() {
    for two_j in 1..=2 {
        let rep = yang_baxter_lax(&SpinRep::new(two_j));
        assert!(rep.passed(), "{:?}", rep.details);
    }
}

#[test]
fn seed_solves_the_equation() {
    assert!(seed_check(&FMParams::default()));
    let zero_eps = FMParams::new(RatFuncQ::q_pow(2), -RatFuncQ::q_pow(-1), r(0), r(0)).unwrap();
    assert!(seed_check(&zero_eps));
    let simple = FMParams::new(r(1), r(1), r(1), r(0)).unwrap();
    assert!(seed_check(&simple));
}

/// The four N = 1 operators written out, for spin 1/2.
fn reference_n1(v: &RatFuncQ, p: &FMParams) -> [(Gen, RepMatrix); 4] {
    let rep = SpinRep::new(1);
    let s = RatFuncQ::s();
    let si = RatFuncQ::s_pow(-1);
    let w0 = rep.w0();
    let (kp, km, ep, em) = (&p.k_plus, &p.k_minus, &p.eps_plus, &p.eps_minus);
    let id = rep.identity();
    let w_0 = rep
        .s_plus
        .mul(&rep.q_s3(1))
        .scale(&(&(kp * v) * &s))
        .add(&rep.q_s3(2).scale(ep));
    let w_1 = rep
        .s_minus
        .mul(&rep.q_s3(-1))
        .scale(&(&(km * v) * &s))
        .add(&rep.q_s3(-2).scale(em));
    let g = |sign: i32, k_in: &RatFuncQ, e_in: &RatFuncQ, shift: &RepMatrix| {
        id.scale(&w0)
            .sub(&rep.q_s3(2 * sign).scale(&qp()))
            .scale(&(&(&(kp * km) * &v.pow(2)) / &qm()))
            .add(&shift.scale(&(&(&qdiff(2) * k_in) * &(&(e_in * v) * &si))))
            .add(&id.scale(&(&(ep * em) * &qm())))
    };
    let g_1 = g(1, km, ep, &rep.s_minus.mul(&rep.q_s3(1)));
    let gt_1 = g(-1, kp, em, &rep.s_plus.mul(&rep.q_s3(-1)));
    [(Gen::Wm(0), w_0), (Gen::Wp(0), w_1), (Gen::G(0), g_1), (Gen::Gt(0), gt_1)]
}

#[test]
fn single_site_operators_by_hand() {
    for v in [1, 2, -3] {
        let cfg = n1(v);
        let ops = alt_ops(&cfg, 1);
        for (g, want) in reference_n1(&r(v), &cfg.params) {
            assert_eq!(ops.get(g).unwrap(), &want, "{} at v = {}", g, v);
        }
    }
}

#[test]
fn single_site_dressing_by_hand() {
    let v = r(2);
    let cfg = DressConfig::new(&[1], vec![v.clone()], FMParams::default()).unwrap();
    let p = &cfg.params;
    let k = dress(&cfg);
    let [(_, w_0), (_, w_1), (_, g_1), (_, gt_1)] = reference_n1(&v, p);
    let id = RepMatrix::identity(2);
    let w0 = SpinRep::new(1).w0();
    let q = RatFuncQ::q();
    let v2 = v.pow(2);
    let eps_pm = &(&p.eps_plus * &p.eps_minus) * &qm();
    let coeff = |e: (usize, usize), pow: i32| k.get(e.0, e.1).coeff((pow, 0)).cloned();

    assert_eq!(coeff((0, 0), 1), Some(w_0.scale(&q)));
    assert_eq!(coeff((0, 0), -1), Some(id.scale(&-(&v2 * &p.eps_plus))));
    assert_eq!(k.get(0, 0).terms().len(), 2);
    assert_eq!(coeff((1, 1), 1), Some(w_1.scale(&q)));
    assert_eq!(coeff((1, 1), -1), Some(id.scale(&-(&v2 * &p.eps_minus))));

    let off = |g: &RepMatrix, k_a: &RatFuncQ, k_b: &RatFuncQ| {
        let c0 = g
            .sub(&id.scale(&eps_pm))
            .scale(&(k_a * &qp()).inv())
            .sub(&id.scale(&(&(&(k_b * &v2) * &w0) / &qdiff(2))));
        let c2 = id.scale(&(&(k_b * &q) / &qm()));
        (c0, c2)
    };
    let (c0, c2) = off(&g_1, &p.k_minus, &p.k_plus);
    assert_eq!(coeff((0, 1), 0), Some(c0));
    assert_eq!(coeff((0, 1), 2), Some(c2));
    let (c0, c2) = off(&gt_1, &p.k_plus, &p.k_minus);
    assert_eq!(coeff((1, 0), 0), Some(c0));
    assert_eq!(coeff((1, 0), 2), Some(c2));
}

#[test]
fn f_top_is_constant() {
    for cfg in DressConfig::defaults() {
        let n = cfg.n();
        let f = f_poly(&cfg, n);
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.coeff((0, 0)), Some(&qp().pow(n as i32 - 1)));
    }
}

#[test]
fn first_linear_relation_single_site() {
    let cfg = n1(3);
    let ops = alt_ops(&cfg, 2);
    let alpha = &cfg.alphas()[0];
    let eps = &-r(9) * &cfg.params.eps_plus;
    for (p, e) in [(0u32, eps), (1, r(0))] {
        let lhs = ops
            .get(Gen::Wm(p))
            .unwrap()
            .scale(alpha)
            .sub(&ops.get(Gen::Wm(p + 1)).unwrap().scale(&qp()))
            .add(&RepMatrix::scalar(2, e));
        assert!(lhs.is_zero(), "p = {}", p);
    }
}

#[test]
fn dressing_matches_closed_form() {
    for cfg in DressConfig::defaults() {
        let rep = closed_form_check(&cfg);
        assert!(rep.passed(), "{:?}", rep.details);
    }
}

#[test]
fn dressing_solves_the_equation() {
    for cfg in DressConfig::defaults() {
        let rep = re_check(&cfg);
        assert!(rep.passed(), "{:?}", rep.details);
    }
}

#[test]
fn linear_relations_vanish() {
    for cfg in DressConfig::defaults() {
        let rep = linear_relations_check(&cfg, 3);
        assert!(rep.passed(), "{:?}", rep.details);
    }
    let odd = DressConfig::new(
        &[1, 1],
        vec![RatFuncQ::from_ratio(2, 3), RatFuncQ::from_ratio(-5, 7)],
        FMParams::default(),
    )
    .unwrap();
    let rep = linear_relations_check(&odd, 3);
    assert!(rep.passed(), "{:?}", rep.details);
}

#[test]
fn relations_hold_in_representations() {
    for cfg in DressConfig::defaults() {
        let rep = relations_in_rep(&cfg, 3);
        assert!(rep.passed(), "{:?}", rep.details);
    }
}

#[test]
fn gamma_is_central_in_representations() {
    for cfg in DressConfig::defaults() {
        let rep = gamma_check(&cfg, 3);
        assert!(rep.passed(), "{:?}", rep.details);
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let p = FMParams::default();
    assert!(DressConfig::new(&[1], vec![r(0)], p.clone()).is_err());
    assert!(DressConfig::new(&[1, 1], vec![r(1)], p.clone()).is_err());
    assert!(DressConfig::new(&[], vec![], p).is_err());
}
