//! The Freidel-Maillet engine: R-matrices, the Yang-Baxter check, the
//! generating-function matrices `K(u)`, `K'(u)`, extraction of algebra
//! relations from the quadratic matrix equation, and the central generating
//! function `Delta(u)`.
//!
//! Spectral bookkeeping is in `u^{-1}`, `v^{-1}` directly; the shorthand
//! `U = q u^2/(q + q^-1)` only enters through the coefficients
//! `U^{-k-1} = ((q+q^-1)/q)^{k+1} u^{-2k-2}`.
//!
//! ```text
//! K(u) = | u q W+(u)                          G+(u)/(k-(q+q^-1)) + k+(q+q^-1)/(q-q^-1) |
//!        | G-(u)/(k+(q+q^-1)) + k-(q+q^-1)/(q-q^-1)   u q W-(u)                         |
//!
//! R(u/v) K1(u) R0 K2(v) = K2(v) R0 K1(u) R(u/v)          R0 = diag(1, q^-1, q^-1, 1)
//! ```
//!
//! The second presentation uses `K'(u)`, the same shape with `W-` and `W+`
//! exchanged on the diagonal and every generating function evaluated at
//! `u^{-1} q^{-1}`, together with `R0^{-1}`. It is handled in the variables
//! `x = u^{-1}`, `y = v^{-1}`, where `R(u/v) = R(y/x)`.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::free::{Gen, Mono, NCPoly};
use crate::params::FMParams;
use crate::relations::{defining_relations, derived_relations, RelationSet};
use crate::report::CheckReport;
use crate::ring::Ring;
use crate::scalar::{consts, RatFuncQ};
use crate::series::{LaurentSeriesMatrix, Series2};
use crate::span::{compare_spans_within, SpanComparison};

pub type ScalarMatrix = LaurentSeriesMatrix<RatFuncQ>;
pub type KMatrix = LaurentSeriesMatrix<NCPoly>;

/// Which quadratic equation to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `K(u)` with `R0`.
    Re,
    /// `K'(u)` with `R0^{-1}`.
    Rep,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "re" => Ok(Variant::Re),
            "rep" => Ok(Variant::Rep),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected `re` or `rep`".into(),
            }),
        }
    }
}

fn sc(e: (i32, i32), c: RatFuncQ) -> Series2<RatFuncQ> {
    Series2::monomial(e, c)
}

/// `R(x)` with `x = u^{e0} v^{e1}`.
pub fn r_matrix(x: (i32, i32)) -> ScalarMatrix {
    let xi = (-x.0, -x.1);
    let a = sc(x, RatFuncQ::q()).add(&sc(xi, -RatFuncQ::q_pow(-1)));
    let b = sc(x, RatFuncQ::one()).add(&sc(xi, -RatFuncQ::one()));
    let c = sc((0, 0), consts::qm());
    let z = Series2::zero;
    LaurentSeriesMatrix::from_entries(
        4,
        vec![
            a.clone(), z(), z(), z(),
            z(), b.clone(), c.clone(), z(),
            z(), c, b, z(),
            z(), z(), z(), a,
        ],
    )
}

/// Sum of all coefficients: the value at `u = v = 1`.
pub fn at_one(m: &ScalarMatrix) -> ScalarMatrix {
    m.map_series(|s| {
        let mut total = RatFuncQ::zero();
        for c in s.terms().values() {
            total += c;
        }
        Series2::monomial((0, 0), total)
    })
}

/// The permutation `P = R(1)/(q - q^-1)`.
pub fn permutation() -> ScalarMatrix {
    at_one(&r_matrix((1, -1))).map(|c| c * &consts::qm().inv())
}

/// `R0 = diag(1, q^-1, q^-1, 1)`, or its inverse.
pub fn r0(inverse: bool) -> ScalarMatrix {
    let e = if inverse { 1 } else { -1 };
    LaurentSeriesMatrix::diagonal(&[
        RatFuncQ::one(),
        RatFuncQ::q_pow(e),
        RatFuncQ::q_pow(e),
        RatFuncQ::one(),
    ])
}

/// Place a 4x4 two-leg operator on legs `(i, j)` of a three-fold tensor product.
pub fn embed_legs(m: &ScalarMatrix, legs: (usize, usize)) -> ScalarMatrix {
    let bit = |idx: usize, leg: usize| (idx >> (2 - leg)) & 1;
    let mut out = LaurentSeriesMatrix::zero(8);
    let third = 3 - legs.0 - legs.1;
    for r in 0..8 {
        for c in 0..8 {
            if bit(r, third) != bit(c, third) {
                continue;
            }
            let ri = 2 * bit(r, legs.0) + bit(r, legs.1);
            let ci = 2 * bit(c, legs.0) + bit(c, legs.1);
            *out.get_mut(r, c) = m.get(ri, ci).clone();
        }
    }
    out
}

/// Position and value of the first nonzero entry.
fn first_nonzero<C: Ring + std::fmt::Display>(m: &LaurentSeriesMatrix<C>) -> Option<serde_json::Value> {
    m.exact_terms().into_iter().next().map(|((i, j), e, c)| {
        json!({ "row": i, "col": j, "exponent": [e.0, e.1], "coefficient": c.to_string() })
    })
}

/// Yang-Baxter check for an arbitrary R-matrix family.
pub fn check_ybe_with(r: &dyn Fn((i32, i32)) -> ScalarMatrix) -> CheckReport {
    let r12 = embed_legs(&r((1, -1)), (0, 1));
    let r13 = embed_legs(&r((1, 0)), (0, 2));
    let r23 = embed_legs(&r((0, 1)), (1, 2));
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    let diff = lhs.sub(&rhs);
    let p = at_one(&r((1, -1))).map(|c| c * &consts::qm().inv());
    let id = LaurentSeriesMatrix::diagonal(&vec![RatFuncQ::one(); 4]);
    let involution = p.mul(&p) == id;
    let pass = diff.is_zero() && involution;
    CheckReport::new(
        "ybe.r-matrix",
        "R12(u/v) R13(u) R23(v) = R23(v) R13(u) R12(u/v), P = R(1)/(q-q^-1), P^2 = 1",
        pass,
        json!({
            "residual_zero": diff.is_zero(),
            "offending_entry": first_nonzero(&diff),
            "permutation_involution": involution,
        }),
    )
}

pub fn check_ybe() -> CheckReport {
    check_ybe_with(&r_matrix)
}

/// `U^{-k-1}` in powers of the spectral variable, for `K` and `K'` respectively.
fn u_power_coeff(variant: Variant, k: u32) -> RatFuncQ {
    let base = match variant {
        Variant::Re => &consts::qp() / &RatFuncQ::q(),
        Variant::Rep => &consts::qp() * &RatFuncQ::q(),
    };
    base.pow(k as i32 + 1)
}

fn gen_series(
    variant: Variant,
    order: u32,
    prefactor: &RatFuncQ,
    odd: bool,
    letter: impl Fn(u32) -> Gen,
) -> Series2<NCPoly> {
    let mut s = Series2::zero();
    for k in 0..order {
        let e = -2 * k as i32 - if odd { 1 } else { 2 };
        let c = prefactor * &u_power_coeff(variant, k);
        s.add_term((e, 0), NCPoly::gen(letter(k)).scale(&c));
    }
    s.with_cut(0, -2 * order as i32)
}

/// `K(u)` (or `K'(u)` in `x = u^{-1}`) with generating functions truncated
/// after `U^{-order}`. The spectral variable is the first one.
pub fn build_k_variant(order: u32, params: &FMParams, variant: Variant) -> KMatrix {
    let qp = consts::qp();
    let qm = consts::qm();
    let (pre, top, bottom): (RatFuncQ, fn(u32) -> Gen, fn(u32) -> Gen) = match variant {
        Variant::Re => (RatFuncQ::q(), Gen::Wm, Gen::Wp),
        Variant::Rep => (RatFuncQ::q_pow(-1), Gen::Wp, Gen::Wm),
    };
    let d11 = gen_series(variant, order, &pre, true, top);
    let d22 = gen_series(variant, order, &pre, true, bottom);
    let c12 = &(&params.k_plus * &qp) / &qm;
    let c21 = &(&params.k_minus * &qp) / &qm;
    let o12 = gen_series(variant, order, &(&params.k_minus * &qp).inv(), false, Gen::G)
        .add(&Series2::monomial((0, 0), NCPoly::constant(c12)));
    let o21 = gen_series(variant, order, &(&params.k_plus * &qp).inv(), false, Gen::Gt)
        .add(&Series2::monomial((0, 0), NCPoly::constant(c21)));
    LaurentSeriesMatrix::from_entries(2, vec![d11, o12, o21, d22])
}

pub fn build_k(order: u32, params: &FMParams) -> Result<KMatrix> {
    if order < 1 {
        return Err(Error::TruncationTooSmall { order, min: 1 });
    }
    Ok(build_k_variant(order, params, Variant::Re))
}

pub fn build_k_prime(order: u32, params: &FMParams) -> Result<KMatrix> {
    if order < 1 {
        return Err(Error::TruncationTooSmall { order, min: 1 });
    }
    Ok(build_k_variant(order, params, Variant::Rep))
}

/// `LHS - RHS` of the quadratic equation for a matrix `k` in the first
/// variable; the second copy is `k` with the variables exchanged.
pub fn quadratic_residual(k: &KMatrix, variant: Variant) -> KMatrix {
    quadratic_residual_with(k, variant, &|c| NCPoly::constant(c.clone()))
}

/// Same as [`quadratic_residual`] for any coefficient ring; `lift` embeds scalars.
pub fn quadratic_residual_with<C: Ring>(
    k: &LaurentSeriesMatrix<C>,
    variant: Variant,
    lift: &dyn Fn(&RatFuncQ) -> C,
) -> LaurentSeriesMatrix<C> {
    let ratio = match variant {
        Variant::Re => (1, -1),
        Variant::Rep => (-1, 1),
    };
    let r = r_matrix(ratio).map(lift);
    let z = r0(variant == Variant::Rep).map(lift);
    let k1 = k.left_embed();
    let k2 = k.map_series(|s| s.swap_vars()).right_embed();
    let lhs = r.mul(&k1).mul(&z).mul(&k2);
    let rhs = k2.mul(&z).mul(&k1).mul(&r);
    lhs.sub(&rhs)
}

/// `tr12(P^- (K(u) ⊗ 1) R0 (1 ⊗ K(uq)))` with `P^- = (1 - P)/2`.
pub fn projected_trace<C: Ring>(
    k: &LaurentSeriesMatrix<C>,
    lift: &dyn Fn(&RatFuncQ) -> C,
) -> Series2<C> {
    let k1 = k.left_embed();
    let k2 = k.map_series(|s| s.rescale((1, 0))).right_embed();
    let m = k1.mul(&r0(false).map(lift)).mul(&k2);
    let p = permutation();
    let mut gamma = Series2::zero();
    let half = RatFuncQ::from_ratio(1, 2);
    for i in 0..4 {
        for j in 0..4 {
            let mut pm = -p.get(i, j).coeff((0, 0)).cloned().unwrap_or_else(RatFuncQ::zero);
            if i == j {
                pm += &RatFuncQ::one();
            }
            if pm.is_zero() {
                continue;
            }
            gamma = gamma.add(&m.get(j, i).scale(&(&pm * &half)));
        }
    }
    gamma
}

/// Every exactly known coefficient of the residual, split into homogeneous
/// components.
pub fn relations_from_residual(res: &KMatrix) -> RelationSet {
    let mut out = RelationSet::new();
    for ((i, j), e, c) in res.exact_terms() {
        for (deg, comp) in c.homogeneous_components() {
            out.push(
                format!("K[{}{}]@({},{})/({},{})", i + 1, j + 1, e.0, e.1, deg.0, deg.1),
                comp,
            );
        }
    }
    out
}

/// Relations obtained by expanding the chosen equation with generating
/// functions truncated after `U^{-order}`.
pub fn extract_fm_relations(order: u32, params: &FMParams, variant: Variant) -> Result<RelationSet> {
    if order < 2 {
        return Err(Error::TruncationTooSmall { order, min: 2 });
    }
    let k = build_k_variant(order, params, variant);
    Ok(relations_from_residual(&quadratic_residual(&k, variant)))
}

/// Extra truncation depth used when comparing spans, so that every relation
/// among generators of index below `order` is seen inside the exact range.
pub const GUARD: u32 = 1;

/// Whether every letter of `m` is a generator of index below `order`.
pub fn within_index(m: &Mono, order: u32) -> bool {
    m.word.iter().all(|g| g.index() < order)
}

#[derive(Clone, Debug, Serialize)]
pub struct FmEquivalence {
    pub guard: u32,
    pub variant: Variant,
    pub order: u32,
    pub extracted: usize,
    pub claimed: usize,
    pub degrees: Vec<(u32, u32)>,
    pub comparison: SpanComparison,
}

/// Compare the span of extracted relations with the span of the defining and
/// derived relations at `k_max = order - 1`, both intersected with the space
/// spanned by words in generators of index below `order`.
pub fn fm_equivalence(order: u32, params: &FMParams, variant: Variant) -> Result<FmEquivalence> {
    fm_equivalence_guarded(order, GUARD, params, variant)
}

/// As [`fm_equivalence`] with an explicit extra truncation depth.
pub fn fm_equivalence_guarded(
    order: u32,
    guard: u32,
    params: &FMParams,
    variant: Variant,
) -> Result<FmEquivalence> {
    if order < 2 {
        return Err(Error::TruncationTooSmall { order, min: 2 });
    }
    let extracted = extract_fm_relations(order + guard, params, variant)?;
    let rho = params.rho_bar();
    let claimed = defining_relations(order - 1, rho).union(&derived_relations(order - 1, rho));
    let window = |m: &Mono| within_index(m, order);
    let comparison = compare_spans_within(&extracted, &claimed, Some(&window));
    let degrees: BTreeSet<(u32, u32)> = claimed
        .iter()
        .filter_map(|r| r.poly.homogeneous_degree())
        .collect();
    Ok(FmEquivalence {
        guard,
        variant,
        order,
        extracted: extracted.len(),
        claimed: claimed.len(),
        degrees: degrees.into_iter().collect(),
        comparison,
    })
}

pub fn fm_report(order: u32, params: &FMParams, variant: Variant) -> CheckReport {
    let id = match variant {
        Variant::Re => "fm.re",
        Variant::Rep => "fm.rep",
    };
    let anchor = match variant {
        Variant::Re => "R(u/v) K1(u) R0 K2(v) = K2(v) R0 K1(u) R(u/v) presents the alternating algebra",
        Variant::Rep => "R(u/v) K'1(u) R0^-1 K'2(v) = K'2(v) R0^-1 K'1(u) R(u/v) presents the alternating algebra",
    };
    match fm_equivalence(order, params, variant) {
        Ok(eq) => CheckReport::new(id, anchor, eq.comparison.equal(), serde_json::to_value(&eq).unwrap()),
        Err(e) => CheckReport::new(id, anchor, false, json!({ "error": e.to_string() })),
    }
}

/// `sum_k c^{k+1} X_k u^{-2k-2}` for the letters `X_k` (no constant term).
fn generating_function(order: u32, letter: fn(u32) -> Gen) -> Series2<NCPoly> {
    gen_series(Variant::Re, order, &RatFuncQ::one(), false, letter)
}

/// `Delta(u)` and `Gamma(u)` as truncated series in `u`.
#[derive(Clone, Debug)]
pub struct SklyaninDelta {
    pub order: u32,
    /// From the generating-function formula.
    pub delta: Series2<NCPoly>,
    /// The projected trace `tr12(P^- K1(u) R0 K2(uq))`.
    pub gamma: Series2<NCPoly>,
}

/// ```text
/// Delta(u) = (q-q^-1) q^2 u^2 (W+(u) W-(uq) + W-(u) W+(uq))
///          - (q-q^-1)/rho (G+(u) G-(uq) + G-(u) G+(uq))
///          - G+(u) - G+(uq) - G-(u) - G-(uq)
/// Gamma(u) = tr12(P^- (K(u) ⊗ 1) R0 (1 ⊗ K(uq))),   P^- = (1 - P)/2
/// ```
pub fn sklyanin_delta(order: u32, params: &FMParams) -> Result<SklyaninDelta> {
    if order < 2 {
        return Err(Error::TruncationTooSmall { order, min: 2 });
    }
    let wp = generating_function(order, Gen::Wm);
    let wm = generating_function(order, Gen::Wp);
    let gp = generating_function(order, Gen::G);
    let gm = generating_function(order, Gen::Gt);
    let at_uq = |s: &Series2<NCPoly>| s.rescale((1, 0));
    let u2 = Series2::monomial((2, 0), NCPoly::constant(&consts::qm() * &RatFuncQ::q_pow(2)));
    let ww = wp.mul(&at_uq(&wm)).add(&wm.mul(&at_uq(&wp)));
    let gg = gp.mul(&at_uq(&gm)).add(&gm.mul(&at_uq(&gp)));
    let lin = gp.add(&at_uq(&gp)).add(&gm).add(&at_uq(&gm));
    let delta = u2
        .mul(&ww)
        .sub(&gg.scale(&(&consts::qm() / params.rho_bar())))
        .sub(&lin);

    let k = build_k_variant(order, params, Variant::Re);
    let gamma = projected_trace(&k, &|c| NCPoly::constant(c.clone()));
    Ok(SklyaninDelta { order, delta, gamma })
}

/// The coefficient of `U^{-n-1}` expected in `Delta(u)`, as a multiple of `Delta_{n+1}`.
pub fn delta_expansion_factor(n: u32) -> RatFuncQ {
    let ni = n as i32;
    -(&RatFuncQ::q_pow(-ni - 1) * &consts::qsum(ni + 1))
}

/// Literal comparisons of the `Delta(u)` expansion with the central elements
/// written in alternating generators, and of `Gamma(u)` with its definition.
pub fn determinant_report(order: u32, params: &FMParams) -> CheckReport {
    let anchor = "Delta(u) = -sum_n U^{-n-1} q^{-n-1}(q^{n+1}+q^{-n-1}) Delta_{n+1}, Gamma(u) = (Delta(u) - 2 rho/(q-q^-1))/(2(q-q^-1))";
    let sd = match sklyanin_delta(order, params) {
        Ok(sd) => sd,
        Err(e) => return CheckReport::new("determinant.expansion", anchor, false, json!({ "error": e.to_string() })),
    };
    let rho = params.rho_bar();
    let mut per_n = Vec::new();
    let mut all = true;
    for n in 0..order.saturating_sub(1) {
        let e = (-2 * n as i32 - 2, 0);
        let got = sd.delta.coeff(e).cloned().unwrap_or_default();
        let want = crate::generators::central_delta(n, rho)
            .scale(&(&delta_expansion_factor(n) * &u_power_coeff(Variant::Re, n)));
        let diff = &got - &want;
        all &= diff.is_zero() && sd.delta.is_exact_at(e);
        per_n.push(json!({ "n": n, "literal": diff.is_zero(), "residual": diff.to_string() }));
    }
    // Gamma against its normalization on the exactly known range.
    let shift = Series2::monomial((0, 0), NCPoly::constant(&(rho * &RatFuncQ::from_int(2)) / &consts::qm()));
    let expect = sd.delta.sub(&shift).scale(&(&consts::qm() * &RatFuncQ::from_int(2)).inv());
    let gdiff = sd.gamma.sub(&expect);
    let compared = sd.gamma.exact_terms().count();
    let gamma_ok = gdiff.exact_terms().next().is_none() && compared > 0;
    all &= gamma_ok;
    CheckReport::new(
        "determinant.expansion",
        anchor,
        all,
        json!({
            "order": order,
            "coefficients": per_n,
            "gamma_matches_trace": gamma_ok,
            "gamma_coefficients_compared": compared,
            "level": if all { "literal" } else { "representation" },
        }),
    )
}
