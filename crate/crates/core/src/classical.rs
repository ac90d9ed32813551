//! The `q -> 1` side: the Lie-type algebra with relations
//!
//! ```text
//! [w_{-l}, w_{k+1}] = (g~_{k+l+1} - g_{k+l+1})/2
//! [g~_{k+1}, w_{-l}] = [w_{-l}, g_{k+1}] = rho_c w_{-k-l-1}
//! [w_{l+1}, g~_{k+1}] = [g_{k+1}, w_{l+1}] = rho_c w_{l+k+2}
//! [w_{-k}, w_{-l}] = [w_{k+1}, w_{l+1}] = [g_{k+1}, g_{l+1}] = [g~_{k+1}, g~_{l+1}] = 0
//! ```
//!
//! with `rho_c = 16`, its presentation by the non-standard classical
//! Yang-Baxter algebra
//!
//! ```text
//! [B1(u), B2(v)] = [r21(v,u), B1(u)] + [B2(v), r12(u,v)]
//! B(u) = 1/2 | g-(u)/4    u w-(u) |        r(u,v) = 1/(u^2/v^2 - 1) | 1  0     0    0 |
//!            | u w+(u)    g+(u)/4 |                                 | 0  -1    2u/v 0 |
//!                                                                   | 0  2u/v  -1   0 |
//!                                                                   | 0  0     0    1 |
//! ```
//!
//! with `w+(u) = sum_k w_{-k} U^{-k-1}`, `U = u^2/2`, and its realization in
//! the loop algebra `gl2 ⊗ C[t, t^-1]` at zero central charge. The classical
//! generators reuse the letters of the alternating alphabet.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fm::{relations_from_residual, within_index};
use crate::free::{comm, Gen, Mono, NCPoly};
use crate::generators::build_generators;
use crate::matrix::RepMatrix;
use crate::relations::RelationSet;
use crate::report::CheckReport;
use crate::scalar::RatFuncQ;
use crate::series::{LaurentSeriesMatrix, Series2};
use crate::span::{compare_spans_within, SpanComparison};

/// Commutative polynomial with rational coefficients in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * x_i^e`
    pub fn monomial(nvars: usize, i: usize, e: u32, c: i64) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = e;
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(exp, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let slot = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Dense square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    data: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn from_rows(n: usize, data: Vec<MPoly>) -> Self {
        assert_eq!(data.len(), n * n);
        PolyMatrix { n, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.data[i * self.n + j]
    }

    pub fn add(&self, o: &Self) -> Self {
        PolyMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &MPoly) -> Self {
        PolyMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let nv = self.data[0].nvars;
        let mut data = vec![MPoly::zero(nv); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        data[i * n + j] = data[i * n + j].add(&a.mul(b));
                    }
                }
            }
        }
        PolyMatrix { n, data }
    }

    pub fn comm(&self, o: &Self) -> Self {
        let ab = self.mul(o);
        let ba = o.mul(self);
        PolyMatrix {
            n: self.n,
            data: ab.data.iter().zip(&ba.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MPoly::is_zero)
    }

    /// `P m P` for a 4x4 matrix on two legs.
    pub fn flip(&self) -> Self {
        let swap = |i: usize| (i % 2) * 2 + i / 2;
        let mut data = self.data.clone();
        for i in 0..4 {
            for j in 0..4 {
                data[swap(i) * 4 + swap(j)] = self.get(i, j).clone();
            }
        }
        PolyMatrix { n: 4, data }
    }

    /// A 4x4 matrix acting on legs `(a, b)` of a threefold tensor product,
    /// leg 0 being the most significant.
    pub fn on_legs(&self, legs: (usize, usize)) -> Self {
        let nv = self.data[0].nvars;
        let bit = |x: usize, leg: usize| (x >> (2 - leg)) & 1;
        let mut data = vec![MPoly::zero(nv); 64];
        for r in 0..8 {
            for c in 0..8 {
                let other = 3 - legs.0 - legs.1;
                if bit(r, other) != bit(c, other) {
                    continue;
                }
                let i = bit(r, legs.0) * 2 + bit(r, legs.1);
                let j = bit(c, legs.0) * 2 + bit(c, legs.1);
                data[r * 8 + c] = self.get(i, j).clone();
            }
        }
        PolyMatrix { n: 8, data }
    }
}

fn var(i: usize, e: u32, c: i64) -> MPoly {
    MPoly::monomial(3, i, e, c)
}

/// Numerator `N(a, b)` of `r(a, b) = N/(a^2 - b^2)` in the variables `x_a`, `x_b`.
fn ns_numerator(a: usize, b: usize) -> PolyMatrix {
    let z = MPoly::zero(3);
    let vb = var(b, 2, 1);
    let mix = var(a, 1, 2).mul(&var(b, 1, 1));
    PolyMatrix::from_rows(
        4,
        vec![
            vb.clone(), z.clone(), z.clone(), z.clone(),
            z.clone(), vb.neg(), mix.clone(), z.clone(),
            z.clone(), mix, vb.neg(), z.clone(),
            z.clone(), z.clone(), z, vb,
        ],
    )
}

fn sq_diff(a: usize, b: usize) -> MPoly {
    var(a, 2, 1).sub(&var(b, 2, 1))
}

/// The non-standard classical Yang-Baxter equation for `r(u, v)`, multiplied
/// through by `(u1^2-u2^2)(u1^2-u3^2)(u2^2-u3^2)`, and the symmetry `r21 = r12`.
pub fn check_ns_cybe() -> CheckReport {
    let n13 = ns_numerator(0, 2).on_legs((0, 2));
    let n23 = ns_numerator(1, 2).on_legs((1, 2));
    let n12 = ns_numerator(0, 1).on_legs((0, 1));
    // r21(u2, u1) = P N(u2, u1) P / (u2^2 - u1^2)
    let n21 = ns_numerator(1, 0).flip().on_legs((0, 1));
    let lhs = n13.comm(&n23).scale(&sq_diff(0, 1));
    let rhs = n21
        .comm(&n13)
        .scale(&sq_diff(1, 2).neg())
        .add(&n23.comm(&n12).scale(&sq_diff(0, 2)));
    let residual = lhs.add(&rhs.scale(&MPoly::int(3, -1)));
    let symmetric = ns_numerator(0, 1).flip() == ns_numerator(0, 1);
    CheckReport::new(
        "classical.ns-cybe",
        "[r13(u1,u3), r23(u2,u3)] = [r21(u2,u1), r13(u1,u3)] + [r23(u2,u3), r12(u1,u2)], r21 = r12",
        residual.is_zero() && symmetric,
        json!({ "residual_zero": residual.is_zero(), "r21_equals_r12": symmetric }),
    )
}

/// `(z_b - z_a) r(z_a/z_b)` made homogeneous: `z_b (z - 1) r(z)` at `z = z_a/z_b`.
fn cybe_numerator(a: usize, b: usize) -> PolyMatrix {
    let z = MPoly::zero(3);
    let half = |p: MPoly| p.mul(&MPoly::constant(3, BigRational::new(1.into(), 2.into())));
    let s = half(var(a, 1, 1).add(&var(b, 1, 1)));
    PolyMatrix::from_rows(
        4,
        vec![
            s.neg(), z.clone(), z.clone(), z.clone(),
            z.clone(), s.clone(), var(b, 1, -2), z.clone(),
            z.clone(), var(a, 1, -2), s.clone(), z.clone(),
            z.clone(), z.clone(), z, s.neg(),
        ],
    )
}

/// The classical Yang-Baxter equation for the traceless `r(z)`, multiplied
/// through by `(z1-z2)(z1-z3)(z2-z3)`.
pub fn check_cybe() -> CheckReport {
    let m13 = cybe_numerator(0, 2).on_legs((0, 2));
    let m23 = cybe_numerator(1, 2).on_legs((1, 2));
    let m12 = cybe_numerator(0, 1).on_legs((0, 1));
    let d = |a: usize, b: usize| var(a, 1, 1).sub(&var(b, 1, 1));
    let lhs = m13.comm(&m23).scale(&d(0, 1));
    let rhs = m13.comm(&m12).scale(&d(1, 2)).add(&m23.comm(&m12).scale(&d(0, 2)));
    let residual = lhs.add(&rhs.scale(&MPoly::int(3, -1)));
    CheckReport::new(
        "classical.cybe",
        "[r13(z1/z3), r23(z2/z3)] = [r13(z1/z3) + r23(z2/z3), r12(z1/z2)]",
        residual.is_zero(),
        json!({ "residual_zero": residual.is_zero() }),
    )
}

fn wm(k: u32) -> NCPoly {
    NCPoly::gen(Gen::Wm(k))
}
fn wp(k: u32) -> NCPoly {
    NCPoly::gen(Gen::Wp(k))
}
fn g(k: u32) -> NCPoly {
    NCPoly::gen(Gen::G(k))
}
fn gt(k: u32) -> NCPoly {
    NCPoly::gen(Gen::Gt(k))
}

/// Every defining instance with `k, l <= k_max`.
pub fn classical_relations(k_max: u32, rho_c: &RatFuncQ) -> RelationSet {
    let mut out = RelationSet::new();
    let half = RatFuncQ::from_ratio(1, 2);
    for k in 0..=k_max {
        for l in 0..=k_max {
            let i = format!("[{k},{l}]");
            let n = k + l;
            out.push(format!("cl-ww{i}"), &comm(&wm(l), &wp(k)) - &(&gt(n) - &g(n)).scale(&half));
            let m = wm(n + 1).scale(rho_c);
            out.push(format!("cl-wm.a{i}"), &comm(&gt(k), &wm(l)) - &m);
            out.push(format!("cl-wm.b{i}"), &comm(&wm(l), &g(k)) - &m);
            let p = wp(n + 1).scale(rho_c);
            out.push(format!("cl-wp.a{i}"), &comm(&wp(l), &gt(k)) - &p);
            out.push(format!("cl-wp.b{i}"), &comm(&g(k), &wp(l)) - &p);
            out.push(format!("cl-same.wm{i}"), comm(&wm(k), &wm(l)));
            out.push(format!("cl-same.wp{i}"), comm(&wp(k), &wp(l)));
            out.push(format!("cl-same.g{i}"), comm(&g(k), &g(l)));
            out.push(format!("cl-same.gt{i}"), comm(&gt(k), &gt(l)));
        }
    }
    out
}

/// `[g_{k+1}, g~_{l+1}] = 0`: a consequence (through `g + g~` being central)
/// that the matrix presentation produces directly.
pub fn classical_derived_relations(k_max: u32) -> RelationSet {
    let mut out = RelationSet::new();
    for k in 0..=k_max {
        for l in 0..=k_max {
            out.push(format!("cl-g-gt[{k},{l}]"), comm(&g(k), &gt(l)));
        }
    }
    out
}

/// `c * sum_{k < order} X_k 2^{k+1} u^{-2k-2+shift}`
fn classical_series(order: u32, letter: fn(u32) -> Gen, c: &RatFuncQ, shift: i32) -> Series2<NCPoly> {
    let mut s = Series2::zero();
    for k in 0..order {
        let coeff = c * &RatFuncQ::from_int(1 << (k + 1));
        s.add_term((-2 * k as i32 - 2 + shift, 0), NCPoly::gen(letter(k)).scale(&coeff));
    }
    s.with_cut(0, -2 * order as i32 + shift)
}

/// `B(u)` truncated after `U^{-order}`.
pub fn build_b(order: u32) -> LaurentSeriesMatrix<NCPoly> {
    let eighth = RatFuncQ::from_ratio(1, 8);
    let half = RatFuncQ::from_ratio(1, 2);
    LaurentSeriesMatrix::from_entries(
        2,
        vec![
            classical_series(order, Gen::Gt, &eighth, 0),
            classical_series(order, Gen::Wp, &half, 1),
            classical_series(order, Gen::Wm, &half, 1),
            classical_series(order, Gen::G, &eighth, 0),
        ],
    )
}

/// `N(x, y)` over `NCPoly` constants, `x`, `y` the exponents of `u`, `v`.
fn ns_series(first_is_u: bool) -> LaurentSeriesMatrix<NCPoly> {
    let mono = |e: (i32, i32), c: i64| Series2::monomial(e, NCPoly::constant(RatFuncQ::from_int(c)));
    let (b2, mix) = if first_is_u { ((0, 2), (1, 1)) } else { ((2, 0), (1, 1)) };
    let z = Series2::zero;
    LaurentSeriesMatrix::from_entries(
        4,
        vec![
            mono(b2, 1), z(), z(), z(),
            z(), mono(b2, -1), mono(mix, 2), z(),
            z(), mono(mix, 2), mono(b2, -1), z(),
            z(), z(), z(), mono(b2, 1),
        ],
    )
}

/// `(u^2 - v^2)` times both sides of the matrix equation, subtracted.
pub fn classical_residual(b: &LaurentSeriesMatrix<NCPoly>) -> LaurentSeriesMatrix<NCPoly> {
    let b1 = b.left_embed();
    let b2 = b.map_series(|s| s.swap_vars()).right_embed();
    let d = Series2::monomial((2, 0), NCPoly::one()).sub(&Series2::monomial((0, 2), NCPoly::one()));
    let lhs = b1.mul(&b2).sub(&b2.mul(&b1)).map_series(|s| s.mul(&d));
    // r21(v,u) (u^2-v^2) = -N(v,u); r12(u,v) (u^2-v^2) = N(u,v)
    let n_uv = ns_series(true);
    let n_vu = ns_series(false);
    let rhs = b1.mul(&n_vu).sub(&n_vu.mul(&b1)).add(&b2.mul(&n_uv).sub(&n_uv.mul(&b2)));
    lhs.sub(&rhs)
}

pub fn extract_classical_fm(order: u32) -> Result<RelationSet> {
    if order < 2 {
        return Err(Error::TruncationTooSmall { order, min: 2 });
    }
    Ok(relations_from_residual(&classical_residual(&build_b(order))))
}

/// Truncation used to compare at `order`. Centrality of `g_{k+1} + g~_{k+1}`
/// against `w_{-l}` only appears at `U^{-k-l-2}`, so the guard grows with the
/// order instead of staying fixed.
pub fn classical_extraction_order(order: u32) -> u32 {
    2 * order
}

/// Span of the relations read off the matrix equation against the defining
/// instances, on words of generators with index below `order`.
pub fn classical_fm_equivalence(order: u32) -> Result<SpanComparison> {
    if order < 1 {
        return Err(Error::TruncationTooSmall { order, min: 1 });
    }
    let extracted = extract_classical_fm(classical_extraction_order(order))?;
    let rho_c = RatFuncQ::from_int(16);
    let claimed = classical_relations(order - 1, &rho_c).union(&classical_derived_relations(order - 1));
    let window = |m: &Mono| within_index(m, order);
    Ok(compare_spans_within(&extracted, &claimed, Some(&window)))
}

pub fn classical_fm_report(order: u32) -> CheckReport {
    let anchor = "[B1(u), B2(v)] = [r21(v,u), B1(u)] + [B2(v), r12(u,v)] presents the classical relations";
    match classical_fm_equivalence(order) {
        Ok(c) => CheckReport::new(
            "classical.fm",
            anchor,
            c.equal(),
            json!({ "order": order, "extraction_order": classical_extraction_order(order), "comparison": c }),
        ),
        Err(e) => CheckReport::new("classical.fm", anchor, false, json!({ "error": e.to_string() })),
    }
}

/// Element of `gl2 ⊗ C[t, t^-1]`: exponent of `t` in the first variable,
/// 2x2 matrix coefficients.
pub type LoopElement = Series2<RepMatrix>;

/// Which alternating subalgebra of the loop algebra is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Nonnegative modes.
    Right,
    /// Negative modes.
    Left,
}

fn unit(i: usize, j: usize) -> RepMatrix {
    let mut m = RepMatrix::zero(2);
    m.set(i, j, RatFuncQ::one());
    m
}

fn loop_term(t: i32, m: RepMatrix, c: RatFuncQ) -> LoopElement {
    Series2::monomial((t, 0), m.scale(&c))
}

fn pow2(e: i32) -> RatFuncQ {
    RatFuncQ::from_int(2).pow(e)
}

/// Image of a classical generator:
/// right `w_{-k} -> 2^{1-k} x-_{k+1}`, `w_{k+1} -> 2^{1-k} x+_k`,
/// `g_{k+1} -> 2^{3-k} eps_{1,k+1}`, `g~_{k+1} -> 2^{3-k} eps_{2,k+1}`;
/// left with modes `-k`, `-k-1`, `-k-1`, `-k-1`.
pub fn loop_image(g: Gen, side: Side) -> LoopElement {
    let kk = |k: u32| k as i32;
    let pick = |r: i32, l: i32| if side == Side::Right { r } else { l };
    match g {
        Gen::Wm(k) => loop_term(pick(kk(k) + 1, -kk(k)), unit(1, 0), pow2(1 - kk(k))),
        Gen::Wp(k) => loop_term(pick(kk(k), -kk(k) - 1), unit(0, 1), pow2(1 - kk(k))),
        Gen::G(k) => loop_term(pick(kk(k) + 1, -kk(k) - 1), unit(0, 0), pow2(3 - kk(k))),
        Gen::Gt(k) => loop_term(pick(kk(k) + 1, -kk(k) - 1), unit(1, 1), pow2(3 - kk(k))),
        other => panic!("{other} has no loop image"),
    }
}

/// Image of the central `delta_m = g_m + g~_m`.
pub fn loop_delta(m: usize, side: Side) -> LoopElement {
    let m = m as i32;
    let t = if side == Side::Right { m } else { -m };
    loop_term(t, RepMatrix::identity(2), pow2(4 - m))
}

fn loop_eval(p: &NCPoly, side: Side) -> LoopElement {
    let one = Series2::monomial((0, 0), RepMatrix::identity(2));
    p.substitute(&one, &|g| loop_image(g, side), &|m| loop_delta(m, side))
}

/// Every classical relation (defining and derived) with indices `<= k_max`
/// vanishes in both loop realizations.
pub fn loop_realization_check(k_max: u32) -> CheckReport {
    let rho_c = RatFuncQ::from_int(16);
    let rels = classical_relations(k_max, &rho_c).union(&classical_derived_relations(k_max));
    let mut failed = Vec::new();
    for side in [Side::Right, Side::Left] {
        for r in &rels {
            if !loop_eval(&r.poly, side).is_zero() {
                failed.push(format!("{:?}:{}", side, r.label));
            }
        }
    }
    CheckReport::new(
        "classical.loop-realization",
        "w_{-k} -> 2^{1-k} x-_{k+1}, w_{k+1} -> 2^{1-k} x+_k, g_{k+1} -> 2^{3-k} eps_{1,k+1}, g~_{k+1} -> 2^{3-k} eps_{2,k+1} (and the negative-mode variant) respect every relation",
        failed.is_empty(),
        json!({ "k_max": k_max, "relations": rels.len(), "sides": ["right", "left"], "failed": failed }),
    )
}

/// The generator polynomials at `rho = 16`, `q = 1`.
pub fn specialize_generators_q1(n_max: u32) -> Result<BTreeMap<Gen, NCPoly>> {
    let t = build_generators(n_max, &RatFuncQ::from_int(16));
    let one = BigRational::one();
    t.entries()
        .iter()
        .map(|(g, p)| p.eval_coeffs(&one).map(|x| (*g, x)))
        .collect()
}

/// Pole-freeness at `q = 1`, the central combination `g + g~ = delta`, and
/// agreement of the specialized polynomials with the loop images.
pub fn specialization_check(n_max: u32) -> CheckReport {
    let anchor = "generator polynomials at q = 1, rho = 16 have no poles and realize the classical generators";
    let table = match specialize_generators_q1(n_max) {
        Ok(t) => t,
        Err(e) => return CheckReport::new("classical.specialization", anchor, false, json!({ "error": e.to_string() })),
    };
    let mut central_ok = true;
    for n in 0..=n_max {
        let sum = &table[&Gen::G(n)] + &table[&Gen::Gt(n)];
        central_ok &= sum == NCPoly::delta(n as usize + 1);
    }
    let mut mismatched = Vec::new();
    for side in [Side::Right, Side::Left] {
        for (g, p) in &table {
            if !loop_eval(p, side).sub(&loop_image(*g, side)).is_zero() {
                mismatched.push(format!("{:?}:{}", side, g));
            }
        }
    }
    let letters: BTreeSet<String> = table.keys().map(|g| g.to_string()).collect();
    CheckReport::new(
        "classical.specialization",
        anchor,
        central_ok && mismatched.is_empty(),
        json!({
            "n_max": n_max,
            "generators": letters,
            "g_plus_gt_is_delta": central_ok,
            "loop_mismatches": mismatched,
        }),
    )
}
