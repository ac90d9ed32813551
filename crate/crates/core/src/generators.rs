//! Alternating generators as polynomials in `W0`, `W1` and the central `D_n`.
//!
//! The recursion runs `G_{n+1} -> G~_{n+1} -> W_{-n-1} -> W_{n+2}`:
//!
//! ```text
//! G_{n+1}  = (q^2-q^-2)/(2(q^{n+1}+q^{-n-1})) sum_{k=0}^{n} q^{-n+2k} (W_{-k} W_{n+1-k} + W_{k+1} W_{k-n})
//!          - (q-q^-1)/(2 rho (q^{n+1}+q^{-n-1})) sum_{k=0}^{n-1} q^{-n+1+2k} (G_{k+1} G~_{n-k} + G~_{k+1} G_{n-k})
//!          + (q+q^-1)/2 [W_{n+1}, W0] + D_{n+1}/2
//! G~_{n+1} = G_{n+1} + (q+q^-1) [W0, W_{n+1}]
//! W_{-n-1} = [W0, G_{n+1}]_q / rho
//! W_{n+2}  = [G_{n+1}, W1]_q / rho
//! ```

use std::collections::BTreeMap;

use serde_json::json;

use crate::free::{comm, qcomm, Gen, NCPoly};
use crate::report::CheckReport;
use crate::scalar::{consts, RatFuncQ};

#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub n_max: u32,
    rho: RatFuncQ,
    entries: BTreeMap<Gen, NCPoly>,
}

impl GeneratorTable {
    pub fn get(&self, g: Gen) -> Option<&NCPoly> {
        self.entries.get(&g)
    }

    pub fn entries(&self) -> &BTreeMap<Gen, NCPoly> {
        &self.entries
    }

    pub fn rho(&self) -> &RatFuncQ {
        &self.rho
    }

    /// Substitute table entries for the letters of an alternating polynomial.
    pub fn substitute(&self, p: &NCPoly) -> NCPoly {
        p.subst_letters(&|g| {
            self.entries
                .get(&g)
                .cloned()
                .unwrap_or_else(|| panic!("generator {g} beyond table depth {}", self.n_max))
        })
    }
}

fn w(g: Gen) -> NCPoly {
    NCPoly::gen(g)
}

/// Build `G_{n+1}, G~_{n+1}, W_{-n-1}, W_{n+2}` for `n <= n_max`.
pub fn build_generators(n_max: u32, rho: &RatFuncQ) -> GeneratorTable {
    let mut t: BTreeMap<Gen, NCPoly> = BTreeMap::new();
    t.insert(Gen::W0, w(Gen::W0));
    t.insert(Gen::W1, w(Gen::W1));
    let half = RatFuncQ::from_ratio(1, 2);
    let inv_rho = rho.inv();
    for n in 0..=n_max {
        let ni = n as i32;
        let qs = consts::qsum(ni + 1);
        let a = &consts::qdiff(2) / &(&qs * &RatFuncQ::from_int(2));
        let b = &consts::qm() / &(&(&qs * rho) * &RatFuncQ::from_int(2));
        let mut gn = NCPoly::zero();
        for k in 0..=n {
            let c = &a * &RatFuncQ::q_pow(-ni + 2 * k as i32);
            let s1 = &t[&Gen::Wm(k)] * &t[&Gen::Wp(n - k)];
            let s2 = &t[&Gen::Wp(k)] * &t[&Gen::Wm(n - k)];
            gn = &gn + &(&s1 + &s2).scale(&c);
        }
        for k in 0..n {
            let c = &b * &RatFuncQ::q_pow(-ni + 1 + 2 * k as i32);
            let s1 = &t[&Gen::G(k)] * &t[&Gen::Gt(n - k - 1)];
            let s2 = &t[&Gen::Gt(k)] * &t[&Gen::G(n - k - 1)];
            gn = &gn - &(&s1 + &s2).scale(&c);
        }
        let br = comm(&t[&Gen::Wp(n)], &t[&Gen::W0]);
        gn = &gn + &br.scale(&(&consts::qp() * &half));
        gn = &gn + &NCPoly::delta(n as usize + 1).scale(&half);
        let gtn = &gn + &comm(&t[&Gen::W0], &t[&Gen::Wp(n)]).scale(&consts::qp());
        let wmn = qcomm(&t[&Gen::W0], &gn).scale(&inv_rho);
        let wpn = qcomm(&gn, &t[&Gen::W1]).scale(&inv_rho);
        t.insert(Gen::G(n), gn);
        t.insert(Gen::Gt(n), gtn);
        t.insert(Gen::Wm(n + 1), wmn);
        t.insert(Gen::Wp(n + 1), wpn);
    }
    GeneratorTable {
        n_max,
        rho: rho.clone(),
        entries: t,
    }
}

/// `Y_{n+1}` in the alternating alphabet.
fn y_element(n: u32, rho: &RatFuncQ) -> NCPoly {
    let ni = n as i32;
    let mut y = &w(Gen::G(n)).scale(&RatFuncQ::q_pow(-ni - 1))
        + &w(Gen::Gt(n)).scale(&RatFuncQ::q_pow(ni + 1));
    for k in 0..=n {
        let c = &consts::qdiff(2) * &RatFuncQ::q_pow(-ni + 2 * k as i32);
        y = &y - &NCPoly::word(&[Gen::Wm(k), Gen::Wp(n - k)]).scale(&c);
    }
    let b = &consts::qm() / rho;
    for k in 0..n {
        let c = &b * &RatFuncQ::q_pow(-ni + 1 + 2 * k as i32);
        y = &y + &NCPoly::word(&[Gen::Gt(k), Gen::G(n - k - 1)]).scale(&c);
    }
    y
}

/// The central element `D_{n+1} = (Y_{n+1} + sigma(Y_{n+1}))/(q^{n+1} + q^{-n-1})`
/// written in alternating generators.
pub fn central_delta(n: u32, rho: &RatFuncQ) -> NCPoly {
    let y = y_element(n, rho);
    let sy = y.apply_sigma().expect("alternating alphabet");
    (&y + &sy).scale(&consts::qsum(n as i32 + 1).inv())
}

/// The quotient map that sends every central `D_n` to zero.
pub fn gamma_quotient(p: &NCPoly) -> NCPoly {
    p.drop_central()
}

/// `[X, [X, [X, Y]_q]_{q^-1}]`
pub fn qserre_expression(x: &NCPoly, y: &NCPoly) -> NCPoly {
    let inner = qcomm(x, y);
    let mid = crate::free::qcomm_pow(x, &inner, -1);
    comm(x, &mid)
}

/// If `a = c * b` for a scalar `c`, return `c`.
pub fn scalar_ratio(a: &NCPoly, b: &NCPoly) -> Option<RatFuncQ> {
    let (m, cb) = b.leading()?;
    let c = &a.coeff(m) / cb;
    (b.scale(&c) == *a).then_some(c)
}

/// The q-Serre relations as consequences of the generator recursion:
/// `[gamma(W_{-1}), W0]` is a multiple of the first Serre expression and
/// `[gamma(W_2), W1]` of the second.
pub fn qserre_consequence(rho: &RatFuncQ) -> CheckReport {
    let t = build_generators(0, rho);
    let w0 = w(Gen::W0);
    let w1 = w(Gen::W1);
    let lhs1 = comm(&gamma_quotient(&t.entries[&Gen::Wm(1)]), &w0);
    let lhs2 = comm(&gamma_quotient(&t.entries[&Gen::Wp(1)]), &w1);
    let s1 = qserre_expression(&w0, &w1);
    let s2 = qserre_expression(&w1, &w0);
    let c1 = scalar_ratio(&lhs1, &s1).filter(|c| !c.is_zero());
    let c2 = scalar_ratio(&lhs2, &s2).filter(|c| !c.is_zero());
    // The second statement is the sigma-image of the first.
    let mirrored = lhs1.apply_sigma().ok() == Some(lhs2.clone());
    let pass = c1.is_some() && c2.is_some() && mirrored;
    CheckReport::new(
        "serre.consequence",
        "[W_{-1}, W0] = 0 with W_{-1} from the recursion forces the q-Serre relations",
        pass,
        json!({
            "serre_W0": s1.to_string(),
            "factor_W0": c1.map(|c| c.to_string()),
            "serre_W1": s2.to_string(),
            "factor_W1": c2.map(|c| c.to_string()),
            "sigma_mirror": mirrored,
        }),
    )
}

/// Words over `{W0, W1}` with `a` letters `W0` and `b` letters `W1`.
fn words_of_degree(a: u32, b: u32) -> Vec<Vec<Gen>> {
    if a == 0 && b == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if a > 0 {
        for mut w in words_of_degree(a - 1, b) {
            w.insert(0, Gen::W0);
            out.push(w);
        }
    }
    if b > 0 {
        for mut w in words_of_degree(a, b - 1) {
            w.insert(0, Gen::W1);
            out.push(w);
        }
    }
    out
}

/// Spanning set of the degree-`deg` component of the two-sided ideal generated
/// by the two q-Serre expressions in the free algebra on `W0, W1`.
pub fn serre_ideal_component(deg: (u32, u32)) -> crate::relations::RelationSet {
    let w0 = w(Gen::W0);
    let w1 = w(Gen::W1);
    let gens = [
        ("serre0", qserre_expression(&w0, &w1), (3u32, 1u32)),
        ("serre1", qserre_expression(&w1, &w0), (1, 3)),
    ];
    let mut out = crate::relations::RelationSet::new();
    for (name, s, (da, db)) in gens.iter() {
        if deg.0 < *da || deg.1 < *db {
            continue;
        }
        for word in words_of_degree(deg.0 - da, deg.1 - db) {
            for cut in 0..=word.len() {
                let left = NCPoly::word(&word[..cut]);
                let right = NCPoly::word(&word[cut..]);
                let label = format!(
                    "{}*{name}*{}",
                    crate::free::Mono::word(word[..cut].to_vec()),
                    crate::free::Mono::word(word[cut..].to_vec())
                );
                out.push(label, &(&left * s) * &right);
            }
        }
    }
    out
}

/// Whether a polynomial in `W0, W1` (central coefficients allowed) lies in the
/// two-sided q-Serre ideal, decided degree by degree.
pub fn in_serre_ideal(p: &NCPoly) -> bool {
    let mut by_central: BTreeMap<Vec<u32>, NCPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        by_central
            .entry(m.central.clone())
            .or_default()
            .add_term(crate::free::Mono::word(m.word.clone()), c.clone());
    }
    by_central.values().all(|part| {
        part.homogeneous_components().iter().all(|(deg, comp)| {
            crate::span::span_membership(comp, &serre_ideal_component(*deg)).is_some()
        })
    })
}

fn word(letters: &[Gen]) -> NCPoly {
    NCPoly::word(letters)
}

/// `G1`, `W_{-1}`, `G2` with the central `D1`, `D2` as written out by hand.
fn low_generators_by_hand(rho: &RatFuncQ) -> [(Gen, NCPoly); 3] {
    const W0: Gen = Gen::W0;
    const W1: Gen = Gen::W1;
    let q = RatFuncQ::q_pow;
    let half = RatFuncQ::from_ratio(1, 2);
    let d1 = NCPoly::delta(1);
    let g1_core = &word(&[W1, W0]).scale(&q(1)) - &word(&[W0, W1]).scale(&q(-1));
    let g1 = &g1_core + &d1.scale(&half);

    let cubic = &(&word(&[W0, W1, W0]).scale(&consts::qsum(2)) - &word(&[W0, W0, W1])) - &word(&[W1, W0, W0]);
    let lin = &consts::qm() / &(rho * &RatFuncQ::from_int(2));
    let wm1 = &cubic.scale(&rho.inv()) + &(&d1 * &w(W0)).scale(&lin);

    let lq = RatFuncQ::laurent_q;
    let quartic = [
        (lq(&[(-3, 1), (-1, 1)]), [W0, W0, W1, W1]),
        (lq(&[(3, -1), (1, -1)]), [W1, W1, W0, W0]),
        (lq(&[(-3, 1), (3, -1)]), [W0, W1, W1, W0]),
        (lq(&[(-3, 1), (3, -1)]), [W1, W0, W0, W1]),
        (lq(&[(-5, -1), (-3, -1), (-1, -2)]), [W0, W1, W0, W1]),
        (lq(&[(5, 1), (3, 1), (1, 2)]), [W1, W0, W1, W0]),
    ];
    let pref = (rho * &consts::qsum(2)).inv();
    let mut g2 = NCPoly::zero();
    for (c, letters) in &quartic {
        g2 = &g2 + &word(letters).scale(&(c * &pref));
    }
    g2 = &g2 + &(&d1 * &g1_core).scale(&lin);
    let sq = &consts::qm() / &(&(rho * &consts::qsum(2)) * &RatFuncQ::from_int(4));
    g2 = &g2 - &d1.pow(2).scale(&sq);
    g2 = &g2 + &NCPoly::delta(2).scale(&half);
    [(Gen::G(0), g1), (Gen::Wm(1), wm1), (Gen::G(1), g2)]
}

/// `D1`, `D2` in alternating generators as written out by hand.
fn low_deltas_by_hand(rho: &RatFuncQ) -> [NCPoly; 2] {
    const W0: Gen = Gen::W0;
    const W1: Gen = Gen::W1;
    let q = RatFuncQ::q_pow;
    let d1 = &(&w(Gen::G(0)) + &w(Gen::Gt(0))) - &(&word(&[W0, W1]) + &word(&[W1, W0])).scale(&consts::qm());
    let a = &consts::qdiff(2) / &consts::qsum(2);
    let mut d2 = &w(Gen::G(1)) + &w(Gen::Gt(1));
    for (c, letters) in [
        (q(-1), [W0, Gen::Wp(1)]),
        (q(1), [Gen::Wp(1), W0]),
        (q(-1), [W1, Gen::Wm(1)]),
        (q(1), [Gen::Wm(1), W1]),
    ] {
        d2 = &d2 - &word(&letters).scale(&(&c * &a));
    }
    let gg = &word(&[Gen::Gt(0), Gen::G(0)]) + &word(&[Gen::G(0), Gen::Gt(0)]);
    d2 = &d2 + &gg.scale(&(&consts::qm() / &(&consts::qsum(2) * rho)));
    [d1, d2]
}

/// Recursion output against the low generators and central elements written
/// out by hand, and substitution of the table into `D1`, `D2`.
pub fn examples_report(rho: &RatFuncQ) -> CheckReport {
    let t = build_generators(1, rho);
    let mut rows = Vec::new();
    let mut pass = true;
    for (g, want) in low_generators_by_hand(rho) {
        let ok = t.get(g) == Some(&want);
        pass &= ok;
        rows.push(json!({ "generator": g.to_string(), "literal": ok }));
    }
    for (n, want) in low_deltas_by_hand(rho).iter().enumerate() {
        let built = central_delta(n as u32, rho);
        let ok = built == *want;
        let symbol = t.substitute(want) == NCPoly::delta(n + 1);
        pass &= ok && symbol;
        rows.push(json!({ "central": format!("D{}", n + 1), "literal": ok, "substitutes_to_symbol": symbol }));
    }
    CheckReport::new(
        "generators.examples",
        "G1, W_{-1}, G2 from the recursion and D1, D2 in alternating generators; substituting the table into D_n gives D_n",
        pass,
        json!({ "rho": rho.to_string(), "items": rows }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::FMParams;

    fn rho() -> RatFuncQ {
        FMParams::default().rho_bar().clone()
    }

    #[test]
    fn entries_homogeneous() {
        let t = build_generators(2, &rho());
        for (g, p) in t.entries() {
            assert_eq!(p.homogeneous_degree(), Some(g.deg()), "{g}");
        }
    }

    #[test]
    fn self_consistency_of_deltas() {
        let r = rho();
        let t = build_generators(2, &r);
        for n in 0..=2 {
            let d = t.substitute(&central_delta(n, &r));
            assert_eq!(d, NCPoly::delta(n as usize + 1), "n = {n}");
        }
    }

    #[test]
    fn sigma_compatibility() {
        let r = rho();
        let t = build_generators(2, &r);
        let swap = |p: &NCPoly| {
            p.subst_letters(&|g| NCPoly::gen(g.sigma()))
        };
        for (g, p) in t.entries() {
            let d = &swap(p) - t.get(g.sigma()).unwrap();
            // deeper entries only agree modulo the q-Serre ideal
            if !matches!(g, Gen::G(2) | Gen::Gt(2) | Gen::Wm(2) | Gen::Wm(3) | Gen::Wp(2) | Gen::Wp(3)) {
                assert!(d.is_zero(), "{g}");
            }
            assert!(in_serre_ideal(&d), "{g}");
        }
    }

    #[test]
    fn serre_factor_is_inverse_rho() {
        let r = rho();
        let rep = qserre_consequence(&r);
        assert!(rep.passed(), "{:?}", rep.details);
        assert_eq!(rep.details["factor_W0"], json!(r.inv().to_string()));
    }
}
