//! Relation families of the alternating algebra, instantiated at bounded indices.
//!
//! Every relation is stored as `LHS - RHS`. Family tags:
//!
//! | tag | identity |
//! |-----|----------|
//! | `ww-lin` | `[W0, W_{k+1}] = [W_{-k}, W1] = (G~_{k+1} - G_{k+1})/(q+q^-1)` |
//! | `wm-lin` | `[W0, G_{k+1}]_q = [G~_{k+1}, W0]_q = rho W_{-k-1}` |
//! | `wp-lin` | `[G_{k+1}, W1]_q = [W1, G~_{k+1}]_q = rho W_{k+2}` |
//! | `ww-same` | `[W_{-k}, W_{-l}] = 0`, `[W_{k+1}, W_{l+1}] = 0` |
//! | `ww-mix` | `[W_{-k}, W_{l+1}] + [W_{k+1}, W_{-l}] = 0` |
//! | `wm-g`, `wm-gt` | `[W_{-k}, X_{l+1}] + [X_{k+1}, W_{-l}] = 0` for `X = G, G~` |
//! | `wp-g`, `wp-gt` | `[W_{k+1}, X_{l+1}] + [X_{k+1}, W_{l+1}] = 0` for `X = G, G~` |
//! | `gg-same` | `[G_{k+1}, G_{l+1}] = 0`, `[G~_{k+1}, G~_{l+1}] = 0` |
//! | `g-gt` | `[G~_{k+1}, G_{l+1}] + [G_{k+1}, G~_{l+1}] = 0` |
//!
//! and the consequences
//!
//! | tag | identity |
//! |-----|----------|
//! | `q-wg` | `[W_{-k}, G_l]_q = [W_{-l}, G_k]_q`, `[G_k, W_{l+1}]_q = [G_l, W_{k+1}]_q` |
//! | `q-wgt` | `[G~_k, W_{-l}]_q = [G~_l, W_{-k}]_q`, `[W_{l+1}, G~_k]_q = [W_{k+1}, G~_l]_q` |
//! | `ggt-a` | `[G_k, G~_{l+1}] - [G_l, G~_{k+1}] = rho (q+q^-1)([W_{-l}, W_{k+1}]_q - [W_{-k}, W_{l+1}]_q)` |
//! | `ggt-b` | `[G~_k, G_{l+1}] - [G~_l, G_{k+1}] = rho (q+q^-1)([W_{l+1}, W_{-k}]_q - [W_{k+1}, W_{-l}]_q)` |
//! | `qggt-a` | `[G_{k+1}, G~_{l+1}]_q - [G_{l+1}, G~_{k+1}]_q = rho (q+q^-1)([W_{-l}, W_{k+2}] - [W_{-k}, W_{l+2}])` |
//! | `qggt-b` | `[G~_{k+1}, G_{l+1}]_q - [G~_{l+1}, G_{k+1}]_q = rho (q+q^-1)([W_{l+1}, W_{-k-1}] - [W_{k+1}, W_{-l-1}])` |
//!
//! In the consequences a subscript may be zero; `G_0 = G~_0` is the scalar
//! `rho/(q - q^-1)`, the constant term of the generating functions in `K(u)`.

use std::collections::HashSet;

use crate::free::{comm, qcomm, Gen, NCPoly};
use crate::scalar::{consts, RatFuncQ};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub poly: NCPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    relations: Vec<Relation>,
    seen: HashSet<String>,
}

impl RelationSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a relation unless it is zero or a scalar multiple of one already present.
    pub fn push(&mut self, label: impl Into<String>, poly: NCPoly) -> bool {
        if poly.is_zero() {
            return false;
        }
        let (_, lead) = poly.leading().expect("nonzero");
        let key = poly.scale(&lead.inv()).to_string();
        if !self.seen.insert(key) {
            return false;
        }
        self.relations.push(Relation {
            label: label.into(),
            poly,
        });
        true
    }

    pub fn extend(&mut self, other: &RelationSet) {
        for r in &other.relations {
            self.push(r.label.clone(), r.poly.clone());
        }
    }

    pub fn union(&self, other: &RelationSet) -> RelationSet {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Relation> {
        self.relations.iter()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn get(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label == label)
    }

    /// Keep only relations satisfying the predicate.
    pub fn filter(&self, keep: impl Fn(&Relation) -> bool) -> RelationSet {
        let mut out = RelationSet::new();
        for r in &self.relations {
            if keep(r) {
                out.push(r.label.clone(), r.poly.clone());
            }
        }
        out
    }

    /// Apply a map to every relation, keeping labels.
    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly) -> RelationSet {
        let mut out = RelationSet::new();
        for r in &self.relations {
            out.push(r.label.clone(), f(&r.poly));
        }
        out
    }
}

impl<'a> IntoIterator for &'a RelationSet {
    type Item = &'a Relation;
    type IntoIter = std::slice::Iter<'a, Relation>;
    fn into_iter(self) -> Self::IntoIter {
        self.relations.iter()
    }
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

/// Every instance of the defining families with `k, l <= k_max`.
pub fn defining_relations(k_max: u32, rho: &RatFuncQ) -> RelationSet {
    let mut out = RelationSet::new();
    let w0 = wm(0);
    let w1 = wp(0);
    let inv_qp = consts::qp().inv();
    for k in 0..=k_max {
        let lin = (&gt(k) - &g(k)).scale(&inv_qp);
        out.push(format!("ww-lin.a[{k}]"), &comm(&w0, &wp(k)) - &lin);
        out.push(format!("ww-lin.b[{k}]"), &comm(&wm(k), &w1) - &lin);
        let rm = wm(k + 1).scale(rho);
        out.push(format!("wm-lin.a[{k}]"), &qcomm(&w0, &g(k)) - &rm);
        out.push(format!("wm-lin.b[{k}]"), &qcomm(&gt(k), &w0) - &rm);
        let rp = wp(k + 1).scale(rho);
        out.push(format!("wp-lin.a[{k}]"), &qcomm(&g(k), &w1) - &rp);
        out.push(format!("wp-lin.b[{k}]"), &qcomm(&w1, &gt(k)) - &rp);
    }
    for k in 0..=k_max {
        for l in 0..=k_max {
            let i = format!("[{k},{l}]");
            out.push(format!("ww-same.a{i}"), comm(&wm(k), &wm(l)));
            out.push(format!("ww-same.b{i}"), comm(&wp(k), &wp(l)));
            out.push(
                format!("ww-mix{i}"),
                &comm(&wm(k), &wp(l)) + &comm(&wp(k), &wm(l)),
            );
            out.push(format!("wm-g{i}"), &comm(&wm(k), &g(l)) + &comm(&g(k), &wm(l)));
            out.push(format!("wm-gt{i}"), &comm(&wm(k), &gt(l)) + &comm(&gt(k), &wm(l)));
            out.push(format!("wp-g{i}"), &comm(&wp(k), &g(l)) + &comm(&g(k), &wp(l)));
            out.push(format!("wp-gt{i}"), &comm(&wp(k), &gt(l)) + &comm(&gt(k), &wp(l)));
            out.push(format!("gg-same.a{i}"), comm(&g(k), &g(l)));
            out.push(format!("gg-same.b{i}"), comm(&gt(k), &gt(l)));
            out.push(format!("g-gt{i}"), &comm(&gt(k), &g(l)) + &comm(&g(k), &gt(l)));
        }
    }
    out
}

/// `G_n` with the convention `G_0 = rho/(q - q^-1)`.
fn g_sub(n: u32, rho: &RatFuncQ) -> NCPoly {
    if n == 0 {
        NCPoly::constant(rho / &consts::qm())
    } else {
        g(n - 1)
    }
}

fn gt_sub(n: u32, rho: &RatFuncQ) -> NCPoly {
    if n == 0 {
        NCPoly::constant(rho / &consts::qm())
    } else {
        gt(n - 1)
    }
}

/// Every instance of the consequence families with `k, l <= k_max`.
pub fn derived_relations(k_max: u32, rho: &RatFuncQ) -> RelationSet {
    let mut out = RelationSet::new();
    let c = rho * &consts::qp();
    for k in 0..=k_max {
        for l in 0..=k_max {
            let i = format!("[{k},{l}]");
            out.push(
                format!("q-wg.a{i}"),
                &qcomm(&wm(k), &g_sub(l, rho)) - &qcomm(&wm(l), &g_sub(k, rho)),
            );
            out.push(
                format!("q-wg.b{i}"),
                &qcomm(&g_sub(k, rho), &wp(l)) - &qcomm(&g_sub(l, rho), &wp(k)),
            );
            out.push(
                format!("q-wgt.a{i}"),
                &qcomm(&gt_sub(k, rho), &wm(l)) - &qcomm(&gt_sub(l, rho), &wm(k)),
            );
            out.push(
                format!("q-wgt.b{i}"),
                &qcomm(&wp(l), &gt_sub(k, rho)) - &qcomm(&wp(k), &gt_sub(l, rho)),
            );
            let lhs = &comm(&g_sub(k, rho), &gt(l)) - &comm(&g_sub(l, rho), &gt(k));
            let rhs = (&qcomm(&wm(l), &wp(k)) - &qcomm(&wm(k), &wp(l))).scale(&c);
            out.push(format!("ggt-a{i}"), &lhs - &rhs);
            let lhs = &comm(&gt_sub(k, rho), &g(l)) - &comm(&gt_sub(l, rho), &g(k));
            let rhs = (&qcomm(&wp(l), &wm(k)) - &qcomm(&wp(k), &wm(l))).scale(&c);
            out.push(format!("ggt-b{i}"), &lhs - &rhs);
            let lhs = &qcomm(&g(k), &gt(l)) - &qcomm(&g(l), &gt(k));
            let rhs = (&comm(&wm(l), &wp(k + 1)) - &comm(&wm(k), &wp(l + 1))).scale(&c);
            out.push(format!("qggt-a{i}"), &lhs - &rhs);
            let lhs = &qcomm(&gt(k), &g(l)) - &qcomm(&gt(l), &g(k));
            let rhs = (&comm(&wp(l), &wm(k + 1)) - &comm(&wp(k), &wm(l + 1))).scale(&c);
            out.push(format!("qggt-b{i}"), &lhs - &rhs);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::FMParams;

    #[test]
    fn all_relations_homogeneous() {
        let rho = FMParams::default().rho_bar().clone();
        for r in defining_relations(3, &rho).iter().chain(derived_relations(3, &rho).iter()) {
            assert!(r.poly.is_homogeneous(), "{} = {}", r.label, r.poly);
        }
    }

    #[test]
    fn first_linear_relation_present() {
        let rho = FMParams::default().rho_bar().clone();
        let set = defining_relations(0, &rho);
        let expect = &(&gt(0) - &g(0)) - &comm(&wm(0), &wp(0)).scale(&consts::qp());
        let r = set.get("ww-lin.a[0]").unwrap();
        assert_eq!(r.poly.scale(&consts::qp()).scale(&RatFuncQ::from_int(-1)), expect);
    }
}
