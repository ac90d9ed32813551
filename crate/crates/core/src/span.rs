//! Exact linear algebra on relation sets: echelon bases with combination
//! tracking, span membership with certificates, and span comparison.
//!
//! Spans are linear spans over Q(s) inside the free algebra; no ideal
//! closure is taken.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::free::{Mono, NCPoly};
use crate::relations::RelationSet;
use crate::scalar::RatFuncQ;

/// Which monomials count as "inside" a comparison window.
pub type Window<'a> = &'a dyn Fn(&Mono) -> bool;

/// Ordering key: monomials outside the window sort above every inside one, so
/// echelon rows whose pivot lies inside are supported inside.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Key(bool, Mono);

#[derive(Clone, Debug)]
struct Row {
    /// Vector keyed by `Key`, pivot = largest key, pivot coefficient 1.
    vec: BTreeMap<Key, RatFuncQ>,
    /// Combination of input vectors producing `vec`.
    combo: BTreeMap<usize, RatFuncQ>,
}

/// Incremental echelon basis with provenance of each row.
pub struct Echelon<'a> {
    rows: BTreeMap<Key, Row>,
    window: Option<Window<'a>>,
    inputs: usize,
}

fn axpy(dst: &mut BTreeMap<Key, RatFuncQ>, c: &RatFuncQ, src: &BTreeMap<Key, RatFuncQ>) {
    for (k, v) in src {
        let t = c * v;
        match dst.get_mut(k) {
            Some(x) => {
                *x -= &t;
                if x.is_zero() {
                    dst.remove(k);
                }
            }
            None => {
                dst.insert(k.clone(), -t);
            }
        }
    }
}

fn axpy_combo(dst: &mut BTreeMap<usize, RatFuncQ>, c: &RatFuncQ, src: &BTreeMap<usize, RatFuncQ>) {
    for (k, v) in src {
        let t = c * v;
        match dst.get_mut(k) {
            Some(x) => {
                *x -= &t;
                if x.is_zero() {
                    dst.remove(k);
                }
            }
            None => {
                dst.insert(*k, -t);
            }
        }
    }
}

impl<'a> Echelon<'a> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
            window: None,
            inputs: 0,
        }
    }

    pub fn with_window(window: Window<'a>) -> Self {
        Echelon {
            rows: BTreeMap::new(),
            window: Some(window),
            inputs: 0,
        }
    }

    fn key(&self, m: &Mono) -> Key {
        let outside = self.window.map(|w| !w(m)).unwrap_or(false);
        Key(outside, m.clone())
    }

    fn to_vec(&self, p: &NCPoly) -> BTreeMap<Key, RatFuncQ> {
        p.terms()
            .iter()
            .map(|(m, c)| (self.key(m), c.clone()))
            .collect()
    }

    fn from_vec(v: &BTreeMap<Key, RatFuncQ>) -> NCPoly {
        let mut p = NCPoly::zero();
        for (k, c) in v {
            p.add_term(k.1.clone(), c.clone());
        }
        p
    }

    /// Reduce a vector against the basis; returns residual and the combination
    /// of basis-input vectors that was subtracted.
    fn reduce(
        &self,
        mut v: BTreeMap<Key, RatFuncQ>,
    ) -> (BTreeMap<Key, RatFuncQ>, BTreeMap<usize, RatFuncQ>) {
        let mut used: BTreeMap<usize, RatFuncQ> = BTreeMap::new();
        // Sweep downwards; eliminating a pivot only introduces smaller keys.
        let mut cursor: Option<Key> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next_back().cloned(),
                Some(c) => v.range(..c.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let c = v[&k].clone();
                axpy(&mut v, &c, &row.vec);
                // used -= -c * combo  (i.e. record +c * row)
                axpy_combo(&mut used, &(-&c), &row.combo);
            }
            cursor = Some(k);
        }
        (v, used)
    }

    /// Insert a vector (the `inputs`-th input). Returns true if it enlarged the span.
    pub fn insert(&mut self, p: &NCPoly) -> bool {
        let idx = self.inputs;
        self.inputs += 1;
        let (mut v, used) = self.reduce(self.to_vec(p));
        if v.is_empty() {
            return false;
        }
        // combo of residual = e_idx - used
        let mut combo = BTreeMap::new();
        combo.insert(idx, RatFuncQ::one());
        axpy_combo(&mut combo, &RatFuncQ::one(), &used);
        let (pk, pc) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let inv = pc.inv();
        for x in v.values_mut() {
            *x = &*x * &inv;
        }
        for x in combo.values_mut() {
            *x = &*x * &inv;
        }
        self.rows.insert(pk, Row { vec: v, combo });
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Express `p` in the span of the inputs, if possible.
    pub fn certificate(&self, p: &NCPoly) -> Option<Vec<(usize, RatFuncQ)>> {
        let (v, used) = self.reduce(self.to_vec(p));
        if v.is_empty() {
            Some(used.into_iter().collect())
        } else {
            None
        }
    }

    /// Residual of `p` after reduction (zero iff `p` lies in the span).
    pub fn residual(&self, p: &NCPoly) -> NCPoly {
        Self::from_vec(&self.reduce(self.to_vec(p)).0)
    }

    /// Basis of `span ∩ window`, each vector with its input combination.
    pub fn window_basis(&self) -> Vec<(NCPoly, Vec<(usize, RatFuncQ)>)> {
        self.rows
            .iter()
            .filter(|(k, _)| !k.0)
            .map(|(_, r)| {
                (
                    Self::from_vec(&r.vec),
                    r.combo.iter().map(|(i, c)| (*i, c.clone())).collect(),
                )
            })
            .collect()
    }
}

impl Default for Echelon<'_> {
    fn default() -> Self {
        Self::new()
    }
}

/// Certificate that `target` equals `sum coeff * relation`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Certificate {
    pub target: String,
    pub combination: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpanComparison {
    /// Dimension of each side (inside the window when one is given).
    pub rank_a: usize,
    pub rank_b: usize,
    pub a_in_b: bool,
    pub b_in_a: bool,
    /// Certificates expressing each A-vector through B.
    pub a_certificates: Vec<Certificate>,
    /// Certificates expressing each B-vector through A.
    pub b_certificates: Vec<Certificate>,
    /// First vector that failed to lie in the other span, with its residual.
    pub counterexample: Option<(String, String)>,
}

impl SpanComparison {
    pub fn equal(&self) -> bool {
        self.a_in_b && self.b_in_a
    }
}

/// Targets of one side: the relations themselves, or (with a window) a basis
/// of `span ∩ window` labelled by the combination that produces it.
fn targets(set: &RelationSet, window: Option<Window<'_>>) -> Vec<(String, NCPoly)> {
    match window {
        None => set
            .iter()
            .map(|r| (r.label.clone(), r.poly.clone()))
            .collect(),
        Some(w) => {
            let all_inside = |p: &NCPoly| p.terms().keys().all(w);
            if set.iter().all(|r| all_inside(&r.poly)) {
                return set
                    .iter()
                    .map(|r| (r.label.clone(), r.poly.clone()))
                    .collect();
            }
            let mut e = Echelon::with_window(w);
            for r in set {
                e.insert(&r.poly);
            }
            e.window_basis()
                .into_iter()
                .map(|(p, combo)| {
                    let label = combo
                        .iter()
                        .map(|(i, c)| format!("({c})*{}", set.relations()[*i].label))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    (label, p)
                })
                .collect()
        }
    }
}

fn one_way(
    from: &[(String, NCPoly)],
    into: &RelationSet,
    echelon: &Echelon<'_>,
    certs: &mut Vec<Certificate>,
) -> Result<(), (String, String)> {
    for (label, p) in from {
        match echelon.certificate(p) {
            Some(c) => {
                debug_assert!({
                    let mut sum = NCPoly::zero();
                    for (i, x) in &c {
                        sum = &sum + &into.relations()[*i].poly.scale(x);
                    }
                    sum == *p
                });
                certs.push(Certificate {
                    target: label.clone(),
                    combination: c
                        .iter()
                        .map(|(i, x)| (into.relations()[*i].label.clone(), x.to_string()))
                        .collect(),
                })
            }
            None => return Err((label.clone(), echelon.residual(p).to_string())),
        }
    }
    Ok(())
}

/// Compare `span(A)` and `span(B)`, optionally intersected with a window of
/// monomials on both sides.
pub fn compare_spans_within(
    a: &RelationSet,
    b: &RelationSet,
    window: Option<Window<'_>>,
) -> SpanComparison {
    let ta = targets(a, window);
    let tb = targets(b, window);
    let mut ea = Echelon::new();
    for r in a {
        ea.insert(&r.poly);
    }
    let mut eb = Echelon::new();
    for r in b {
        eb.insert(&r.poly);
    }
    let rank = |t: &[(String, NCPoly)]| {
        let mut e = Echelon::new();
        for (_, p) in t {
            e.insert(p);
        }
        e.rank()
    };
    let mut out = SpanComparison {
        rank_a: rank(&ta),
        rank_b: rank(&tb),
        a_in_b: false,
        b_in_a: false,
        a_certificates: Vec::new(),
        b_certificates: Vec::new(),
        counterexample: None,
    };
    match one_way(&ta, b, &eb, &mut out.a_certificates) {
        Ok(()) => out.a_in_b = true,
        Err(ce) => out.counterexample = Some(ce),
    }
    match one_way(&tb, a, &ea, &mut out.b_certificates) {
        Ok(()) => out.b_in_a = true,
        Err(ce) => {
            if out.counterexample.is_none() {
                out.counterexample = Some(ce)
            }
        }
    }
    out
}

/// Mutual containment of linear spans, with certificates.
pub fn compare_relation_spans(a: &RelationSet, b: &RelationSet) -> SpanComparison {
    compare_spans_within(a, b, None)
}

/// Whether `p` lies in the span of `set`; returns a certificate when it does.
pub fn span_membership(p: &NCPoly, set: &RelationSet) -> Option<Vec<(String, RatFuncQ)>> {
    let mut e = Echelon::new();
    for r in set {
        e.insert(&r.poly);
    }
    e.certificate(p).map(|c| {
        c.into_iter()
            .map(|(i, x)| (set.relations()[i].label.clone(), x))
            .collect()
    })
}
