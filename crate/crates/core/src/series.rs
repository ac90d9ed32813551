//! Truncated Laurent series in two spectral variables and square matrices of
//! them.
//!
//! A series keeps the terms it knows plus, per variable, an optional cutoff:
//! coefficients with exponent below the cutoff may be missing contributions
//! from dropped terms and are never asserted. Products track the cutoff.

use std::collections::BTreeMap;

use crate::ring::Ring;
use crate::scalar::RatFuncQ;

#[derive(Clone, Debug, PartialEq)]
pub struct Series2<C> {
    terms: BTreeMap<(i32, i32), C>,
    cut: [Option<i32>; 2],
}

impl<C: Ring> Default for Series2<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn join(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<C: Ring> Series2<C> {
    pub fn zero() -> Self {
        Series2 {
            terms: BTreeMap::new(),
            cut: [None, None],
        }
    }

    pub fn monomial(exp: (i32, i32), c: C) -> Self {
        let mut s = Self::zero();
        s.add_term(exp, c);
        s
    }

    /// Mark coefficients with exponent below `cut` in `axis` as unreliable.
    pub fn with_cut(mut self, axis: usize, cut: i32) -> Self {
        self.cut[axis] = join(self.cut[axis], Some(cut));
        self.terms.retain(|e, _| [e.0, e.1][axis] >= cut);
        self
    }

    pub fn cut(&self) -> [Option<i32>; 2] {
        self.cut
    }

    pub fn add_term(&mut self, exp: (i32, i32), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(x) => {
                x.add_assign_ref(&c);
                if x.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(i32, i32), C> {
        &self.terms
    }

    pub fn coeff(&self, exp: (i32, i32)) -> Option<&C> {
        self.terms.get(&exp)
    }

    pub fn is_exact_at(&self, exp: (i32, i32)) -> bool {
        self.cut[0].is_none_or(|c| exp.0 >= c) && self.cut[1].is_none_or(|c| exp.1 >= c)
    }

    /// Terms whose coefficients are fully determined.
    pub fn exact_terms(&self) -> impl Iterator<Item = (&(i32, i32), &C)> {
        self.terms.iter().filter(|(e, _)| self.is_exact_at(**e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent in `axis` over known and dropped terms.
    fn top(&self, axis: usize) -> Option<i32> {
        let known = self.terms.keys().map(|e| [e.0, e.1][axis]).max();
        let dropped = self.cut[axis].map(|c| c - 1);
        match (known, dropped) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out.cut = [join(self.cut[0], other.cut[0]), join(self.cut[1], other.cut[1])];
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg_ref())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca.mul_ref(cb));
            }
        }
        for axis in 0..2 {
            let from_self = self.cut[axis].zip(other.top(axis)).map(|(c, t)| c + t);
            let from_other = other.cut[axis].zip(self.top(axis)).map(|(c, t)| c + t);
            out.cut[axis] = join(from_self, from_other);
        }
        let cut = out.cut;
        for axis in 0..2 {
            if let Some(c) = cut[axis] {
                out.terms.retain(|e, _| [e.0, e.1][axis] >= c);
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFuncQ) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Series2<D> {
        let mut out = Series2::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out.cut = self.cut;
        out
    }

    /// Substitute `u -> u * q^{p0}`, `v -> v * q^{p1}` (q-powers, so `s`-exponent doubled).
    pub fn rescale(&self, p: (i32, i32)) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let f = RatFuncQ::q_pow(p.0 * e.0 + p.1 * e.1);
            out.add_term(*e, c.scale(&f));
        }
        out.cut = self.cut;
        out
    }

    /// Exchange the two variables.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term((e.1, e.0), c.clone());
        }
        out.cut = [self.cut[1], self.cut[0]];
        out
    }
}

impl<C: Ring> Ring for Series2<C> {
    fn is_zero(&self) -> bool {
        Series2::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, c: &RatFuncQ) -> Self {
        Series2::scale(self, c)
    }
}

/// Square matrix with series entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeriesMatrix<C> {
    pub dim: usize,
    entries: Vec<Series2<C>>,
}

impl<C: Ring> LaurentSeriesMatrix<C> {
    pub fn zero(dim: usize) -> Self {
        LaurentSeriesMatrix {
            dim,
            entries: vec![Series2::zero(); dim * dim],
        }
    }

    pub fn from_entries(dim: usize, entries: Vec<Series2<C>>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        LaurentSeriesMatrix { dim, entries }
    }

    /// Constant diagonal matrix.
    pub fn diagonal(diag: &[C]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = Series2::monomial((0, 0), d.clone());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Series2<C> {
        &self.entries[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Series2<C> {
        &mut self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Series2<C>] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Series2::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    let inert = |s: &Series2<C>| s.is_zero() && s.cut == [None, None];
                    if inert(a) || inert(b) {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                out.entries[i * n + j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        LaurentSeriesMatrix { dim: self.dim, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        LaurentSeriesMatrix { dim: self.dim, entries }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentSeriesMatrix<D> {
        LaurentSeriesMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|s| s.map(&f)).collect(),
        }
    }

    pub fn map_series(&self, f: impl Fn(&Series2<C>) -> Series2<C>) -> Self {
        LaurentSeriesMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `self ⊗ I` for a 2x2 matrix.
    pub fn left_embed(&self) -> Self {
        self.kron_identity(true)
    }

    /// `I ⊗ self` for a 2x2 matrix.
    pub fn right_embed(&self) -> Self {
        self.kron_identity(false)
    }

    fn kron_identity(&self, left: bool) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (r, c) = if left {
                        (i * n + k, j * n + k)
                    } else {
                        (k * n + i, k * n + j)
                    };
                    out.entries[r * n * n + c] = self.get(i, j).clone();
                }
            }
        }
        out
    }

    /// Positions and coefficients of all exact nonzero terms.
    pub fn exact_terms(&self) -> Vec<((usize, usize), (i32, i32), C)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (e, c) in self.get(i, j).exact_terms() {
                    out.push(((i, j), *e, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|s| s.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> RatFuncQ {
        RatFuncQ::from_int(n)
    }

    #[test]
    fn product_cutoff() {
        // (1 + u^-1 + ...) * (u + 1): exact only where no dropped term reaches.
        let a = Series2::monomial((0, 0), r(1)).add(&Series2::monomial((-1, 0), r(1))).with_cut(0, -1);
        let b = Series2::monomial((1, 0), r(1)).add(&Series2::monomial((0, 0), r(1)));
        let p = a.mul(&b);
        assert_eq!(p.cut()[0], Some(0));
        assert_eq!(p.coeff((0, 0)), Some(&r(2)));
        assert!(!p.is_exact_at((-1, 0)));
    }

    #[test]
    fn kronecker_shapes() {
        let mut m = LaurentSeriesMatrix::<RatFuncQ>::zero(2);
        *m.get_mut(0, 1) = Series2::monomial((0, 0), r(3));
        let l = m.left_embed();
        assert_eq!(l.get(0, 2).coeff((0, 0)), Some(&r(3)));
        assert_eq!(l.get(1, 3).coeff((0, 0)), Some(&r(3)));
        let rt = m.right_embed();
        assert_eq!(rt.get(0, 1).coeff((0, 0)), Some(&r(3)));
        assert_eq!(rt.get(2, 3).coeff((0, 0)), Some(&r(3)));
    }
}
