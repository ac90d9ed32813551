//! Dense integer polynomials in `s`, the workhorse behind [`RatFuncQ`](super::RatFuncQ).
//!
//! Coefficients are stored lowest degree first. Every value is kept trimmed:
//! no trailing zero coefficients, and the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct IPoly(pub(crate) Vec<BigInt>);

impl IPoly {
    pub(crate) fn zero() -> Self {
        IPoly(Vec::new())
    }

    pub(crate) fn one() -> Self {
        IPoly(vec![BigInt::one()])
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        let mut p = IPoly(vec![c]);
        p.trim();
        p
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    pub(crate) fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    /// Number of factors of `s` dividing the polynomial (0 for zero).
    pub(crate) fn low_zeros(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub(crate) fn shift_down(&mut self, k: usize) {
        if k > 0 {
            self.0.drain(..k);
        }
    }

    pub(crate) fn add_shifted(&self, a: usize, other: &IPoly, b: usize) -> IPoly {
        // self * s^a + other * s^b
        let len = (self.0.len() + a).max(other.0.len() + b);
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.0.iter().enumerate() {
            out[i + a] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i + b] += c;
        }
        let mut p = IPoly(out);
        p.trim();
        p
    }

    pub(crate) fn mul(&self, other: &IPoly) -> IPoly {
        if self.is_zero() || other.is_zero() {
            return IPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut p = IPoly(out);
        p.trim();
        p
    }

    pub(crate) fn neg(&self) -> IPoly {
        IPoly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn div_scalar(&self, c: &BigInt) -> IPoly {
        if c.is_one() {
            return self.clone();
        }
        IPoly(self.0.iter().map(|x| x / c).collect())
    }

    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub(crate) fn primitive(&self) -> IPoly {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
    fn pseudo_rem(&self, b: &IPoly) -> IPoly {
        let mut r = self.0.clone();
        let db = b.degree();
        let lb = b.lead().clone();
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            if lr.is_zero() {
                r.pop();
                continue;
            }
            let shift = top - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.0.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            r.pop();
            while matches!(r.last(), Some(c) if c.is_zero()) {
                r.pop();
            }
            // keep coefficient growth in check
            let mut g = BigInt::zero();
            for c in &r {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_zero() && !g.is_one() {
                for c in r.iter_mut() {
                    *c /= &g;
                }
            }
        }
        let mut p = IPoly(r);
        p.trim();
        p
    }

    /// Primitive gcd over Q[s] (normalized to positive leading coefficient).
    pub(crate) fn gcd(&self, other: &IPoly) -> IPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.degree() == 0 || other.degree() == 0 {
            return IPoly::one();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.degree() == 0 {
                return IPoly::one();
            }
            a = b;
            b = r.primitive();
        }
    }

    /// Exact division; panics if `d` does not divide `self` over Z.
    pub(crate) fn div_exact(&self, d: &IPoly) -> IPoly {
        if d.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return IPoly::zero();
        }
        let dd = d.degree();
        let ld = d.lead();
        let mut r = self.0.clone();
        let n = self.degree();
        assert!(n >= dd, "exact division by polynomial of larger degree");
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(ld);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &qc * dc;
            }
            q[k] = qc;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        let mut p = IPoly(q);
        p.trim();
        p
    }

    pub(crate) fn eval(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IPoly {
        let mut p = IPoly(v.iter().map(|&c| BigInt::from(c)).collect());
        p.trim();
        p
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 0, 1]); // 1 + s^2
        let b = p(&[-1, 1]); // s - 1
        let c = p(&[2, 3]);
        let g = a.mul(&b).gcd(&a.mul(&c));
        assert_eq!(g, a);
        assert_eq!(b.gcd(&c), IPoly::one());
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[3, -1, 4, 1]);
        let b = p(&[-5, 0, 2]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }
}
