//! Dense square matrices over `Q(s)`.

use std::fmt;

use crate::ring::Ring;
use crate::scalar::RatFuncQ;

#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    n: usize,
    data: Vec<RatFuncQ>,
}

impl RepMatrix {
    pub fn zero(n: usize) -> Self {
        RepMatrix {
            n,
            data: vec![RatFuncQ::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, RatFuncQ::one())
    }

    pub fn scalar(n: usize, c: RatFuncQ) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(d: Vec<RatFuncQ>) -> Self {
        let n = d.len();
        let mut m = Self::zero(n);
        for (i, c) in d.into_iter().enumerate() {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFuncQ {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: RatFuncQ) {
        self.data[i * self.n + j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        RepMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        RepMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFuncQ) -> Self {
        RepMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn comm(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// `self ⊗ other`, with `self` on the left (slow) index.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let mut out = Self::zero(n);
        for i in 0..a {
            for j in 0..a {
                let x = &self.data[i * a + j];
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        let y = &other.data[k * b + l];
                        if !y.is_zero() {
                            out.data[(i * b + k) * n + j * b + l] = x * y;
                        }
                    }
                }
            }
        }
        out
    }

    /// First nonzero entry, for diagnostics.
    pub fn first_nonzero(&self) -> Option<(usize, usize, RatFuncQ)> {
        self.data
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| (p / self.n, p % self.n, self.data[p].clone()))
    }
}

impl Ring for RepMatrix {
    fn is_zero(&self) -> bool {
        RepMatrix::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, c: &RatFuncQ) -> Self {
        RepMatrix::scale(self, c)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, v: &[i64]) -> RepMatrix {
        let mut x = RepMatrix::zero(n);
        for (p, c) in v.iter().enumerate() {
            x.set(p / n, p % n, RatFuncQ::from_int(*c));
        }
        x
    }

    #[test]
    fn kron_mixed_product() {
        let a = m(2, &[1, 2, 3, 4]);
        let b = m(2, &[0, 1, 1, 0]);
        let c = m(2, &[2, 0, 1, 1]);
        let d = m(2, &[1, 1, 0, 1]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(a.mul(&RepMatrix::identity(3)), a);
        assert!(a.comm(&RepMatrix::identity(3)).is_zero());
    }
}
