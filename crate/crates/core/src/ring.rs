//! The minimal ring interface shared by every coefficient type that appears
//! inside spectral series: scalars, noncommutative polynomials, representation
//! matrices and loop-algebra elements.

use crate::scalar::RatFuncQ;

pub trait Ring: Clone {
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &RatFuncQ) -> Self;

    fn neg_ref(&self) -> Self {
        self.scale(&RatFuncQ::from_int(-1))
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }
}

impl Ring for RatFuncQ {
    fn is_zero(&self) -> bool {
        RatFuncQ::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &RatFuncQ) -> Self {
        self * c
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}
