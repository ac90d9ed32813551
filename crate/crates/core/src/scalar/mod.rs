//! Exact arithmetic in the field Q(s), where the quantum parameter is `q = s^2`.
//!
//! Working with the square root as the base indeterminate lets half-integer
//! powers of `q` (spin-1/2 weights, the `q^{1/2}` in Lax operators) live in
//! the same field as everything else.
//!
//! A [`RatFuncQ`] is always stored in lowest terms with a canonical
//! normalization, so `==` is a decision procedure for equality of rational
//! functions.

mod parse;
mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use poly::IPoly;

/// Laurent polynomial in `s` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    coeffs: BTreeMap<i32, BigRational>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Build from `(s-exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i32, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_ratfunc(&self) -> RatFuncQ {
        let Some((&low, _)) = self.coeffs.iter().next() else {
            return RatFuncQ::zero();
        };
        let high = *self.coeffs.keys().next_back().unwrap();
        let mut den = BigInt::one();
        for c in self.coeffs.values() {
            den = den.lcm(c.denom());
        }
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (&e, c) in &self.coeffs {
            v[(e - low) as usize] = c.numer() * (&den / c.denom());
        }
        RatFuncQ::from_parts(IPoly(v), low, IPoly::constant(den))
    }
}

impl Add<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Mul<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

/// Exact rational function in `s`.
///
/// Stored as `s^low * num(s) / den(s)` with integer polynomials, where
/// `num(0) != 0`, `den(0) > 0`, `gcd(num, den) = 1` over Q and the integer
/// contents of `num` and `den` are coprime. Zero is `num = 0, low = 0, den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: IPoly,
    low: i32,
    den: IPoly,
}

impl Default for RatFuncQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFuncQ {
    pub fn zero() -> Self {
        RatFuncQ {
            num: IPoly::zero(),
            low: 0,
            den: IPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        RatFuncQ {
            num: IPoly(vec![n]),
            low: 0,
            den: IPoly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        // BigRational keeps a positive reduced denominator.
        RatFuncQ {
            num: IPoly(vec![r.numer().clone()]),
            low: 0,
            den: IPoly(vec![r.denom().clone()]),
        }
    }

    /// `s^n`.
    pub fn s_pow(n: i32) -> Self {
        RatFuncQ {
            num: IPoly::one(),
            low: n,
            den: IPoly::one(),
        }
    }

    /// `q^n = s^(2n)`.
    pub fn q_pow(n: i32) -> Self {
        Self::s_pow(2 * n)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn s() -> Self {
        Self::s_pow(1)
    }

    /// Laurent polynomial in `s` with integer coefficients, from `(exponent, coefficient)` pairs.
    pub fn laurent_s(terms: &[(i32, i64)]) -> Self {
        LaurentQ::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(c.into()))),
        )
        .to_ratfunc()
    }

    /// Laurent polynomial in `q` with integer coefficients.
    pub fn laurent_q(terms: &[(i32, i64)]) -> Self {
        let doubled: Vec<(i32, i64)> = terms.iter().map(|&(e, c)| (2 * e, c)).collect();
        Self::laurent_s(&doubled)
    }

    /// Normalize `s^low * num / den` into canonical form.
    fn from_parts(mut num: IPoly, mut low: i32, mut den: IPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        num.trim();
        if num.is_zero() {
            return Self::zero();
        }
        let zn = num.low_zeros();
        num.shift_down(zn);
        low += zn as i32;
        let zd = den.low_zeros();
        den.shift_down(zd);
        low -= zd as i32;
        if den.degree() > 0 && num.degree() > 0 {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        Self::fix_content(num, low, den)
    }

    /// Only content and sign normalization; caller guarantees coprimality.
    fn fix_content(mut num: IPoly, low: i32, mut den: IPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.0[0].is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        RatFuncQ { num, low, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is an integer Laurent polynomial.
    pub fn is_integral_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is a rational constant.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.num.degree() == 0 && self.den.degree() == 0)
    }

    pub fn numerator(&self) -> LaurentQ {
        LaurentQ::from_terms(
            self.num
                .0
                .iter()
                .enumerate()
                .map(|(i, c)| (self.low + i as i32, BigRational::from_integer(c.clone()))),
        )
    }

    pub fn denominator(&self) -> LaurentQ {
        LaurentQ::from_terms(
            self.den
                .0
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i32, BigRational::from_integer(c.clone()))),
        )
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::fix_content(self.den.clone(), -self.low, self.num.clone())
    }

    pub fn pow(&self, n: i32) -> Self {
        if n < 0 {
            return self.inv().pow(-n);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `s -> 1/s` (equivalently `q -> 1/q`).
    pub fn invert_s(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // s^low num(1/s) / den(1/s) = s^(low - dn + dd) rev(num) / rev(den)
        let mut rn = self.num.0.clone();
        rn.reverse();
        let mut rd = self.den.0.clone();
        rd.reverse();
        let low = -self.low - self.num.degree() as i32 + self.den.degree() as i32;
        Self::fix_content(IPoly(rn), low, IPoly(rd))
    }

    /// Exact value at `s = s0`.
    pub fn eval_at(&self, s0: &BigRational) -> Result<BigRational> {
        let pole = || Error::PoleAtPoint {
            value: self.to_string(),
            point: s0.to_string(),
        };
        let d = self.den.eval(s0);
        if d.is_zero() {
            return Err(pole());
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if s0.is_zero() && self.low < 0 {
            return Err(pole());
        }
        let n = self.num.eval(s0);
        let pw = if s0.is_zero() {
            if self.low == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        } else {
            num_traits::pow::Pow::pow(s0, self.low)
        };
        Ok(n * pw / d)
    }

    /// Rational constant value, if the function is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            Some(BigRational::new(self.num.0[0].clone(), self.den.0[0].clone()))
        } else {
            None
        }
    }

    /// A rough size measure (total number of stored coefficients).
    pub fn weight(&self) -> usize {
        self.num.0.len() + self.den.0.len()
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let on = if negate { other.num.neg() } else { other.num.clone() };
        let m = self.low.min(other.low);
        let a = (self.low - m) as usize;
        let b = (other.low - m) as usize;
        if self.den == other.den {
            let num = self.num.add_shifted(a, &on, b);
            if self.den.is_one() {
                if num.is_zero() {
                    return Self::zero();
                }
                return Self::fix_content(num, m, IPoly::one()).shift_normalized();
            }
            return Self::from_parts(num, m, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (self.den.div_exact(&g), other.den.div_exact(&g))
        };
        let num = self.num.mul(&db).add_shifted(a, &on.mul(&da), b);
        let den = self.den.mul(&db);
        Self::from_parts(num, m, den)
    }

    /// Move factors of `s` out of an integral numerator (content already fixed).
    fn shift_normalized(mut self) -> Self {
        let z = self.num.low_zeros();
        if z > 0 {
            self.num.shift_down(z);
            self.low += z as i32;
        }
        self
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.low + other.low;
        if self.den.is_one() && other.den.is_one() {
            return RatFuncQ {
                num: self.num.mul(&other.num),
                low,
                den: IPoly::one(),
            };
        }
        let (mut n1, mut d2) = (self.num.clone(), other.den.clone());
        if d2.degree() > 0 && n1.degree() > 0 {
            let g = n1.gcd(&d2);
            if !g.is_one() {
                n1 = n1.div_exact(&g);
                d2 = d2.div_exact(&g);
            }
        }
        let (mut n2, mut d1) = (other.num.clone(), self.den.clone());
        if d1.degree() > 0 && n2.degree() > 0 {
            let g = n2.gcd(&d1);
            if !g.is_one() {
                n2 = n2.div_exact(&g);
                d1 = d1.div_exact(&g);
            }
        }
        Self::fix_content(n1.mul(&n2), low, d1.mul(&d2))
    }

    /// Render as a polynomial expression in `q` (or `s` when odd powers occur).
    fn fmt_laurent(p: &IPoly, low: i32, use_q: bool) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (i, c) in p.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = low + i as i32;
            let (var, e) = if use_q { ("q", e / 2) } else { ("s", e) };
            let neg = c.is_negative();
            let a = c.abs();
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            let body = if mono.is_empty() {
                a.to_string()
            } else if a.is_one() {
                mono
            } else {
                format!("{a}*{mono}")
            };
            parts.push((neg, body));
        }
        let mut out = String::new();
        for (k, (neg, body)) in parts.iter().enumerate() {
            if k == 0 {
                if *neg {
                    out.push('-');
                }
            } else {
                out.push_str(if *neg { " - " } else { " + " });
            }
            out.push_str(body);
        }
        out
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let even = |p: &IPoly, low: i32| {
            p.0.iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || (low + i as i32) % 2 == 0)
        };
        let use_q = even(&self.num, self.low) && even(&self.den, 0);
        let n = Self::fmt_laurent(&self.num, self.low, use_q);
        if self.den.is_one() {
            return write!(f, "{n}");
        }
        let d = Self::fmt_laurent(&self.den, 0, use_q);
        let wrap = |s: String, multi: bool| if multi { format!("({s})") } else { s };
        let n_multi = self.num.0.iter().filter(|c| !c.is_zero()).count() > 1;
        let d_multi = self.den.0.iter().filter(|c| !c.is_zero()).count() > 1;
        write!(f, "{}/{}", wrap(n, n_multi), wrap(d, d_multi))
    }
}

impl fmt::Debug for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for RatFuncQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_scalar(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RatFuncQ> for &RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: &RatFuncQ) -> RatFuncQ {
                let f: fn(&RatFuncQ, &RatFuncQ) -> RatFuncQ = $body;
                f(self, rhs)
            }
        }
        impl $tr<RatFuncQ> for RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: RatFuncQ) -> RatFuncQ {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFuncQ> for RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: &RatFuncQ) -> RatFuncQ {
                (&self).$method(rhs)
            }
        }
        impl $tr<RatFuncQ> for &RatFuncQ {
            type Output = RatFuncQ;
            fn $method(self, rhs: RatFuncQ) -> RatFuncQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.mul_impl(&b.inv()));

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ {
            num: self.num.neg(),
            low: self.low,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        -&self
    }
}

impl AddAssign<&RatFuncQ> for RatFuncQ {
    fn add_assign(&mut self, rhs: &RatFuncQ) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&RatFuncQ> for RatFuncQ {
    fn sub_assign(&mut self, rhs: &RatFuncQ) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&RatFuncQ> for RatFuncQ {
    fn mul_assign(&mut self, rhs: &RatFuncQ) {
        *self = self.mul_impl(rhs);
    }
}

impl From<i64> for RatFuncQ {
    fn from(n: i64) -> Self {
        RatFuncQ::from_int(n)
    }
}

/// Balanced q-integer `[x] = (q^x - q^-x)/(q - q^-1)`.
pub fn qbracket(x: i32) -> RatFuncQ {
    if x == 0 {
        return RatFuncQ::zero();
    }
    let n = x.abs();
    let terms: Vec<(i32, i64)> = (0..n).map(|k| (n - 1 - 2 * k, 1)).collect();
    let v = RatFuncQ::laurent_q(&terms);
    if x < 0 {
        -v
    } else {
        v
    }
}

/// Elementary symmetric polynomial `e_k` of the given values (`e_0 = 1`).
pub fn elementary_symmetric(k: usize, values: &[RatFuncQ]) -> Result<RatFuncQ> {
    if k > values.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: values.len(),
        });
    }
    // e[j] after processing a prefix of the values
    let mut e = vec![RatFuncQ::zero(); k + 1];
    e[0] = RatFuncQ::one();
    for v in values {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * v;
            e[j] += &t;
        }
    }
    Ok(e.pop().unwrap())
}

/// Frequently used constants, named after their role in formulas.
pub mod consts {
    use super::RatFuncQ;

    /// `q + q^-1`
    pub fn qp() -> RatFuncQ {
        RatFuncQ::laurent_q(&[(1, 1), (-1, 1)])
    }

    /// `q - q^-1`
    pub fn qm() -> RatFuncQ {
        RatFuncQ::laurent_q(&[(1, 1), (-1, -1)])
    }

    /// `q^n + q^-n`
    pub fn qsum(n: i32) -> RatFuncQ {
        if n == 0 {
            return RatFuncQ::from_int(2);
        }
        RatFuncQ::laurent_q(&[(n, 1), (-n, 1)])
    }

    /// `q^n - q^-n`
    pub fn qdiff(n: i32) -> RatFuncQ {
        if n == 0 {
            return RatFuncQ::zero();
        }
        RatFuncQ::laurent_q(&[(n, 1), (-n, -1)])
    }
}
