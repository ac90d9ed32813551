//! Noncommutative polynomials over Q(s), graded by N².
//!
//! Words are built from [`Gen`] letters. The commuting central symbols
//! `D1, D2, ...` live in the coefficient part of a [`Mono`], so they commute
//! with everything by construction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::RatFuncQ;

/// A letter of one of the two alphabets.
///
/// The derived order is the symbol order used for canonical term ordering:
/// `W0 < W-1 < ... < G1 < G2 < ... < Gt1 < ... < W1 < W2 < ... < E0 < E1 < F0 < F1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    /// `W_{-k}`
    Wm(u32),
    /// `G_{k+1}`
    G(u32),
    /// `G~_{k+1}`
    Gt(u32),
    /// `W_{k+1}`
    Wp(u32),
    E0,
    E1,
    F0,
    F1,
}

impl Gen {
    pub const W0: Gen = Gen::Wm(0);
    pub const W1: Gen = Gen::Wp(0);

    pub fn is_alternating(self) -> bool {
        matches!(self, Gen::Wm(_) | Gen::Wp(_) | Gen::G(_) | Gen::Gt(_))
    }

    /// N²-degree of the letter.
    pub fn deg(self) -> (u32, u32) {
        match self {
            Gen::Wm(k) => (k + 1, k),
            Gen::Wp(k) => (k, k + 1),
            Gen::G(k) | Gen::Gt(k) => (k + 1, k + 1),
            Gen::E1 | Gen::F1 => (1, 0),
            Gen::E0 | Gen::F0 => (0, 1),
        }
    }

    /// Index of the generator within its family (`k` in the variant).
    pub fn index(self) -> u32 {
        match self {
            Gen::Wm(k) | Gen::Wp(k) | Gen::G(k) | Gen::Gt(k) => k,
            _ => 0,
        }
    }

    /// The automorphism that swaps `W_{-k} <-> W_{k+1}` and `G <-> G~`.
    pub fn sigma(self) -> Gen {
        match self {
            Gen::Wm(k) => Gen::Wp(k),
            Gen::Wp(k) => Gen::Wm(k),
            Gen::G(k) => Gen::Gt(k),
            Gen::Gt(k) => Gen::G(k),
            other => other,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Wm(0) => write!(f, "W0"),
            Gen::Wm(k) => write!(f, "W-{k}"),
            Gen::Wp(k) => write!(f, "W{}", k + 1),
            Gen::G(k) => write!(f, "G{}", k + 1),
            Gen::Gt(k) => write!(f, "Gt{}", k + 1),
            Gen::E0 => write!(f, "E0"),
            Gen::E1 => write!(f, "E1"),
            Gen::F0 => write!(f, "F0"),
            Gen::F1 => write!(f, "F1"),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen> {
        let bad = || Error::Parse {
            input: s.to_string(),
            reason: "expected W0, W-k, Wk, Gk, Gtk, E0, E1, F0 or F1".into(),
        };
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        match s {
            "E0" => return Ok(Gen::E0),
            "E1" => return Ok(Gen::E1),
            "F0" => return Ok(Gen::F0),
            "F1" => return Ok(Gen::F1),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("Gt") {
            let n = num(rest)?;
            return if n == 0 { Err(bad()) } else { Ok(Gen::Gt(n - 1)) };
        }
        if let Some(rest) = s.strip_prefix('G') {
            let n = num(rest)?;
            return if n == 0 { Err(bad()) } else { Ok(Gen::G(n - 1)) };
        }
        if let Some(rest) = s.strip_prefix("W-") {
            return Ok(Gen::Wm(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('W') {
            let n = num(rest)?;
            return Ok(if n == 0 { Gen::Wm(0) } else { Gen::Wp(n - 1) });
        }
        Err(bad())
    }
}

/// A word together with a monomial in the central symbols `D1, D2, ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pub word: Vec<Gen>,
    /// `central[m]` is the exponent of `D_{m+1}`; no trailing zeros.
    pub central: Vec<u32>,
}

impl Mono {
    pub fn word(word: Vec<Gen>) -> Self {
        Mono {
            word,
            central: Vec::new(),
        }
    }

    pub fn deg(&self) -> (u32, u32) {
        let mut d = (0, 0);
        for g in &self.word {
            let (a, b) = g.deg();
            d.0 += a;
            d.1 += b;
        }
        for (m, e) in self.central.iter().enumerate() {
            d.0 += (m as u32 + 1) * e;
            d.1 += (m as u32 + 1) * e;
        }
        d
    }

    pub fn has_central(&self) -> bool {
        !self.central.is_empty()
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut word = Vec::with_capacity(self.word.len() + other.word.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&other.word);
        let n = self.central.len().max(other.central.len());
        let mut central = vec![0; n];
        for (i, e) in self.central.iter().enumerate() {
            central[i] += e;
        }
        for (i, e) in other.central.iter().enumerate() {
            central[i] += e;
        }
        Mono { word, central }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.central.cmp(&other.central))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (m, &e) in self.central.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("D{}", m + 1)),
                _ => parts.push(format!("D{}^{}", m + 1, e)),
            }
        }
        let mut i = 0;
        while i < self.word.len() {
            let g = self.word[i];
            let mut j = i;
            while j < self.word.len() && self.word[j] == g {
                j += 1;
            }
            if j - i == 1 {
                parts.push(g.to_string());
            } else {
                parts.push(format!("{}^{}", g, j - i));
            }
            i = j;
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Noncommutative polynomial: a finite Q(s)-linear combination of monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Mono, RatFuncQ>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RatFuncQ::one())
    }

    pub fn constant(c: RatFuncQ) -> Self {
        Self::term(Mono::default(), c)
    }

    pub fn term(m: Mono, c: RatFuncQ) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Mono::word(vec![g]), RatFuncQ::one())
    }

    pub fn word(w: &[Gen]) -> Self {
        Self::term(Mono::word(w.to_vec()), RatFuncQ::one())
    }

    /// The central symbol `D_{m}` (1-based, as in `D1`).
    pub fn delta(m: usize) -> Self {
        assert!(m >= 1, "central symbols are numbered from 1");
        let mut central = vec![0; m];
        central[m - 1] = 1;
        Self::term(
            Mono {
                word: Vec::new(),
                central,
            },
            RatFuncQ::one(),
        )
    }

    pub fn add_term(&mut self, m: Mono, c: RatFuncQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Mono, RatFuncQ> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> RatFuncQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Leading (largest) monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Mono, &RatFuncQ)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFuncQ) -> RatFuncQ) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Letters used anywhere in the polynomial.
    pub fn letters(&self) -> std::collections::BTreeSet<Gen> {
        self.terms
            .keys()
            .flat_map(|m| m.word.iter().copied())
            .collect()
    }

    pub fn has_central(&self) -> bool {
        self.terms.keys().any(|m| m.has_central())
    }

    /// N²-degree if every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| m.deg());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Split into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<(u32, u32), NCPoly> {
        let mut out: BTreeMap<(u32, u32), NCPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.deg())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Algebra homomorphism defined on letters and central symbols.
    pub fn substitute<T: Ring>(
        &self,
        one: &T,
        letter: &dyn Fn(Gen) -> T,
        central: &dyn Fn(usize) -> T,
    ) -> T {
        let mut cache: BTreeMap<Gen, T> = BTreeMap::new();
        let mut acc: Option<T> = None;
        for (m, c) in &self.terms {
            let mut v = one.scale(c);
            for (i, &e) in m.central.iter().enumerate() {
                for _ in 0..e {
                    v = v.mul_ref(&central(i + 1));
                }
            }
            for g in &m.word {
                let img = cache.entry(*g).or_insert_with(|| letter(*g));
                v = v.mul_ref(img);
            }
            acc = Some(match acc {
                None => v,
                Some(a) => a.add_ref(&v),
            });
        }
        acc.unwrap_or_else(|| one.scale(&RatFuncQ::zero()))
    }

    /// Substitute letters by polynomials, keeping central symbols as they are.
    pub fn subst_letters(&self, f: &dyn Fn(Gen) -> NCPoly) -> NCPoly {
        let central = |m: usize| NCPoly::delta(m);
        self.substitute(&NCPoly::one(), f, &central)
    }

    /// The automorphism swapping `W_{-k} <-> W_{k+1}` and `G <-> G~`.
    pub fn apply_sigma(&self) -> Result<NCPoly> {
        self.check_alternating()?;
        let mut out = NCPoly::zero();
        for (m, c) in &self.terms {
            let word = m.word.iter().map(|g| g.sigma()).collect();
            out.add_term(
                Mono {
                    word,
                    central: m.central.clone(),
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    /// The antiautomorphism fixing every `W`, swapping `G <-> G~` and reversing words.
    pub fn apply_s(&self) -> Result<NCPoly> {
        self.check_alternating()?;
        let mut out = NCPoly::zero();
        for (m, c) in &self.terms {
            let word = m
                .word
                .iter()
                .rev()
                .map(|&g| match g {
                    Gen::G(k) => Gen::Gt(k),
                    Gen::Gt(k) => Gen::G(k),
                    other => other,
                })
                .collect();
            out.add_term(
                Mono {
                    word,
                    central: m.central.clone(),
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    fn check_alternating(&self) -> Result<()> {
        match self.letters().into_iter().find(|g| !g.is_alternating()) {
            Some(g) => Err(Error::AlphabetMismatch(g.to_string())),
            None => Ok(()),
        }
    }

    /// Set every central symbol to zero.
    pub fn drop_central(&self) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.has_central())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluate every coefficient at `s = s0` (used for the q -> 1 specialization).
    pub fn eval_coeffs(&self, s0: &num_rational::BigRational) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), RatFuncQ::from_rational(c.eval_at(s0)?));
        }
        Ok(out)
    }
}

/// `[X, Y] = XY - YX`
pub fn comm(x: &NCPoly, y: &NCPoly) -> NCPoly {
    &(x * y) - &(y * x)
}

/// `[X, Y]_q = q XY - q^{-1} YX`
pub fn qcomm(x: &NCPoly, y: &NCPoly) -> NCPoly {
    qcomm_pow(x, y, 1)
}

/// `[X, Y]_{q^n} = q^n XY - q^{-n} YX`
pub fn qcomm_pow(x: &NCPoly, y: &NCPoly, n: i32) -> NCPoly {
    &(x * y).scale(&RatFuncQ::q_pow(n)) - &(y * x).scale(&RatFuncQ::q_pow(-n))
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&RatFuncQ::from_int(-1))
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl Ring for NCPoly {
    fn is_zero(&self) -> bool {
        NCPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &RatFuncQ) -> Self {
        NCPoly::scale(self, c)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

/// Deterministic text form: terms in increasing monomial order.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.to_string();
            let is_unit_mono = mono == "1";
            let (neg, mag) = if c.to_string().starts_with('-') && !c.to_string().contains(' ') {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let cs = mag.to_string();
            let body = if is_unit_mono {
                if cs.contains(' ') {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if mag.is_one() {
                mono
            } else if cs.contains(' ') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::consts;

    fn w0() -> NCPoly {
        NCPoly::gen(Gen::W0)
    }
    fn w1() -> NCPoly {
        NCPoly::gen(Gen::W1)
    }

    #[test]
    fn qcomm_examples() {
        let x = w0();
        assert_eq!(qcomm(&x, &x), (&x * &x).scale(&consts::qm()));
        let expect = &(&w0() * &w1()).scale(&RatFuncQ::q()) - &(&w1() * &w0()).scale(&RatFuncQ::q_pow(-1));
        assert_eq!(qcomm(&w0(), &w1()), expect);
        let at1 = qcomm(&w0(), &w1())
            .eval_coeffs(&num_rational::BigRational::from_integer(1.into()))
            .unwrap();
        assert_eq!(at1, comm(&w0(), &w1()));
    }

    #[test]
    fn symbol_order_and_parse() {
        assert!(Gen::Wm(0) < Gen::Wm(1));
        assert!(Gen::Wm(5) < Gen::G(0));
        assert!(Gen::Gt(9) < Gen::Wp(0));
        for s in ["W0", "W-2", "W1", "W3", "G1", "Gt2", "E0", "F1"] {
            assert_eq!(s.parse::<Gen>().unwrap().to_string(), s);
        }
        assert!("G0".parse::<Gen>().is_err());
    }

    #[test]
    fn s_example() {
        let p = NCPoly::word(&[Gen::W0, Gen::G(0)]);
        assert_eq!(p.apply_s().unwrap(), NCPoly::word(&[Gen::Gt(0), Gen::W0]));
        assert!(NCPoly::gen(Gen::E0).apply_sigma().is_err());
    }

    #[test]
    fn degrees() {
        let p = &NCPoly::word(&[Gen::Wm(1), Gen::Wp(0)]) * &NCPoly::delta(2);
        assert_eq!(p.homogeneous_degree(), Some((4, 4)));
        assert!(!(&w0() + &w1()).is_homogeneous());
    }

    #[test]
    fn text_form() {
        let p = &qcomm(&w0(), &w1()) + &NCPoly::delta(1).scale(&RatFuncQ::from_ratio(1, 2));
        assert_eq!(p.to_string(), "1/2*D1 + q*W0*W1 - q^-1*W1*W0");
    }
}
