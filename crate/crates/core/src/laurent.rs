//! Exact arithmetic in `Z[v, v^-1]`.
//!
//! A [`LaurentPoly`] is a sparse map from exponents to nonzero big-integer
//! coefficients. Zero coefficients are never stored, so derived equality is
//! equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v^-1`.
    pub fn v_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `v + v^-1`.
    pub fn beta() -> Self {
        Self::v() + Self::v_inv()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `v^i` (zero when absent).
    pub fn coeff_at(&self, i: i64) -> BigInt {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    /// The integer value if the polynomial has no `v`-dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Image under the ring endomorphism determined by `f`.
    pub fn specialize(&self, f: &SpecializationMap) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let c = if f.negate && e.rem_euclid(2) == 1 { -c } else { c.clone() };
            out.add_term(e * f.exponent, c);
        }
        out
    }
}

/// A ring endomorphism of `Z[v, v^-1]` fixing `Z`, determined by the image
/// of `v`, which must be a unit `±v^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpecializationMap {
    negate: bool,
    exponent: i64,
}

impl SpecializationMap {
    pub fn identity() -> Self {
        Self { negate: false, exponent: 1 }
    }

    /// `v -> 1`.
    pub fn at_one() -> Self {
        Self { negate: false, exponent: 0 }
    }

    /// `v -> v^-1`.
    pub fn bar() -> Self {
        Self { negate: false, exponent: -1 }
    }

    pub fn new(negate: bool, exponent: i64) -> Self {
        Self { negate, exponent }
    }

    pub fn from_image(image: &LaurentPoly) -> Result<Self> {
        if image.num_terms() == 1 {
            let (e, c) = image.terms().next().expect("one term");
            if c.is_one() {
                return Ok(Self { negate: false, exponent: e });
            }
            if (-c).is_one() {
                return Ok(Self { negate: true, exponent: e });
            }
        }
        Err(Error::NonUnitImage(image.to_string()))
    }

    pub fn image_of_v(&self) -> LaurentPoly {
        LaurentPoly::monomial(if self.negate { -1 } else { 1 }, self.exponent)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl FromStr for SpecializationMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_image(&s.parse()?)
    }
}

impl fmt::Display for SpecializationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v->{}", self.image_of_v())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if *e == 1 {
                write!(f, "v")?;
            } else {
                write!(f, "v^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParsePoly {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        // split into signed terms; a sign directly after '^' belongs to the exponent
        let mut pieces: Vec<String> = Vec::new();
        let mut current = String::new();
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                pieces.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = Some(ch);
        }
        pieces.push(current);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'+') => (false, &piece[1..]),
                Some(b'-') => (true, &piece[1..]),
                _ => (false, piece.as_str()),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let digits_end = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
            let (digits, rest) = body.split_at(digits_end);
            let rest = rest.strip_prefix('*').unwrap_or(rest);
            let mut coeff: BigInt = if digits.is_empty() {
                if rest.is_empty() {
                    return Err(err("missing coefficient"));
                }
                BigInt::one()
            } else {
                digits.parse().map_err(|_| err("bad coefficient"))?
            };
            let exponent = if rest.is_empty() {
                0
            } else if let Some(after_v) = rest.strip_prefix('v') {
                if after_v.is_empty() {
                    1
                } else if let Some(exp) = after_v.strip_prefix('^') {
                    let exp = exp.trim_start_matches('(').trim_end_matches(')');
                    exp.parse::<i64>().map_err(|_| err("bad exponent"))?
                } else {
                    return Err(err("unexpected characters after v"));
                }
            } else {
                return Err(err("expected v"));
            };
            if negative {
                coeff = -coeff;
            }
            out.add_term(exponent, coeff);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = serde_json::Value::deserialize(d)?;
        match raw {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(LaurentPoly::constant)
                .ok_or_else(|| serde::de::Error::custom("non-integer coefficient")),
            other => Err(serde::de::Error::custom(format!("expected polynomial, got {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(LaurentPoly::v() + LaurentPoly::v_inv(), p("v + v^-1"));
        let z = LaurentPoly::v() - LaurentPoly::v();
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
        assert_eq!(p("v^2 + 1") + p("-1"), p("v^2"));
    }

    #[test]
    fn multiplication() {
        let beta = LaurentPoly::beta();
        assert_eq!(&beta * &beta, p("v^2 + 2 + v^-2"));
        assert!((&beta * &LaurentPoly::zero()).is_zero());
        let minus_beta = -&beta;
        assert_eq!(minus_beta.pow(2), p("v^2 + 2 + v^-2"));
    }

    #[test]
    fn coefficients() {
        let beta = LaurentPoly::beta();
        assert_eq!(beta.coeff_at(1), BigInt::from(1));
        assert_eq!(beta.coeff_at(0), BigInt::from(0));
        assert_eq!(p("-2v^3").coeff_at(3), BigInt::from(-2));
    }

    #[test]
    fn specialization() {
        assert_eq!(LaurentPoly::beta().specialize(&SpecializationMap::at_one()), p("2"));
        assert_eq!(p("v^2").specialize(&SpecializationMap::bar()), p("v^-2"));
        assert!(p("v - v^-1").specialize(&SpecializationMap::at_one()).is_zero());
        let neg: SpecializationMap = "-v".parse().unwrap();
        assert_eq!(p("v^3 + v^2").specialize(&neg), p("-v^3 + v^2"));
    }

    #[test]
    fn non_unit_images_are_rejected() {
        for bad in ["2", "v + 1", "0", "2v"] {
            assert!(matches!(
                SpecializationMap::from_image(&p(bad)),
                Err(Error::NonUnitImage(_))
            ));
        }
    }

    #[test]
    fn printing() {
        assert_eq!(p("v^-2 + 2 + v^2").to_string(), "v^2 + 2 + v^-2");
        assert_eq!(p("-3v^-1").to_string(), "-3v^-1");
        assert_eq!(p("-v + 1").to_string(), "-v + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("3*v^2 - v").to_string(), "3v^2 - v");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x", "v^", "3v^a", "+", "v2"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?}");
        }
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn reconstruction_from_coefficients(a in arb_poly()) {
            let mut rebuilt = LaurentPoly::zero();
            for i in -10..=10 {
                rebuilt += &LaurentPoly::monomial(a.coeff_at(i), i);
            }
            prop_assert_eq!(rebuilt, a);
        }

        #[test]
        fn specialize_is_a_ring_map(a in arb_poly(), b in arb_poly(), neg in any::<bool>(), k in -2i64..=2) {
            let f = SpecializationMap::new(neg, k);
            prop_assert_eq!((&a * &b).specialize(&f), &a.specialize(&f) * &b.specialize(&f));
            prop_assert_eq!((&a + &b).specialize(&f), &a.specialize(&f) + &b.specialize(&f));
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
