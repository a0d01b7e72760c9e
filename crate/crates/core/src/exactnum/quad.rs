use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, Sign};
use crate::error::{parse_error, Error, Result};

/// Squarefree integer `d >= 2`, so that `sqrt(d)` is irrational and every
/// element of Q(sqrt d) has exactly one representation `a + b*sqrt(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Radicand(u64);

impl Radicand {
    /// Upper bound keeping trial division for the squarefree test cheap.
    pub const MAX: u64 = u32::MAX as u64;

    pub const DEFAULT: Radicand = Radicand(2);

    pub fn new(value: u64) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidRadicand { value, reason });
        if value < 2 {
            return invalid("must be at least 2");
        }
        if value > Self::MAX {
            return invalid("exceeds the supported maximum 2^32 - 1");
        }
        let mut p = 2u64;
        while p * p <= value {
            if value.is_multiple_of(p * p) {
                return if is_perfect_square(value) {
                    invalid("is a perfect square")
                } else {
                    invalid("is not squarefree")
                };
            }
            p += 1;
        }
        Ok(Radicand(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_perfect_square(value: u64) -> bool {
    let root = (value as f64).sqrt() as u64;
    (root.saturating_sub(1)..=root + 1).any(|r| r * r == value)
}

impl Default for Radicand {
    fn default() -> Self {
        Radicand::DEFAULT
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'de> Deserialize<'de> for Radicand {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = u64::deserialize(deserializer)?;
        Radicand::new(value).map_err(serde::de::Error::custom)
    }
}

/// An element `rat + irr*sqrt(d)` of the real quadratic field Q(sqrt d).
///
/// Elements with `irr == 0` are plain rationals and combine freely with
/// elements of any radicand; mixing two genuinely irrational elements over
/// different radicands is a programming error and panics.
#[derive(Clone)]
pub struct QuadElem {
    rat: Rational,
    irr: Rational,
    radicand: Radicand,
}

impl QuadElem {
    pub fn new(rat: Rational, irr: Rational, radicand: Radicand) -> Self {
        QuadElem { rat, irr, radicand }
    }

    /// A rational element tagged with the default radicand.
    pub fn from_rational(rat: Rational) -> Self {
        QuadElem::new(rat, Rational::zero(), Radicand::DEFAULT)
    }

    pub fn integer(value: i64) -> Self {
        QuadElem::from_rational(Rational::from(value))
    }

    pub fn zero() -> Self {
        QuadElem::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        QuadElem::from_rational(Rational::one())
    }

    /// `sqrt(d)` itself.
    pub fn root(radicand: Radicand) -> Self {
        QuadElem::new(Rational::zero(), Rational::one(), radicand)
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    fn d(&self) -> Rational {
        Rational::from(self.radicand.0 as i64)
    }

    /// Radicand shared by both operands.
    fn join(&self, other: &QuadElem) -> Result<Radicand> {
        if self.radicand == other.radicand || other.irr.is_zero() {
            Ok(self.radicand)
        } else if self.irr.is_zero() {
            Ok(other.radicand)
        } else {
            Err(Error::RadicandMismatch {
                left: self.radicand.0,
                right: other.radicand.0,
            })
        }
    }

    fn joined(&self, other: &QuadElem) -> Radicand {
        match self.join(other) {
            Ok(d) => d,
            Err(e) => panic!("{e}"),
        }
    }

    /// True when the two elements may be combined arithmetically.
    pub fn is_compatible(&self, other: &QuadElem) -> bool {
        self.join(other).is_ok()
    }

    /// Multiplies both coordinates by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Self {
        QuadElem::new(&self.rat * q, &self.irr * q, self.radicand)
    }

    pub fn conjugate(&self) -> Self {
        QuadElem::new(self.rat.clone(), -&self.irr, self.radicand)
    }

    /// Field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rational {
        self.rat.pow(2) - self.irr.pow(2) * self.d()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // The norm is nonzero because sqrt(d) is irrational.
        let norm_inv = self.norm().recip()?;
        Ok(self.conjugate().scale(&norm_inv))
    }

    pub fn checked_div(&self, rhs: &QuadElem) -> Result<Self> {
        self.join(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = QuadElem::new(Rational::one(), Rational::zero(), self.radicand);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact sign of the real number `rat + irr*sqrt(d)`.
    pub fn sign(&self) -> Sign {
        let a = self.rat.sign();
        let b = self.irr.sign();
        match (a, b) {
            (_, Sign::Zero) => a,
            (Sign::Zero, _) => b,
            _ if a == b => a,
            _ => {
                let rat_sq = self.rat.pow(2);
                let irr_sq = self.irr.pow(2) * self.d();
                // Equality is impossible for nonzero a, b since d is not a square.
                if rat_sq > irr_sq {
                    a
                } else {
                    b
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        self.rat == other.rat
            && self.irr == other.irr
            && (self.irr.is_zero() || self.radicand == other.radicand)
    }
}

impl Eq for QuadElem {}

impl Hash for QuadElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rat.hash(state);
        self.irr.hash(state);
        if !self.irr.is_zero() {
            self.radicand.hash(state);
        }
    }
}

impl Ord for QuadElem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl PartialOrd for QuadElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for QuadElem {
    fn from(value: Rational) -> Self {
        QuadElem::from_rational(value)
    }
}

impl From<i64> for QuadElem {
    fn from(value: i64) -> Self {
        QuadElem::integer(value)
    }
}

impl fmt::Display for QuadElem {
    /// `p/q`, `r/s*sqrt(d)` or `p/q + r/s*sqrt(d)`; the coefficient of the
    /// root is always printed, so the output re-parses to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.radicand;
        if self.irr.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "{}*sqrt({d})", self.irr)
        } else if self.irr.sign() == Sign::Negative {
            write!(f, "{} - {}*sqrt({d})", self.rat, self.irr.abs())
        } else {
            write!(f, "{} + {}*sqrt({d})", self.rat, self.irr)
        }
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem({self})")
    }
}

fn parse_coefficient(input: &str, text: &str) -> Result<Rational> {
    let text = text.strip_suffix('*').unwrap_or(text);
    match text {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        _ => text
            .parse()
            .map_err(|_| parse_error(input, format!("bad coefficient {text:?}"))),
    }
}

impl FromStr for QuadElem {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let cleaned: String = input
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        let Some(start) = cleaned.find("sqrt(") else {
            return Ok(QuadElem::from_rational(cleaned.parse().map_err(|_| {
                parse_error(input, "expected p/q or p/q + r/s*sqrt(d)")
            })?));
        };
        let rest = &cleaned[start + "sqrt(".len()..];
        let radicand_text = rest
            .strip_suffix(')')
            .ok_or_else(|| parse_error(input, "expected sqrt(d) to close the expression"))?;
        let radicand_value: u64 = radicand_text
            .parse()
            .map_err(|_| parse_error(input, format!("bad radicand {radicand_text:?}")))?;
        let radicand = Radicand::new(radicand_value)?;

        let prefix = &cleaned[..start];
        let bytes = prefix.as_bytes();
        let split = (1..bytes.len()).rev().find(|&i| {
            matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'+' | b'-' | b'/' | b'*')
        });
        let (rat, irr) = match split {
            Some(i) => (
                prefix[..i].parse().map_err(|_| {
                    parse_error(input, format!("bad rational part {:?}", &prefix[..i]))
                })?,
                parse_coefficient(input, &prefix[i..])?,
            ),
            None => (Rational::zero(), parse_coefficient(input, prefix)?),
        };
        Ok(QuadElem::new(rat, irr, radicand))
    }
}

impl Serialize for QuadElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuadElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl Add<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        let d = self.joined(rhs);
        QuadElem::new(&self.rat + &rhs.rat, &self.irr + &rhs.irr, d)
    }
}

impl Sub<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        let d = self.joined(rhs);
        QuadElem::new(&self.rat - &rhs.rat, &self.irr - &rhs.irr, d)
    }
}

impl Mul<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let radicand = self.joined(rhs);
        let d = Rational::from(radicand.0 as i64);
        let rat = &self.rat * &rhs.rat + &self.irr * &rhs.irr * d;
        let irr = &self.rat * &rhs.irr + &rhs.rat * &self.irr;
        QuadElem::new(rat, irr, radicand)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-&self.rat, -&self.irr, self.radicand)
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl Sum for QuadElem {
    fn sum<I: Iterator<Item = QuadElem>>(iter: I) -> Self {
        iter.fold(QuadElem::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a QuadElem> for QuadElem {
    fn sum<I: Iterator<Item = &'a QuadElem>>(iter: I) -> Self {
        iter.fold(QuadElem::zero(), |acc, x| acc + x)
    }
}

impl Product for QuadElem {
    fn product<I: Iterator<Item = QuadElem>>(iter: I) -> Self {
        iter.fold(QuadElem::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a QuadElem> for QuadElem {
    fn product<I: Iterator<Item = &'a QuadElem>>(iter: I) -> Self {
        iter.fold(QuadElem::one(), |acc, x| acc * x)
    }
}
