//! Arbitrary-precision exact rationals.
//!
//! A thin wrapper over `num`'s `BigRational` that fixes the canonical form
//! (reduced, positive denominator — maintained by `num` on every operation)
//! and the text rendering `num/den` with the denominator omitted when 1.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;
use crate::ring::{IntegralDomain, Ring};

/// An exact rational number. Always stored reduced with denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::from_int(1);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Parses `INT` or `INT/UINT`.
    pub fn parse(text: &str) -> crate::Result<Self> {
        let text = text.trim();
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num_str.trim())
            .map_err(|_| Error::Parse(format!("invalid rational literal {text:?}")))?;
        let den = BigInt::from_str(den_str.trim())
            .map_err(|_| Error::Parse(format!("invalid rational literal {text:?}")))?;
        if den <= BigInt::zero() {
            return Err(Error::Parse(format!(
                "denominator must be a positive integer in {text:?}"
            )));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn scale(&self, q: &Rational) -> Self {
        Rational(&self.0 * &q.0)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

impl IntegralDomain for Rational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.mul(&inv))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Rational {
    /// Exact quotient; panics on a zero divisor.
    pub fn div(&self, rhs: &Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}
