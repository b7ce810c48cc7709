//! Exact arithmetic foundation.
//!
//! All higher modules are generic over the [`Ring`] contract so the same
//! algorithms run over [`Rational`] coefficients
//! (numeric specializations), [`LaurentPoly`](laurent::LaurentPoly)
//! coefficients (weights carrying powers of `t`) and
//! [`MultiPoly`](multipoly::MultiPoly) coefficients (symbolic elementary
//! symmetric functions).
//!
//! Every implementor is a Q-algebra: scalar multiplication by an exact
//! rational is part of the contract, which is what makes the series `log`
//! and `exp` (coefficients involving `1/i`) exact. Rings of positive
//! characteristic are rejected at the contract level by construction.

pub mod laurent;
pub mod matrix;
pub mod multipoly;
pub mod poly;
pub mod rational;
pub mod series;
pub mod text;

use crate::ring::rational::Rational;

/// Coefficient-ring contract: a commutative Q-algebra with decidable
/// equality.
///
/// `inverse` answers whether an element is a unit and produces the inverse
/// when it is; for Laurent polynomials only single-term monomials qualify,
/// so that inverses stay inside the ring.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Scalar multiplication by an exact rational (the Q-algebra structure).
    fn scale(&self, q: &Rational) -> Self;
    /// Multiplicative inverse, if this element is a unit of the ring.
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn from_int(n: i64) -> Self {
        Self::one().scale(&Rational::from_int(n))
    }

    /// Exact division by a nonzero integer. Always exact in a Q-algebra.
    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        self.scale(&Rational::new(1, n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A commutative integral domain in which exact quotients are computable.
///
/// `exact_div` returns `None` when `rhs` does not divide `self`; fraction-free
/// elimination uses it with quotients that are guaranteed to exist, so a
/// `None` there is converted into a loud failure.
pub trait IntegralDomain: Ring {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}
