//! Laurent polynomials in `t` with exact rational coefficients.
//!
//! Sparse map from integer exponent (negative allowed) to nonzero
//! coefficient; the empty map is the zero element. These house the step
//! weights, kernel coefficients and every Laurent-in-`t` quantity of the
//! pipeline.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::rational::Rational;
use crate::ring::{IntegralDomain, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// The monomial `c * t^exp`; collapses to zero when `c` is zero.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(Rational::one(), 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero element.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero element.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some((coeff, exp))` when the element is a single-term monomial.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            let (exp, c) = self.terms.iter().next().unwrap();
            Some((c, *exp))
        } else {
            None
        }
    }

    /// True when every exponent is >= 0, i.e. the element is a plain polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|m| m >= 0)
    }

    /// Multiplies by `t^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e + shift, c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// Evaluates at a rational value of `t`. Requires `t != 0` when negative
    /// exponents are present.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                t.pow(*e as u32)
            } else {
                t.inverse()
                    .expect("evaluating negative power at t = 0")
                    .pow(-*e as u32)
            };
            acc = acc.add(&c.mul(&p));
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    fn insert_add(terms: &mut BTreeMap<i64, Rational>, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert_add(&mut terms, *e, c.clone());
        }
        LaurentPoly { terms }
    }

    fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, c.neg())).collect();
        LaurentPoly { terms }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                Self::insert_add(&mut terms, ea + eb, ca.mul(cb));
            }
        }
        LaurentPoly { terms }
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c.mul(q))).collect();
        LaurentPoly { terms }
    }

    /// Units of the Laurent ring are exactly the single-term monomials.
    fn inverse(&self) -> Option<Self> {
        let (c, exp) = self.as_monomial()?;
        Some(LaurentPoly::monomial(
            c.inverse().expect("nonzero by invariant"),
            -exp,
        ))
    }
}

impl IntegralDomain for LaurentPoly {
    /// Exact Laurent division: factors out `t`-valuations, then runs ordinary
    /// long division over Q; a nonzero remainder means `rhs` does not divide.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let shift = self.min_exp().unwrap() - rhs.min_exp().unwrap();
        let num = self.shifted(-self.min_exp().unwrap());
        let den = rhs.shifted(-rhs.min_exp().unwrap());

        // Long division of polynomials in t, top down.
        let mut rem = num;
        let mut quot = LaurentPoly::zero();
        let den_deg = den.max_exp().unwrap();
        let den_lead = den.coeff(den_deg);
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().unwrap();
            if rem_deg < den_deg {
                return None;
            }
            let factor = LaurentPoly::monomial(
                rem.coeff(rem_deg).mul(&den_lead.inverse().unwrap()),
                rem_deg - den_deg,
            );
            quot = quot.add(&factor);
            rem = rem.sub(&factor.mul(&den));
        }
        Some(quot.shifted(shift))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::ring::text::laurent_to_string(self, "t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
