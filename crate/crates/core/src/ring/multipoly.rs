//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms map an exponent vector (componentwise >= 0) to a nonzero
//! coefficient. Keys are stored with trailing zeros trimmed, which makes
//! equality independent of the declared variable count — the contract's
//! nullary `zero()`/`one()` then unify with any context — without changing
//! the lexicographic term order used for serialization. These polynomials
//! house the symbols `e_1..e_n` of the symbolic plethysm mode and the
//! `p_1..p_a` of the power-sum packaging.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::rational::Rational;
use crate::ring::{IntegralDomain, Ring};

#[derive(Clone, Eq)]
pub struct MultiPoly {
    /// Declared variable count; a rendering/eval context, not part of the value.
    n_vars: usize,
    /// Canonical: no zero coefficients, keys trimmed of trailing zeros.
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut exps: Vec<u32>) -> Vec<u32> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl MultiPoly {
    pub fn zero_in(n_vars: usize) -> Self {
        MultiPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { n_vars, terms }
    }

    /// The variable with 1-based index `i`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n_vars, "variable index out of range");
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        MultiPoly::term(n_vars, exps, Rational::one())
    }

    pub fn term(n_vars: usize, exps: Vec<u32>, c: Rational) -> Self {
        let exps = trim(exps);
        assert!(
            exps.len() <= n_vars,
            "exponent vector longer than variable count"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { n_vars, terms }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order, keys trimmed of trailing zeros.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Terms with exponent vectors padded to the declared variable count.
    pub fn iter_padded(&self) -> impl Iterator<Item = (Vec<u32>, &Rational)> {
        let n = self.n_vars;
        self.terms.iter().map(move |(e, c)| {
            let mut e = e.clone();
            e.resize(n, 0);
            (e, c)
        })
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_empty())
    }

    /// Substitutes ring elements for the variables (1-based order).
    pub fn eval_in<R: Ring>(&self, values: &[R]) -> R {
        let mut acc = R::zero();
        for (exps, c) in &self.terms {
            assert!(exps.len() <= values.len(), "not enough substitution values");
            let mut prod = R::one();
            for (value, &e) in values.iter().zip(exps.iter()) {
                for _ in 0..e {
                    prod = prod.mul(value);
                }
            }
            acc = acc.add(&prod.scale(c));
        }
        acc
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        self.eval_in::<Rational>(values)
    }

    fn insert_add(terms: &mut BTreeMap<Vec<u32>, Rational>, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let exps = trim(exps);
        match terms.entry(exps) {
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

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero_in(0)
    }

    fn one() -> Self {
        MultiPoly::constant(0, Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert_add(&mut terms, e.clone(), c.clone());
        }
        MultiPoly {
            n_vars: self.n_vars.max(rhs.n_vars),
            terms,
        }
    }

    fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.neg()))
            .collect();
        MultiPoly {
            n_vars: self.n_vars,
            terms,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = vec![0u32; ea.len().max(eb.len())];
                for (i, x) in ea.iter().enumerate() {
                    e[i] += x;
                }
                for (i, x) in eb.iter().enumerate() {
                    e[i] += x;
                }
                Self::insert_add(&mut terms, e, ca.mul(cb));
            }
        }
        MultiPoly {
            n_vars: self.n_vars.max(rhs.n_vars),
            terms,
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MultiPoly::zero_in(self.n_vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.mul(q)))
            .collect();
        MultiPoly {
            n_vars: self.n_vars,
            terms,
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !e.is_empty() {
            return None;
        }
        Some(MultiPoly::constant(
            self.n_vars,
            c.inverse().expect("nonzero by invariant"),
        ))
    }
}

impl IntegralDomain for MultiPoly {
    /// Exact division by repeated cancellation of lex-leading terms. When the
    /// quotient exists its leading monomial times the divisor's cancels the
    /// dividend's top term at every step, so a non-dividing leading monomial
    /// certifies non-divisibility.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let (den_exp, den_coeff) = {
            let (e, c) = rhs.leading().unwrap();
            (e.clone(), c.clone())
        };
        let den_inv = den_coeff.inverse().unwrap();
        let mut quot = MultiPoly::zero_in(self.n_vars.max(rhs.n_vars));
        while !rem.is_zero() {
            let (rem_exp, rem_coeff) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            if rem_exp.len() < den_exp.len() {
                return None;
            }
            let mut diff = rem_exp.clone();
            for (i, &d) in den_exp.iter().enumerate() {
                if diff[i] < d {
                    return None;
                }
                diff[i] -= d;
            }
            let factor = MultiPoly::term(quot.n_vars, diff, rem_coeff.mul(&den_inv));
            quot = quot.add(&factor);
            rem = rem.sub(&factor.mul(rhs));
        }
        Some(quot)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::ring::text::multipoly_to_string(self, "x"))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
