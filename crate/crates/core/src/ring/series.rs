//! Truncated power series over a coefficient ring, with exact log/exp.
//!
//! A series of order `N` knows its coefficients for exponents `0..=N`.
//! Binary operations carry the minimum order of their inputs; the unary
//! `series_*` operations take an explicit target order not exceeding what
//! the input knows.

use crate::error::{Error, Result};
use crate::ring::poly::RingPoly;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingSeries<R: Ring> {
    /// length = order + 1
    coeffs: Vec<R>,
}

impl<R: Ring> RingSeries<R> {
    pub fn zero(order: usize) -> Self {
        RingSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = RingSeries::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    /// A polynomial is exact, so it extends to any order.
    pub fn from_poly(p: &RingPoly<R>, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        for (k, c) in p.coeffs().iter().enumerate().take(order + 1) {
            coeffs[k] = c.clone();
        }
        RingSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series knows at least its constant term"
        );
        RingSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        assert!(k <= self.order(), "coefficient beyond truncation order");
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Drops trailing zero coefficients into an exact polynomial view.
    pub fn to_poly(&self) -> RingPoly<R> {
        RingPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        RingSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].add(&rhs.coeffs[k]))
            .collect();
        RingSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RingSeries {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        RingSeries { coeffs }
    }

    pub fn scale(&self, q: &crate::ring::rational::Rational) -> Self {
        RingSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect(),
        }
    }
}

/// Multiplicative inverse of `f` modulo `x^(order+1)`.
///
/// The constant coefficient must be invertible in the ring — nonzero for
/// rationals, a single-term monomial for Laurent polynomials (so the
/// inverse stays Laurent).
pub fn series_inverse<R: Ring>(f: &RingSeries<R>, order: usize) -> Result<RingSeries<R>> {
    assert!(
        order <= f.order(),
        "requested order exceeds known coefficients"
    );
    let c0 = f.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
    let mut out = vec![R::zero(); order + 1];
    out[0] = c0.clone();
    let neg_c0 = c0.neg();
    for n in 1..=order {
        let mut sum = R::zero();
        for k in 1..=n {
            if f.coeffs[k].is_zero() || out[n - k].is_zero() {
                continue;
            }
            sum = sum.add(&f.coeffs[k].mul(&out[n - k]));
        }
        out[n] = neg_c0.mul(&sum);
    }
    Ok(RingSeries { coeffs: out })
}

/// Logarithm of a series with constant term 1, via `log(f)' = f'/f` and
/// exact integration (the Q-algebra contract supplies division by `n`).
pub fn series_log<R: Ring>(f: &RingSeries<R>, order: usize) -> Result<RingSeries<R>> {
    assert!(
        order <= f.order(),
        "requested order exceeds known coefficients"
    );
    if !f.coeffs[0].is_one() {
        return Err(Error::InvalidArgument(
            "series_log requires constant term 1".into(),
        ));
    }
    if order == 0 {
        return Ok(RingSeries::zero(0));
    }
    let inv = series_inverse(f, order - 1)?;
    // f' as a series of order - 1
    let deriv = RingSeries {
        coeffs: (1..=order.min(f.order()))
            .map(|k| f.coeffs[k].scale(&crate::ring::rational::Rational::from_int(k as i64)))
            .collect::<Vec<_>>(),
    };
    let g = deriv.mul(&inv);
    let mut out = vec![R::zero(); order + 1];
    for (i, gc) in g.coeffs.iter().enumerate().take(order) {
        out[i + 1] = gc.div_int((i + 1) as i64);
    }
    Ok(RingSeries { coeffs: out })
}

/// Exponential of a series with zero constant term, via the recurrence
/// `g[n] = (1/n) * sum_k k f[k] g[n-k]` from `g' = f' g`.
pub fn series_exp<R: Ring>(f: &RingSeries<R>, order: usize) -> Result<RingSeries<R>> {
    assert!(
        order <= f.order(),
        "requested order exceeds known coefficients"
    );
    if !f.coeffs[0].is_zero() {
        return Err(Error::InvalidArgument(
            "series_exp requires zero constant term".into(),
        ));
    }
    let mut out = vec![R::zero(); order + 1];
    out[0] = R::one();
    for n in 1..=order {
        let mut sum = R::zero();
        for k in 1..=n {
            if f.coeffs[k].is_zero() || out[n - k].is_zero() {
                continue;
            }
            sum = sum.add(
                &f.coeffs[k]
                    .scale(&crate::ring::rational::Rational::from_int(k as i64))
                    .mul(&out[n - k]),
            );
        }
        out[n] = sum.div_int(n as i64);
    }
    Ok(RingSeries { coeffs: out })
}
