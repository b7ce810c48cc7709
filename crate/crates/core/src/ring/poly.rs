//! Dense univariate polynomials over a coefficient ring.
//!
//! The main variable (`z` or `u` depending on context) is dense because the
//! kernel/annihilator degrees fill up to `C(a+b, a)`; the coefficients stay
//! in whatever sparse ring they live in. Trailing zeros are stripped, so the
//! zero polynomial has an empty coefficient list and `degree()` is `None`.

use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> RingPoly<R> {
    pub fn zero() -> Self {
        RingPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RingPoly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        RingPoly::from_coeffs(vec![c])
    }

    /// Coefficients indexed by exponent; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        RingPoly { coeffs }
    }

    /// `c * x^exp`.
    pub fn monomial(c: R, exp: usize) -> Self {
        if c.is_zero() {
            return RingPoly::zero();
        }
        let mut coeffs = vec![R::zero(); exp + 1];
        coeffs[exp] = c;
        RingPoly { coeffs }
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: usize) -> R {
        self.coeffs.get(exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        RingPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RingPoly {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RingPoly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        RingPoly::from_coeffs(coeffs)
    }

    pub fn scale_ring(&self, c: &R) -> Self {
        RingPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Substitutes `x -> c * x`: coefficient of `x^k` is multiplied by `c^k`.
    pub fn substitute_scaled_var(&self, c: &R) -> Self {
        let mut power = R::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul(c);
            }
            coeffs.push(a.mul(&power));
        }
        RingPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &R) -> R {
        // Horner, highest power first.
        let mut acc = R::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }
}

/// Exact polynomial division in the main variable over an integral domain:
/// every leading-coefficient quotient must exist in the ring and the
/// remainder must vanish, otherwise `None`. This is the bivariate exact
/// division behind the divisibility reports on `D(t,z)`.
pub fn poly_exact_div<R: crate::ring::IntegralDomain>(
    num: &RingPoly<R>,
    den: &RingPoly<R>,
) -> Option<RingPoly<R>> {
    if den.is_zero() {
        return None;
    }
    if num.is_zero() {
        return Some(RingPoly::zero());
    }
    let den_deg = den.degree().unwrap();
    let den_lead = den.leading_coeff().unwrap();
    let mut rem = num.clone();
    let mut quot_coeffs = vec![R::zero(); num.degree().unwrap().saturating_sub(den_deg) + 1];
    while let Some(rem_deg) = rem.degree() {
        if rem_deg < den_deg {
            return None;
        }
        let q = rem.leading_coeff().unwrap().exact_div(den_lead)?;
        let shift = rem_deg - den_deg;
        rem = rem.sub(&den.mul(&RingPoly::monomial(q.clone(), shift)));
        quot_coeffs[shift] = q;
        if rem.degree().is_some_and(|d| d >= rem_deg) {
            // Leading term failed to cancel: only possible on a broken ring.
            return None;
        }
    }
    Some(RingPoly::from_coeffs(quot_coeffs))
}
