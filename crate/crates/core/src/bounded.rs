//! Bounded-height excursions via the transfer-matrix method.
//!
//! Walks of height at most `k` live on the levels `0..=k`; the adjacency
//! matrix `A` has `A[i][j] = w_(j-i)` whenever `j-i` is a step. Then
//! `F_(k+1) = det(1 - t A)` with `F_0 = 1`, the bounded excursion series is
//! `E^(k) = F_k / F_(k+1)`, and `sum_k F_k z^k = N(t,z) / D(t,z)` with `D`
//! the annihilating polynomial. `N` is produced by truncated multiplication
//! with a verification margin that turns the degree claim into a runtime
//! check.

use crate::error::{Error, Result};
use crate::platypus::annihilator;
use crate::ring::laurent::LaurentPoly;
use crate::ring::matrix::{bareiss_det, leading_principal_minors};
use crate::ring::poly::RingPoly;
use crate::ring::rational::Rational;
use crate::ring::series::{series_inverse, RingSeries};
use crate::ring::Ring;
use crate::stepset::StepSet;

/// Adjacency matrix of the levels `0..=k`, Toeplitz by construction:
/// the entry at `(i, j)` depends only on `j - i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransferMatrix {
    k: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl TransferMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    /// The matrix `1 - t A`, whose determinant is `F_(k+1)`.
    pub fn counting_matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.entries.len();
        let mut m = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let off = self.entries[i][j].shifted(1).neg();
                row.push(if i == j {
                    LaurentPoly::one().add(&off)
                } else {
                    off
                });
            }
            m.push(row);
        }
        m
    }
}

pub fn transfer_matrix(s: &StepSet, k: usize) -> TransferMatrix {
    let n = k + 1;
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| s.weight_laurent(j as i64 - i as i64))
                .collect()
        })
        .collect();
    TransferMatrix { k, entries }
}

/// `F_k`: 1 for `k = 0`, otherwise `det(1 - t A^(k-1))`. Always a plain
/// polynomial in `t` with constant term 1.
pub fn f_polynomial(s: &StepSet, k: usize) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::one();
    }
    let m = transfer_matrix(s, k - 1).counting_matrix();
    let f = bareiss_det(&m).expect("square matrix over an integral domain");
    debug_assert!(f.coeff(0).is_one(), "F_k(0) = 1");
    f
}

/// `F_0..F_kmax` in one fraction-free pass: the leading principal minors of
/// `1 - t A^(kmax-1)` are exactly the nested transfer determinants, because
/// the counting matrix of height `j` is the leading submatrix of the one of
/// height `k` for `j <= k`.
pub fn f_polynomials(s: &StepSet, kmax: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one()];
    if kmax == 0 {
        return out;
    }
    let m = transfer_matrix(s, kmax - 1).counting_matrix();
    let minors = leading_principal_minors(&m).expect("square matrix over an integral domain");
    debug_assert!(minors.iter().all(|f| f.coeff(0).is_one()));
    out.extend(minors);
    out
}

/// Power-series expansion of `E^(k) = F_k / F_(k+1)` up to `t^order`.
pub fn bounded_series(s: &StepSet, k: usize, order: usize) -> RingSeries<Rational> {
    let fs = f_polynomials(s, k + 1);
    let to_series = |p: &LaurentPoly| -> RingSeries<Rational> {
        assert!(p.is_polynomial(), "F_k is a plain polynomial in t");
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (&e, c) in p.iter() {
            if (e as usize) <= order {
                coeffs[e as usize] = c.clone();
            }
        }
        RingSeries::from_coeffs(coeffs)
    };
    let numer = to_series(&fs[k]);
    let denom = to_series(&fs[k + 1]);
    let inv = series_inverse(&denom, order).expect("F_(k+1) has constant term 1");
    numer.mul(&inv)
}

/// The numerator `N(t,z)` of `sum_k F_k z^k = N/D`, of degree at most
/// `delta = C(a+b,a) - a - b` in `z`.
///
/// Computed as the truncation of `D * sum_k F_k z^k` at `z^delta`; the
/// product is then checked to vanish for `delta < k <= d + a + b`. A margin
/// failure means the recurrence does not close and is a bug, not an input
/// condition.
pub fn numerator(s: &StepSet) -> Result<RingPoly<LaurentPoly>> {
    let d_poly = annihilator(s)?;
    numerator_with_annihilator(s, &d_poly)
}

/// Same as [`numerator`], reusing an already-computed `D(t,z)`.
pub fn numerator_with_annihilator(
    s: &StepSet,
    d_poly: &RingPoly<LaurentPoly>,
) -> Result<RingPoly<LaurentPoly>> {
    let d = s.d() as usize;
    let delta = s.delta() as usize;
    let margin = d + (s.a() + s.b()) as usize;
    let fs = f_polynomials(s, margin);
    let mut product = Vec::with_capacity(margin + 1);
    for m in 0..=margin {
        let mut acc = LaurentPoly::zero();
        for i in 0..=m.min(d) {
            let di = d_poly.coeff(i);
            if di.is_zero() {
                continue;
            }
            acc = acc.add(&di.mul(&fs[m - i]));
        }
        product.push(acc);
    }
    for (m, c) in product.iter().enumerate().skip(delta + 1) {
        if !c.is_zero() {
            return Err(Error::Internal(format!(
                "recurrence does not close: z^{m} coefficient of D * sum F_k z^k is nonzero"
            )));
        }
    }
    let n_poly = RingPoly::from_coeffs(product[..=delta].to_vec());
    if !n_poly.coeff(0).is_one() {
        return Err(Error::Internal("N(t,0) should be 1".into()));
    }
    Ok(n_poly)
}

/// Checks the order-`d` linear recurrence `sum_i a_i F_(k-i) = 0` (the `a_i`
/// are the z-coefficients of `D`) for every `delta < k <= kmax`, with
/// determinant-computed `F_k` and `F_i = 0` for `i < 0`.
pub fn check_recurrence(s: &StepSet, kmax: usize) -> Result<bool> {
    let d_poly = annihilator(s)?;
    check_recurrence_with_annihilator(s, &d_poly, kmax)
}

/// Same as [`check_recurrence`], reusing an already-computed `D(t,z)`.
pub fn check_recurrence_with_annihilator(
    s: &StepSet,
    d_poly: &RingPoly<LaurentPoly>,
    kmax: usize,
) -> Result<bool> {
    let delta = s.delta() as usize;
    if kmax <= delta {
        return Err(Error::InvalidArgument(format!(
            "kmax must exceed delta = {delta}"
        )));
    }
    let d = s.d() as usize;
    let fs = f_polynomials(s, kmax);
    for k in delta + 1..=kmax {
        let mut acc = LaurentPoly::zero();
        for i in 0..=d.min(k) {
            let a_i = d_poly.coeff(i);
            if a_i.is_zero() {
                continue;
            }
            acc = acc.add(&a_i.mul(&fs[k - i]));
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
