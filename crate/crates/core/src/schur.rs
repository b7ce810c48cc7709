//! Symmetric-function verification layer.
//!
//! Rectangular Schur functions evaluated through the dual Jacobi-Trudi
//! determinant `s_(k^a) = det(e_(a+i-j))` support two independent checks of
//! the transfer-matrix pipeline:
//!
//! - specializing the elementary symmetric functions to the negated kernel
//!   roots gives `F_k = (-t w_a)^k s_(k^a)` as a constant-size determinant,
//!   cross-checked against the growing transfer determinants;
//! - on a numeric alphabet, `sum_k s_(k^a) z^k = P(z)/Q(z)` with
//!   `Q = prod_(|I|=a) (1 - z u_I)`, `deg P = C(n,a) - n`, a pinned leading
//!   coefficient, and product formulas for `P(1/u_J)`.

use crate::error::{Error, Result};
use crate::ring::laurent::LaurentPoly;
use crate::ring::matrix::bareiss_det;
use crate::ring::poly::RingPoly;
use crate::ring::rational::Rational;
use crate::ring::Ring;
use crate::stepset::{binomial_u64, StepSet};

/// `e_i` of the negated kernel roots, as a Laurent polynomial in `t`:
/// `e_i(V) = w_(a-i)/w_a - [i = a]/(t w_a)`, for `0 <= i <= a+b`.
pub fn e_spec(s: &StepSet, i: u32) -> Result<LaurentPoly> {
    let n = s.a() + s.b();
    if i > n {
        return Err(Error::InvalidArgument(format!(
            "e_{i} out of range: alphabet has {n} letters"
        )));
    }
    let w_a_inv = s
        .weight_laurent(s.a() as i64)
        .inverse()
        .expect("top weight is a nonzero monomial");
    let mut e = s.weight_laurent(s.a() as i64 - i as i64).mul(&w_a_inv);
    if i == s.a() {
        e = e.sub(&w_a_inv.shifted(-1));
    }
    Ok(e)
}

fn e_spec_or_zero(s: &StepSet, idx: i64) -> LaurentPoly {
    if idx < 0 || idx > (s.a() + s.b()) as i64 {
        LaurentPoly::zero()
    } else {
        e_spec(s, idx as u32).expect("index in range")
    }
}

/// `F_k` evaluated through the dual Jacobi-Trudi route:
/// `(-t w_a)^k * det(e_(a+i-j)(V))_(k x k)`. Agrees with the transfer
/// determinant exactly.
pub fn f_via_jacobi_trudi(s: &StepSet, k: usize) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::one();
    }
    let m: Vec<Vec<LaurentPoly>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| e_spec_or_zero(s, s.a() as i64 + i as i64 - j as i64))
                .collect()
        })
        .collect();
    let det = bareiss_det(&m).expect("square matrix over an integral domain");
    let factor = s
        .weight_laurent(s.a() as i64)
        .shifted(1)
        .neg()
        .pow(k as u32);
    factor.mul(&det)
}

/// A list of distinct nonzero rationals `u_1..u_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumericAlphabet {
    values: Vec<Rational>,
}

impl NumericAlphabet {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("alphabet must be nonempty".into()));
        }
        if values.iter().any(Rational::is_zero) {
            return Err(Error::InvalidArgument(
                "alphabet values must be nonzero".into(),
            ));
        }
        let mut sorted = values.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "alphabet values must be distinct".into(),
            ));
        }
        Ok(NumericAlphabet { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Generic for size `a`: all `a`-subset products pairwise distinct.
    pub fn is_generic(&self, a: usize) -> bool {
        let mut products = self.subset_products(a);
        products.sort();
        !products.windows(2).any(|w| w[0] == w[1])
    }

    /// Product of `u_i` over a 0-based index subset.
    pub fn product_over(&self, subset: &[usize]) -> Rational {
        subset
            .iter()
            .fold(Rational::one(), |acc, &i| acc.mul(&self.values[i]))
    }

    fn subset_products(&self, a: usize) -> Vec<Rational> {
        subsets(self.len(), a)
            .into_iter()
            .map(|s| self.product_over(&s))
            .collect()
    }

    fn elementary(&self) -> Vec<Rational> {
        // coefficients of prod (1 + x u_i): index m holds e_m
        let mut e = vec![Rational::zero(); self.len() + 1];
        e[0] = Rational::one();
        for (count, u) in self.values.iter().enumerate() {
            for m in (1..=count + 1).rev() {
                e[m] = e[m].add(&e[m - 1].mul(u));
            }
        }
        e
    }
}

/// All `a`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, a: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a);
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    if a <= n {
        rec(0, n, a, &mut cur, &mut out);
    }
    out
}

/// `s_(k^a)(u_1..u_n)` via the dual Jacobi-Trudi determinant with numeric
/// elementary symmetric functions.
pub fn rect_schur_numeric(alphabet: &NumericAlphabet, a: u32, k: usize) -> Result<Rational> {
    let n = alphabet.len();
    if a < 1 || a as usize > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= n, got a = {a}, n = {n}"
        )));
    }
    if k == 0 {
        return Ok(Rational::one());
    }
    let e = alphabet.elementary();
    let at = |idx: i64| -> Rational {
        if idx < 0 || idx as usize > n {
            Rational::zero()
        } else {
            e[idx as usize].clone()
        }
    };
    let m: Vec<Vec<Rational>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| at(a as i64 + i as i64 - j as i64))
                .collect()
        })
        .collect();
    bareiss_det(&m)
}

/// The rational generating function `sum_k s_(k^a) z^k = P(z)/Q(z)` on a
/// generic numeric alphabet.
///
/// `Q` is expanded directly as the product over `a`-subsets; `P` is the
/// truncation of `Q * sum_k s_(k^a) z^k` at degree `C(n,a) - n`, verified to
/// terminate there, with the pinned degree and leading coefficient. The full
/// rectangle `a = n` is special-cased (`P = 1`, `Q = 1 - z e_n`); the degree
/// claims target `a < n`.
pub fn rect_schur_gf(
    alphabet: &NumericAlphabet,
    a: u32,
) -> Result<(RingPoly<Rational>, RingPoly<Rational>)> {
    let n = alphabet.len();
    if a < 1 || (a as usize) > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= n, got a = {a}, n = {n}"
        )));
    }
    let a_us = a as usize;
    if a_us == n {
        let e_n = alphabet.product_over(&(0..n).collect::<Vec<_>>());
        let q = RingPoly::from_coeffs(vec![Rational::one(), e_n.neg()]);
        return Ok((RingPoly::one(), q));
    }
    if !alphabet.is_generic(a_us) {
        return Err(Error::InvalidArgument("alphabet not generic".into()));
    }

    let big_d = binomial_u64(n as u64, a as u64)? as usize;
    let delta = big_d - n;

    let mut q = RingPoly::<Rational>::one();
    for subset in subsets(n, a_us) {
        let u_i = alphabet.product_over(&subset);
        q = q.mul(&RingPoly::from_coeffs(vec![Rational::one(), u_i.neg()]));
    }
    debug_assert_eq!(q.degree(), Some(big_d));

    let s_values: Vec<Rational> = (0..=big_d)
        .map(|k| rect_schur_numeric(alphabet, a, k))
        .collect::<Result<_>>()?;
    let mut product = Vec::with_capacity(big_d + 1);
    for m in 0..=big_d {
        let mut acc = Rational::zero();
        for i in 0..=m {
            let qi = q.coeff(i);
            if qi.is_zero() {
                continue;
            }
            acc = acc.add(&qi.mul(&s_values[m - i]));
        }
        product.push(acc);
    }
    for (m, c) in product.iter().enumerate().skip(delta + 1) {
        if !c.is_zero() {
            return Err(Error::Internal(format!(
                "rectangular generating function does not terminate: z^{m} residue"
            )));
        }
    }
    let p = RingPoly::from_coeffs(product[..=delta].to_vec());

    if p.degree() != Some(delta) {
        return Err(Error::Internal(format!(
            "P should have degree {delta}, got {:?}",
            p.degree()
        )));
    }
    let b = n - a_us;
    let exponent = binomial_u64((n - 1) as u64, (a_us - 1) as u64)? as i64 - a_us as i64;
    if exponent < 0 {
        return Err(Error::Internal(
            "negative leading-coefficient exponent".into(),
        ));
    }
    let product_all = alphabet.product_over(&(0..n).collect::<Vec<_>>());
    let sign = if (big_d + a_us * b).is_multiple_of(2) {
        -1
    } else {
        1
    };
    let expected_lead = product_all
        .pow(exponent as u32)
        .scale(&Rational::from_int(sign));
    if p.leading_coeff() != Some(&expected_lead) {
        return Err(Error::Internal(
            "leading coefficient of P does not match the dominant-term formula".into(),
        ));
    }
    Ok((p, q))
}

/// The product `prod_(|I| = a, |I delta J| >= 4) (1 - u_I/u_J)` that `P(1/u_J)`
/// must equal, for a 0-based index subset `J`.
pub fn puj_product(alphabet: &NumericAlphabet, a: u32, j_subset: &[usize]) -> Rational {
    let n = alphabet.len();
    let u_j = alphabet.product_over(j_subset);
    let u_j_inv = u_j.inverse().expect("subset product of nonzero values");
    let mut acc = Rational::one();
    for subset in subsets(n, a as usize) {
        let common = subset.iter().filter(|i| j_subset.contains(i)).count();
        // |I delta J| = 2 (a - |I cap J|) >= 4  <=>  |I cap J| <= a - 2
        if common + 2 > a as usize {
            continue;
        }
        let ratio = alphabet.product_over(&subset).mul(&u_j_inv);
        acc = acc.mul(&Rational::one().sub(&ratio));
    }
    acc
}
