//! The power-sum ("platypus") algorithm.
//!
//! Given a polynomial `L(z) = prod_k (1 - z U_k)` of degree `n` with
//! constant term 1, the algorithm produces
//! `Q(z) = prod_{|I|=a} (1 - z U_I)` — the generating polynomial of the
//! products of the inverse roots taken `a` at a time — entirely through
//! power sums and series log/exp, never materializing the roots:
//!
//! 1. `p_i = i [z^i] log(1/L(z))` for `1 <= i <= a*C(n,a)`,
//! 2. `log Q(z) = -sum_i z^i/i * Phi_a(p_i, p_{2i}, ..., p_{ai})`, where
//!    `Phi_a` packages Newton's identities (`e_a` as a polynomial in
//!    `p_1..p_a`),
//! 3. `Q = exp(log Q)` truncated at `C(n,a)` — exact, because `Q` is a
//!    polynomial of that degree.
//!
//! Run over Laurent coefficients this yields the annihilating polynomial
//! `D(t,z)` of the excursion series; run over multivariate coefficients it
//! yields the elementary-basis plethysm expansion `e_k[e_a]`, and zeroing
//! selected `e_i` up front exploits non-generic step sets automatically.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::laurent::LaurentPoly;
use crate::ring::multipoly::MultiPoly;
use crate::ring::poly::RingPoly;
use crate::ring::rational::Rational;
use crate::ring::series::{series_exp, series_log, RingSeries};
use crate::ring::Ring;
use crate::stepset::{binomial_u64, char_poly_l, StepSet};

/// Desk-scale guard: `C(n,a)` beyond this would fill memory with power sums.
pub const MAX_Q_DEGREE: u64 = 3003;

/// The polynomial `Phi_a` with `Phi_a(p_1(x),...,p_a(x)) = e_a(x)`
/// identically — Newton's identities packaged once, by expanding
/// `e_a = [z^a] exp(-sum_i (-z)^i/i p_i)` over the `p`-variable ring.
pub fn phi_elementary(a: usize) -> MultiPoly {
    assert!(a >= 1, "phi_elementary needs a >= 1");
    let mut coeffs = Vec::with_capacity(a + 1);
    coeffs.push(MultiPoly::zero_in(a));
    for i in 1..=a {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        coeffs.push(MultiPoly::var(a, i).scale(&Rational::new(sign, i as i64)));
    }
    let f = RingSeries::from_coeffs(coeffs);
    series_exp(&f, a)
        .expect("constant term is zero by construction")
        .coeff(a)
}

/// Power sums `p_1(U), ..., p_count(U)` of the inverse roots of `L`,
/// via `p_i = i [z^i] log(1/L(z))`. Requires `L(0) = 1`.
pub fn power_sums<R: Ring>(l: &RingPoly<R>, count: usize) -> Result<Vec<R>> {
    if !l.coeff(0).is_one() {
        return Err(Error::InvalidArgument(
            "power sums require constant term 1".into(),
        ));
    }
    let series = RingSeries::from_poly(l, count);
    let log_l = series_log(&series, count)?;
    Ok((1..=count)
        .map(|i| log_l.coeff(i).scale(&Rational::from_int(-(i as i64))))
        .collect())
}

/// The exact polynomial `Q(z) = prod_{|I|=a} (1 - z U_I)` of degree
/// `C(n,a)`, where `n = deg L` and the `U_k` are the inverse roots of `L`.
pub fn platypus_q<R: Ring>(l: &RingPoly<R>, a: u32) -> Result<RingPoly<R>> {
    let n = l
        .degree()
        .ok_or_else(|| Error::InvalidArgument("L must be a nonzero polynomial".into()))?;
    let a = a as usize;
    if a < 1 || a > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= deg L, got a = {a}, deg L = {n}"
        )));
    }
    let d = binomial_u64(n as u64, a as u64)?;
    if d > MAX_Q_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "C({n},{a}) = {d} exceeds the supported degree {MAX_Q_DEGREE}"
        )));
    }
    let d = d as usize;

    let ps = power_sums(l, a * d)?;
    let phi = phi_elementary(a);
    let mut log_q = vec![R::zero(); d + 1];
    let mut values: Vec<R> = vec![R::zero(); a];
    for (i, slot) in log_q.iter_mut().enumerate().skip(1) {
        for j in 1..=a {
            values[j - 1] = ps[j * i - 1].clone();
        }
        *slot = phi.eval_in(&values).scale(&Rational::new(-1, i as i64));
    }
    let q = series_exp(&RingSeries::from_coeffs(log_q), d)?.to_poly();
    if q.degree() != Some(d) {
        return Err(Error::Internal(format!(
            "Q should have degree {d}, got {:?}",
            q.degree()
        )));
    }
    Ok(q)
}

/// The annihilating polynomial `D(t,z)` of the excursion series of `s`:
/// `Q` computed from the companion polynomial `L(z)`, then `z` rescaled by
/// `(-1)^(a+1) t w_a`. All negative powers of `t` must cancel exactly;
/// a residue is reported as an internal error.
///
/// ```
/// use excursion_core::platypus::annihilator;
/// use excursion_core::ring::text::poly_laurent_to_string;
/// use excursion_core::stepset::parse_stepset;
///
/// let dyck = parse_stepset("1:1,-1:1").unwrap();
/// let d = annihilator(&dyck).unwrap();
/// assert_eq!(poly_laurent_to_string(&d, "t", "z"), "1 - z + t^2*z^2");
/// ```
pub fn annihilator(s: &StepSet) -> Result<RingPoly<LaurentPoly>> {
    let l = char_poly_l(s);
    let q = platypus_q(&l, s.a())?;
    let sign = if s.a().is_multiple_of(2) { -1 } else { 1 };
    let top = s.weight_laurent(s.a() as i64);
    let scale = top.shifted(1).scale(&Rational::from_int(sign));
    let d = q.substitute_scaled_var(&scale);

    if d.degree() != Some(s.d() as usize) {
        return Err(Error::Internal(format!(
            "D should have z-degree {}, got {:?}",
            s.d(),
            d.degree()
        )));
    }
    if !d.coeff(0).is_one() {
        return Err(Error::Internal("D(t,0) should be 1".into()));
    }
    for (k, c) in d.coeffs().iter().enumerate() {
        if !c.is_polynomial() {
            return Err(Error::Internal(format!(
                "negative power of t survived in the z^{k} coefficient of D"
            )));
        }
    }
    Ok(d)
}

/// Expansion of the elementary plethysms `e_k[e_a]` for an alphabet of `n`
/// variables, in the elementary basis.
///
/// Entry `k` is `e_k[e_a]` as a polynomial in `e_1..e_n`, for
/// `0 <= k <= C(n,a)`. With `restrict` given, the `e_i` outside it are set
/// to zero *before* the power-sum computation, so the result is the
/// expansion modulo the ideal they generate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlethysmExpansion {
    a: u32,
    n: u32,
    coefficients: Vec<MultiPoly>,
}

impl PlethysmExpansion {
    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `e_k[e_a]`, indexed by `k = 0..=C(n,a)`.
    pub fn coefficients(&self) -> &[MultiPoly] {
        &self.coefficients
    }

    /// `Q(z) = sum_k (-z)^k e_k[e_a]` as a polynomial over the e-ring.
    pub fn q_poly(&self) -> RingPoly<MultiPoly> {
        RingPoly::from_coeffs(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { c.neg() })
                .collect(),
        )
    }

    /// Renders `Q(z)` with coefficients in multiplicative index notation,
    /// e.g. `1 - e_2*z + (e_{3,1} - e_4)*z^2 - ...`.
    pub fn render_q(&self) -> String {
        let mut out = String::new();
        for (k, entry) in self.coefficients.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let signed = if k % 2 == 0 {
                entry.clone()
            } else {
                entry.neg()
            };
            render_e_coefficient(&mut out, &signed, k);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `e_{5,5,2}`-style rendering of one monomial in the `e_i`.
pub fn e_monomial_name(exps: &[u32]) -> Option<String> {
    let mut indices = Vec::new();
    for (i, &e) in exps.iter().enumerate().rev() {
        for _ in 0..e {
            indices.push((i + 1).to_string());
        }
    }
    if indices.is_empty() {
        None
    } else if indices.len() == 1 {
        Some(format!("e_{}", indices[0]))
    } else {
        Some(format!("e_{{{}}}", indices.join(",")))
    }
}

/// Sum rendering in the index notation, e.g. `e_{3,1} - e_4`.
pub fn e_poly_to_string(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (exps, coeff) in p.iter() {
        let sign = if out.is_empty() {
            if coeff.is_negative() {
                "-"
            } else {
                ""
            }
        } else if coeff.is_negative() {
            " - "
        } else {
            " + "
        };
        out.push_str(sign);
        let mag = coeff.abs();
        match e_monomial_name(exps) {
            Some(name) if mag.is_one() => out.push_str(&name),
            Some(name) => out.push_str(&format!("{mag}*{name}")),
            None => out.push_str(&mag.to_string()),
        }
    }
    out
}

fn render_e_coefficient(out: &mut String, signed: &MultiPoly, k: usize) {
    let z_part = match k {
        0 => None,
        1 => Some("z".to_string()),
        _ => Some(format!("z^{k}")),
    };
    if signed.num_terms() == 1 {
        let (exps, coeff) = signed.iter().next().unwrap();
        let sign = if out.is_empty() {
            if coeff.is_negative() {
                "-"
            } else {
                ""
            }
        } else if coeff.is_negative() {
            " - "
        } else {
            " + "
        };
        out.push_str(sign);
        let mag = coeff.abs();
        let mut pieces = Vec::new();
        let name = e_monomial_name(exps);
        if !mag.is_one() || (name.is_none() && z_part.is_none()) {
            pieces.push(mag.to_string());
        }
        pieces.extend(name);
        pieces.extend(z_part.clone());
        out.push_str(&pieces.join("*"));
    } else {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let body = e_poly_to_string(signed);
        match z_part {
            Some(z) => out.push_str(&format!("({body})*{z}")),
            None => out.push_str(&format!("({body})")),
        }
    }
}

/// Runs the algorithm over the symbolic e-ring with
/// `L(z) = sum_i (-1)^i e_i z^i`.
pub fn plethysm_elementary(
    a: u32,
    n: u32,
    restrict: Option<&BTreeSet<u32>>,
) -> Result<PlethysmExpansion> {
    if a < 1 || a > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= n, got a = {a}, n = {n}"
        )));
    }
    if let Some(keep) = restrict {
        if let Some(&bad) = keep.iter().find(|&&i| i < 1 || i > n) {
            return Err(Error::InvalidArgument(format!(
                "restrict index {bad} outside 1..={n}"
            )));
        }
        if !keep.contains(&n) {
            return Err(Error::InvalidArgument(format!(
                "restrict must contain {n}: zeroing e_{n} would drop the degree of L"
            )));
        }
    }
    let n_us = n as usize;
    let keep = |i: u32| restrict.is_none_or(|set| set.contains(&i));
    let mut coeffs = Vec::with_capacity(n_us + 1);
    coeffs.push(MultiPoly::constant(n_us, Rational::one()));
    for i in 1..=n {
        let e_i = if keep(i) {
            MultiPoly::var(n_us, i as usize)
        } else {
            MultiPoly::zero_in(n_us)
        };
        coeffs.push(if i % 2 == 0 { e_i } else { e_i.neg() });
    }
    let l = RingPoly::from_coeffs(coeffs);
    let q = platypus_q(&l, a)?;
    let d = q.degree().unwrap();
    let coefficients = (0..=d)
        .map(|k| {
            let c = q.coeff(k);
            if k % 2 == 0 {
                c
            } else {
                c.neg()
            }
        })
        .collect();
    Ok(PlethysmExpansion { a, n, coefficients })
}
