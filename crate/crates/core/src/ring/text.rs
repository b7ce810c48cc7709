//! Canonical text format for polynomials.
//!
//! Terms are listed in increasing exponent order; coefficients render as
//! `num/den` with the denominator omitted when it is 1, e.g.
//! `1 - z + t^2*z^2`. This rendering is the golden-file format for tests,
//! and `parse_bivariate` accepts it back (for user-supplied candidate
//! factors).

use crate::error::{Error, Result};
use crate::ring::laurent::LaurentPoly;
use crate::ring::multipoly::MultiPoly;
use crate::ring::poly::RingPoly;
use crate::ring::rational::Rational;
use crate::ring::Ring;

fn push_term(out: &mut String, coeff: &Rational, factors: &[String]) {
    if out.is_empty() {
        if coeff.is_negative() {
            out.push('-');
        }
    } else if coeff.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mag = coeff.abs();
    let mut pieces: Vec<String> = Vec::new();
    if factors.is_empty() || !mag.is_one() {
        pieces.push(mag.to_string());
    }
    pieces.extend_from_slice(factors);
    out.push_str(&pieces.join("*"));
}

fn power_factor(var: &str, exp: i64) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(var.to_string()),
        e => Some(format!("{var}^{e}")),
    }
}

pub fn laurent_to_string(p: &LaurentPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (&exp, coeff) in p.iter() {
        let factors: Vec<String> = power_factor(var, exp).into_iter().collect();
        push_term(&mut out, coeff, &factors);
    }
    out
}

pub fn poly_rational_to_string(p: &RingPoly<Rational>, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (exp, coeff) in p.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let factors: Vec<String> = power_factor(var, exp as i64).into_iter().collect();
        push_term(&mut out, coeff, &factors);
    }
    out
}

/// Bivariate rendering of a polynomial in `outer` whose coefficients are
/// Laurent in `inner`: outer exponent ascending, inner ascending within.
pub fn poly_laurent_to_string(p: &RingPoly<LaurentPoly>, inner: &str, outer: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (z_exp, coeff) in p.coeffs().iter().enumerate() {
        for (&t_exp, c) in coeff.iter() {
            let factors: Vec<String> = power_factor(inner, t_exp)
                .into_iter()
                .chain(power_factor(outer, z_exp as i64))
                .collect();
            push_term(&mut out, c, &factors);
        }
    }
    out
}

/// Generic rendering for multivariate polynomials with 1-based variables
/// `base1, base2, ...`.
pub fn multipoly_to_string(p: &MultiPoly, base: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (exps, coeff) in p.iter() {
        let factors: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{base}{}", i + 1)
                } else {
                    format!("{base}{}^{e}", i + 1)
                }
            })
            .collect();
        push_term(&mut out, coeff, &factors);
    }
    out
}

/// Splits a whitespace-free expression into signed terms. A `+`/`-` is a
/// separator only when it follows a completed factor (digit or letter).
fn split_terms(s: &str) -> Vec<(bool, String)> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && prev.is_none_or(|p| p.is_alphanumeric()) && prev.is_some() {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && prev.is_none() {
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    terms.push((negative, current));
    terms
}

/// Parses the canonical bivariate format: a sum of terms, each a `*`-product
/// of a rational literal, `t` powers (integer exponents) and `z` powers
/// (non-negative exponents).
pub fn parse_bivariate(text: &str) -> Result<RingPoly<LaurentPoly>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut poly = RingPoly::zero();
    for (negative, term) in split_terms(&s) {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {text:?}")));
        }
        let mut coeff = Rational::one();
        let mut t_exp: i64 = 0;
        let mut z_exp: i64 = 0;
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in term {term:?}")));
            }
            if let Some(rest) = factor.strip_prefix('t') {
                t_exp += parse_exponent(rest, factor)?;
            } else if let Some(rest) = factor.strip_prefix('z') {
                let e = parse_exponent(rest, factor)?;
                if e < 0 {
                    return Err(Error::Parse(format!(
                        "negative z exponent in factor {factor:?}"
                    )));
                }
                z_exp += e;
            } else {
                coeff = coeff.mul(&Rational::parse(factor)?);
            }
        }
        if negative {
            coeff = coeff.neg();
        }
        let term_poly = RingPoly::monomial(LaurentPoly::monomial(coeff, t_exp), z_exp as usize);
        poly = poly.add(&term_poly);
    }
    Ok(poly)
}

fn parse_exponent(rest: &str, factor: &str) -> Result<i64> {
    if rest.is_empty() {
        return Ok(1);
    }
    let digits = rest
        .strip_prefix('^')
        .ok_or_else(|| Error::Parse(format!("malformed factor {factor:?}")))?;
    digits
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("malformed exponent in {factor:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn laurent_rendering() {
        let p = LaurentPoly::monomial(q(-1, 2), -1)
            .add(&LaurentPoly::one())
            .add(&LaurentPoly::monomial(q(3, 1), 2));
        assert_eq!(laurent_to_string(&p, "t"), "-1/2*t^-1 + 1 + 3*t^2");
        assert_eq!(laurent_to_string(&LaurentPoly::zero(), "t"), "0");
    }

    #[test]
    fn bivariate_rendering_matches_golden_shape() {
        // 1 - z + t^2*z^2
        let p = RingPoly::from_coeffs(vec![
            LaurentPoly::one(),
            LaurentPoly::one().neg(),
            LaurentPoly::monomial(q(1, 1), 2),
        ]);
        assert_eq!(poly_laurent_to_string(&p, "t", "z"), "1 - z + t^2*z^2");
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "1 - z + t^2*z^2",
            "1 + t^2*z",
            "-1/2 + 3*t^-2*z^5",
            "t^10*z^10 + 2*t^5*z^5 - t^5*z^6 + t^5*z^7 - z + 1",
        ] {
            let p = parse_bivariate(text).unwrap();
            let rendered = poly_laurent_to_string(&p, "t", "z");
            let again = parse_bivariate(&rendered).unwrap();
            assert_eq!(p, again, "round trip failed for {text}");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_bivariate("").is_err());
        assert!(parse_bivariate("1 + + z").is_err());
        assert!(parse_bivariate("w^2").is_err());
        assert!(parse_bivariate("z^-1").is_err());
        assert!(parse_bivariate("t^").is_err());
    }

    #[test]
    fn rational_poly_rendering() {
        let p = RingPoly::from_coeffs(vec![q(1, 1), q(0, 1), q(-7, 3)]);
        assert_eq!(poly_rational_to_string(&p, "z"), "1 - 7/3*z^2");
    }
}
