//! Brute-force enumeration oracle.
//!
//! A level-indexed dynamic program sums the weights of all excursions (and
//! height-bounded excursions) directly from the definition. It shares no
//! code with the algebraic pipeline, which is the point: everything the
//! kernel/platypus/transfer-matrix machinery produces is checked against
//! these counts.

use crate::ring::laurent::LaurentPoly;
use crate::ring::poly::RingPoly;
use crate::ring::rational::Rational;
use crate::ring::series::RingSeries;
use crate::ring::Ring;
use crate::stepset::StepSet;

/// Total weight of excursions per power of `t`. Entry 0 is always 1 (the
/// empty excursion); with nonnegative weights all entries are nonnegative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountSeries {
    coefficients: Vec<Rational>,
}

impl CountSeries {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coefficients
            .get(n)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn from_coefficients(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty());
        CountSeries { coefficients }
    }

    pub fn to_series(&self) -> RingSeries<Rational> {
        RingSeries::from_coeffs(self.coefficients.clone())
    }
}

/// Weight series of excursions up to `t^order`, levels capped at `height`
/// when given.
fn count_dp(s: &StepSet, order: usize, height: Option<usize>) -> CountSeries {
    // A prefix of n steps cannot rise above n*a, and every step costs at
    // least one power of t, so order*a levels always suffice; a larger
    // height bound is inactive.
    let reach = order * s.a() as usize;
    let cap = height.map_or(reach, |h| h.min(reach));
    let weights: Vec<(i64, u32, Rational)> = s
        .steps()
        .iter()
        .map(|(&step, w)| (step, 1 + w.t_exponent(), w.coeff().clone()))
        .collect();

    // dp[level][n] = total weight at t^n of nonnegative walks (within the cap)
    // ending at `level` after some number of steps.
    let zero_series = vec![Rational::zero(); order + 1];
    let mut cur: Vec<Vec<Rational>> = vec![zero_series.clone(); cap + 1];
    cur[0][0] = Rational::one();
    let mut total = cur[0].clone();

    // Each step adds at least t^1, so `order` rounds see every contribution.
    for _ in 1..=order {
        let mut next: Vec<Vec<Rational>> = vec![zero_series.clone(); cap + 1];
        let mut moved = false;
        for (level, series) in cur.iter().enumerate() {
            if series.iter().all(Rational::is_zero) {
                continue;
            }
            for (step, t_cost, coeff) in &weights {
                let t_cost = *t_cost as usize;
                if t_cost > order {
                    continue;
                }
                let target = level as i64 + step;
                if target < 0 || target > cap as i64 {
                    continue;
                }
                let target = target as usize;
                for (n, v) in series.iter().enumerate().take(order - t_cost + 1) {
                    if v.is_zero() {
                        continue;
                    }
                    next[target][n + t_cost] = next[target][n + t_cost].add(&v.mul(coeff));
                    moved = true;
                }
            }
        }
        for (n, c) in next[0].iter().enumerate() {
            total[n] = total[n].add(c);
        }
        cur = next;
        if !moved {
            break;
        }
    }
    CountSeries {
        coefficients: total,
    }
}

/// Weight of excursions by length exponent, exact up to `t^order`.
pub fn count_excursions(s: &StepSet, order: usize) -> CountSeries {
    count_dp(s, order, None)
}

/// Same, restricted to excursions of height at most `k`.
pub fn count_bounded(s: &StepSet, k: usize, order: usize) -> CountSeries {
    count_dp(s, order, Some(k))
}

/// True iff `D(t, E(t)) = 0` holds for every power `t^0..t^order`.
///
/// The substitution is truncation-correct because the coefficients of `D`
/// carry only nonnegative powers of `t`.
pub fn verify_annihilation(d: &RingPoly<LaurentPoly>, e: &CountSeries) -> bool {
    substitute(d, e).is_zero()
}

/// Outcome of substituting the excursion series into a polynomial:
/// a nonzero verdict is always a positive certificate, never an absence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NonzeroReport {
    /// Least exponent with a nonzero coefficient.
    NonzeroAt(usize),
    /// Inconclusive: every checked coefficient vanished.
    AllZeroUpTo(usize),
}

/// Substitutes the truncated excursion series into `N(t,z)` and reports the
/// valuation of the first nonzero coefficient.
pub fn verify_numerator_nonzero(n: &RingPoly<LaurentPoly>, e: &CountSeries) -> NonzeroReport {
    let value = substitute(n, e);
    for k in 0..=value.order() {
        if !value.coeff(k).is_zero() {
            return NonzeroReport::NonzeroAt(k);
        }
    }
    NonzeroReport::AllZeroUpTo(e.order())
}

/// Evaluates a z-polynomial with polynomial-in-t coefficients at the
/// truncated series, as a series in t.
fn substitute(p: &RingPoly<LaurentPoly>, e: &CountSeries) -> RingSeries<Rational> {
    let order = e.order();
    let e_series = e.to_series();
    let mut acc = vec![Rational::zero(); order + 1];
    let mut power = RingSeries::one(order);
    for (k, coeff) in p.coeffs().iter().enumerate() {
        if k > 0 {
            power = power.mul(&e_series);
        }
        if coeff.is_zero() {
            continue;
        }
        assert!(
            coeff.is_polynomial(),
            "substitution needs nonnegative t powers"
        );
        for (&t_exp, c) in coeff.iter() {
            let t_exp = t_exp as usize;
            if t_exp > order {
                continue;
            }
            for m in 0..=order - t_exp {
                let v = power.coeff(m);
                if !v.is_zero() {
                    acc[m + t_exp] = acc[m + t_exp].add(&v.mul(c));
                }
            }
        }
    }
    RingSeries::from_coeffs(acc)
}
