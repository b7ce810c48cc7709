//! Weighted step systems.
//!
//! A step set maps integer steps to monomial weights `c*t^m`; it must
//! contain a positive and a negative step, and the extreme steps must carry
//! nonzero weight. From it derive the kernel polynomial `K(u)` and the
//! companion polynomial `L(z)` that feeds the power-sum algorithm.
//!
//! Text grammar (whitespace ignored):
//! `LIST := ITEM ("," ITEM)*; ITEM := INT ":" WEIGHT;
//!  WEIGHT := RAT | "t" | RAT "*t^" UINT; RAT := INT | INT "/" UINT`

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::laurent::LaurentPoly;
use crate::ring::poly::RingPoly;
use crate::ring::rational::Rational;
use crate::ring::Ring;

/// A step weight `coeff * t^t_exponent` with `coeff != 0`.
///
/// Restricting weights to monomials keeps `L(z)` inside the Laurent ring
/// (the weight of the top step must be invertible); fully symbolic weights
/// are served by the plethysm mode instead.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    coeff: Rational,
    t_exponent: u32,
}

impl Weight {
    pub fn new(coeff: Rational, t_exponent: u32) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::Parse("zero weight".into()));
        }
        Ok(Weight { coeff, t_exponent })
    }

    pub fn one() -> Self {
        Weight {
            coeff: Rational::one(),
            t_exponent: 0,
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn t_exponent(&self) -> u32 {
        self.t_exponent
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.coeff.clone(), self.t_exponent as i64)
    }

    fn parse(text: &str) -> Result<Self> {
        if text == "t" {
            return Weight::new(Rational::one(), 1);
        }
        match text.split_once("*t^") {
            Some((rat, exp)) => {
                let coeff = Rational::parse(rat)?;
                let t_exponent = exp
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid weight exponent in {text:?}")))?;
                Weight::new(coeff, t_exponent)
            }
            None => Weight::new(Rational::parse(text)?, 0),
        }
    }

    fn render(&self) -> String {
        match self.t_exponent {
            0 => self.coeff.to_string(),
            1 if self.coeff.is_one() => "t".into(),
            m => format!("{}*t^{m}", self.coeff),
        }
    }
}

/// A validated weighted step system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepSet {
    steps: BTreeMap<i64, Weight>,
    a: u32,
    b: u32,
    d: u64,
    delta: u64,
}

pub(crate) fn binomial_u64(n: u64, k: u64) -> Result<u64> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::InvalidArgument("step span too large".into()))?;
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::InvalidArgument("step span too large".into()))
}

impl StepSet {
    pub fn new(steps: BTreeMap<i64, Weight>) -> Result<Self> {
        let max = steps.keys().next_back().copied().unwrap_or(0);
        let min = steps.keys().next().copied().unwrap_or(0);
        if max < 1 || min > -1 {
            return Err(Error::DegenerateStepSet(
                "a positive and a negative step are required".into(),
            ));
        }
        let a = u32::try_from(max)
            .map_err(|_| Error::InvalidArgument(format!("step value {max} out of range")))?;
        let b = min
            .checked_neg()
            .and_then(|v| u32::try_from(v).ok())
            .ok_or_else(|| Error::InvalidArgument(format!("step value {min} out of range")))?;
        let d = binomial_u64(a as u64 + b as u64, a as u64)?;
        let delta = d - (a as u64 + b as u64);
        Ok(StepSet {
            steps,
            a,
            b,
            d,
            delta,
        })
    }

    /// Max step.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// Negated min step.
    pub fn b(&self) -> u32 {
        self.b
    }

    /// Degree bound `C(a+b, a)` for the annihilating polynomial.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// `d - a - b`, the degree bound for the numerator.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn steps(&self) -> &BTreeMap<i64, Weight> {
        &self.steps
    }

    pub fn weight(&self, step: i64) -> Option<&Weight> {
        self.steps.get(&step)
    }

    /// Weight of the step `s` as a Laurent monomial, zero if absent.
    pub fn weight_laurent(&self, step: i64) -> LaurentPoly {
        self.steps
            .get(&step)
            .map(Weight::to_laurent)
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Gcd of the step values (weights do not matter; they are all nonzero).
    pub fn step_gcd(&self) -> u64 {
        self.steps
            .keys()
            .fold(0u64, |g, &s| num::integer::gcd(g, s.unsigned_abs()))
    }

    /// The step set with every step negated (same weights).
    pub fn mirrored(&self) -> StepSet {
        let steps = self.steps.iter().map(|(s, w)| (-s, w.clone())).collect();
        StepSet::new(steps).expect("mirror of a valid step set is valid")
    }
}

/// Parses the step-set grammar, e.g. `"2:t,1:1,-1:1,-2:t"`.
///
/// ```
/// use excursion_core::stepset::parse_stepset;
///
/// let s = parse_stepset("5:1,-3:1").unwrap();
/// assert_eq!((s.a(), s.b(), s.d()), (5, 3, 56));
/// ```
pub fn parse_stepset(text: &str) -> Result<StepSet> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty step set".into()));
    }
    let mut steps: BTreeMap<i64, Weight> = BTreeMap::new();
    for item in cleaned.split(',') {
        let (step_str, weight_str) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected step:weight, got {item:?}")))?;
        let step = step_str
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("invalid step value {step_str:?}")))?;
        let weight = Weight::parse(weight_str)?;
        if steps.insert(step, weight).is_some() {
            return Err(Error::Parse(format!("duplicate step value {step}")));
        }
    }
    StepSet::new(steps)
}

/// Renders back into the parse grammar, steps ascending.
pub fn render_stepset(s: &StepSet) -> String {
    s.steps
        .iter()
        .map(|(step, w)| format!("{step}:{}", w.render()))
        .collect::<Vec<_>>()
        .join(",")
}

/// Divides all steps by their gcd when it exceeds 1 (weights carried over);
/// otherwise returns the input unchanged.
pub fn normalize_steps(s: &StepSet) -> StepSet {
    let g = s.step_gcd();
    if g <= 1 {
        return s.clone();
    }
    let steps = s
        .steps
        .iter()
        .map(|(step, w)| (step / g as i64, w.clone()))
        .collect();
    StepSet::new(steps).expect("rescaled step set stays valid")
}

/// The kernel polynomial `K(u) = u^b * (1 - t * sum_s w_s u^s)`, a
/// polynomial of degree exactly `a+b` in `u` with Laurent coefficients.
pub fn kernel_poly(s: &StepSet) -> RingPoly<LaurentPoly> {
    let n = (s.a + s.b) as usize;
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    coeffs[s.b as usize] = LaurentPoly::one();
    for (&step, w) in &s.steps {
        let idx = (step + s.b as i64) as usize;
        let term = w.to_laurent().shifted(1).neg(); // -t * w_s
        coeffs[idx] = coeffs[idx].add(&term);
    }
    let k = RingPoly::from_coeffs(coeffs);
    debug_assert_eq!(k.degree(), Some(n));
    k
}

/// The companion polynomial
/// `L(z) = sum_s (w_s / w_a) z^(a-s)  -  z^a / (t w_a)`,
/// of degree exactly `a+b` in `z`, constant term 1, Laurent coefficients.
pub fn char_poly_l(s: &StepSet) -> RingPoly<LaurentPoly> {
    let n = (s.a + s.b) as usize;
    let w_a_inv = s
        .weight_laurent(s.a as i64)
        .inverse()
        .expect("top weight is a nonzero monomial");
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    for (&step, w) in &s.steps {
        let idx = (s.a as i64 - step) as usize;
        coeffs[idx] = coeffs[idx].add(&w.to_laurent().mul(&w_a_inv));
    }
    // - z^a / (t w_a)
    let a_idx = s.a as usize;
    coeffs[a_idx] = coeffs[a_idx].sub(&w_a_inv.shifted(-1));
    let l = RingPoly::from_coeffs(coeffs);
    debug_assert_eq!(l.degree(), Some(n));
    debug_assert!(l.coeff(0).is_one());
    l
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_stepset(self))
    }
}
