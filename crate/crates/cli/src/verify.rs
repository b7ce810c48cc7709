//! The one-shot verification battery behind `excursion-lab verify`.
//!
//! Each check is timed and reported individually; the command exits 0 only
//! when every check passes.

use std::time::Instant;

use excursion_core::bounded::{
    bounded_series, check_recurrence_with_annihilator, f_polynomial, numerator_with_annihilator,
};
use excursion_core::oracle::{
    count_bounded, count_excursions, verify_annihilation, verify_numerator_nonzero, NonzeroReport,
};
use excursion_core::platypus::annihilator;
use excursion_core::schur::f_via_jacobi_trudi;
use excursion_core::{Result, StepSet};

pub struct CheckReport {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

pub fn run_battery(s: &StepSet, order: usize, kmax: Option<usize>) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let mut timed =
        |name: &'static str, f: &mut dyn FnMut() -> Result<(bool, String)>| -> Result<()> {
            let start = Instant::now();
            let (pass, detail) = f()?;
            reports.push(CheckReport {
                name,
                pass,
                detail,
                millis: start.elapsed().as_millis(),
            });
            Ok(())
        };

    let d_poly = annihilator(s)?;
    let excursions = count_excursions(s, order);

    timed("annihilation", &mut || {
        let pass = verify_annihilation(&d_poly, &excursions);
        Ok((pass, format!("D(t,E) = 0 up to t^{order}")))
    })?;

    timed("numerator-nonzero", &mut || {
        let n_poly = numerator_with_annihilator(s, &d_poly)?;
        match verify_numerator_nonzero(&n_poly, &excursions) {
            NonzeroReport::NonzeroAt(v) => Ok((true, format!("N(t,E) has valuation {v}"))),
            NonzeroReport::AllZeroUpTo(o) => {
                Ok((false, format!("inconclusive: all zero up to t^{o}")))
            }
        }
    })?;

    timed("bounded-heights", &mut || {
        let bounded_order = order.min(12);
        for k in 0..=6 {
            let algebraic = bounded_series(s, k, bounded_order);
            let counted = count_bounded(s, k, bounded_order);
            if algebraic.coeffs() != counted.coefficients() {
                return Ok((
                    false,
                    format!("F_k/F_(k+1) disagrees with counts at height {k}"),
                ));
            }
        }
        Ok((
            true,
            format!("F_k/F_(k+1) = counted series for k <= 6, order {bounded_order}"),
        ))
    })?;

    timed("jacobi-trudi", &mut || {
        for k in 0..=8 {
            if f_via_jacobi_trudi(s, k) != f_polynomial(s, k) {
                return Ok((
                    false,
                    format!("Schur and transfer determinants differ at k = {k}"),
                ));
            }
        }
        Ok((
            true,
            "Schur determinant = transfer determinant for k <= 8".into(),
        ))
    })?;

    let kmax = kmax.unwrap_or(s.d() as usize + (s.a() + s.b()) as usize);
    timed("recurrence", &mut || {
        let pass = check_recurrence_with_annihilator(s, &d_poly, kmax)?;
        Ok((
            pass,
            format!("order-{} recurrence for delta < k <= {kmax}", s.d()),
        ))
    })?;

    Ok(reports)
}
