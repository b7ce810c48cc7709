//! Fraction-free determinants over an integral domain.
//!
//! One-step Bareiss elimination: every intermediate entry is a minor of the
//! input matrix, and every division is exact. A failing exact division can
//! only come from an arithmetic bug, so it is reported as an internal error
//! rather than silently patched.

use crate::error::{Error, Result};
use crate::ring::IntegralDomain;

/// Determinant of a square matrix by fraction-free Bareiss elimination,
/// with row pivoting (sign-tracked) when a zero pivot shows up.
pub fn bareiss_det<R: IntegralDomain>(rows: &[Vec<R>]) -> Result<R> {
    let n = rows.len();
    for row in rows {
        if row.len() != n {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).ok_or_else(|| {
                    Error::Internal("exact division failed in Bareiss elimination".into())
                })?;
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

/// All leading principal minors (sizes 1..=n) in a single Bareiss pass.
///
/// After eliminating column `k-1`, the pivot equals the k-th leading
/// principal minor, so one elimination yields the whole tower — this is what
/// makes the batch of transfer-matrix determinants cheap. The fast path
/// requires the pivots it passes through to be nonzero; if one vanishes the
/// remaining minors are computed individually.
pub fn leading_principal_minors<R: IntegralDomain>(rows: &[Vec<R>]) -> Result<Vec<R>> {
    let n = rows.len();
    for row in rows {
        if row.len() != n {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
    }
    let mut minors = Vec::with_capacity(n);
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut prev = R::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if k + 1 == n {
            break;
        }
        if pivot.is_zero() {
            // Cannot divide through a vanishing minor; finish one by one.
            for size in k + 2..=n {
                let sub: Vec<Vec<R>> = rows[..size].iter().map(|r| r[..size].to_vec()).collect();
                minors.push(bareiss_det(&sub)?);
            }
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).ok_or_else(|| {
                    Error::Internal("exact division failed in Bareiss elimination".into())
                })?;
            }
            m[i][k] = R::zero();
        }
        prev = pivot;
    }
    Ok(minors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::laurent::LaurentPoly;
    use crate::ring::rational::Rational;
    use crate::ring::Ring;

    /// Cofactor-expansion oracle, independent of the elimination path.
    pub fn cofactor_det<R: Ring>(rows: &[Vec<R>]) -> R {
        let n = rows.len();
        if n == 0 {
            return R::one();
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut det = R::zero();
        for (j, entry) in rows[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<R>> = rows[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = entry.mul(&cofactor_det(&minor));
            det = if j % 2 == 0 {
                det.add(&term)
            } else {
                det.sub(&term)
            };
        }
        det
    }

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }

    #[test]
    fn two_by_two_kernel_matrix() {
        // [[1, -t], [-t, 1]] -> 1 - t^2
        let m = vec![
            vec![LaurentPoly::one(), t().neg()],
            vec![t().neg(), LaurentPoly::one()],
        ];
        let expected = LaurentPoly::one().sub(&t().mul(&t()));
        assert_eq!(bareiss_det(&m).unwrap(), expected);
        assert_eq!(cofactor_det(&m), expected);
    }

    #[test]
    fn identity_four_by_four() {
        let m: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        assert!(bareiss_det(&m).unwrap().is_one());
    }

    #[test]
    fn non_square_rejected() {
        let m = vec![vec![Rational::one()], vec![Rational::one()]];
        assert!(matches!(bareiss_det(&m), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let q = Rational::from_int;
        let m = vec![
            vec![q(0), q(1), q(2)],
            vec![q(1), q(0), q(3)],
            vec![q(4), q(5), q(0)],
        ];
        assert_eq!(bareiss_det(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let q = Rational::from_int;
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(bareiss_det(&m).unwrap().is_zero());
    }

    #[test]
    fn random_polynomial_matrices_match_cofactor_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xBA5E);
        for trial in 0..100 {
            let n = 2 + (trial % 4); // sizes 2..=5
            let m: Vec<Vec<LaurentPoly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let mut p = LaurentPoly::zero();
                            for e in 0..=2 {
                                let c = rng.gen_range(-3..=3);
                                p = p.add(&LaurentPoly::monomial(Rational::from_int(c), e));
                            }
                            p
                        })
                        .collect()
                })
                .collect();
            assert_eq!(bareiss_det(&m).unwrap(), cofactor_det(&m), "trial {trial}");
        }
    }

    #[test]
    fn minors_match_individual_determinants() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x717E);
        let n = 5;
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rational::from_int(rng.gen_range(-4..=4)))
                    .collect()
            })
            .collect();
        let minors = leading_principal_minors(&m).unwrap();
        for size in 1..=n {
            let sub: Vec<Vec<Rational>> = m[..size].iter().map(|r| r[..size].to_vec()).collect();
            assert_eq!(minors[size - 1], bareiss_det(&sub).unwrap());
        }
    }

    #[test]
    fn minors_fall_back_on_zero_pivot() {
        let q = Rational::from_int;
        // top-left entry is zero but the 2x2 and 3x3 minors are not
        let m = vec![
            vec![q(0), q(1), q(2)],
            vec![q(1), q(1), q(3)],
            vec![q(4), q(5), q(7)],
        ];
        let minors = leading_principal_minors(&m).unwrap();
        assert_eq!(minors[0], q(0));
        assert_eq!(minors[1], q(-1));
        assert_eq!(minors[2], bareiss_det(&m).unwrap());
    }
}
