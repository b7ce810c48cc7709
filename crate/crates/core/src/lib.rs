//! Exact symbolic toolkit for weighted lattice excursions.
//!
//! An *excursion* is a one-dimensional walk that starts and ends at level 0,
//! takes its steps in a finite set `S` of integers, and never goes below 0.
//! Every step may carry a weight `c*t^m`, so the length generating function
//! `E(t)` of excursions is a formal power series with exact rational
//! coefficients. This crate computes, with no floating point anywhere:
//!
//! - the kernel polynomial `K(u)` of the step set and its companion `L(z)`,
//! - a bivariate polynomial `D(t,z)` with `D(t, E(t)) = 0`, obtained through
//!   the power-sum ("platypus") algorithm,
//! - the transfer-matrix polynomials `F_k` with `E^(k) = F_k / F_{k+1}`
//!   counting excursions of height at most `k`, the numerator `N(t,z)` of
//!   `sum_k F_k z^k = N/D`, and the induced linear recurrence,
//! - elementary-basis plethysm expansions `e_k[e_a]` and, numerically,
//!   the rational generating function of rectangular Schur functions,
//! - a brute-force enumeration oracle that cross-checks all of the above.
//!
//! The building blocks live in [`ring`] (exact rationals, Laurent and
//! multivariate polynomials, truncated series, fraction-free determinants);
//! everything above is generic over that coefficient-ring contract.

pub mod bounded;
pub mod error;
pub mod oracle;
pub mod platypus;
pub mod ring;
pub mod schur;
pub mod stepset;

pub use error::{Error, Result};
pub use ring::laurent::LaurentPoly;
pub use ring::multipoly::MultiPoly;
pub use ring::poly::RingPoly;
pub use ring::rational::Rational;
pub use ring::series::RingSeries;
pub use ring::{IntegralDomain, Ring};
pub use stepset::{StepSet, Weight};
