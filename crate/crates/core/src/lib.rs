//! Large-m asymptotics of Tricomi's probability integrals
//!
//! ```text
//! I_{n,m} = ∫ x^n e^{-x²} ((1 + erf x)/2)^m dx        (n = 0, 1, 2)
//! ```
//!
//! and three independent evaluation routes for the extended airfoil integrals
//!
//! ```text
//! J_n(a; μ) = PV ∫_{-1}^{1} x^{2n+1} / ((x - a)(1 - x²)^μ) dx.
//! ```
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: error functions, gamma family, Pochhammer symbols, real ₂F₁.
//! * [`quad`]: tanh-sinh / exp-sinh quadrature and Cauchy principal values.
//! * [`tricomi`]: erfc inversion, log-moments, expansion coefficients and
//!   the two quadrature oracles for `I_{n,m}`.
//! * [`airfoil`]: hypergeometric, accelerated and quadrature routes for
//!   `J_n(a; μ)` plus the circulation profiles.

// `!(x < y)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod airfoil;
pub mod error;
pub mod quad;
pub mod specfun;
pub mod tricomi;

pub use error::{Error, Result};
