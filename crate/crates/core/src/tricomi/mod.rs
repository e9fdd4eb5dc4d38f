//! Large-m expansion of `I_{n,m} = ∫ x^n e^{-x²} ((1 + erf x)/2)^m dx`.
//!
//! With `e^{-t} = (1 + erf x)/2` the integral becomes `√π ∫₀^∞ x(t)^n e^{-st} dt`,
//! `s = m + 1`, and the large-s behaviour is governed by the inversion of
//! `erfc x = 2u/s` for small `u = st`. Expanding `x²` in powers of
//! `1/L = 1/log s` and averaging against `e^{-u}` produces the coefficient
//! series in [`expansion`].

mod expansion;
mod inversion;
mod moments;
mod oracle;

pub use expansion::{
    asymptotic_integral, asymptotic_integral_with, expansion_coefficients, x_asymptotic,
    xsq_asymptotic, CoefficientMethod, ExpansionSeries, LogMomentExpectations, MAX_ORDER,
};
pub use inversion::{invert_erfc_numeric, x_of_t};
pub use moments::{lambda3_gamma_squared_variant, lambda_moment, MomentMethod, MomentTable};
pub use oracle::{error_table, oracle_direct, oracle_transformed, ErrorTable};

use crate::specfun::{EULER_GAMMA, SQRT_PI};
use crate::{Error, Result};

/// Scalars derived from `s = m + 1` that enter every coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticParams {
    /// s = m + 1
    pub s: f64,
    /// L = log s
    pub log_s: f64,
    /// L₁ = log √(log s) = ½ log L; negative for s < e.
    pub log_sqrt_log_s: f64,
    /// a = 2√π, the scale in A(u) = −log(a u) − L₁.
    pub scale: f64,
    /// G = γ − log a
    pub offset: f64,
}

impl AsymptoticParams {
    /// Parameters for an integer exponent m ≥ 2.
    pub fn from_m(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::domain(format!("expansion requires m ≥ 2, got {m}")));
        }
        Self::from_s(m as f64 + 1.0)
    }

    /// Parameters for a real `s > 1` (so that L > 0).
    pub fn from_s(s: f64) -> Result<Self> {
        if !(s > 1.0) || !s.is_finite() {
            return Err(Error::domain(format!("expansion requires finite s > 1, got {s}")));
        }
        let log_s = s.ln();
        let scale = 2.0 * SQRT_PI;
        Ok(Self {
            s,
            log_s,
            log_sqrt_log_s: 0.5 * log_s.ln(),
            scale,
            offset: EULER_GAMMA - scale.ln(),
        })
    }

    pub fn m(&self) -> f64 {
        self.s - 1.0
    }

    /// G − L₁, the mean of A(u) under e^{-u} du.
    pub fn centred_offset(&self) -> f64 {
        self.offset - self.log_sqrt_log_s
    }
}
