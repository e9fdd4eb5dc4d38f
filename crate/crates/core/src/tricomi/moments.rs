use std::f64::consts::PI;

use crate::quad::Quadrature;
use crate::specfun::{EULER_GAMMA, ZETA3};
use crate::{Error, Result};

/// How a log-moment λ_k = ∫₀^∞ (log u)^k e^{-u} du is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMethod {
    ClosedForm,
    Quadrature,
}

/// λ₀..λ₃ together with their provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentTable {
    pub lambda: [f64; 4],
    pub source: MomentMethod,
}

impl MomentTable {
    pub fn closed_form() -> Self {
        let lambda = [0, 1, 2, 3].map(closed_form);
        Self { lambda, source: MomentMethod::ClosedForm }
    }

    pub fn by_quadrature(tol: f64) -> Result<Self> {
        let mut lambda = [0.0; 4];
        for (k, slot) in lambda.iter_mut().enumerate() {
            *slot = by_quadrature(k as u32, tol)?;
        }
        Ok(Self { lambda, source: MomentMethod::Quadrature })
    }
}

fn closed_form(k: u32) -> f64 {
    let g = EULER_GAMMA;
    match k {
        0 => 1.0,
        1 => -g,
        2 => g * g + PI * PI / 6.0,
        // central moments of −log u are π²/6 and 2ζ(3)
        _ => -(g * g * g + g * PI * PI / 2.0 + 2.0 * ZETA3),
    }
}

fn by_quadrature(k: u32, tol: f64) -> Result<f64> {
    Quadrature::new(tol)
        .half_line(|u| u.ln().powi(k as i32) * (-u).exp(), 0.0)?
        .into_value()
}

pub fn lambda_moment(k: u32, method: MomentMethod) -> Result<f64> {
    if k > 3 {
        return Err(Error::domain(format!("log-moments are tabulated for k ≤ 3, got {k}")));
    }
    match method {
        MomentMethod::ClosedForm => Ok(closed_form(k)),
        MomentMethod::Quadrature => by_quadrature(k, 1e-12),
    }
}

/// −(γ² + γπ²/2 + 2ζ(3)): λ₃ with γ² in place of γ³, as it is sometimes
/// quoted. Kept only so the discrepancy can be measured.
pub fn lambda3_gamma_squared_variant() -> f64 {
    let g = EULER_GAMMA;
    -(g * g + g * PI * PI / 2.0 + 2.0 * ZETA3)
}
