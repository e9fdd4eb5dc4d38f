use std::f64::consts::PI;

use super::sin_pi;
use crate::{Error, Result};

/// Above this argument Γ(x) overflows an f64.
const GAMMA_OVERFLOW: f64 = 171.6;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `log Γ(x)` for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// Γ(x) for finite x away from the poles.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || is_nonpositive_integer(x) {
        return Err(Error::domain(format!("Γ has a pole or is undefined at {x}")));
    }
    Ok(libm::tgamma(x))
}

/// 1/Γ(x), an entire function: exactly zero at 0, -1, -2, …
pub fn recip_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x > GAMMA_OVERFLOW {
            (-libm::lgamma(x)).exp()
        } else {
            1.0 / libm::tgamma(x)
        }
    } else {
        // 1/Γ(x) = Γ(1 - x) sin(πx) / π
        let reflected = 1.0 - x;
        if reflected > GAMMA_OVERFLOW {
            sin_pi(x) * (libm::lgamma(reflected) - PI.ln()).exp()
        } else {
            libm::tgamma(reflected) * sin_pi(x) / PI
        }
    }
}

/// Γ(p)/Γ(q). Uses log-gamma differences when both arguments are positive
/// and the reciprocal gamma otherwise, so a pole of Γ(q) yields exactly 0.
pub fn gamma_ratio(p: f64, q: f64) -> Result<f64> {
    if is_nonpositive_integer(p) {
        return Err(Error::domain(format!("Γ(p) has a pole at p = {p}")));
    }
    if p > 0.0 && q > 0.0 {
        return Ok((libm::lgamma(p) - libm::lgamma(q)).exp());
    }
    Ok(gamma(p)? * recip_gamma(q))
}

/// Rising factorial (x)_k = x(x+1)…(x+k-1), with (x)_0 = 1.
pub fn pochhammer(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (x + j as f64))
}
