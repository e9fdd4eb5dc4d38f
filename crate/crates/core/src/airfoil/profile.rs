//! Circulation profiles whose slope is proportional to x^{2n+1}/√(1 − x²).

use crate::{Error, Result};

/// P_n(x) = ∫_x^1 t^{2n+1} (1 − t²)^{-1/2} dt.
///
/// With v = √(1 − x²) this is ∫_0^v (1 − w²)^n dw, summed as the binomial
/// polynomial Σ_j C(n, j)(−1)^j v^{2j+1}/(2j + 1). The profile is even in x.
pub fn gamma_profile(n: u32, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::domain(format!("profile station must satisfy |x| ≤ 1, got {x}")));
    }
    let v = ((1.0 - x) * (1.0 + x)).sqrt();
    let v2 = v * v;
    let mut binom = 1.0;
    let mut power = v;
    let mut total = 0.0;
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * binom * power / (2 * j + 1) as f64;
        binom *= (n - j) as f64 / (j + 1) as f64;
        power *= v2;
    }
    Ok(total)
}

/// Closed-form circulation profiles quoted for the elliptic case and its first
/// two flattenings, with the centre circulation set to one:
///
/// ```text
/// n = 0:  (1 − x²)^{1/2}
/// n = 1:  (1/2)(2 + x²)(1 − x²)^{1/2}
/// n = 2:  (1/15)(8 + 4x² + 3x⁴)(1 − x²)^{1/2}
/// ```
pub fn reference_profile(n: u32, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::domain(format!("profile station must satisfy |x| ≤ 1, got {x}")));
    }
    let v = ((1.0 - x) * (1.0 + x)).sqrt();
    let x2 = x * x;
    match n {
        0 => Ok(v),
        1 => Ok(0.5 * (2.0 + x2) * v),
        2 => Ok((8.0 + 4.0 * x2 + 3.0 * x2 * x2) * v / 15.0),
        _ => Err(Error::domain(format!("reference profiles exist for n ≤ 2, got {n}"))),
    }
}

/// Ratio `reference_profile(n, ·) / gamma_profile(n, ·)`, measured at x = 0.
///
/// The ratio is constant in x: 1 for n = 0 and n = 2, but 3/2 for n = 1, so the
/// quoted n = 1 profile does not carry the same normalisation as the others.
pub fn profile_normalization(n: u32) -> Result<f64> {
    Ok(reference_profile(n, 0.0)? / gamma_profile(n, 0.0)?)
}
