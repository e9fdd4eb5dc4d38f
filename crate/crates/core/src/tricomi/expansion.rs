use std::f64::consts::PI;

use super::AsymptoticParams;
use crate::specfun::{SQRT_PI, ZETA3};
use crate::{Error, Result};

/// Highest power of 1/L for which coefficients are known.
pub const MAX_ORDER: usize = 3;

fn check_order(k: usize) -> Result<()> {
    if k > MAX_ORDER {
        return Err(Error::domain(format!("truncation index must be ≤ {MAX_ORDER}, got {k}")));
    }
    Ok(())
}

/// A(u) = −log(a u) − L₁, B = −A − 1, C = A² + 3A + 7/2.
fn abc(u: f64, p: &AsymptoticParams) -> (f64, f64, f64) {
    let a = -(p.scale * u).ln() - p.log_sqrt_log_s;
    (a, -a - 1.0, a * a + 3.0 * a + 3.5)
}

fn check_u(u: f64) -> Result<()> {
    if u > 0.0 && u.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("u must be positive and finite, got {u}")))
    }
}

/// Iterated small-u solution of erfc x = 2u/s for x²:
///
/// ```text
/// x² ≈ L (1 + A/L + B/(2L²) + C/(4L³))
/// ```
///
/// truncated after the `L^{-k}` term.
pub fn xsq_asymptotic(u: f64, p: &AsymptoticParams, k: usize) -> Result<f64> {
    check_u(u)?;
    check_order(k)?;
    let (a, b, c) = abc(u, p);
    let inv = 1.0 / p.log_s;
    let terms = [1.0, a * inv, b * inv * inv / 2.0, c * inv.powi(3) / 4.0];
    Ok(p.log_s * terms[..=k].iter().sum::<f64>())
}

/// Square root of [`xsq_asymptotic`] expanded to the same order:
///
/// ```text
/// x ≈ √L (1 + A/(2L) + (2B − A²)/(8L²) + (2C − 2AB + A³)/(16L³))
/// ```
pub fn x_asymptotic(u: f64, p: &AsymptoticParams, k: usize) -> Result<f64> {
    check_u(u)?;
    check_order(k)?;
    let (a, b, c) = abc(u, p);
    let inv = 1.0 / p.log_s;
    let terms = [
        1.0,
        a * inv / 2.0,
        (2.0 * b - a * a) * inv * inv / 8.0,
        (2.0 * c - 2.0 * a * b + a * a * a) * inv.powi(3) / 16.0,
    ];
    Ok(p.log_s.sqrt() * terms[..=k].iter().sum::<f64>())
}

/// How the expansion coefficients are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientMethod {
    /// Exact expectations of the A, B, C polynomials under e^{-u} du.
    MomentBased,
    /// The closed-form 𝒜, ℬ, 𝒞 expressions taken verbatim. These match the
    /// moment route except in 𝒞₁, whose G-coefficient carries π²/6 where
    /// the moment route gives π²/2.
    ClosedForm,
}

/// Expectations under e^{-u} du of the polynomials in A(u) that appear in
/// the coefficient formulas. With g = G − L₁ the centred variable −log u − γ
/// contributes variance π²/6 and third central moment 2ζ(3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMomentExpectations {
    pub a: f64,
    pub a2: f64,
    pub a3: f64,
    pub b: f64,
    pub ab: f64,
    pub c: f64,
}

impl LogMomentExpectations {
    pub fn new(p: &AsymptoticParams) -> Self {
        let g = p.centred_offset();
        let var = PI * PI / 6.0;
        let a = g;
        let a2 = g * g + var;
        let a3 = g * g * g + 3.0 * var * g + 2.0 * ZETA3;
        Self { a, a2, a3, b: -a - 1.0, ab: -a2 - a, c: a2 + 3.0 * a + 3.5 }
    }
}

/// Prefactor and coefficients of powers of 1/L for `I_{n,m}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionSeries {
    pub n: u32,
    pub prefactor: f64,
    /// c_0..c_3 multiplying L^{-j}; c_0 = 1.
    pub coeffs: [f64; 4],
    pub log_s: f64,
}

impl ExpansionSeries {
    /// prefactor · Σ_{j ≤ k} c_j L^{-j}
    pub fn evaluate(&self, k: usize) -> Result<f64> {
        check_order(k)?;
        let inv = 1.0 / self.log_s;
        let sum: f64 = self.coeffs[..=k]
            .iter()
            .enumerate()
            .map(|(j, c)| c * inv.powi(j as i32))
            .sum();
        Ok(self.prefactor * sum)
    }

    fn trivial(p: &AsymptoticParams) -> Self {
        Self { n: 0, prefactor: SQRT_PI / p.s, coeffs: [1.0, 0.0, 0.0, 0.0], log_s: p.log_s }
    }
}

pub fn expansion_coefficients(
    n: u32,
    p: &AsymptoticParams,
    method: CoefficientMethod,
) -> Result<ExpansionSeries> {
    let (prefactor, coeffs) = match (n, method) {
        (1, CoefficientMethod::MomentBased) => {
            let e = LogMomentExpectations::new(p);
            let c2 = (2.0 * e.b - e.a2) / 8.0;
            let c3 = (2.0 * e.c - 2.0 * e.ab + e.a3) / 16.0;
            ((PI * p.log_s).sqrt() / p.s, [1.0, e.a / 2.0, c2, c3])
        }
        (2, CoefficientMethod::MomentBased) => {
            let e = LogMomentExpectations::new(p);
            (SQRT_PI * p.log_s / p.s, [1.0, e.a, e.b / 2.0, e.c / 4.0])
        }
        (1, CoefficientMethod::ClosedForm) => {
            let (a1, b1, c1) = closed_form_n1(p);
            ((PI * p.log_s).sqrt() / p.s, [1.0, a1 / 2.0, -b1 / 8.0, c1 / 16.0])
        }
        (2, CoefficientMethod::ClosedForm) => {
            let (a2, b2, c2) = closed_form_n2(p);
            (SQRT_PI * p.log_s / p.s, [1.0, a2, b2 / 2.0, c2 / 4.0])
        }
        _ => return Err(Error::domain(format!("expansion coefficients exist for n ∈ {{1, 2}}, got {n}"))),
    };
    Ok(ExpansionSeries { n, prefactor, coeffs, log_s: p.log_s })
}

/// (𝒜₁, ℬ₁, 𝒞₁) as closed forms in G and L₁.
fn closed_form_n1(p: &AsymptoticParams) -> (f64, f64, f64) {
    let (g, l1) = (p.offset, p.log_sqrt_log_s);
    let z2 = PI * PI / 6.0;
    let a1 = g - l1;
    let b1 = g * g + 2.0 * (1.0 - l1) * g + l1 * l1 - 2.0 * l1 + z2 + 2.0;
    let c1 = g.powi(3) + (4.0 - 3.0 * l1) * g * g + (3.0 * l1 * l1 - 8.0 * l1 + 8.0 + z2) * g
        + 4.0 * l1 * l1
        - 8.0 * l1
        - l1.powi(3)
        + z2 * (4.0 - 3.0 * l1)
        + 2.0 * ZETA3
        + 7.0;
    (a1, b1, c1)
}

/// (𝒜₂, ℬ₂, 𝒞₂) as closed forms in G and L₁.
fn closed_form_n2(p: &AsymptoticParams) -> (f64, f64, f64) {
    let (g, l1) = (p.offset, p.log_sqrt_log_s);
    let a2 = g - l1;
    let b2 = -g + l1 - 1.0;
    let c2 = g * g + (3.0 - 2.0 * l1) * g + l1 * l1 - 3.0 * l1 + PI * PI / 6.0 + 3.5;
    (a2, b2, c2)
}

/// Truncated expansion of `I_{n,m}` with moment-based coefficients.
/// n = 0 is exact (√π/(m+1)) and ignores `k`.
pub fn asymptotic_integral(n: u32, m: u64, k: usize) -> Result<f64> {
    let p = AsymptoticParams::from_m(m)?;
    asymptotic_integral_with(n, &p, k, CoefficientMethod::MomentBased)
}

pub fn asymptotic_integral_with(
    n: u32,
    p: &AsymptoticParams,
    k: usize,
    method: CoefficientMethod,
) -> Result<f64> {
    match n {
        0 => ExpansionSeries::trivial(p).evaluate(0),
        1 | 2 => expansion_coefficients(n, p, method)?.evaluate(k),
        _ => Err(Error::domain(format!("I_{{n,m}} is expanded for n ≤ 2, got {n}"))),
    }
}
