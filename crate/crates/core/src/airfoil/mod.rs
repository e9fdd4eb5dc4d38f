//! Airfoil integrals
//!
//! ```text
//! J_n(a; μ) = PV ∫_{-1}^{1} x^{2n+1} / (x − a) · (1 − x²)^{-μ} dx,   μ < 1, n ≥ 0,
//! ```
//!
//! evaluated three ways: the hypergeometric series ([`j_series`]), the same
//! series with its leading behaviour summed in closed form
//! ([`j_accelerated`]), and principal-value quadrature ([`j_pv_oracle`]).
//!
//! J_0(a; ½) = π for every station a, which is why an elliptic circulation
//! Γ = Γ0 √(1 − x²) induces the constant downwash Γ0/4.

mod profile;
mod series;
mod sigma;

pub use profile::{gamma_profile, profile_normalization, reference_profile};
pub use series::{sum_algebraic, SeriesSum, MAX_TERMS};
pub use sigma::{sigma, sigma2_misprinted_variant, sigma_direct, SigmaMethod, SIGMA_TOL};

use crate::quad::{Abscissa, Quadrature, QuadratureResult};
use crate::specfun::{gamma_ratio, hyp2f1_series, hyp2f1_series_tail, Hyp2F1Args, SQRT_PI};
use crate::{Error, Result};
use sigma::{sigma_weight, SigmaWeights};

/// Relative tolerance of each inner ₂F₁ evaluation.
const HYP_TOL: f64 = 1e-16;

/// Above this X the inner hypergeometrics move from argument −X to a².
pub const EULER_SWITCH: f64 = 0.9;

/// The triple (n, a, μ) selecting J_n(a; μ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AirfoilQuery {
    pub n: u32,
    pub a: f64,
    pub mu: f64,
}

impl AirfoilQuery {
    pub fn new(n: u32, a: f64, mu: f64) -> Result<Self> {
        let q = Self { n, a, mu };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.abs() < 1.0) {
            return Err(Error::domain(format!("station must satisfy |a| < 1, got {}", self.a)));
        }
        if !(self.mu < 1.0) {
            return Err(Error::domain(format!("exponent must satisfy μ < 1, got {}", self.mu)));
        }
        if self.n > 64 {
            return Err(Error::domain(format!("profile index {} is unreasonably large", self.n)));
        }
        Ok(())
    }

    /// X = a²/(1 − a²).
    pub fn x_param(&self) -> f64 {
        let a2 = self.a * self.a;
        a2 / (1.0 - a2)
    }

    /// The same query at −a.
    pub fn mirrored(&self) -> Self {
        Self { a: -self.a, ..*self }
    }
}

/// A series route's value together with the summation record of its
/// infinite part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JSeries {
    pub value: f64,
    pub sum: SeriesSum,
}

impl JSeries {
    pub fn into_value(self) -> Result<f64> {
        self.sum.into_value().map(|_| self.value)
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// √π Γ(1−μ)/Γ(3/2−μ) · Σ_{r=0}^{n} a^{2(n−r)} (½)_r/(3/2−μ)_r.
fn finite_part(n: u32, mu: f64, a2: f64) -> Result<f64> {
    let scale = SQRT_PI * gamma_ratio(1.0 - mu, 1.5 - mu)?;
    let mut ratio = 1.0;
    let mut total = 0.0;
    for r in 0..=n {
        total += a2.powi((n - r) as i32) * ratio;
        ratio *= (0.5 + r as f64) / (1.5 - mu + r as f64);
    }
    Ok(scale * total)
}

/// a^{2n+1} (1 − a²)^{-μ} log((1 − a)/(1 + a)) for a ≥ 0.
fn log_part(n: u32, mu: f64, a: f64) -> f64 {
    let a2 = a * a;
    a.powi(2 * n as i32 + 1) * (1.0 - a2).powf(-mu) * (-2.0 * a.atanh())
}

/// ₂F₁(1, 1 − μ; r + 1; −X).
fn plain_hyp(mu: f64, a2: f64, x: f64, r: usize) -> Result<f64> {
    let c = r as f64 + 1.0;
    if x <= EULER_SWITCH {
        hyp2f1_series(Hyp2F1Args::new(1.0, 1.0 - mu, c, -x), HYP_TOL)
    } else {
        Ok((1.0 - a2) * hyp2f1_series(Hyp2F1Args::new(1.0, mu + r as f64, c, a2), HYP_TOL)?)
    }
}

/// ₂F₁(1, 3 − μ; r + 3; −X) − 1, formed without cancellation on the −X branch.
fn residual_hyp(mu: f64, a2: f64, x: f64, r: usize) -> Result<f64> {
    let c = r as f64 + 3.0;
    if x <= EULER_SWITCH {
        hyp2f1_series_tail(Hyp2F1Args::new(1.0, 3.0 - mu, c, -x), HYP_TOL)
    } else {
        let tail = hyp2f1_series_tail(Hyp2F1Args::new(1.0, mu + r as f64, c, a2), HYP_TOL)?;
        Ok(-a2 + (1.0 - a2) * tail)
    }
}

/// Value at a = 0: the even moment B(n + ½, 1 − μ).
fn at_origin(q: &AirfoilQuery) -> Result<JSeries> {
    let value = finite_part(q.n, q.mu, 0.0)?;
    let sum = SeriesSum { value: 0.0, terms: 0, err_estimate: 0.0, converged: true, extrapolated: false };
    Ok(JSeries { value, sum })
}

/// J_n(a; μ) from the hypergeometric series,
///
/// ```text
/// J = √π Γ(1−μ)/Γ(3/2−μ) Σ_{r=0}^{n} a^{2(n−r)} (½)_r/(3/2−μ)_r
///   + a^{2n+1} (1 − a²)^{-μ} log((1 − a)/(1 + a))
///   + 2a^{2n+2}/(1 − a²) Σ_{r≥1} (μ)_r/((2r − 1) r!) ₂F₁(1, 1 − μ; r + 1; −X),
/// ```
///
/// with the infinite sum (terms ~ r^{μ−2}) handed to [`sum_algebraic`].
/// The tolerance is absolute on J. Evaluated at |a|.
pub fn j_series_detailed(q: &AirfoilQuery, tol: f64) -> Result<JSeries> {
    q.validate()?;
    check_tol(tol)?;
    let (n, mu, a) = (q.n, q.mu, q.a.abs());
    if a == 0.0 {
        return at_origin(q);
    }
    let (a2, x) = (a * a, q.x_param());
    let prefactor = a.powi(2 * n as i32 + 1) * 2.0 * a / (1.0 - a2);
    let mut weights = SigmaWeights::new(0, mu);
    let sum = sum_algebraic(mu - 2.0, tol / prefactor.max(1.0), |r| {
        Ok(weights.at(r) * plain_hyp(mu, a2, x, r)?)
    })?;
    let value = finite_part(n, mu, a2)? + log_part(n, mu, a) + prefactor * sum.value;
    Ok(JSeries { value, sum })
}

pub fn j_series(q: &AirfoilQuery, tol: f64) -> Result<f64> {
    j_series_detailed(q, tol)?.into_value()
}

/// J_n(a; μ) with the infinite sum rewritten as
///
/// ```text
/// σ_0 − (1−μ)X σ_1 + (1−μ)_2 X² σ_2
///   + (1−μ)_2 X² Σ_{r≥1} (μ)_r/((2r − 1)(r + 2)!) (₂F₁(1, 3 − μ; r + 3; −X) − 1),
/// ```
///
/// the σ_m in closed form and the residual terms decaying like r^{μ−5}.
pub fn j_accelerated_detailed(q: &AirfoilQuery, tol: f64) -> Result<JSeries> {
    q.validate()?;
    check_tol(tol)?;
    let (n, mu, a) = (q.n, q.mu, q.a.abs());
    if a == 0.0 {
        return at_origin(q);
    }
    let (a2, x) = (a * a, q.x_param());
    let outer = a.powi(2 * n as i32 + 1) * 2.0 * a / (1.0 - a2);
    let c2 = (1.0 - mu) * (2.0 - mu) * x * x;
    let s0 = sigma(0, mu, SigmaMethod::ClosedForm)?;
    let s1 = sigma(1, mu, SigmaMethod::ClosedForm)?;
    let s2 = sigma(2, mu, SigmaMethod::ClosedForm)?;
    let mut weights = SigmaWeights::new(2, mu);
    let residual = sum_algebraic(mu - 5.0, tol / (outer * c2).max(1.0), |r| {
        Ok(weights.at(r) * residual_hyp(mu, a2, x, r)?)
    })?;
    let inner = s0 - (1.0 - mu) * x * s1 + c2 * (s2 + residual.value);
    let value = finite_part(n, mu, a2)? + log_part(n, mu, a) + outer * inner;
    Ok(JSeries { value, sum: residual })
}

pub fn j_accelerated(q: &AirfoilQuery, tol: f64) -> Result<f64> {
    j_accelerated_detailed(q, tol)?.into_value()
}

/// J_n(a; μ) by principal-value quadrature of x^{2n+1}(1 − x²)^{-μ} about the
/// pole at a. The endpoint factor is formed from exact endpoint distances.
/// Unlike the series routes, the signed station is used as given.
pub fn j_pv_oracle(q: &AirfoilQuery, tol: f64) -> Result<QuadratureResult> {
    q.validate()?;
    check_tol(tol)?;
    let (n, mu) = (q.n as i32, q.mu);
    let quad = Quadrature::new(tol);
    if q.a == 0.0 {
        return quad.finite_gapped(|p: Abscissa| p.x.powi(2 * n) * (p.from_lo * p.to_hi).powf(-mu), -1.0, 1.0);
    }
    quad.principal_value_gapped(
        |p: Abscissa| p.x.powi(2 * n + 1) * (p.from_lo * p.to_hi).powf(-mu),
        q.a,
        -1.0,
        1.0,
    )
}

/// Term r of the plain infinite sum, (μ)_r/((2r − 1) r!) ₂F₁(1, 1 − μ; r + 1; −X).
pub fn plain_series_term(q: &AirfoilQuery, r: usize) -> Result<f64> {
    q.validate()?;
    let a2 = q.a * q.a;
    Ok(sigma_weight(0, q.mu, r)? * plain_hyp(q.mu, a2, q.x_param(), r)?)
}

/// Term r of the residual sum of [`j_accelerated`].
pub fn accelerated_residual_term(q: &AirfoilQuery, r: usize) -> Result<f64> {
    q.validate()?;
    let a2 = q.a * q.a;
    Ok(sigma_weight(2, q.mu, r)? * residual_hyp(q.mu, a2, q.x_param(), r)?)
}
