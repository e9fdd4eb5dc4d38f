//! Quadrature oracles for `I_{n,m}` and the relative-error table built on them.

use std::f64::consts::LN_2;

use super::expansion::{asymptotic_integral_with, CoefficientMethod};
use super::inversion::x_of_t_unchecked;
use super::AsymptoticParams;
use crate::quad::{Quadrature, QuadratureResult};
use crate::specfun::{erfc, ln_erfc, SQRT_PI};
use crate::{Error, Result};

fn check_n(n: u32) -> Result<()> {
    if n <= 2 {
        Ok(())
    } else {
        Err(Error::domain(format!("oracles cover n ∈ {{0, 1, 2}}, got {n}")))
    }
}

/// log((1 + erf x)/2) without cancellation on either side of 0.
fn ln_half_one_plus_erf(x: f64) -> f64 {
    if x >= 0.0 {
        (-0.5 * erfc(x)).ln_1p()
    } else {
        ln_erfc(-x) - LN_2
    }
}

fn scaled(r: QuadratureResult, factor: f64) -> QuadratureResult {
    QuadratureResult { value: r.value * factor, err_estimate: r.err_estimate * factor.abs(), ..r }
}

/// Full-line quadrature of x^n e^{-x²} ((1 + erf x)/2)^m.
///
/// The integrand is multiplied by s = m + 1 before integration (and the
/// result divided back) so the mixed tolerance acts relatively.
pub fn oracle_direct(n: u32, m: u64, tol: f64) -> Result<QuadratureResult> {
    check_n(n)?;
    let s = m as f64 + 1.0;
    let mf = m as f64;
    let f = |x: f64| {
        let log_weight = -x * x + if m == 0 { 0.0 } else { mf * ln_half_one_plus_erf(x) };
        s * x.powi(n as i32) * log_weight.exp()
    };
    let r = Quadrature::new(tol).real_line(f)?;
    Ok(scaled(r, 1.0 / s))
}

/// √π ∫₀^∞ x(t)^n e^{-st} dt, integrated in u = st as (√π/s) ∫ x(u/s)^n e^{-u} du.
pub fn oracle_transformed(n: u32, m: u64, tol: f64) -> Result<QuadratureResult> {
    check_n(n)?;
    let s = m as f64 + 1.0;
    let f = |u: f64| {
        let t = u / s;
        if t == 0.0 {
            return if n == 0 { (-u).exp() } else { 0.0 };
        }
        x_of_t_unchecked(t).powi(n as i32) * (-u).exp()
    };
    let r = Quadrature::new(tol).half_line(f, 0.0)?;
    Ok(scaled(r, SQRT_PI / s))
}

/// Relative errors |asymptotic − oracle| / |oracle| for a grid of m and
/// truncation indices k.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    pub n: u32,
    pub m_list: Vec<u64>,
    pub k_list: Vec<usize>,
    pub method: CoefficientMethod,
    /// Direct oracle value per m.
    pub oracle: Vec<QuadratureResult>,
    /// `rel_err[i][j]` for k_list[i], m_list[j].
    pub rel_err: Vec<Vec<f64>>,
}

impl ErrorTable {
    pub fn all_converged(&self) -> bool {
        self.oracle.iter().all(|r| r.converged)
    }

    pub fn get(&self, k: usize, m: u64) -> Option<f64> {
        let i = self.k_list.iter().position(|&x| x == k)?;
        let j = self.m_list.iter().position(|&x| x == m)?;
        Some(self.rel_err[i][j])
    }
}

pub fn error_table(
    n: u32,
    m_list: &[u64],
    k_list: &[usize],
    method: CoefficientMethod,
    tol: f64,
) -> Result<ErrorTable> {
    if !(n == 1 || n == 2) {
        return Err(Error::domain(format!("error tables cover n ∈ {{1, 2}}, got {n}")));
    }
    let params = m_list
        .iter()
        .map(|&m| AsymptoticParams::from_m(m))
        .collect::<Result<Vec<_>>>()?;
    let oracle = m_list
        .iter()
        .map(|&m| oracle_direct(n, m, tol))
        .collect::<Result<Vec<_>>>()?;
    let rel_err = k_list
        .iter()
        .map(|&k| {
            params
                .iter()
                .zip(&oracle)
                .map(|(p, o)| {
                    let asym = asymptotic_integral_with(n, p, k, method)?;
                    Ok((asym - o.value).abs() / o.value.abs())
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorTable { n, m_list: m_list.to_vec(), k_list: k_list.to_vec(), method, oracle, rel_err })
}
