//! The auxiliary sums σ_m = Σ_{r≥1} (μ)_r / ((2r − 1)(r + m)!), m = 0, 1, 2.

use super::series::{sum_algebraic, SeriesSum};
use crate::specfun::{gamma_ratio, recip_gamma, SQRT_PI};
use crate::{Error, Result};

/// Tolerance used by [`SigmaMethod::DirectSum`].
pub const SIGMA_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaMethod {
    ClosedForm,
    DirectSum,
}

/// Iterates w_r = (μ)_r / ((2r − 1)(r + m)!) for r = 1, 2, … by recurrence.
#[derive(Debug, Clone)]
pub(crate) struct SigmaWeights {
    mu: f64,
    m: f64,
    r: usize,
    w: f64,
}

impl SigmaWeights {
    pub(crate) fn new(m: u32, mu: f64) -> Self {
        Self { mu, m: m as f64, r: 0, w: 0.0 }
    }

    /// The weight with index r; must be called with r = 1, 2, … in order.
    pub(crate) fn at(&mut self, r: usize) -> f64 {
        debug_assert_eq!(r, self.r + 1);
        self.w = if r == 1 {
            let factorial: f64 = (1..=self.m as u32 + 1).map(f64::from).product();
            self.mu / factorial
        } else {
            let k = (r - 1) as f64;
            let step = (self.mu + k) / (k + self.m + 1.0) * (2.0 * k - 1.0) / (2.0 * k + 1.0);
            self.w * step
        };
        self.r = r;
        self.w
    }
}

/// Single weight evaluated without recurrence, via log-gamma ratios.
pub(crate) fn sigma_weight(m: u32, mu: f64, r: usize) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("σ weights start at r = 1"));
    }
    let rf = r as f64;
    // (μ)_r / (r+m)! = Γ(μ+r) / (Γ(μ) Γ(r+m+1))
    let ratio = if mu + rf > 0.0 {
        gamma_ratio(mu + rf, rf + m as f64 + 1.0)? * recip_gamma(mu)
    } else {
        crate::specfun::pochhammer(mu, r as u32) * recip_gamma(rf + m as f64 + 1.0)
    };
    Ok(ratio / (2.0 * rf - 1.0))
}

/// √π Γ(1 − μ) / Γ(½ − μ), zero where Γ(½ − μ) has a pole.
fn gamma_term(mu: f64) -> Result<f64> {
    Ok(SQRT_PI * crate::specfun::gamma(1.0 - mu)? * recip_gamma(0.5 - mu))
}

/// σ_m(μ) for m ∈ {0, 1, 2} and μ < 1.
pub fn sigma(m: u32, mu: f64, method: SigmaMethod) -> Result<f64> {
    match method {
        SigmaMethod::ClosedForm => sigma_closed_form(m, mu),
        SigmaMethod::DirectSum => sigma_direct(m, mu, SIGMA_TOL)?.into_value(),
    }
}

fn check(m: u32, mu: f64) -> Result<()> {
    if m > 2 {
        return Err(Error::domain(format!("σ_m is provided for m ≤ 2, got {m}")));
    }
    if !(mu < 1.0) {
        return Err(Error::domain(format!("σ_m requires μ < 1, got {mu}")));
    }
    Ok(())
}

fn sigma_closed_form(m: u32, mu: f64) -> Result<f64> {
    check(m, mu)?;
    let g = gamma_term(mu)?;
    Ok(match m {
        0 => 1.0 - g,
        1 => (2.0 - 3.0 * mu) / (3.0 * (1.0 - mu)) - 2.0 * g / 3.0,
        _ => {
            (16.0 - 35.0 * mu + 15.0 * mu * mu) / (30.0 * (1.0 - mu) * (2.0 - mu))
                - 4.0 * g / 15.0
        }
    })
}

/// The σ_2 closed form with a linear coefficient of −25μ in the rational
/// part. It agrees with the series only at μ = 0 and is kept for comparison.
pub fn sigma2_misprinted_variant(mu: f64) -> Result<f64> {
    check(2, mu)?;
    let g = gamma_term(mu)?;
    Ok((16.0 - 25.0 * mu + 15.0 * mu * mu) / (30.0 * (1.0 - mu) * (2.0 - mu)) - 4.0 * g / 15.0)
}

/// Direct summation of σ_m; terms decay like r^{μ − 2 − m}.
pub fn sigma_direct(m: u32, mu: f64, tol: f64) -> Result<SeriesSum> {
    check(m, mu)?;
    let mut weights = SigmaWeights::new(m, mu);
    sum_algebraic(mu - 2.0 - m as f64, tol, |r| Ok(weights.at(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sigma0_trivial_values() {
        assert_eq!(sigma(0, 0.0, SigmaMethod::ClosedForm).unwrap().abs(), 0.0);
        assert_eq!(sigma(0, 0.0, SigmaMethod::DirectSum).unwrap(), 0.0);
        assert_eq!(sigma(0, 0.5, SigmaMethod::ClosedForm).unwrap(), 1.0);
    }

    #[test]
    fn sigma1_at_half() {
        let closed = sigma(1, 0.5, SigmaMethod::ClosedForm).unwrap();
        assert!((closed - 1.0 / 3.0).abs() < 1e-15);
        let direct = sigma(1, 0.5, SigmaMethod::DirectSum).unwrap();
        assert!((direct - 1.0 / 3.0).abs() < 1e-9, "{direct}");
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        for mu in [-0.5, 0.25, 0.75] {
            for m in 0..=2 {
                let c = sigma(m, mu, SigmaMethod::ClosedForm).unwrap();
                let d = sigma(m, mu, SigmaMethod::DirectSum).unwrap();
                assert!((c - d).abs() < 1e-9, "m={m} μ={mu}: {c} vs {d}");
            }
        }
    }

    #[test]
    fn negative_integer_mu_terminates() {
        // μ = −1: only r = 1 contributes, −1/(m+1)!
        let s = sigma_direct(2, -1.0, 1e-14).unwrap();
        assert_eq!(s.terms, 2);
        assert!((s.value + 1.0 / 6.0).abs() < 1e-16);
        let c = sigma(2, -1.0, SigmaMethod::ClosedForm).unwrap();
        assert!((c + 1.0 / 6.0).abs() < 1e-14, "{c}");
    }

    #[test]
    fn sigma2_rational_part_from_direct_sum() {
        // μ = ½ kills the gamma term, leaving (16 − 35/2 + 15/4)/(30·½·3/2) = 1/10
        let d = sigma(2, 0.5, SigmaMethod::DirectSum).unwrap();
        assert!((d - 0.1).abs() < 1e-9, "{d}");
        let variant = sigma2_misprinted_variant(0.5).unwrap();
        assert!((variant - 29.0 / 90.0).abs() < 1e-15);
        assert!((variant - d).abs() > 0.2);
        assert!(sigma2_misprinted_variant(0.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(sigma(0, 1.0, SigmaMethod::ClosedForm).is_err());
        assert!(sigma(0, 1.0, SigmaMethod::DirectSum).is_err());
        assert!(sigma(3, 0.5, SigmaMethod::ClosedForm).is_err());
    }

    #[test]
    fn weight_recurrence_matches_gamma_form() {
        for (m, mu) in [(0, 0.25), (1, -0.5), (2, 0.75), (0, -1.5)] {
            let mut w = SigmaWeights::new(m, mu);
            for r in 1..=200 {
                let rec = w.at(r);
                let direct = sigma_weight(m, mu, r).unwrap();
                assert!((rec - direct).abs() <= 1e-12 * direct.abs().max(1e-300), "{m} {mu} {r}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn closed_form_identity_holds(mu in -1.5f64..0.9, m in 0u32..=2) {
            let c = sigma(m, mu, SigmaMethod::ClosedForm).unwrap();
            let d = sigma(m, mu, SigmaMethod::DirectSum).unwrap();
            prop_assert!((c - d).abs() < 1e-9, "m={} μ={}: {} vs {}", m, mu, c, d);
        }
    }
}
