//! Double-exponential quadrature.
//!
//! Finite intervals use the tanh-sinh map `x = tanh(π/2 · sinh t)`, half
//! lines use exp-sinh `x = lo + exp(π/2 · sinh t)`. Both are refined by
//! halving the step (level doubling, reusing every previous node) and the
//! error estimate is the difference of the last two level sums.
//!
//! Integrands with algebraic endpoint singularities should use the
//! `*_gapped` entry points: they receive the distances to both endpoints
//! computed without cancellation, so `(1 - x²)^{-μ}` can be formed as
//! `(from_lo · to_hi)^{-μ}` even where `x` itself rounds to ±1.

use std::f64::consts::FRAC_PI_2;

use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// Convergence is not declared before this level (unless the cap is lower).
const MIN_LEVEL: u32 = 3;
/// tanh-sinh abscissae beyond this have endpoint gaps below ~1e-450.
const FINITE_T_MAX: f64 = 6.5;
const HALF_LINE_T_MAX: f64 = 4.0;
const HALF_LINE_T_MIN: f64 = -7.0;
/// Relative half-width of the principal-value guard band around the pole.
const PV_GUARD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute error estimate, |S_k − S_{k−1}|.
    pub err_estimate: f64,
    pub n_evals: usize,
    pub converged: bool,
}

impl QuadratureResult {
    fn sum(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            n_evals: self.n_evals + other.n_evals,
            converged: self.converged && other.converged,
        }
    }

    /// The value, or a convergence error carrying the best estimate.
    pub fn into_value(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::convergence(format!(
                "quadrature stopped at {} ± {:e} after {} evaluations",
                self.value, self.err_estimate, self.n_evals
            )))
        }
    }
}

/// A quadrature node on a finite interval together with its distances to
/// the two endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite { lo: f64, hi: f64 },
    HalfLine { lo: f64 },
    FullLine,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Singularity {
    /// Integrable algebraic behaviour at one or both finite endpoints.
    EndpointAlgebraic,
    /// A simple pole inside a finite domain. The integrand is then the
    /// regular numerator g and the integral is PV ∫ g(x)/(x − pole) dx.
    InteriorPole(f64),
}

/// An integrand with its domain and an optional singularity annotation.
pub struct IntegrandSpec<F> {
    pub integrand: F,
    pub domain: Domain,
    pub singularity: Option<Singularity>,
}

impl<F: Fn(f64) -> f64> IntegrandSpec<F> {
    pub fn finite(integrand: F, lo: f64, hi: f64) -> Self {
        Self { integrand, domain: Domain::Finite { lo, hi }, singularity: None }
    }

    pub fn half_line(integrand: F, lo: f64) -> Self {
        Self { integrand, domain: Domain::HalfLine { lo }, singularity: None }
    }

    pub fn full_line(integrand: F) -> Self {
        Self { integrand, domain: Domain::FullLine, singularity: None }
    }

    pub fn with_singularity(mut self, note: Singularity) -> Self {
        self.singularity = Some(note);
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self.domain {
            Domain::Finite { lo, hi } => check_interval(lo, hi)?,
            Domain::HalfLine { lo } if !lo.is_finite() => {
                return Err(Error::domain(format!("half-line origin must be finite, got {lo}")))
            }
            _ => {}
        }
        if let Some(Singularity::InteriorPole(p)) = self.singularity {
            match self.domain {
                Domain::Finite { lo, hi } => check_pole(p, lo, hi)?,
                _ => return Err(Error::domain("interior poles require a finite domain")),
            }
        }
        Ok(())
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if lo.is_finite() && hi.is_finite() && lo < hi {
        Ok(())
    } else {
        Err(Error::domain(format!("finite interval requires lo < hi, got ({lo}, {hi})")))
    }
}

fn check_pole(pole: f64, lo: f64, hi: f64) -> Result<()> {
    check_interval(lo, hi)?;
    if lo < pole && pole < hi {
        Ok(())
    } else {
        Err(Error::domain(format!("pole {pole} is not strictly inside ({lo}, {hi})")))
    }
}

/// Quadrature engine configuration: mixed absolute/relative tolerance and
/// the deepest refinement level (step 2^{-level}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub tol: f64,
    pub max_level: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, max_level: DEFAULT_MAX_LEVEL }
    }
}

impl Quadrature {
    pub fn new(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }

    pub fn with_max_level(self, max_level: u32) -> Self {
        Self { max_level, ..self }
    }

    fn check(&self) -> Result<()> {
        if self.tol > 0.0 && self.max_level >= 1 {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "quadrature needs tol > 0 and max_level ≥ 1, got {} / {}",
                self.tol, self.max_level
            )))
        }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, spec: &IntegrandSpec<F>) -> Result<QuadratureResult> {
        spec.validate()?;
        let f = &spec.integrand;
        match (spec.domain, spec.singularity) {
            (Domain::Finite { lo, hi }, Some(Singularity::InteriorPole(p))) => {
                self.principal_value(f, p, lo, hi)
            }
            (Domain::Finite { lo, hi }, _) => self.finite(f, lo, hi),
            (Domain::HalfLine { lo }, _) => self.half_line(f, lo),
            (Domain::FullLine, _) => self.real_line(f),
        }
    }

    /// ∫_lo^hi f(x) dx. Nodes whose abscissa rounds onto an endpoint are
    /// skipped; use [`Quadrature::finite_gapped`] when that matters.
    pub fn finite<F: Fn(f64) -> f64>(&self, f: F, lo: f64, hi: f64) -> Result<QuadratureResult> {
        self.finite_gapped(
            |p: Abscissa| if p.x <= lo || p.x >= hi { 0.0 } else { f(p.x) },
            lo,
            hi,
        )
    }

    /// ∫_lo^hi f dx where f sees each node with exact endpoint distances.
    pub fn finite_gapped<F: Fn(Abscissa) -> f64>(
        &self,
        f: F,
        lo: f64,
        hi: f64,
    ) -> Result<QuadratureResult> {
        self.check()?;
        check_interval(lo, hi)?;
        let width = hi - lo;
        let half = 0.5 * width;
        let mid = lo + half;
        let level_sum = |level: u32, h: f64| {
            let mut sum = 0.0;
            let mut evals = 0;
            let (start, stride) = if level == 0 {
                sum += FRAC_PI_2 * f(Abscissa { x: mid, from_lo: half, to_hi: half });
                evals += 1;
                (1.0, 1.0)
            } else {
                (1.0, 2.0)
            };
            let mut i = start;
            loop {
                let t = i * h;
                if t > FINITE_T_MAX {
                    break;
                }
                let u = FRAC_PI_2 * t.sinh();
                let e = (-2.0 * u).exp();
                let gap = half * (2.0 * e / (1.0 + e));
                let w = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
                if gap == 0.0 || w == 0.0 {
                    break;
                }
                let right = Abscissa { x: hi - gap, from_lo: width - gap, to_hi: gap };
                let left = Abscissa { x: lo + gap, from_lo: gap, to_hi: width - gap };
                sum += w * (f(right) + f(left));
                evals += 2;
                i += stride;
            }
            (half * sum, evals)
        };
        Ok(self.refine(level_sum))
    }

    /// ∫_lo^∞ f(x) dx for integrands decaying at least exponentially.
    pub fn half_line<F: Fn(f64) -> f64>(&self, f: F, lo: f64) -> Result<QuadratureResult> {
        self.check()?;
        if !lo.is_finite() {
            return Err(Error::domain(format!("half-line origin must be finite, got {lo}")));
        }
        let level_sum = |level: u32, h: f64| {
            let mut sum = 0.0;
            let mut evals = 0;
            let (start, stride) = if level == 0 {
                sum += FRAC_PI_2 * f(lo + 1.0);
                evals += 1;
                (1.0, 1.0)
            } else {
                (1.0, 2.0)
            };
            let (mut right_open, mut left_open) = (true, true);
            let mut i = start;
            while right_open || left_open {
                let t = i * h;
                let u = FRAC_PI_2 * t.sinh();
                let c = FRAC_PI_2 * t.cosh();
                if right_open {
                    let ex = u.exp();
                    if t > HALF_LINE_T_MAX || !ex.is_finite() {
                        right_open = false;
                    } else {
                        sum += c * ex * f(lo + ex);
                        evals += 1;
                    }
                }
                if left_open {
                    let ex = (-u).exp();
                    if -t < HALF_LINE_T_MIN || ex == 0.0 {
                        left_open = false;
                    } else {
                        let x = lo + ex;
                        if x > lo {
                            sum += c * ex * f(x);
                            evals += 1;
                        }
                    }
                }
                i += stride;
            }
            (sum, evals)
        };
        Ok(self.refine(level_sum))
    }

    /// ∫_{-∞}^{∞} f(x) dx, split at 0 into two half lines.
    pub fn real_line<F: Fn(f64) -> f64>(&self, f: F) -> Result<QuadratureResult> {
        let right = self.half_line(&f, 0.0)?;
        let left = self.half_line(|y| f(-y), 0.0)?;
        Ok(right.sum(left))
    }

    /// PV ∫_lo^hi g(x)/(x − pole) dx.
    pub fn principal_value<F: Fn(f64) -> f64>(
        &self,
        g: F,
        pole: f64,
        lo: f64,
        hi: f64,
    ) -> Result<QuadratureResult> {
        self.principal_value_gapped(|p: Abscissa| g(p.x), pole, lo, hi)
    }

    /// PV ∫_lo^hi g(x)/(x − pole) dx by singularity subtraction:
    ///
    /// ```text
    /// ∫ (g(x) − g(pole))/(x − pole) dx + g(pole) · log((hi − pole)/(pole − lo))
    /// ```
    ///
    /// The regular part is integrated separately on each side of the pole.
    /// Within the guard band |x − pole| < (hi − lo)·1e-6 the difference
    /// quotient is replaced by its Taylor model g′(pole) + g″(pole)(x − pole)/2
    /// with both derivatives from the 3-point stencil {pole − δ, pole, pole + δ}.
    pub fn principal_value_gapped<F: Fn(Abscissa) -> f64>(
        &self,
        g: F,
        pole: f64,
        lo: f64,
        hi: f64,
    ) -> Result<QuadratureResult> {
        self.check()?;
        check_pole(pole, lo, hi)?;
        let (left_width, right_width) = (pole - lo, hi - pole);
        let delta = (PV_GUARD * (hi - lo)).min(0.5 * left_width.min(right_width));
        let at = |offset: f64| {
            g(Abscissa { x: pole + offset, from_lo: left_width + offset, to_hi: right_width - offset })
        };
        let g_pole = at(0.0);
        let (g_plus, g_minus) = (at(delta), at(-delta));
        let d1 = (g_plus - g_minus) / (2.0 * delta);
        let d2 = (g_plus - 2.0 * g_pole + g_minus) / (delta * delta);
        let quotient = |gx: f64, offset: f64| {
            if offset.abs() < delta {
                d1 + 0.5 * d2 * offset
            } else {
                (gx - g_pole) / offset
            }
        };
        let left = self.finite_gapped(
            |p: Abscissa| {
                let offset = -p.to_hi;
                let global = Abscissa { x: p.x, from_lo: p.from_lo, to_hi: right_width + p.to_hi };
                let gx = if offset.abs() < delta { 0.0 } else { g(global) };
                quotient(gx, offset)
            },
            lo,
            pole,
        )?;
        let right = self.finite_gapped(
            |p: Abscissa| {
                let offset = p.from_lo;
                let global = Abscissa { x: p.x, from_lo: left_width + p.from_lo, to_hi: p.to_hi };
                let gx = if offset.abs() < delta { 0.0 } else { g(global) };
                quotient(gx, offset)
            },
            pole,
            hi,
        )?;
        let mut total = left.sum(right);
        total.value += g_pole * (right_width / left_width).ln();
        total.n_evals += 3;
        Ok(total)
    }

    /// Level-doubling driver. `level_sum(level, h)` returns the weighted sum
    /// over the nodes first introduced at that level (already scaled by any
    /// interval Jacobian) together with the number of evaluations.
    fn refine(&self, mut level_sum: impl FnMut(u32, f64) -> (f64, usize)) -> QuadratureResult {
        let mut h = 1.0;
        let (mut raw, mut evals) = level_sum(0, h);
        let mut estimate = h * raw;
        let mut err = f64::INFINITY;
        let min_level = MIN_LEVEL.min(self.max_level);
        for level in 1..=self.max_level {
            h *= 0.5;
            let (new, n) = level_sum(level, h);
            raw += new;
            evals += n;
            let next = h * raw;
            err = (next - estimate).abs();
            estimate = next;
            if !estimate.is_finite() {
                break;
            }
            if level >= min_level && err <= self.target(estimate) {
                return QuadratureResult { value: estimate, err_estimate: err, n_evals: evals, converged: true };
            }
        }
        QuadratureResult { value: estimate, err_estimate: err, n_evals: evals, converged: false }
    }

    fn target(&self, value: f64) -> f64 {
        self.tol * value.abs().max(1.0)
    }
}

pub fn integrate_finite<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadratureResult> {
    Quadrature::new(tol).finite(f, lo, hi)
}

pub fn integrate_half_line<F: Fn(f64) -> f64>(f: F, lo: f64, tol: f64) -> Result<QuadratureResult> {
    Quadrature::new(tol).half_line(f, lo)
}

pub fn integrate_real_line<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadratureResult> {
    Quadrature::new(tol).real_line(f)
}

pub fn principal_value<F: Fn(f64) -> f64>(
    g: F,
    pole: f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    Quadrature::new(tol).principal_value(g, pole, lo, hi)
}
