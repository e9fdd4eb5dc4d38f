use super::gamma::{gamma, recip_gamma};
use crate::{Error, Result};

const MAX_TERMS: usize = 10_000_000;

/// Parameters of a real Gauss hypergeometric function ₂F₁(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Args {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

impl Hyp2F1Args {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> Self {
        Self { a, b, c, z }
    }

    /// The series terminates when a or b is a non-positive integer.
    pub fn is_terminating(&self) -> bool {
        is_nonpositive_integer(self.a) || is_nonpositive_integer(self.b)
    }

    /// Checks `c ∉ {0, -1, …}` and `z < 1`, or `z = 1` with `c - a - b > 0`.
    pub fn validate(&self) -> Result<()> {
        let Self { a, b, c, z } = *self;
        if ![a, b, c, z].iter().all(|v| v.is_finite()) {
            return Err(Error::domain("₂F₁ arguments must be finite"));
        }
        if is_nonpositive_integer(c) {
            return Err(Error::domain(format!("₂F₁ lower parameter c = {c} is a pole")));
        }
        if self.is_terminating() || z < 1.0 || (z == 1.0 && c - a - b > 0.0) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "₂F₁({a}, {b}; {c}; {z}) lies outside the real convergence region"
            )))
        }
    }

    /// Argument of the Pfaff-transformed series, z/(z-1).
    pub fn transformed_argument(&self) -> f64 {
        self.z / (self.z - 1.0)
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// Σ_{k≥1} (a)_k (b)_k / ((c)_k k!) z^k, i.e. the Gauss series minus its
/// leading 1. Summed directly with no change of argument.
///
/// Stops once the remaining terms, bounded by a geometric majorant, fall below
/// `tol` relative to the full value. For |z| < 1 the term ratio factors as
/// z·((k+a)/(k+c))·((k+b)/(k+1)), or with a and b exchanged; once all four
/// shifts are positive each factor is monotone in k, so its supremum over later
/// k is the larger of its next value and its limit 1. The tighter pairing wins.
pub fn hyp2f1_series_tail(args: Hyp2F1Args, tol: f64) -> Result<f64> {
    let Hyp2F1Args { a, b, c, z } = args;
    if is_nonpositive_integer(c) {
        return Err(Error::domain(format!("₂F₁ lower parameter c = {c} is a pole")));
    }
    let terminating = args.is_terminating();
    if !terminating && (z.abs() > 1.0 || (z.abs() == 1.0 && (z < 0.0 || c - a - b <= 0.0))) {
        return Err(Error::convergence(format!(
            "Gauss series diverges at z = {z} for ({a}, {b}; {c})"
        )));
    }
    let ratio = |k: f64| (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    let k_positive = (-a.min(b).min(c)).max(0.0).ceil() as usize + 1;
    let k_monotone = (a.abs() + b.abs() + c.abs()).ceil() as usize + 2;
    let mut term = 1.0;
    let mut tail = 0.0;
    for k in 0..MAX_TERMS {
        term *= ratio(k as f64);
        tail += term;
        if term == 0.0 {
            return Ok(tail);
        }
        let next = (k + 1) as f64;
        let bound = if z.abs() < 1.0 {
            if k + 1 < k_positive {
                continue;
            }
            let sup = |p: f64, q: f64| ((next + p) / (next + q)).max(1.0);
            let rho = z.abs() * (sup(a, c) * sup(b, 1.0)).min(sup(b, c) * sup(a, 1.0));
            if rho >= 1.0 {
                continue;
            }
            term.abs() * rho / (1.0 - rho)
        } else {
            if k + 1 < k_monotone {
                continue;
            }
            // z = 1: terms decay like k^{a+b-c-1}
            term.abs() * next / (c - a - b)
        };
        if bound <= tol * (1.0 + tail).abs().max(f64::MIN_POSITIVE) {
            return Ok(tail);
        }
    }
    Err(Error::convergence(format!(
        "Gauss series ({a}, {b}; {c}; {z}) did not converge in {MAX_TERMS} terms"
    )))
}

/// The untransformed Gauss series.
pub fn hyp2f1_series(args: Hyp2F1Args, tol: f64) -> Result<f64> {
    Ok(1.0 + hyp2f1_series_tail(args, tol)?)
}

/// ₂F₁(a, b; c; z) = (1 - z)^{-a} ₂F₁(a, c - b; c; z/(z - 1)).
pub fn hyp2f1_pfaff(args: Hyp2F1Args, tol: f64) -> Result<f64> {
    let Hyp2F1Args { a, b, c, z } = args;
    let inner = Hyp2F1Args::new(a, c - b, c, args.transformed_argument());
    Ok((1.0 - z).powf(-a) * hyp2f1_series(inner, tol)?)
}

/// Gauss summation: ₂F₁(a, b; c; 1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)).
fn gauss_sum(a: f64, b: f64, c: f64) -> Result<f64> {
    let s = c - a - b;
    if c > 0.0 && c - a > 0.0 && c - b > 0.0 {
        let ln = libm::lgamma(c) + libm::lgamma(s) - libm::lgamma(c - a) - libm::lgamma(c - b);
        return Ok(ln.exp());
    }
    Ok(gamma(c)? * gamma(s)? * recip_gamma(c - a) * recip_gamma(c - b))
}

/// Real ₂F₁(a, b; c; z) to relative tolerance `tol`.
///
/// The Pfaff-transformed argument z/(z-1) is used only when its modulus is
/// below 0.9·|z|; otherwise (ties included) the series is summed at z.
pub fn gauss_2f1(args: Hyp2F1Args, tol: f64) -> Result<f64> {
    args.validate()?;
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let Hyp2F1Args { a, b, c, z } = args;
    if args.is_terminating() {
        return hyp2f1_series(args, tol);
    }
    if z == 1.0 {
        return gauss_sum(a, b, c);
    }
    let w = args.transformed_argument();
    if w.abs() < 0.9 * z.abs() {
        if w.abs() >= 1.0 {
            return Err(Error::convergence(format!("no convergent argument for z = {z}")));
        }
        hyp2f1_pfaff(args, tol)
    } else {
        if z.abs() >= 1.0 {
            return Err(Error::convergence(format!("no convergent argument for z = {z}")));
        }
        hyp2f1_series(args, tol)
    }
}
