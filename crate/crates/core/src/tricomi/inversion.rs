//! Numeric inversion of `erfc x = y`.
//!
//! All work happens on `ln erfc`, which is concave and decreasing: Newton
//! iterates approach the root monotonically from above after one step, and
//! targets far below the smallest normal double remain representable.

use std::f64::consts::LN_2;

use crate::specfun::{ln_erfc, ln_erfc_derivative, SQRT_PI};
use crate::{Error, Result};

const MAX_NEWTON: usize = 100;

/// x with erfc(x) = y, for 0 < y < 2.
pub fn invert_erfc_numeric(y: f64) -> Result<f64> {
    if !(y > 0.0 && y < 2.0) {
        return Err(Error::domain(format!("erfc inversion requires 0 < y < 2, got {y}")));
    }
    Ok(if y <= 1.0 {
        inverse_erfc_from_log(y.ln())
    } else {
        -inverse_erfc_from_log((2.0 - y).ln())
    })
}

/// x(t) defined by erfc x = 2 − 2e^{-t}, t > 0.
///
/// For t ≤ log 2 the target is formed as `-2·expm1(-t)`, beyond it the
/// complement `2e^{-t}` is inverted and the sign flipped, so neither end
/// loses digits.
pub fn x_of_t(t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("x(t) requires t > 0, got {t}")));
    }
    Ok(x_of_t_unchecked(t))
}

pub(crate) fn x_of_t_unchecked(t: f64) -> f64 {
    if t <= LN_2 {
        inverse_erfc_from_log(LN_2 + (-(-t).exp_m1()).ln())
    } else if t.is_infinite() {
        f64::NEG_INFINITY
    } else {
        -inverse_erfc_from_log(LN_2 - t)
    }
}

/// The x ≥ 0 with ln erfc(x) = `ln_y` (≤ 0).
pub(crate) fn inverse_erfc_from_log(ln_y: f64) -> f64 {
    if ln_y >= 0.0 {
        return 0.0;
    }
    let residual = |x: f64| ln_erfc(x) - ln_y;
    // erfc x < e^{-x²} for x > 0, so the root lies below √(−ln y).
    let (mut lo, mut hi) = (0.0, (-ln_y).sqrt());
    let mut x = if ln_y > -0.1 {
        -ln_y * SQRT_PI / 2.0
    } else {
        let big = -ln_y;
        (big - SQRT_PI.ln() - 0.5 * big.ln()).sqrt()
    };
    if !(x > lo && x < hi) {
        x = 0.5 * (lo + hi);
    }
    for _ in 0..MAX_NEWTON {
        let r = residual(x);
        if r == 0.0 {
            return x;
        }
        if r > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mut next = x - r / ln_erfc_derivative(x);
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 2.0 * f64::EPSILON * next.abs() || hi - lo <= f64::EPSILON * hi {
            return next;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::erfc;

    #[test]
    fn centre_and_known_value() {
        assert_eq!(invert_erfc_numeric(1.0).unwrap(), 0.0);
        let x = invert_erfc_numeric(0.5).unwrap();
        assert!((x - 0.4769362762044699).abs() < 1e-15);
        assert!((invert_erfc_numeric(1.5).unwrap() + x).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        for y in [0.0, 2.0, -1.0, 3.0, f64::NAN] {
            assert!(matches!(invert_erfc_numeric(y), Err(Error::Domain(_))));
        }
        assert!(x_of_t(0.0).is_err());
        assert!(x_of_t(-1.0).is_err());
    }

    #[test]
    fn residual_on_log_grid() {
        let mut worst: f64 = 0.0;
        for i in 0..=240 {
            // y from 1e-12 up to 1, then mirrored towards 2 - 1e-12
            let y = 10f64.powf(-12.0 + 12.0 * i as f64 / 240.0);
            for target in [y, 2.0 - y] {
                if target >= 2.0 {
                    continue;
                }
                let x = invert_erfc_numeric(target).unwrap();
                worst = worst.max(((erfc(x) - target) / target).abs());
            }
        }
        assert!(worst <= 1e-13, "worst relative residual {worst:e}");
    }

    #[test]
    fn monotone_decreasing() {
        let mut prev = f64::INFINITY;
        for i in 1..400 {
            let y = 2.0 * i as f64 / 400.0;
            let x = invert_erfc_numeric(y).unwrap();
            assert!(x < prev);
            prev = x;
        }
    }

    #[test]
    fn deep_tail_in_log_space() {
        // ln y = -800 is far below the smallest double
        let x = inverse_erfc_from_log(-800.0);
        assert!((ln_erfc(x) + 800.0).abs() < 1e-12);
    }

    #[test]
    fn x_of_t_behaviour() {
        assert!(x_of_t(LN_2).unwrap().abs() < 1e-15);
        let small = x_of_t(1e-6).unwrap();
        let lead = (-(1e-6f64).ln()).sqrt();
        assert!((small - lead).abs() <= 0.1 * lead, "{small} vs {lead}");
        let large = x_of_t(100.0).unwrap();
        assert!(large < 0.0);
        assert!((large.abs() - 10.0).abs() <= 0.1 * 10.0, "{large}");
        // consistency with the defining relation
        for &t in &[1e-300, 1e-8, 0.3, 2.0, 50.0, 600.0] {
            let x = x_of_t(t).unwrap();
            if x > 0.0 {
                let lhs = ln_erfc(x);
                let rhs = LN_2 + (-(-t).exp_m1()).ln();
                assert!((lhs - rhs).abs() <= 1e-13 * rhs.abs().max(1.0), "t = {t}");
            } else {
                let lhs = ln_erfc(-x);
                assert!((lhs - (LN_2 - t)).abs() <= 1e-13 * t.max(1.0), "t = {t}");
            }
        }
    }

    #[test]
    fn trend_towards_asymptotes() {
        // x(t)/√(−log t) → 1 as t → 0 and x(t)/√t → −1 as t → ∞, slowly
        let near: Vec<f64> = [1e-4, 1e-16, 1e-64, 1e-256]
            .iter()
            .map(|&t: &f64| (x_of_t(t).unwrap() / (-t.ln()).sqrt() - 1.0).abs())
            .collect();
        assert!(near.windows(2).all(|w| w[1] < w[0]), "{near:?}");
        let far: Vec<f64> = [10.0, 100.0, 1e3, 1e4]
            .iter()
            .map(|&t: &f64| (x_of_t(t).unwrap() / t.sqrt() + 1.0).abs())
            .collect();
        assert!(far.windows(2).all(|w| w[1] < w[0]), "{far:?}");
    }
}
