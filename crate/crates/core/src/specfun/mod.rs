//! Special functions on the real line.
//!
//! Error functions come from `libm` (the FreeBSD msun rational
//! approximations, split at |x| = 0.84375, 1.25 and 1/0.35); everything
//! else in the module is local.

#![allow(clippy::excessive_precision)]

mod gamma;
mod hyp2f1;

pub use gamma::{gamma, gamma_ratio, ln_gamma, pochhammer, recip_gamma};
pub use hyp2f1::{gauss_2f1, hyp2f1_pfaff, hyp2f1_series, hyp2f1_series_tail, Hyp2F1Args};

use std::f64::consts::PI;

/// Euler–Mascheroni constant, γ = lim (H_n − log n).
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082402431;

/// Apéry's constant, ζ(3) = Σ_{k≥1} k⁻³.
pub const ZETA3: f64 = 1.202056903159594285399738161511449991;

/// √π
pub const SQRT_PI: f64 = 1.772453850905516027298167483341145182;

/// Below this point `ln_erfc` uses `ln(erfc x)` directly; above it the
/// continued fraction for the scaled complement takes over.
const ERFCX_CF_THRESHOLD: f64 = 25.0;

pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Scaled complement `e^{x²} erfc(x)`, finite for every x ≥ 0.
pub fn erfcx(x: f64) -> f64 {
    if x < ERFCX_CF_THRESHOLD {
        (x * x).exp() * erfc(x)
    } else {
        erfcx_continued_fraction(x)
    }
}

/// `ln(erfc x)` without underflow for large positive x.
pub fn ln_erfc(x: f64) -> f64 {
    if x < 0.5 {
        (-erf(x)).ln_1p()
    } else if x < ERFCX_CF_THRESHOLD {
        erfc(x).ln()
    } else {
        -x * x + erfcx_continued_fraction(x).ln()
    }
}

/// Derivative of [`ln_erfc`]: `-(2/√π) e^{-x²} / erfc(x)`.
pub fn ln_erfc_derivative(x: f64) -> f64 {
    let scaled = if x < 0.0 {
        erfc(x) * (x * x).exp()
    } else {
        erfcx(x)
    };
    -2.0 / (SQRT_PI * scaled)
}

/// `e^{x²} erfc x = 1 / (√π (x + ½/(x + 1/(x + (3/2)/(x + …)))))`,
/// evaluated with the modified Lentz algorithm. Only used for large x where
/// a handful of partial denominators suffice.
fn erfcx_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = f;
    let mut d = 0.0;
    for j in 1..500 {
        let a_j = 0.5 * j as f64;
        d = x + a_j * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = x + a_j / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    1.0 / (SQRT_PI * f)
}

/// `sin(πx)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round();
    // r ∈ [-1, 1]
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    let folded = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * folded).sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ulps(a: f64, b: f64) -> f64 {
        if a == b {
            return 0.0;
        }
        (a - b).abs() / (f64::EPSILON * a.abs().max(b.abs()))
    }

    #[test]
    fn erf_trivial_values() {
        assert_eq!(erf(0.0), 0.0);
        assert_eq!(erfc(0.0), 1.0);
    }

    #[test]
    fn erf_at_one() {
        // tanh-sinh value of (2/√π)∫₀¹ e^{-t²} dt, see tests/specfun.rs
        assert!((erf(1.0) - 0.8427007929497149).abs() < 2e-16);
    }

    #[test]
    fn erfc_far_tail_underflows_to_zero() {
        assert_eq!(erfc(30.0), 0.0);
        assert!(erfc(26.0) > 0.0);
    }

    #[test]
    fn ln_erfc_is_continuous_across_branches() {
        for &x in &[0.5, ERFCX_CF_THRESHOLD] {
            let lo = ln_erfc(x - 1e-12);
            let hi = ln_erfc(x + 1e-12);
            let slope = ln_erfc_derivative(x);
            assert!(
                ((hi - lo) - 2e-12 * slope).abs() < 1e-12 * lo.abs().max(1.0),
                "jump at {x}: {lo} {hi}"
            );
        }
        // continued fraction agrees with the direct form where both are valid
        for &x in &[5.0, 10.0, 20.0, 24.9] {
            let direct = erfc(x).ln();
            let cf = -x * x + erfcx_continued_fraction(x).ln();
            assert!((direct - cf).abs() < 1e-13 * direct.abs(), "x = {x}");
        }
    }

    #[test]
    fn ln_erfc_large_argument_asymptotics() {
        // erfc x ~ e^{-x²}/(√π x)(1 - 1/(2x²) + 3/(4x⁴))
        let x: f64 = 100.0;
        let expected = -x * x - (SQRT_PI * x).ln() + (1.0 - 0.5 / (x * x) + 0.75 / x.powi(4)).ln();
        assert!((ln_erfc(x) - expected).abs() < 1e-12 * expected.abs());
    }

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -5..=5 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-2.5) + 1.0).abs() < 1e-16);
        assert!((sin_pi(1.25) - (1.25 * PI).sin()).abs() < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn erf_is_odd(x in -6.0f64..6.0) {
            prop_assert!(ulps(erf(-x), -erf(x)) <= 2.0);
        }

        #[test]
        fn erfc_reflection(x in -6.0f64..6.0) {
            prop_assert!(ulps(erfc(x) + erfc(-x), 2.0) <= 2.0);
        }

        #[test]
        fn erfc_is_complement(x in -6.0f64..6.0) {
            prop_assert!((erfc(x) - (1.0 - erf(x))).abs() <= 2.0 * f64::EPSILON);
        }
    }
}
