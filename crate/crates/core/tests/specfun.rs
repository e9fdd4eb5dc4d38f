use std::f64::consts::PI;
use tricomi_core::quad::integrate_finite;
use tricomi_core::specfun::{erf, erfc, gamma, gauss_2f1, recip_gamma, Hyp2F1Args, SQRT_PI};

#[test]
fn erf_against_quadrature() {
    for x in [0.1, 0.5, 1.0, 2.0, 3.5] {
        let q = integrate_finite(|t: f64| (-t * t).exp(), 0.0, x, 1e-15).unwrap();
        let via_quad = 2.0 / SQRT_PI * q.value;
        assert!((erf(x) - via_quad).abs() < 1e-14, "x={x}");
        assert!((erfc(x) - (1.0 - via_quad)).abs() < 1e-14, "x={x}");
    }
}

#[test]
fn reflection_formula() {
    for x in [0.1, 0.3, 0.7, 1.3, 2.6] {
        let lhs = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        let rhs = PI / (PI * x).sin();
        assert!((lhs - rhs).abs() < 1e-13 * rhs.abs(), "x={x}");
    }
    assert_eq!(recip_gamma(-3.0), 0.0);
}

#[test]
fn arcsine_series() {
    // ₂F₁(½, ½; 3/2; z²) = asin z / z
    for z in [0.2f64, 0.6, 0.95] {
        let v = gauss_2f1(Hyp2F1Args::new(0.5, 0.5, 1.5, z * z), 1e-15).unwrap();
        assert!((v - z.asin() / z).abs() < 1e-13, "z={z}");
    }
}
