use proptest::prelude::*;
use std::f64::consts::PI;
use tricomi_core::airfoil::{
    accelerated_residual_term, j_accelerated, j_pv_oracle, j_series, plain_series_term, sigma,
    AirfoilQuery, SigmaMethod,
};

const TOL: f64 = 1e-11;

fn q(n: u32, a: f64, mu: f64) -> AirfoilQuery {
    AirfoilQuery::new(n, a, mu).unwrap()
}

#[test]
fn n1_station_03_quarter_power() {
    let query = q(1, 0.3, 0.25);
    let pv = j_pv_oracle(&query, 1e-12).unwrap();
    assert!(pv.converged);
    assert!((j_series(&query, TOL).unwrap() - pv.value).abs() < 1e-8);
    assert!((j_accelerated(&query, TOL).unwrap() - pv.value).abs() < 1e-8);
}

#[test]
fn near_endpoint_exponent() {
    for n in 0..=2 {
        for a in [0.1, 0.5, 0.9] {
            let query = q(n, a, 0.95);
            let s = j_series(&query, 1e-9).unwrap();
            let acc = j_accelerated(&query, 1e-9).unwrap();
            let pv = j_pv_oracle(&query, 1e-10).unwrap().value;
            let scale = s.abs().max(1.0);
            assert!((s - pv).abs() < 1e-6 * scale, "n={n} a={a}: {s} vs {pv}");
            assert!((acc - s).abs() < 1e-6 * scale, "n={n} a={a}: {acc} vs {s}");
        }
    }
}

/// Least-squares slope of log|t_r| against log r over a geometric grid.
fn log_log_slope(term: impl Fn(usize) -> f64, lo: usize, hi: usize) -> f64 {
    let mut pts = Vec::new();
    let mut r = lo as f64;
    while r <= hi as f64 {
        let ri = r.round() as usize;
        pts.push(((ri as f64).ln(), term(ri).abs().ln()));
        r *= 1.25;
    }
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let (mx, my) = (sx / n, sy / n);
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    num / den
}

#[test]
fn tail_exponents() {
    let mu = 0.25;
    let query = q(0, 0.5, mu);
    let plain = log_log_slope(|r| plain_series_term(&query, r).unwrap(), 100, 10_000);
    let fast = log_log_slope(|r| accelerated_residual_term(&query, r).unwrap(), 100, 10_000);
    assert!((plain - (mu - 2.0)).abs() < 0.3, "{plain}");
    assert!((fast - (mu - 5.0)).abs() < 0.3, "{fast}");
}

#[test]
fn sigma_series_at_half() {
    let d = sigma(1, 0.5, SigmaMethod::DirectSum).unwrap();
    assert!((d - 1.0 / 3.0).abs() < 1e-9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_routes_even_in_station(n in 0u32..4, a in 0.01f64..0.95, mu in -1.0f64..0.9) {
        let query = q(n, a, mu);
        prop_assert_eq!(j_series(&query, 1e-10).unwrap(), j_series(&query.mirrored(), 1e-10).unwrap());
        prop_assert_eq!(
            j_accelerated(&query, 1e-10).unwrap(),
            j_accelerated(&query.mirrored(), 1e-10).unwrap()
        );
    }

    #[test]
    fn accelerated_matches_plain(n in 0u32..4, a in 0.01f64..0.95, mu in -1.0f64..0.9) {
        let query = q(n, a, mu);
        let s = j_series(&query, 1e-10).unwrap();
        let acc = j_accelerated(&query, 1e-10).unwrap();
        prop_assert!((s - acc).abs() <= 2e-10 * s.abs().max(1.0), "{} vs {}", s, acc);
    }

    #[test]
    fn elliptic_case_independent_of_station(a in -0.98f64..0.98) {
        let query = q(0, a, 0.5);
        prop_assert!((j_series(&query, 1e-12).unwrap() - PI).abs() < 1e-10);
    }
}
