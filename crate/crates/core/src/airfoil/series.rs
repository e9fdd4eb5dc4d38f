//! Summation of slowly convergent series with algebraic term decay.

use crate::{Error, Result};

/// Hard cap on the number of summed terms.
pub const MAX_TERMS: usize = 1_000_000;

/// Partial sums are recorded at 64, 128, 256, … terms for extrapolation.
const FIRST_CHECKPOINT: usize = 64;

/// Columns of the Richardson table.
const MAX_COLUMNS: usize = 8;

/// Outcome of a series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    /// Number of terms actually evaluated.
    pub terms: usize,
    pub err_estimate: f64,
    pub converged: bool,
    /// True when the value comes from the extrapolation table rather than a
    /// plain partial sum.
    pub extrapolated: bool,
}

impl SeriesSum {
    pub fn into_value(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::convergence(format!(
                "series not converged after {} terms (estimate {:e})",
                self.terms, self.err_estimate
            )))
        }
    }
}

/// Sums `term(1) + term(2) + …` whose terms behave like `r^decay` with
/// `decay < -1`, stopping as soon as either rule is met:
///
/// * the current term times `1/(1 - ratio)` is below `tol`, the ratio taken
///   from the last two terms;
/// * at a dyadic checkpoint, successive diagonal entries of a Richardson table
///   built on the partial-sum error model `Σ_j d_j N^{decay + 1 - j}` differ by
///   less than `tol`.
///
/// An exactly zero term ends the series; every caller's terms carry a
/// Pochhammer factor that stays zero once it vanishes.
pub fn sum_algebraic<F>(decay: f64, tol: f64, mut term: F) -> Result<SeriesSum>
where
    F: FnMut(usize) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    if !(decay < -1.0) {
        return Err(Error::domain(format!("terms decaying like r^{decay} are not summable")));
    }
    let mut partial = Compensated::default();
    let mut previous = 0.0_f64;
    let mut table: Vec<Vec<f64>> = Vec::new();
    let mut best = f64::NAN;
    let mut err = f64::INFINITY;
    let mut checkpoint = FIRST_CHECKPOINT;
    for r in 1..=MAX_TERMS {
        let t = term(r)?;
        if !t.is_finite() {
            return Err(Error::convergence(format!("series term {r} is not finite")));
        }
        partial.add(t);
        let done = |value: f64, err_estimate: f64, extrapolated: bool| SeriesSum {
            value,
            terms: r,
            err_estimate,
            converged: true,
            extrapolated,
        };
        if t == 0.0 {
            return Ok(done(partial.value(), 0.0, false));
        }
        if r > 1 {
            let ratio = t / previous;
            if ratio > 0.0 && ratio < 1.0 {
                let tail = t.abs() / (1.0 - ratio);
                if tail < tol {
                    return Ok(done(partial.value(), tail, false));
                }
            }
        }
        previous = t;
        if r == checkpoint {
            checkpoint *= 2;
            let row = richardson_row(table.last(), partial.value(), decay);
            let estimate = *row.last().expect("row is never empty");
            table.push(row);
            if best.is_finite() {
                err = (estimate - best).abs();
                if err < tol * estimate.abs().max(1.0) {
                    return Ok(done(estimate, err, true));
                }
            }
            best = estimate;
        }
    }
    Ok(SeriesSum {
        value: if best.is_finite() { best } else { partial.value() },
        terms: MAX_TERMS,
        err_estimate: err,
        converged: false,
        extrapolated: best.is_finite(),
    })
}

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        self.carry += if self.sum.abs() >= x.abs() { (self.sum - t) + x } else { (x - t) + self.sum };
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Next row of the table for partial sums taken at doubling term counts.
fn richardson_row(prev: Option<&Vec<f64>>, partial: f64, decay: f64) -> Vec<f64> {
    let mut row = vec![partial];
    if let Some(prev) = prev {
        for j in 0..prev.len().min(MAX_COLUMNS - 1) {
            let exponent = decay + 1.0 - j as f64;
            let factor = 2f64.powf(-exponent) - 1.0;
            let lower = row[j];
            row.push(lower + (lower - prev[j]) / factor);
        }
    }
    row
}
