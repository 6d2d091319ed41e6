use crate::error::{Error, Result};

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 500;

/// Consecutive small terms required before a series is declared converged.
const CONFIRMATIONS: usize = 3;

#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesSum {
    pub value: f64,
    pub max_term: f64,
}

/// Sums `term(0) + term(1) + ...` until `|term_k| < tol (1 + |partial sum|)`
/// holds for three consecutive k.
pub(crate) fn sum_series(mut term: impl FnMut(usize) -> f64, tol: f64) -> Result<SeriesSum> {
    let mut sum = 0.0;
    let mut max_term: f64 = 0.0;
    let mut small_run = 0;
    let mut last = 0.0;
    for k in 0..MAX_TERMS {
        let t = term(k);
        if !t.is_finite() {
            return Err(Error::NonConvergence {
                terms: k + 1,
                last_term: t,
                partial_sum: sum,
            });
        }
        sum += t;
        last = t;
        max_term = max_term.max(t.abs());
        if t.abs() < tol * (1.0 + sum.abs()) {
            small_run += 1;
            if small_run == CONFIRMATIONS {
                return Ok(SeriesSum { value: sum, max_term });
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_TERMS,
        last_term: last,
        partial_sum: sum,
    })
}

/// Fails when cancellation leaves fewer than about eight significant digits
/// (relative to `max(|sum|, 1)`).
pub(crate) fn check_conditioning(sum: &SeriesSum) -> Result<f64> {
    if sum.max_term > 1e8 * sum.value.abs().max(1.0) {
        return Err(Error::IllConditioned {
            max_term: sum.max_term,
            sum: sum.value,
        });
    }
    Ok(sum.value)
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(crate::error::param(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}
