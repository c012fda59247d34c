//! Series engines for generalized hypergeometric functions.
//!
//! `pfq_neg_quarter` sums pFq at argument `-x^2/4` with a double-word
//! accumulator and a cancellation guard; `terminating_sum_unit` evaluates
//! terminating series at unit argument over any [`RingScalar`].

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::real::Real;
use crate::ring::RingScalar;

pub(crate) struct RawSeries<R: Real> {
    pub value: R,
    pub err_est: R,
    pub terms: usize,
}

/// Sum of `prod (num_i)_k / prod (den_j)_k * z^k / k!` with `z = -x^2/4`.
///
/// Terms and partial sums are carried in double-word precision; the term
/// recurrence multiplies by exactly lifted factors `(p + k)`, so each term has
/// ~1e-31 relative accuracy in `f64` mode. Stops when three consecutive terms
/// pass the relative-tolerance test. Errors with `PrecisionLoss` when the peak
/// partial sum exceeds `CANCELLATION_GUARD` times the result.
pub(crate) fn pfq_neg_quarter<R: Real>(num: &[R], den: &[R], x: R, cap: usize) -> Result<RawSeries<R>> {
    let z = Dd::neg_quarter_sq(x);
    let mut term = Dd::<R>::one();
    let mut sum = Dd::<R>::one();
    let mut max_partial = R::one();
    let mut small_run = 0usize;
    let mut last_term_mag = R::zero();
    let mut terms = 1usize;

    for k in 0..cap {
        let k_r = R::lit(k as f64);
        let mut t = term.mul(z);
        for &p in num {
            t = t.mul(Dd::from_real(p).add_real(k_r));
        }
        for &q in den {
            t = t.div(Dd::from_real(q).add_real(k_r));
        }
        t = t.div_real(k_r + R::one());
        term = t;
        sum = sum.add(term);
        terms += 1;

        let mag = sum.hi.abs();
        if mag > max_partial {
            max_partial = mag;
        }
        last_term_mag = term.hi.abs();
        if last_term_mag < R::SERIES_REL_TOL * mag + R::SERIES_ABS_FLOOR {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
        if term.hi.is_zero() && term.lo.is_zero() {
            break;
        }
        if k + 1 == cap {
            return Err(Error::NoConvergence { terms });
        }
    }

    let value = sum.value();
    let rounding = max_partial * R::EXTENDED_EPS * R::lit(terms as f64);
    let err_est = rounding.max(last_term_mag).max(value.abs() * R::epsilon());
    if max_partial > R::CANCELLATION_GUARD * value.abs().max(R::SERIES_ABS_FLOOR) {
        return Err(Error::PrecisionLoss {
            max_partial: max_partial.as_f64(),
            err_est: err_est.as_f64(),
        });
    }
    Ok(RawSeries { value, err_est, terms })
}

/// Terminating hypergeometric series at unit argument:
/// `sum_{k=0}^{n} prod (num_i)_k / prod (den_j)_k / k!`.
///
/// The first numerator must be an exact non-positive integer `-n`. Fails with
/// `Pole` if a denominator Pochhammer vanishes before the series terminates.
pub fn terminating_sum_unit<T: RingScalar>(num: &[T], den: &[T]) -> Result<T> {
    let n = match num.first().and_then(|v| v.as_exact_int()) {
        Some(v) if v <= 0 => (-v) as usize,
        _ => {
            return Err(Error::Domain(
                "terminating series needs a leading non-positive integer numerator".into(),
            ))
        }
    };
    for d in den {
        if let Some(v) = d.as_exact_int() {
            if -(n as i64) < v && v <= 0 {
                return Err(Error::Pole {
                    param: d.to_f64_lossy(),
                    terms: n,
                });
            }
        }
    }
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..n {
        let k_t = T::from_int(k as i64);
        for p in num {
            term = term * (p.clone() + k_t.clone());
        }
        for q in den {
            term = term / (q.clone() + k_t.clone());
        }
        term = term / T::from_int(k as i64 + 1);
        sum = sum + term.clone();
        if term.is_zero_val() {
            break;
        }
    }
    Ok(sum)
}
