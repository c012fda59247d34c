//! Bessel function of the first kind for real order `nu > -1`.
//!
//! Small and moderate arguments go through the 0F1 power series (double-word
//! accumulation keeps full accuracy to `x ~ 60`); large arguments use the
//! Hankel asymptotic expansion with adaptively truncated `P`/`Q` sums.

use crate::error::{Error, Result};
use crate::real::Real;

use super::gamma::{gamma, ln_gamma};
use super::series::pfq_neg_quarter;

/// `J_nu(x) = (x/2)^nu / Gamma(nu+1) * 0F1(nu+1; -x^2/4)` for `nu > -1`, `x >= 0`.
pub fn bessel_j<R: Real>(nu: R, x: R) -> Result<R> {
    if !(nu > R::lit(-1.0)) {
        return Err(Error::Domain(format!("bessel_j needs nu > -1, got {nu}")));
    }
    if !(x >= R::zero()) {
        return Err(Error::Domain(format!("bessel_j needs x >= 0, got {x}")));
    }
    if x == R::zero() {
        return Ok(if nu == R::zero() {
            R::one()
        } else if nu > R::zero() {
            R::zero()
        } else {
            R::infinity()
        });
    }
    // The asymptotic branch needs x comfortably past both the fixed switch
    // point and the transition region x ~ nu.
    if x >= R::lit(30.0) && x >= nu * nu * R::lit(0.5) {
        Ok(hankel_j(nu, x))
    } else {
        series_j(nu, x)
    }
}

pub(crate) fn series_j<R: Real>(nu: R, x: R) -> Result<R> {
    let half_x = x * R::lit(0.5);
    let s = pfq_neg_quarter(&[], &[nu + R::one()], x, R::SERIES_TERM_CAP)?;
    // prefactor (x/2)^nu / Gamma(nu+1), in log form when the power is extreme
    let log_scale = nu * half_x.ln();
    let pre = if log_scale.abs() < R::lit(40.0) {
        half_x.powf(nu) / gamma(nu + R::one())
    } else {
        (log_scale - ln_gamma(nu + R::one())).exp()
    };
    Ok(pre * s.value)
}

/// Hankel expansion: `J_nu(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)]` with
/// `chi = x - (nu/2 + 1/4) pi`. The `P`/`Q` series are truncated at their
/// smallest term.
pub(crate) fn hankel_j<R: Real>(nu: R, x: R) -> R {
    let mu = R::lit(4.0) * nu * nu;
    let inv8x = R::one() / (R::lit(8.0) * x);
    let mut p = R::one();
    let mut q = R::zero();
    // a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! (8x)^k), signs folded in below
    let mut ak = R::one();
    let mut prev_mag = R::infinity();
    for k in 1..40u32 {
        let odd = R::lit((2 * k - 1) as f64);
        ak = ak * (mu - odd * odd) * inv8x / R::lit(k as f64);
        let mag = ak.abs();
        if mag >= prev_mag || mag < R::epsilon() * R::epsilon() {
            break;
        }
        prev_mag = mag;
        // k odd -> Q gets a_k, k even -> P; signs alternate every other term
        match k % 4 {
            0 => p += ak,
            1 => q += ak,
            2 => p -= ak,
            _ => q -= ak,
        }
        if mag < R::lit(1e-18) {
            break;
        }
    }
    let chi = x - (nu * R::lit(0.5) + R::lit(0.25)) * R::PI();
    (R::lit(2.0) / (R::PI() * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}
