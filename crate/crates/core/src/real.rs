//! Floating-point scalar abstraction.
//!
//! All numerical code in this crate is generic over [`Real`], which bundles the
//! `num-traits` float traits with the handful of precision constants the series
//! and quadrature engines need. `f64` is the intended production scalar; `f32`
//! works with proportionally looser tolerances.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num::traits::{Float, FloatConst, FromPrimitive, NumCast};

/// Floating-point scalar: `f32` or `f64`.
///
/// `mul_add` must be a fused multiply-add (single rounding); the double-word
/// arithmetic in [`crate::dd`] relies on it.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumCast
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Relative term size below which a series term counts as converged.
    const SERIES_REL_TOL: Self;
    /// Absolute floor shielding the convergence test when the sum is near zero.
    const SERIES_ABS_FLOOR: Self;
    /// Max ratio of peak partial-sum magnitude to final value before the
    /// double-word accumulator is considered to have lost the digits.
    const CANCELLATION_GUARD: Self;
    /// Effective epsilon of the double-word accumulator (square of the
    /// working-precision epsilon, up to a small constant).
    const EXTENDED_EPS: Self;
    /// Hard cap on series terms.
    const SERIES_TERM_CAP: usize = 10_000;

    /// Shorthand for converting an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal conversion")
    }

    /// Lossy view as `f64` for diagnostics.
    #[inline]
    fn as_f64(self) -> f64 {
        NumCast::from(self).unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const SERIES_REL_TOL: f64 = 1e-17;
    const SERIES_ABS_FLOOR: f64 = 1e-300;
    const CANCELLATION_GUARD: f64 = 1e25;
    const EXTENDED_EPS: f64 = 4.93e-32; // 2^-104
}

impl Real for f32 {
    const SERIES_REL_TOL: f32 = 1e-8;
    const SERIES_ABS_FLOOR: f32 = 1e-35;
    const CANCELLATION_GUARD: f32 = 1e8;
    const EXTENDED_EPS: f32 = 3.6e-15; // 2^-48
}
