//! Scalar abstraction for terminating hypergeometric sums.
//!
//! The terminating series at unit argument are finite rational expressions of
//! their parameters, so the same generic code runs in three instantiations:
//! fast `f64`/`f32`, double-word [`Dd`] for cancellation-prone sums, and exact
//! [`BigRational`] when bit-for-bit identities are being verified.

use num::{BigInt, BigRational, FromPrimitive, Signed, ToPrimitive, Zero};

use crate::dd::Dd;
use crate::real::Real;

pub trait RingScalar:
    Clone
    + PartialEq
    + PartialOrd
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn is_zero_val(&self) -> bool;
    fn abs_val(&self) -> Self;
    /// Exact small-integer view, used for pole detection in terminating sums
    /// and for extracting the termination order from a `-n` parameter.
    fn as_exact_int(&self) -> Option<i64>;
    /// True when the value is numerically negligible (exactly zero for exact
    /// scalars). Used only in debug balance checks.
    fn is_negligible(&self) -> bool;
    /// Lossy `f64` view for diagnostics.
    fn to_f64_lossy(&self) -> f64;
}

macro_rules! impl_ring_float {
    ($t:ty) => {
        impl RingScalar for $t {
            #[inline]
            fn zero() -> Self {
                0.0
            }
            #[inline]
            fn one() -> Self {
                1.0
            }
            #[inline]
            fn from_int(v: i64) -> Self {
                v as $t
            }
            #[inline]
            fn is_zero_val(&self) -> bool {
                *self == 0.0
            }
            #[inline]
            fn abs_val(&self) -> Self {
                (*self).abs()
            }
            fn as_exact_int(&self) -> Option<i64> {
                if self.fract() == 0.0 && self.abs() < 9e15 as $t {
                    Some(*self as i64)
                } else {
                    None
                }
            }
            fn is_negligible(&self) -> bool {
                self.abs() < 1e-9 as $t
            }
            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }
        }
    };
}

impl_ring_float!(f64);
impl_ring_float!(f32);

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DdScalar<R: Real>(pub Dd<R>);

impl<R: Real> std::ops::Add for DdScalar<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DdScalar(self.0.add(rhs.0))
    }
}
impl<R: Real> std::ops::Sub for DdScalar<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DdScalar(self.0.sub(rhs.0))
    }
}
impl<R: Real> std::ops::Mul for DdScalar<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        DdScalar(self.0.mul(rhs.0))
    }
}
impl<R: Real> std::ops::Div for DdScalar<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        DdScalar(self.0.div(rhs.0))
    }
}
impl<R: Real> std::ops::Neg for DdScalar<R> {
    type Output = Self;
    fn neg(self) -> Self {
        DdScalar(self.0.neg())
    }
}

impl<R: Real> RingScalar for DdScalar<R> {
    fn zero() -> Self {
        DdScalar(Dd::zero())
    }
    fn one() -> Self {
        DdScalar(Dd::one())
    }
    fn from_int(v: i64) -> Self {
        DdScalar(Dd::from_real(R::lit(v as f64)))
    }
    fn is_zero_val(&self) -> bool {
        self.0.is_zero()
    }
    fn abs_val(&self) -> Self {
        DdScalar(self.0.abs())
    }
    fn as_exact_int(&self) -> Option<i64> {
        if !self.0.lo.is_zero() {
            return None;
        }
        self.0.hi.as_f64().as_exact_int()
    }
    fn is_negligible(&self) -> bool {
        self.0.hi.abs() < R::lit(1e-9)
    }
    fn to_f64_lossy(&self) -> f64 {
        self.0.hi.as_f64() + self.0.lo.as_f64()
    }
}

impl RingScalar for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as num::One>::one()
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero_val(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_val(&self) -> Self {
        Signed::abs(self)
    }
    fn as_exact_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
    fn is_negligible(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Exact rational image of a finite `f64` (every finite double is dyadic).
pub fn rational_from_f64(v: f64) -> BigRational {
    BigRational::from_f64(v).expect("finite float")
}
