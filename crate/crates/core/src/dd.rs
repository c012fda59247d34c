//! Double-word ("double-double") arithmetic.
//!
//! A value is stored as an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`,
//! giving roughly twice the working precision. The alternating hypergeometric
//! series at argument `-x^2/4` suffer catastrophic cancellation (peak partial
//! sums can exceed the result by 15+ orders of magnitude inside the documented
//! evaluation envelope), so the series engines accumulate in this type.
//!
//! The error-free transformations are the classical ones of Dekker and Knuth;
//! `two_prod` uses a fused multiply-add.

use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd<R: Real> {
    pub hi: R,
    pub lo: R,
}

/// Error-free sum: `a + b = s + e` exactly.
#[inline]
fn two_sum<R: Real>(a: R, b: R) -> (R, R) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| >= |b|`.
#[inline]
fn quick_two_sum<R: Real>(a: R, b: R) -> (R, R) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via FMA: `a * b = p + e` exactly.
#[inline]
fn two_prod<R: Real>(a: R, b: R) -> (R, R) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl<R: Real> Dd<R> {
    #[inline]
    pub fn new(hi: R, lo: R) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_real(v: R) -> Self {
        Dd { hi: v, lo: R::zero() }
    }

    #[inline]
    pub fn zero() -> Self {
        Dd { hi: R::zero(), lo: R::zero() }
    }

    #[inline]
    pub fn one() -> Self {
        Dd { hi: R::one(), lo: R::zero() }
    }

    /// Exact double-word value of `-(x*x)/4`.
    #[inline]
    pub fn neg_quarter_sq(x: R) -> Self {
        let (p, e) = two_prod(x, x);
        let quarter = R::lit(-0.25);
        // division by 4 is exact
        Dd { hi: p * quarter, lo: e * quarter }
    }

    #[inline]
    pub fn value(self) -> R {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < R::zero() || (self.hi == R::zero() && self.lo < R::zero()) {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn neg(self) -> Self {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn sub(self, rhs: Self) -> Self {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn add_real(self, rhs: R) -> Self {
        self.add(Dd::from_real(rhs))
    }

    pub fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (s, t) = quick_two_sum(p, e);
        Dd { hi: s, lo: t }
    }

    #[inline]
    pub fn mul_real(self, rhs: R) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        let e = e + self.lo * rhs;
        let (s, t) = quick_two_sum(p, e);
        Dd { hi: s, lo: t }
    }

    pub fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_real(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_real(q2));
        let q3 = r.hi / rhs.hi;
        let (s, t) = quick_two_sum(q1, q2);
        Dd::new(s, t + q3)
    }

    #[inline]
    pub fn div_real(self, rhs: R) -> Self {
        self.div(Dd::from_real(rhs))
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == R::zero() && self.lo == R::zero()
    }
}

impl<R: Real> PartialOrd for Dd<R> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(std::cmp::Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}
