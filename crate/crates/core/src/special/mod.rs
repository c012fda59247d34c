//! Special functions: gamma/beta/Pochhammer primitives, Bessel `J`, and the
//! generalized hypergeometric series `0F1`, `1F2`, `2F3` at argument `-x^2/4`.

mod bessel;
mod gamma;
pub(crate) mod series;

pub use bessel::bessel_j;
pub use gamma::{beta_fn, gamma, ln_gamma, pochhammer};
pub use series::terminating_sum_unit;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::ring::RingScalar;
use series::pfq_neg_quarter;

/// Parameters of `1F2(a; b, c; -x^2/4)`, all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneF2Params<R: Real> {
    pub a: R,
    pub b: R,
    pub c: R,
}

impl<R: Real> OneF2Params<R> {
    pub fn new(a: R, b: R, c: R) -> Result<Self> {
        if !(a > R::zero() && b > R::zero() && c > R::zero()) {
            return Err(Error::Domain(format!(
                "1F2 parameters must be positive, got a = {a}, b = {b}, c = {c}"
            )));
        }
        Ok(OneF2Params { a, b, c })
    }
}

/// Parameters of `2F3(a1, a2; b1, b2, b3; -x^2/4)`; denominators strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoF3Params<R: Real> {
    pub a1: R,
    pub a2: R,
    pub b1: R,
    pub b2: R,
    pub b3: R,
}

impl<R: Real> TwoF3Params<R> {
    pub fn new(a1: R, a2: R, b1: R, b2: R, b3: R) -> Result<Self> {
        if !(b1 > R::zero() && b2 > R::zero() && b3 > R::zero()) {
            return Err(Error::Domain(format!(
                "2F3 denominator parameters must be positive, got {b1}, {b2}, {b3}"
            )));
        }
        Ok(TwoF3Params { a1, a2, b1, b2, b3 })
    }
}

/// Outcome of a convergent series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult<R: Real> {
    pub value: R,
    pub abs_err_est: R,
    pub terms_used: usize,
}

/// `0F1(c; -x^2/4)` for `c > 0`. This equals the normalized Bessel function
/// `Gamma(c) (x/2)^{1-c} J_{c-1}(x)`.
pub fn hyper_0f1<R: Real>(c: R, x: R) -> Result<EvalResult<R>> {
    if !(c > R::zero()) {
        return Err(Error::Domain(format!("0F1 needs c > 0, got {c}")));
    }
    if !(x >= R::zero()) {
        return Err(Error::Domain(format!("0F1 evaluated at x = {x} < 0")));
    }
    let s = pfq_neg_quarter(&[], &[c], x, R::SERIES_TERM_CAP)?;
    Ok(EvalResult { value: s.value, abs_err_est: s.err_est, terms_used: s.terms })
}

/// `1F2(a; b, c; -x^2/4)` by direct series with double-word accumulation.
pub fn hyper_1f2<R: Real>(p: &OneF2Params<R>, x: R) -> Result<EvalResult<R>> {
    if !(x >= R::zero()) {
        return Err(Error::Domain(format!("1F2 evaluated at x = {x} < 0")));
    }
    let s = pfq_neg_quarter(&[p.a], &[p.b, p.c], x, R::SERIES_TERM_CAP)?;
    Ok(EvalResult { value: s.value, abs_err_est: s.err_est, terms_used: s.terms })
}

/// `2F3(a1, a2; b1, b2, b3; -x^2/4)` by direct series.
pub fn hyper_2f3<R: Real>(p: &TwoF3Params<R>, x: R) -> Result<EvalResult<R>> {
    if !(x >= R::zero()) {
        return Err(Error::Domain(format!("2F3 evaluated at x = {x} < 0")));
    }
    let s = pfq_neg_quarter(&[p.a1, p.a2], &[p.b1, p.b2, p.b3], x, R::SERIES_TERM_CAP)?;
    Ok(EvalResult { value: s.value, abs_err_est: s.err_est, terms_used: s.terms })
}

/// Terminating pFq at unit argument. The first numerator must be `-n` for some
/// integer `n >= 0`; denominators must not hit a non-positive integer before
/// the series ends.
pub fn terminating_hyper_unit<T: RingScalar>(numerators: &[T], denominators: &[T]) -> Result<T> {
    terminating_sum_unit(numerators, denominators)
}

/// Decay exponent of the oscillatory asymptotic term: `sigma = b + c - a - 1/2`.
pub fn sigma_exponent<R: Real>(p: &OneF2Params<R>) -> R {
    p.b + p.c - p.a - R::lit(0.5)
}

fn is_nonpositive_integer<R: Real>(v: R) -> bool {
    v <= R::zero() && v.fract() == R::zero()
}

/// Two-term large-`x` asymptotic value of `1F2(a; b, c; -x^2/4)` (Luke):
///
/// ```text
/// G(b)G(c)/(G(b-a)G(c-a)) (x/2)^{-2a}
///   + G(b)G(c)/(sqrt(pi) G(a)) (x/2)^{-sigma} cos(x - pi sigma / 2)
/// ```
///
/// The algebraic term dominates when `sigma > 2a`; when `b + c < 3a + 1/2` the
/// oscillatory term eventually dominates and forces sign changes.
pub fn asymptotic_1f2<R: Real>(p: &OneF2Params<R>, x: R) -> Result<R> {
    if !(x > R::zero()) {
        return Err(Error::Domain(format!("asymptotic form needs x > 0, got {x}")));
    }
    if is_nonpositive_integer(p.b - p.a) || is_nonpositive_integer(p.c - p.a) {
        return Err(Error::Domain(format!(
            "gamma pole: b - a = {} or c - a = {} is a non-positive integer",
            p.b - p.a,
            p.c - p.a
        )));
    }
    let sigma = sigma_exponent(p);
    let half_x = x * R::lit(0.5);
    let gbc = gamma(p.b) * gamma(p.c);
    let algebraic = gbc / (gamma(p.b - p.a) * gamma(p.c - p.a)) * half_x.powf(-(p.a + p.a));
    let oscillatory = gbc / (R::PI().sqrt() * gamma(p.a))
        * half_x.powf(-sigma)
        * (x - R::PI() * sigma * R::lit(0.5)).cos();
    Ok(algebraic + oscillatory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn hyper_0f1_trivial_and_sinc() {
        assert_eq!(hyper_0f1(2.2_f64, 0.0).unwrap().value, 1.0);
        // 0F1(3/2; -x^2/4) = sin(x)/x; at x = pi/2 this is 2/pi
        let v = hyper_0f1(1.5_f64, PI / 2.0).unwrap().value;
        assert!((v - 2.0 / PI).abs() < 1e-15, "got {v}");
        assert!(hyper_0f1(1.5_f64, PI).unwrap().value.abs() < 1e-16);
        for &x in &[0.3, 2.0, 11.0, 25.0] {
            let v = hyper_0f1(1.5_f64, x).unwrap().value;
            assert!((v - x.sin() / x).abs() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn hyper_0f1_matches_bessel() {
        // 0F1(2; -x^2/4) = J_1(x) * Gamma(2) * (x/2)^{-1} at x = 1
        let v = hyper_0f1(2.0_f64, 1.0).unwrap().value;
        let want = bessel_j(1.0, 1.0).unwrap() * 2.0;
        assert!((v - want).abs() < 1e-14);
    }

    #[test]
    fn hyper_1f2_values() {
        let p = OneF2Params::new(0.5_f64, 1.0, 1.0).unwrap();
        assert_eq!(hyper_1f2(&p, 0.0).unwrap().value, 1.0);
        // 1F2(a; a+1/2, 2a; -x^2/4) = [J-normalized]^2; at a = 1/2 it is J_0(x/2)^2
        let v = hyper_1f2(&p, 2.0).unwrap().value;
        let j0_1 = bessel_j(0.0, 1.0).unwrap();
        assert!((v - j0_1 * j0_1).abs() < 1e-14);
        // mpmath: J0(1)^2 = 0.5855274995136640243808
        assert!((v - 0.5855274995136640).abs() < 1e-13);

        // Phi-kernel instance at alpha = beta = 1/2: 1F2(1; 3/2, 2; -x^2/4),
        // equals [sin(x/2)/(x/2)]^2; 4/pi^2 at x = pi
        let p = OneF2Params::new(1.0_f64, 1.5, 2.0).unwrap();
        let v = hyper_1f2(&p, PI).unwrap().value;
        assert!((v - 4.0 / (PI * PI)).abs() < 1e-15);
    }

    #[test]
    fn hyper_1f2_deep_cancellation() {
        // mpmath: 1F2(2.5; 3, 5; -400) -- naive f64 summation loses every digit here
        let p = OneF2Params::new(2.5_f64, 3.0, 5.0).unwrap();
        let r = hyper_1f2(&p, 40.0).unwrap();
        assert!(
            (r.value - 1.028373965459789703570294e-5).abs() < 1e-16,
            "got {:e}",
            r.value
        );
        // mpmath: 1F2(1; 1.7, 1.8; -25)
        let p = OneF2Params::new(1.0_f64, 1.7, 1.8).unwrap();
        let r = hyper_1f2(&p, 10.0).unwrap();
        assert!((r.value - 0.03848768343147697981222623).abs() < 1e-15);
    }

    #[test]
    fn hyper_2f3_values() {
        let p = TwoF3Params::new(0.9_f64, 2.0, 1.1, 0.7, 3.0).unwrap();
        assert_eq!(hyper_2f3(&p, 0.0).unwrap().value, 1.0);
        // Omega at (a, b) = (1/2, 1), c = -1/2: [sin(x/2)/(x/2)]^2, 4/pi^2 at x = pi
        let p = TwoF3Params::new(0.5_f64, 1.0, 0.5, 1.5, 2.0).unwrap();
        let v = hyper_2f3(&p, PI).unwrap().value;
        assert!((v - 4.0 / (PI * PI)).abs() < 1e-15);
        // mpmath: 2F3(1.3, 0.7; 1.1, 2.2, 0.9; -25)
        let p = TwoF3Params::new(1.3_f64, 0.7, 1.1, 2.2, 0.9).unwrap();
        let v = hyper_2f3(&p, 10.0).unwrap().value;
        assert!((v - 0.03616476076947974755681135).abs() < 1e-15);
    }

    #[test]
    fn series_monotone_complete() {
        // increasing the term cap never moves the value by more than abs_err_est
        let p = OneF2Params::new(1.4_f64, 2.3, 0.9).unwrap();
        for &x in &[1.0, 8.0, 21.0, 39.0] {
            let r = hyper_1f2(&p, x).unwrap();
            let s = series::pfq_neg_quarter(&[p.a], &[p.b, p.c], x, 10 * r.terms_used).unwrap();
            assert!((s.value - r.value).abs() <= r.abs_err_est, "x = {x}");
        }
    }

    #[test]
    fn cancellation_guard_trips_far_outside_envelope() {
        let p = OneF2Params::new(2.0_f64, 3.0, 1.5).unwrap();
        match hyper_1f2(&p, 110.0) {
            Err(Error::PrecisionLoss { .. }) => {}
            other => panic!("expected precision-loss flag, got {other:?}"),
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(OneF2Params::new(0.0_f64, 1.0, 1.0).is_err());
        assert!(OneF2Params::new(1.0_f64, -0.5, 1.0).is_err());
        assert!(TwoF3Params::new(-1.0_f64, 2.0, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn asymptotic_three_point_trend() {
        // At (1, 2, 5/2) the correction series of both asymptotic terms
        // terminate, so the two-term form is exact up to roundoff
        // (mpmath truths below); genuine decay of the truncation error is
        // asserted at a nearby generic parameter point.
        let exact: [(f64, f64); 3] = [
            (20.0, 0.01431529106195427925921793),
            (40.0, 0.003680145641205061051219902),
            (80.0, 0.0009491471326631645530046579),
        ];
        let p = OneF2Params::new(1.0_f64, 2.0, 2.5).unwrap();
        for &(x, truth) in &exact {
            let asym = asymptotic_1f2(&p, x).unwrap();
            assert!((asym - truth).abs() / truth < 1e-12, "x = {x}");
        }
        // mpmath truths for 1F2(1.1; 2, 2.7; -x^2/4); the error is phase
        // modulated, so the far point is compared against both earlier ones
        let truths: [(f64, f64); 3] = [
            (20.0, 0.009596337563460857729083),
            (40.0, 0.002150963574682476291666),
            (80.0, 0.0004930589982261734498071),
        ];
        let p = OneF2Params::new(1.1_f64, 2.0, 2.7).unwrap();
        let rel: Vec<f64> = truths
            .iter()
            .map(|&(x, truth)| {
                (asymptotic_1f2(&p, x).unwrap() - truth).abs() / truth.abs()
            })
            .collect();
        assert!(rel[2] < rel[0] && rel[2] < rel[1], "no decay: {rel:?}");
        assert!(rel.iter().all(|&r| r < 1e-3), "{rel:?}");
        // within the series envelope the two routes agree
        let asym = asymptotic_1f2(&p, 40.0).unwrap();
        let series = hyper_1f2(&p, 40.0).unwrap().value;
        assert!((asym - series).abs() / series.abs() < 2e-3);
    }

    #[test]
    fn asymptotic_equal_decay_when_balanced() {
        // b + c = 3a + 1/2 makes sigma = 2a exactly
        let p = OneF2Params::new(1.0_f64, 1.7, 1.8).unwrap();
        assert_eq!(sigma_exponent(&p), 2.0);
    }

    #[test]
    fn asymptotic_oscillatory_dominates_below_newton_line() {
        // b + c < 3a + 1/2: at a phase point with cos = -1 the oscillatory term
        // outweighs the algebraic one and the function goes negative.
        // mpmath: 1F2(1; 1.2, 1.2; -x^2/4) = -0.03045... at x = pi*sigma/2 + 13pi
        let p = OneF2Params::new(1.0_f64, 1.2, 1.2).unwrap();
        let sigma = sigma_exponent(&p);
        let x = PI * sigma / 2.0 + 13.0 * PI;
        let asym = asymptotic_1f2(&p, x).unwrap();
        assert!(asym < 0.0);
        assert!((asym - (-0.030452342380307234272)).abs() < 2e-4);
    }

    #[test]
    fn asymptotic_gamma_pole_rejected() {
        // b - a = 0 is a gamma pole
        let p = OneF2Params::new(1.0_f64, 1.0, 2.5).unwrap();
        assert!(asymptotic_1f2(&p, 10.0).is_err());
    }

    #[test]
    fn f32_instantiation() {
        let v = hyper_0f1(1.5_f32, std::f32::consts::PI / 2.0).unwrap().value;
        assert!((v - 2.0 / std::f32::consts::PI).abs() < 1e-6, "got {v}");
        let p = OneF2Params::new(1.0_f32, 1.5, 2.0).unwrap();
        let v = hyper_1f2(&p, 3.0).unwrap().value;
        let sinc = (1.5_f32).sin() / 1.5;
        assert!((v - sinc * sinc).abs() < 1e-6);
    }

    #[test]
    fn appendix_identity_squared_bessel() {
        // 1F2(a; a+1/2, 2a; -x^2/4) = [Gamma(a+1/2) (x/4)^{1/2-a} J_{a-1/2}(x/2)]^2
        for &a in &[0.3_f64, 0.5, 1.0, 2.5] {
            let p = OneF2Params::new(a, a + 0.5, 2.0 * a).unwrap();
            let mut x = 0.5;
            while x <= 40.0 {
                let lhs = hyper_1f2(&p, x).unwrap().value;
                let j = bessel_j(a - 0.5, x / 2.0).unwrap();
                let norm = gamma(a + 0.5) * (x / 4.0).powf(0.5 - a) * j;
                assert!(
                    (lhs - norm * norm).abs() < 1e-9,
                    "a = {a}, x = {x}: {lhs:e} vs {:e}",
                    norm * norm
                );
                x += 0.5;
            }
        }
    }
}
