//! Sums-of-squares machinery for the `2F3` family
//! `Omega(x) = 2F3(a, a+1/2; c+1, a+b, a+b+1/2; -x^2/4)`.
//!
//! Omega expands as a weighted series of squared Bessel functions
//! `J_{nu+n}(x/2)^2` with `nu = b + c/2 - 1/4` (the unique choice making every
//! expansion coefficient `C(n, nu)` a Saalschuetzian terminating series).
//! `C(n, nu)` is computed by three independent routes -- the direct terminating
//! `5F4`, Gasper's summation formula, and the Whipple-transformed form whose
//! terms are manifestly positive on the certified parameter region -- and the
//! routes are cross-validated against each other and against direct series
//! evaluation of Omega.
//!
//! The direct `5F4` is violently alternating: at `n = 30` its partial sums can
//! exceed the result by more than 25 orders of magnitude. The route engine is
//! therefore generic over [`RingScalar`] so that identity checks can run in
//! exact rational arithmetic while ordinary evaluations use double-word floats.

use num::BigRational;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::real::Real;
use crate::ring::{rational_from_f64, DdScalar, RingScalar};
use crate::special::series::terminating_sum_unit;
use crate::special::{bessel_j, beta_fn, gamma, hyper_0f1, hyper_2f3, EvalResult, TwoF3Params};

/// Parameters `(a, b, c)` of the Omega family: `a > 0`, `b > 0`, `c > -1`,
/// with the derived `nu = b + c/2 - 1/4` constrained by `b + c/2 + 1/4 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaParams<R: Real> {
    pub a: R,
    pub b: R,
    pub c: R,
}

impl<R: Real> OmegaParams<R> {
    pub fn new(a: R, b: R, c: R) -> Result<Self> {
        if !(a > R::zero() && b > R::zero() && c > -R::one()) {
            return Err(Error::Domain(format!(
                "Omega parameters need a > 0, b > 0, c > -1, got ({a}, {b}, {c})"
            )));
        }
        if !(b + c * R::lit(0.5) + R::lit(0.25) > R::zero()) {
            return Err(Error::Domain(format!(
                "b + c/2 + 1/4 > 0 required, got b = {b}, c = {c}"
            )));
        }
        Ok(OmegaParams { a, b, c })
    }

    /// The Saalschuetzian shift `nu = b + c/2 - 1/4`.
    pub fn nu(&self) -> R {
        self.b + self.c * R::lit(0.5) - R::lit(0.25)
    }

    pub fn to_two_f3(&self) -> Result<TwoF3Params<R>> {
        let half = R::lit(0.5);
        TwoF3Params::new(
            self.a,
            self.a + half,
            self.c + R::one(),
            self.a + self.b,
            self.a + self.b + half,
        )
    }
}

/// The shift making every expansion coefficient Saalschuetzian:
/// `nu = b + c/2 - 1/4`, under the constraint `b + c/2 + 1/4 > 0`.
pub fn nu_saalschutz<R: Real>(b: R, c: R) -> Result<R> {
    if !(b + c * R::lit(0.5) + R::lit(0.25) > R::zero()) {
        return Err(Error::Domain(format!(
            "b + c/2 + 1/4 > 0 required, got b = {b}, c = {c}"
        )));
    }
    Ok(b + c * R::lit(0.5) - R::lit(0.25))
}

/// Route used to compute an expansion coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffMethod {
    /// Terminating `5F4` at unit argument.
    Direct,
    /// Gasper's summation formula: a binomial sum over Saalschuetzian `4F3`s.
    GasperSum,
    /// Gasper's sum with each inner `4F3` rewritten by Whipple's transformation;
    /// every term is manifestly positive on the certified region.
    Whipple,
}

fn half_t<T: RingScalar>() -> T {
    T::one() / T::from_int(2)
}

fn quarter_t<T: RingScalar>(num: i64) -> T {
    T::from_int(num) / T::from_int(4)
}

fn poch_t<T: RingScalar>(x: &T, k: usize) -> T {
    let mut p = T::one();
    for i in 0..k {
        p = p * (x.clone() + T::from_int(i as i64));
    }
    p
}

fn checked_div<T: RingScalar>(num: T, den: T, ctx: &T, terms: usize) -> Result<T> {
    if den.is_zero_val() {
        return Err(Error::Pole { param: ctx.to_f64_lossy(), terms });
    }
    Ok(num / den)
}

/// Generic coefficient engine over any [`RingScalar`].
pub fn coeff_c_generic<T: RingScalar>(n: u32, a: &T, b: &T, c: &T, method: CoeffMethod) -> Result<T> {
    let n = n as usize;
    let half: T = half_t();
    let one = T::one();
    let nu = b.clone() + c.clone() * half.clone() - quarter_t(1);

    match method {
        CoeffMethod::Direct => {
            let num = [
                T::from_int(-(n as i64)),
                T::from_int(n as i64) + nu.clone() + nu.clone(),
                nu.clone() + one.clone(),
                a.clone(),
                a.clone() + half.clone(),
            ];
            let den = [
                nu.clone() + half.clone(),
                c.clone() + one.clone(),
                a.clone() + b.clone(),
                a.clone() + b.clone() + half,
            ];
            terminating_sum_unit(&num, &den)
        }
        CoeffMethod::GasperSum | CoeffMethod::Whipple => {
            // g = 2a + b - c/2 - 5/4 comes from eliminating the numerator nu + 1
            // against the denominator pair (a + b, a + b + 1/2)
            let g = a.clone() + a.clone() + b.clone() - c.clone() * half.clone() - quarter_t(5);
            if let Some(v) = g.as_exact_int() {
                if -(2 * n as i64) < v && v <= 0 {
                    return Err(Error::Pole { param: g.to_f64_lossy(), terms: 2 * n });
                }
            }
            let p1 = a.clone() - c.clone() * half.clone() - quarter_t(3);
            let p2 = a.clone() - c.clone() * half.clone() - quarter_t(1);
            let big = T::from_int(n as i64) + nu.clone() + nu.clone(); // n + 2 nu

            let mut sum = T::zero();
            // binom(n,k) * (g)_k (p1)_k (p2)_k / (g)_{2k}
            //           * (n+2nu)_k (a)_k (a+1/2)_k / ((a+b)_k (c+1)_k (a+b+1/2)_k (nu+1/2)_k),
            // maintained by its k -> k+1 ratio to keep intermediates near the
            // final scale (full Pochhammer products overflow near n = 50)
            let mut pref = T::one();
            for k in 0..=n {
                let inner = match method {
                    CoeffMethod::GasperSum => coeff_a_untransformed_generic(k as u32, n as u32, a, b, c)?,
                    _ => coeff_a_generic(k as u32, n as u32, a, b, c)?,
                };
                sum = sum + pref.clone() * inner;
                if k < n {
                    let k_t = T::from_int(k as i64);
                    let two_k = T::from_int(2 * k as i64);
                    let num = T::from_int((n - k) as i64)
                        * (g.clone() + k_t.clone())
                        * (p1.clone() + k_t.clone())
                        * (p2.clone() + k_t.clone())
                        * (big.clone() + k_t.clone())
                        * (a.clone() + k_t.clone())
                        * (a.clone() + half.clone() + k_t.clone());
                    let den = T::from_int(k as i64 + 1)
                        * (g.clone() + two_k.clone())
                        * (g.clone() + two_k + one.clone())
                        * (a.clone() + b.clone() + k_t.clone())
                        * (c.clone() + one.clone() + k_t.clone())
                        * (a.clone() + b.clone() + half.clone() + k_t.clone())
                        * (nu.clone() + half.clone() + k_t.clone());
                    pref = checked_div(pref * num, den, &g, 2 * k + 2)?;
                }
            }
            Ok(sum)
        }
    }
}

/// The inner Saalschuetzian `4F3` of Gasper's sum, before Whipple's transformation.
pub fn coeff_a_untransformed_generic<T: RingScalar>(
    k: u32,
    n: u32,
    a: &T,
    b: &T,
    c: &T,
) -> Result<T> {
    if k > n {
        return Err(Error::Domain(format!("need k <= n, got k = {k}, n = {n}")));
    }
    let half: T = half_t();
    let one = T::one();
    let nu = b.clone() + c.clone() * half.clone() - quarter_t(1);
    let k_t = T::from_int(k as i64);
    let two_k = T::from_int(2 * k as i64);
    let num = [
        T::from_int(k as i64 - n as i64),
        k_t.clone() + T::from_int(n as i64) + nu.clone() + nu.clone(),
        k_t.clone() + a.clone(),
        k_t.clone() + a.clone() + half.clone(),
    ];
    let den = [
        two_k + a.clone() + a.clone() + b.clone() - c.clone() * half.clone() - quarter_t(1),
        k_t.clone() + nu.clone() + half,
        k_t + c.clone() + one,
    ];
    debug_assert!(balance_defect(&num, &den).is_negligible());
    terminating_sum_unit(&num, &den)
}

/// `A_k` in its Whipple-transformed representation; each factor is positive on
/// the certified region, which is what makes the route numerically benign.
pub fn coeff_a_generic<T: RingScalar>(k: u32, n: u32, a: &T, b: &T, c: &T) -> Result<T> {
    if k > n {
        return Err(Error::Domain(format!("need k <= n, got k = {k}, n = {n}")));
    }
    let half: T = half_t();
    let one = T::one();
    let m = (n - k) as usize;
    let nu = b.clone() + c.clone() * half.clone() - quarter_t(1);
    let k_t = T::from_int(k as i64);
    let kn = T::from_int(k as i64 - n as i64);
    let c_half = c.clone() * half.clone();

    let pre_num = poch_t(&(nu.clone() + half.clone() - a.clone()), m)
        * poch_t(&(c.clone() + one.clone() - a.clone()), m);
    let pre_den = poch_t(&(k_t.clone() + nu.clone() + half.clone()), m)
        * poch_t(&(k_t.clone() + c.clone() + one.clone()), m);
    let pre = checked_div(pre_num, pre_den, &(k_t.clone() + nu.clone() + half.clone()), m)?;

    let num = [
        kn.clone(),
        kn.clone() + a.clone() + a.clone() - b.clone() - c_half.clone() - c.clone() + quarter_t(1),
        k_t.clone() + a.clone() + b.clone() - c_half.clone() - quarter_t(3),
        k_t.clone() + a.clone(),
    ];
    let den = [
        kn.clone() + a.clone() - b.clone() - c_half.clone() + quarter_t(3),
        kn + a.clone() - c.clone(),
        T::from_int(2 * k as i64) + a.clone() + a.clone() + b.clone() - c_half - quarter_t(1),
    ];
    debug_assert!(balance_defect(&num, &den).is_negligible());
    let inner = terminating_sum_unit(&num, &den)?;
    Ok(pre * inner)
}

/// Saalschuetzian balance defect: (sum of numerators + 1) - (sum of denominators).
fn balance_defect<T: RingScalar>(num: &[T], den: &[T]) -> T {
    let mut s = T::one();
    for v in num {
        s = s + v.clone();
    }
    for v in den {
        s = s - v.clone();
    }
    s
}

/// Alternative coefficient form on the boundary `a = b + c/2 + 1/4`, obtained
/// by applying Whipple's transformation to the full terminating series.
pub fn coeff_c_boundary_a_generic<T: RingScalar>(n: u32, a: &T, b: &T, c: &T) -> Result<T> {
    let half: T = half_t();
    let one = T::one();
    let boundary = a.clone() - b.clone() - c.clone() * half.clone() - quarter_t(1);
    if !boundary.is_negligible() {
        return Err(Error::Domain(
            "boundary form needs a = b + c/2 + 1/4".into(),
        ));
    }
    let n_us = n as usize;
    let nn = T::from_int(-(n as i64));
    let c_half = c.clone() * half.clone();
    let pre_num = poch_t(&(b.clone() - half.clone()), n_us) * poch_t(b, n_us);
    let pre_den = poch_t(&(b.clone() + b.clone() + c_half.clone() + quarter_t(1)), n_us)
        * poch_t(&(b.clone() + b.clone() + c_half.clone() + quarter_t(3)), n_us);
    let pre = checked_div(pre_num, pre_den, b, n_us)?;
    let num = [
        nn.clone(),
        nn.clone() - b.clone() - b.clone() + one.clone() + half.clone(),
        c_half.clone() + quarter_t(1) - b.clone(),
        b.clone() + c_half + quarter_t(3),
    ];
    let den = [
        nn.clone() - b.clone() + one.clone() + half.clone(),
        nn - b.clone() + one.clone(),
        c.clone() + one,
    ];
    debug_assert!(balance_defect(&num, &den).is_negligible());
    Ok(pre * terminating_sum_unit(&num, &den)?)
}

fn dd_params<R: Real>(p: &OmegaParams<R>) -> (DdScalar<R>, DdScalar<R>, DdScalar<R>) {
    (
        DdScalar(Dd::from_real(p.a)),
        DdScalar(Dd::from_real(p.b)),
        DdScalar(Dd::from_real(p.c)),
    )
}

/// Expansion coefficient `C(n, nu)` in floating point (double-word internals).
pub fn coeff_c<R: Real>(n: u32, p: &OmegaParams<R>, method: CoeffMethod) -> Result<R> {
    let (a, b, c) = dd_params(p);
    Ok(R::lit(coeff_c_generic(n, &a, &b, &c, method)?.to_f64_lossy()))
}

/// Expansion coefficient in exact rational arithmetic. Every finite float is
/// dyadic, so float inputs convert losslessly via [`rational_from_f64`].
pub fn coeff_c_exact(
    n: u32,
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    method: CoeffMethod,
) -> Result<BigRational> {
    coeff_c_generic(n, a, b, c, method)
}

/// Whipple-transformed `A_k` in floating point.
pub fn coeff_a<R: Real>(k: u32, n: u32, p: &OmegaParams<R>) -> Result<R> {
    let (a, b, c) = dd_params(p);
    Ok(R::lit(coeff_a_generic(k, n, &a, &b, &c)?.to_f64_lossy()))
}

/// Pre-Whipple `A_k` in floating point (for cross-validation).
pub fn coeff_a_untransformed<R: Real>(k: u32, n: u32, p: &OmegaParams<R>) -> Result<R> {
    let (a, b, c) = dd_params(p);
    Ok(R::lit(coeff_a_untransformed_generic(k, n, &a, &b, &c)?.to_f64_lossy()))
}

/// Evaluation route for Omega.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaMethod {
    /// Direct `2F3` series.
    Series,
    /// `(1/B(2a,2b)) int_0^1 0F1(c+1; -x^2 t^2/4) (1-t)^{2b-1} t^{2a-1} dt`.
    IntegralRep,
    /// Truncated squared-Bessel expansion with the given number of terms.
    SumsOfSquares(usize),
}

/// Evaluate `Omega(x)` by the chosen route.
pub fn omega_value<R: Real>(p: &OmegaParams<R>, x: R, method: OmegaMethod) -> Result<EvalResult<R>> {
    match method {
        OmegaMethod::Series => hyper_2f3(&p.to_two_f3()?, x),
        OmegaMethod::IntegralRep => omega_integral_rep(p, x),
        OmegaMethod::SumsOfSquares(n_terms) => omega_sums_of_squares(p, x, n_terms),
    }
}

fn omega_integral_rep<R: Real>(p: &OmegaParams<R>, x: R) -> Result<EvalResult<R>> {
    if !(x >= R::zero()) {
        return Err(Error::Domain(format!("x >= 0 required, got {x}")));
    }
    let one = R::one();
    let half = R::lit(0.5);
    let two_a = p.a + p.a;
    let two_b = p.b + p.b;
    let c1 = p.c + one;
    let tol = R::lit(1e-11);
    let max_panels = 3000;

    let osc_breaks = |lo: R, hi: R, pts: &mut Vec<R>| {
        // 0F1(c+1; -(xt)^2/4) oscillates roughly like cos(xt): break at t = k pi / x
        if x > R::lit(8.0) {
            let mut k = 1usize;
            loop {
                let t = R::lit(k as f64) * R::PI() / x;
                if t >= hi {
                    break;
                }
                if t > lo {
                    pts.push(t);
                }
                k += 1;
            }
        }
    };

    // left half [0, 1/2]: weight t^{2a-1}
    let f0 = |t: R| -> R {
        hyper_0f1(c1, x * t).map(|e| e.value).unwrap_or(R::nan())
            * (one - t).powf(two_b - one)
    };
    let left = if two_a < one {
        // t = v^{1/(2a)} makes the weight exactly flat
        let vmax = half.powf(two_a);
        let g = |v: R| -> R {
            if v <= R::zero() {
                return R::zero();
            }
            f0(v.powf(one / two_a)) / two_a
        };
        integrate(g, &[R::zero(), vmax], tol, max_panels)?
    } else {
        let mut pts = vec![R::zero()];
        osc_breaks(R::zero(), half, &mut pts);
        pts.push(half);
        integrate(|t: R| f0(t) * t.powf(two_a - one), &pts, tol, max_panels)?
    };

    // right half [1/2, 1]: weight (1-t)^{2b-1}
    let f1 = |t: R| -> R {
        hyper_0f1(c1, x * t).map(|e| e.value).unwrap_or(R::nan()) * t.powf(two_a - one)
    };
    let right = if two_b < one {
        let wmax = half.powf(two_b);
        let g = |w: R| -> R {
            if w <= R::zero() {
                return R::zero();
            }
            f1(one - w.powf(one / two_b)) / two_b
        };
        integrate(g, &[R::zero(), wmax], tol, max_panels)?
    } else {
        let mut pts = vec![half];
        osc_breaks(half, one, &mut pts);
        pts.push(one);
        integrate(|t: R| f1(t) * (one - t).powf(two_b - one), &pts, tol, max_panels)?
    };

    let norm = beta_fn(two_a, two_b)?;
    Ok(EvalResult {
        value: (left.value + right.value) / norm,
        abs_err_est: (left.abs_err_est + right.abs_err_est) / norm,
        terms_used: left.subdivisions + right.subdivisions,
    })
}

fn omega_sums_of_squares<R: Real>(p: &OmegaParams<R>, x: R, n_terms: usize) -> Result<EvalResult<R>> {
    if n_terms == 0 {
        return Err(Error::Domain("sums-of-squares needs at least one term".into()));
    }
    if !(x > R::zero()) {
        return Err(Error::Domain("sums-of-squares route needs x > 0".into()));
    }
    let nu = p.nu();
    let twice_nu = nu + nu;
    let rounded = twice_nu.round();
    if (twice_nu - rounded).abs() < R::lit(1e-12) && rounded <= -R::one() {
        return Err(Error::Domain(format!(
            "2 nu = {twice_nu} is a negative integer; the expansion is undefined"
        )));
    }
    // On the simultaneously-certified region the Whipple route has positive
    // terms and no cancellation; elsewhere fall back to the direct route.
    let method = if positive_route_applies(p) {
        CoeffMethod::Whipple
    } else {
        CoeffMethod::Direct
    };

    let one = R::one();
    let two = R::lit(2.0);
    let mut weight_ratio = one; // (2 nu + 1)_n / n!
    let mut sum = R::zero();
    let mut last_term = R::zero();
    for n in 0..n_terms {
        let nf = R::lit(n as f64);
        if n > 0 {
            weight_ratio *= (twice_nu + nf) / nf;
        }
        let interlace = if n == 0 { one } else { (two * nf + twice_nu) / (nf + twice_nu) };
        let cn = coeff_c(n as u32, p, method)?;
        let j = bessel_j(nu + nf, x * R::lit(0.5))?;
        last_term = cn * interlace * weight_ratio * j * j;
        sum += last_term;
    }
    let g = gamma(nu + one);
    let pre = g * g * (x * R::lit(0.25)).powf(-twice_nu);
    Ok(EvalResult {
        value: pre * sum,
        abs_err_est: pre.abs() * last_term.abs() + (pre * sum).abs() * R::lit(1e-13),
        terms_used: n_terms,
    })
}

/// True when the parameters satisfy both positivity condition pairs, so the
/// Whipple route is a sum of positive terms.
fn positive_route_applies<R: Real>(p: &OmegaParams<R>) -> bool {
    let half = R::lit(0.5);
    let quarter = R::lit(0.25);
    let two_a = p.a + p.a;
    let w1 = two_a > -p.b + p.c * half + R::lit(1.25)
        && p.a >= p.c * half + R::lit(0.75)
        && p.b + p.c * half + quarter > R::zero();
    let w2 = two_a <= p.b + R::lit(1.5) * p.c + R::lit(0.75)
        && p.a < p.b + p.c * half + quarter
        && p.a < p.c + R::one();
    w1 && w2
}

/// Terms of the boundary squared-Bessel expansion of
/// `1F2(a; b, 3a + 1/2 - b; -x^2/4)` (without the prefactor).
pub fn newton_boundary_terms<R: Real>(a: R, b: R, x: R, n_terms: usize) -> Result<Vec<R>> {
    if !(a > R::zero()) || a == R::lit(0.5) {
        return Err(Error::Domain(format!("boundary expansion needs a > 0, a != 1/2, got {a}")));
    }
    let third = R::lit(3.0) * a + R::lit(0.5) - b;
    if !(b > R::zero()) || !(third > R::zero()) {
        return Err(Error::Domain(format!(
            "denominator parameters must stay positive: b = {b}, 3a + 1/2 - b = {third}"
        )));
    }
    let one = R::one();
    let two = R::lit(2.0);
    let two_a = a + a;
    let mut terms = Vec::with_capacity(n_terms);
    let mut ratio = one; // (2a)_n (2a-b)_n (b - a - 1/2)_n / (n! (b)_n (3a + 1/2 - b)_n)
    for n in 0..n_terms {
        let nf = R::lit(n as f64);
        if n > 0 {
            let m = nf - one;
            ratio *= (two_a + m) * (two_a - b + m) * (b - a - R::lit(0.5) + m)
                / (nf * (b + m) * (third + m));
        }
        let interlace = if n == 0 {
            one
        } else {
            (two * nf + two_a - one) / (nf + two_a - one)
        };
        let j = bessel_j(a - R::lit(0.5) + nf, x * R::lit(0.5))?;
        terms.push(interlace * ratio * j * j);
    }
    Ok(terms)
}

/// Boundary squared-Bessel expansion of `1F2(a; b, 3a + 1/2 - b; -x^2/4)`,
/// truncated to `n_terms` terms. All summands are nonnegative when `b` lies
/// between `a + 1/2` and `2a`.
pub fn newton_boundary_expansion<R: Real>(a: R, b: R, x: R, n_terms: usize) -> Result<EvalResult<R>> {
    let terms = newton_boundary_terms(a, b, x, n_terms)?;
    let sum: R = terms.iter().copied().sum();
    let g = gamma(a + R::lit(0.5));
    let pre = g * g * (x * R::lit(0.25)).powf(R::one() - (a + a));
    let tail = terms.last().copied().unwrap_or(R::zero()).abs();
    Ok(EvalResult {
        value: pre * sum,
        abs_err_est: pre.abs() * tail + (pre * sum).abs() * R::lit(1e-13),
        terms_used: terms.len(),
    })
}

/// Exact rational image of float Omega parameters.
pub fn rational_params<R: Real>(p: &OmegaParams<R>) -> (BigRational, BigRational, BigRational) {
    (
        rational_from_f64(p.a.as_f64()),
        rational_from_f64(p.b.as_f64()),
        rational_from_f64(p.c.as_f64()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{omega_classify, OmegaClass};
    use crate::special::hyper_1f2;
    use crate::special::OneF2Params;
    use num::ToPrimitive;
    use std::f64::consts::PI;

    fn omega(a: f64, b: f64, c: f64) -> OmegaParams<f64> {
        OmegaParams::new(a, b, c).unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_saalschutz(1.0_f64, 0.0).unwrap(), 0.75);
        assert_eq!(nu_saalschutz(0.5_f64, 0.5).unwrap(), 0.5);
        assert!(nu_saalschutz(0.1_f64, -1.0).is_err());
    }

    #[test]
    fn direct_params_are_saalschutzian_in_rationals() {
        // numerator sum + 1 == denominator sum, exactly, for n = 1..5
        for n in 1..=5i64 {
            for (a, b, c) in [(3, 4, 5), (1, 2, -1), (7, 1, 9)] {
                let a = BigRational::new(a.into(), 4.into());
                let b = BigRational::new(b.into(), 4.into());
                let c = BigRational::new(c.into(), 4.into());
                let half = BigRational::new(1.into(), 2.into());
                let quarter = BigRational::new(1.into(), 4.into());
                let nu = &b + &c * &half - &quarter;
                let num_sum = BigRational::from_integer((-n).into())
                    + (BigRational::from_integer(n.into()) + &nu + &nu)
                    + (&nu + BigRational::from_integer(1.into()))
                    + &a
                    + (&a + &half);
                let den_sum = (&nu + &half)
                    + (&c + BigRational::from_integer(1.into()))
                    + (&a + &b)
                    + (&a + &b + &half);
                assert_eq!(num_sum + BigRational::from_integer(1.into()), den_sum);
            }
        }
    }

    #[test]
    fn coeff_c_trivial_and_golden() {
        let p = omega(1.75, 1.0, 2.0);
        for m in [CoeffMethod::Direct, CoeffMethod::GasperSum, CoeffMethod::Whipple] {
            assert_eq!(coeff_c(0, &p, m).unwrap(), 1.0);
        }
        // exact values at (7/4, 1, 2): C(3) = 15/544, C(10) = 4199/3670016
        let c3 = coeff_c(3, &p, CoeffMethod::Direct).unwrap();
        assert!((c3 - 15.0 / 544.0).abs() < 1e-14, "got {c3}");
        for m in [CoeffMethod::GasperSum, CoeffMethod::Whipple] {
            let v = coeff_c(3, &p, m).unwrap();
            assert!((v - 15.0 / 544.0).abs() < 1e-13, "{m:?} gave {v}");
        }
        let c10 = coeff_c(10, &p, CoeffMethod::Whipple).unwrap();
        assert!((c10 - 4199.0 / 3670016.0).abs() < 1e-15);
    }

    #[test]
    fn coeff_routes_agree_exactly_in_rationals() {
        let (a, b, c) = rational_params(&omega(1.75, 1.0, 2.0));
        for n in [1u32, 2, 5, 9] {
            let d = coeff_c_exact(n, &a, &b, &c, CoeffMethod::Direct).unwrap();
            let g = coeff_c_exact(n, &a, &b, &c, CoeffMethod::GasperSum).unwrap();
            let w = coeff_c_exact(n, &a, &b, &c, CoeffMethod::Whipple).unwrap();
            assert_eq!(d, g, "n = {n}");
            assert_eq!(d, w, "n = {n}");
        }
    }

    #[test]
    fn coeff_positive_at_interior_points() {
        // 50 deterministic interior samples, C(n, nu) > 0 for n <= 50
        let mut found = 0;
        let mut i = 0u64;
        while found < 50 {
            i += 1;
            let a = 0.25 + ((i as f64 * 0.754_877_666_246_692_9) % 1.0) * 3.0;
            let b = 0.25 + ((i as f64 * 0.569_840_290_998_053_2) % 1.0) * 3.0;
            let c = -0.75 + ((i as f64 * 0.362_436_069_989_027_7) % 1.0) * 4.0;
            if omega_classify(a, b, c) != OmegaClass::Interior {
                continue;
            }
            let p = omega(a, b, c);
            found += 1;
            for n in [1u32, 2, 5, 17, 33, 50] {
                let v = coeff_c(n, &p, CoeffMethod::Whipple).unwrap();
                assert!(v > 0.0, "C({n}) = {v} at ({a}, {b}, {c})");
            }
        }
    }

    #[test]
    fn coeff_a_collapses_at_k_equals_n() {
        let p = omega(1.3, 0.8, 0.6);
        for n in [0u32, 1, 4, 9] {
            let pre = coeff_a_untransformed(n, n, &p).unwrap();
            let post = coeff_a(n, n, &p).unwrap();
            assert_eq!(pre, 1.0);
            assert_eq!(post, 1.0);
        }
    }

    #[test]
    fn coeff_a_positive_at_interior_point() {
        let p = omega(1.75, 1.0, 2.0);
        let v = coeff_a(0, 2, &p).unwrap();
        assert!(v > 0.0);
    }

    #[test]
    fn whipple_transformation_is_exact_identity() {
        // pre- and post-transformation A_k agree exactly in rationals at
        // 20 deterministic admissible (k, n, a, b, c)
        let mut checked = 0;
        let mut i = 0u64;
        while checked < 20 {
            i += 1;
            let af = 0.125 + 0.0625 * ((i * 7) % 64) as f64;
            let bf = 0.125 + 0.0625 * ((i * 11) % 48) as f64;
            let cf = -0.875 + 0.0625 * ((i * 13) % 80) as f64;
            let n = (3 + (i % 13)) as u32;
            let k = (i % (n as u64 + 1)) as u32;
            let a = rational_from_f64(af);
            let b = rational_from_f64(bf);
            let c = rational_from_f64(cf);
            let pre = match coeff_a_untransformed_generic(k, n, &a, &b, &c) {
                Ok(v) => v,
                Err(_) => continue, // pole in one representation: skip
            };
            let post = match coeff_a_generic(k, n, &a, &b, &c) {
                Ok(v) => v,
                Err(_) => continue,
            };
            assert_eq!(pre, post, "k={k} n={n} a={af} b={bf} c={cf}");
            checked += 1;
        }
    }

    #[test]
    fn omega_small_x_limits() {
        let p = omega(1.75, 1.0, 2.0);
        assert_eq!(omega_value(&p, 0.0, OmegaMethod::Series).unwrap().value, 1.0);
        let ir = omega_value(&p, 0.0, OmegaMethod::IntegralRep).unwrap().value;
        assert!((ir - 1.0).abs() < 1e-10);
        let sos = omega_value(&p, 1e-3, OmegaMethod::SumsOfSquares(40)).unwrap().value;
        assert!((sos - 1.0).abs() < 1e-7, "got {sos}");
    }

    #[test]
    fn omega_closed_form_sinc_squared() {
        // (a, b) = (1/2, 1), c = -1/2: Omega(x) = [sin(x/2)/(x/2)]^2
        let p = omega(0.5, 1.0, -0.5);
        let v = omega_value(&p, PI, OmegaMethod::Series).unwrap().value;
        assert!((v - 4.0 / (PI * PI)).abs() < 1e-15);
        // this point sits outside the all-positive-terms region, so the
        // sums-of-squares route goes through the alternating direct coefficients
        let q = omega_value(&p, PI, OmegaMethod::SumsOfSquares(40)).unwrap().value;
        assert!((q - 4.0 / (PI * PI)).abs() < 1e-10, "got {q}");
    }

    #[test]
    fn omega_three_routes_agree() {
        // mpmath: Omega(1), Omega(5), Omega(15) at (7/4, 1, 2)
        let truths = [
            (1.0, 0.9639232918464559485767133),
            (5.0, 0.3942493046232993140785081),
            (15.0, 0.01203908045202581628020071),
        ];
        let p = omega(1.75, 1.0, 2.0);
        for &(x, truth) in &truths {
            let s = omega_value(&p, x, OmegaMethod::Series).unwrap().value;
            let i = omega_value(&p, x, OmegaMethod::IntegralRep).unwrap().value;
            let q = omega_value(&p, x, OmegaMethod::SumsOfSquares(60)).unwrap().value;
            assert!((s - truth).abs() < 1e-12, "series at {x}: {s}");
            assert!((i - truth).abs() < 1e-8, "integral at {x}: {i}");
            assert!((q - truth).abs() < 1e-8, "sums-of-squares at {x}: {q}");
        }
        // series vs integral representation further out, for several parameter sets
        for (a, b, c) in [(1.75, 1.0, 2.0), (0.6, 1.3, 0.4), (2.4, 0.45, 1.1)] {
            let p = omega(a, b, c);
            for x in [22.0, 30.0] {
                let s = omega_value(&p, x, OmegaMethod::Series).unwrap().value;
                let i = omega_value(&p, x, OmegaMethod::IntegralRep).unwrap().value;
                assert!((s - i).abs() < 1e-7, "({a},{b},{c}) x = {x}: {s} vs {i}");
            }
        }
    }

    #[test]
    fn omega_positive_on_interior_grid() {
        let pts = [(1.75, 1.0, 2.0), (1.0, 0.8, 0.5), (2.2, 1.4, 2.5), (1.125, 1.0, 0.75)];
        for &(a, b, c) in &pts {
            assert_eq!(omega_classify(a, b, c), OmegaClass::Interior, "({a},{b},{c})");
            let p = omega(a, b, c);
            let mut x = 0.5;
            while x <= 40.0 {
                let v = omega_value(&p, x, OmegaMethod::Series).unwrap().value;
                assert!(v > 0.0, "Omega({x}) = {v} at ({a}, {b}, {c})");
                x += 0.5;
            }
        }
    }

    #[test]
    fn denominator_shift_preserves_positivity() {
        // raising any denominator parameter keeps a positive 2F3 positive
        let base = omega(1.75, 1.0, 2.0);
        for d in [0.25, 1.0] {
            let shifted = [
                TwoF3Params::new(base.a, base.a + 0.5, base.c + 1.0 + d, base.a + base.b, base.a + base.b + 0.5),
                TwoF3Params::new(base.a, base.a + 0.5, base.c + 1.0, base.a + base.b + d, base.a + base.b + 0.5),
                TwoF3Params::new(base.a, base.a + 0.5, base.c + 1.0, base.a + base.b, base.a + base.b + 0.5 + d),
            ];
            for f in shifted {
                let f = f.unwrap();
                let mut x = 0.5;
                while x <= 30.0 {
                    let v = hyper_2f3(&f, x).unwrap().value;
                    assert!(v > 0.0, "shift {d} at x = {x}");
                    x += 0.5;
                }
            }
        }
    }

    #[test]
    fn boundary_route_matches_direct_in_rationals() {
        // points on a = b + c/2 + 1/4 with the side conditions of the boundary case
        for (bq, cq) in [(5i64, 9i64), (6, 10), (7, 14)] {
            // b in eighths, c in eighths
            let b = BigRational::new(bq.into(), 8.into());
            let c = BigRational::new(cq.into(), 8.into());
            let half = BigRational::new(1.into(), 2.into());
            let quarter = BigRational::new(1.into(), 4.into());
            let a = &b + &c * &half + &quarter;
            for n in [1u32, 3, 7] {
                let direct = coeff_c_generic(n, &a, &b, &c, CoeffMethod::Direct).unwrap();
                let boundary = coeff_c_boundary_a_generic(n, &a, &b, &c).unwrap();
                assert_eq!(direct, boundary, "n = {n}, b = {bq}/8, c = {cq}/8");
            }
        }
    }

    #[test]
    fn boundary_a_omega_positive_on_grid() {
        // a = b + c/2 + 1/4 with 1/2 < b <= c/2 + 1/4, c > 1/2
        for (b, c) in [(0.75, 1.5), (0.625, 1.25), (1.0, 2.0)] {
            let a = b + c / 2.0 + 0.25;
            assert_eq!(omega_classify(a, b, c), OmegaClass::BoundaryA);
            let p = omega(a, b, c);
            let mut x = 1.0;
            while x <= 30.0 {
                let v = omega_value(&p, x, OmegaMethod::Series).unwrap().value;
                assert!(v > 0.0, "x = {x}, (a,b,c) = ({a},{b},{c})");
                x += 1.0;
            }
        }
    }

    #[test]
    fn newton_boundary_matches_series() {
        // mpmath: both sides 0.03848768343147697981 at (a, b) = (1, 1.7), x = 10
        for &x in &[2.0_f64, 10.0] {
            let e = newton_boundary_expansion(1.0, 1.7, x, 60).unwrap();
            let f = hyper_1f2(&OneF2Params::new(1.0, 1.7, 1.8).unwrap(), x).unwrap();
            assert!((e.value - f.value).abs() < 1e-8, "x = {x}: {} vs {}", e.value, f.value);
        }
        let e = newton_boundary_expansion(1.0_f64, 1.7, 10.0, 60).unwrap();
        assert!((e.value - 0.03848768343147697981222623).abs() < 1e-10);
    }

    #[test]
    fn newton_boundary_terms_nonnegative() {
        let terms = newton_boundary_terms(1.0, 1.7, 7.0, 41).unwrap();
        for (n, t) in terms.iter().enumerate() {
            assert!(*t >= 0.0, "term {n} = {t}");
        }
    }

    #[test]
    fn newton_boundary_collapses_at_anchors() {
        // b = 2a or b = a + 1/2 kills every n >= 1 term: single squared-Bessel value
        for (a, b) in [(1.0_f64, 2.0), (1.0, 1.5), (1.3, 2.6)] {
            let terms = newton_boundary_terms(a, b, 9.0, 30).unwrap();
            for t in &terms[1..] {
                assert_eq!(*t, 0.0);
            }
            let e = newton_boundary_expansion(a, b, 9.0, 30).unwrap();
            let f = hyper_1f2(&OneF2Params::new(a, a + 0.5, 2.0 * a).unwrap(), 9.0).unwrap();
            assert!((e.value - f.value).abs() < 1e-12);
        }
    }

    #[test]
    fn pole_paths_report_errors() {
        // a - c integer makes the Whipple inner series hit a zero denominator
        let a = rational_from_f64(1.5);
        let b = rational_from_f64(0.75);
        let c = rational_from_f64(0.5);
        assert!(matches!(
            coeff_a_generic(0, 4, &a, &b, &c),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn exact_and_float_paths_agree_at_moderate_order() {
        let p = omega(1.375, 0.875, 1.25);
        let (a, b, c) = rational_params(&p);
        for n in [1u32, 4, 8, 12] {
            let exact = coeff_c_exact(n, &a, &b, &c, CoeffMethod::Direct)
                .unwrap()
                .to_f64()
                .unwrap();
            let float = coeff_c(n, &p, CoeffMethod::Direct).unwrap();
            assert!(
                (exact - float).abs() <= 1e-10 * exact.abs().max(1e-3),
                "n = {n}: {exact} vs {float}"
            );
        }
    }
}
