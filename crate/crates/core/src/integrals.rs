//! The central Bessel integral `int_0^x (x^mu - t^mu)^lambda t^alpha J_beta(t) dt`:
//! adaptive quadrature, hypergeometric closed forms, positivity scans, and the
//! truncated-moment exponent defined by the second Bessel zero.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quad::{integrate, QuadResult};
use crate::real::Real;
use crate::regions::{integral_region_contains, RegionId};
use crate::special::{
    bessel_j, beta_fn, gamma, hyper_1f2, hyper_2f3, EvalResult, OneF2Params, TwoF3Params,
};

/// Parameters `(mu, lambda, alpha, beta)` of the integral, under the standing
/// assumptions `mu > 0`, `lambda >= 0`, `beta > -1`, `alpha + beta + 1 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralParams<R: Real> {
    pub mu: R,
    pub lambda: R,
    pub alpha: R,
    pub beta: R,
}

impl<R: Real> IntegralParams<R> {
    pub fn new(mu: R, lambda: R, alpha: R, beta: R) -> Result<Self> {
        if !(mu > R::zero()) {
            return Err(Error::Domain(format!("mu > 0 required, got {mu}")));
        }
        if !(lambda >= R::zero()) {
            return Err(Error::Domain(format!("lambda >= 0 required, got {lambda}")));
        }
        if !(beta > -R::one()) {
            return Err(Error::Domain(format!("beta > -1 required, got {beta}")));
        }
        if !(alpha + beta + R::one() > R::zero()) {
            return Err(Error::Domain(format!(
                "alpha + beta + 1 > 0 required, got alpha = {alpha}, beta = {beta}"
            )));
        }
        Ok(IntegralParams { mu, lambda, alpha, beta })
    }
}

/// Outcome of a positivity scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PositivityVerdict<R: Real> {
    /// A region predicate applying to `(mu, lambda)` certifies strict positivity.
    CertifiedByRegion(RegionId),
    /// No region applies; the grid scan found no sign change.
    NumericallyPositive { min_value: R, argmin: R },
    /// Sign resolved beyond the (inflated) error estimate: a witness of negativity.
    Refuted { x: R, value: R, err: R },
}

/// Scan configuration. Defaults: `x_max = 50`, `step = 0.05`, `tol = 1e-10`,
/// region certificates enabled.
#[derive(Debug, Clone, Copy)]
pub struct ScanConfig<R: Real> {
    pub x_max: R,
    pub step: R,
    pub tol: R,
    /// When true, a matching region predicate short-circuits the numeric scan.
    pub use_region_certificates: bool,
}

impl<R: Real> Default for ScanConfig<R> {
    fn default() -> Self {
        ScanConfig {
            x_max: R::lit(50.0),
            step: R::lit(0.05),
            tol: R::lit(1e-10),
            use_region_certificates: true,
        }
    }
}

/// Which hypergeometric kernel to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    /// `1F2((a+b+1)/2; b+1, (a+b+3)/2)` kernel of the weightless integral.
    Phi,
    /// `1F2` kernel of the quadratic-weight (`mu = 2`) integral; needs `lambda`.
    Psi,
    /// `2F3` kernel of the linear convolution `int (x-t) t^alpha J_beta dt`.
    K,
}

/// Direct adaptive quadrature of the integral on `(0, x)`.
///
/// The substitution `t = x u^q` with `q = 1/(1 + alpha + beta)` (when
/// `alpha + beta < 0`) absorbs the algebraic endpoint weight `t^{alpha+beta}`
/// at the origin; for `x > 20` the initial panels are aligned to multiples of
/// pi so each one covers at most half an oscillation of `J_beta`.
pub fn integral_direct<R: Real>(p: &IntegralParams<R>, x: R, tol: R) -> Result<QuadResult<R>> {
    if !(x > R::zero()) {
        return Err(Error::Domain(format!("x > 0 required, got {x}")));
    }
    if !(tol > R::zero()) {
        return Err(Error::Domain(format!("tol > 0 required, got {tol}")));
    }
    let s = p.alpha + p.beta;
    let q = if s < R::zero() { R::one() / (R::one() + s) } else { R::one() };
    let IntegralParams { mu, lambda, alpha, beta } = *p;

    // t = x u^q:  integrand dt = x^{mu lambda + alpha + 1} q (1 - u^{q mu})^lambda
    //             u^{q(alpha+1)-1} J_beta(x u^q) du  on (0, 1)
    let scale = x.powf(mu * lambda + alpha + R::one()) * q;
    let u_exp = q * (alpha + R::one()) - R::one();
    let f = move |u: R| -> R {
        if u <= R::zero() || u >= R::one() {
            return R::zero();
        }
        let t_over_x = u.powf(q);
        let weight = (R::one() - t_over_x.powf(mu)).max(R::zero()).powf(lambda);
        let j = bessel_j(beta, x * t_over_x).unwrap_or(R::nan());
        scale * weight * u.powf(u_exp) * j
    };

    let mut points: Vec<R> = vec![R::zero()];
    if x > R::lit(20.0) {
        let mut k = 1usize;
        loop {
            let t = R::lit(k as f64) * R::PI();
            if t >= x {
                break;
            }
            points.push((t / x).powf(R::one() / q));
            k += 1;
        }
    } else {
        points.push(R::lit(0.5));
    }
    points.push(R::one());
    integrate(f, &points, tol, 4000)
}

fn is_half<R: Real>(v: R) -> bool {
    v == R::lit(0.5)
}

/// Hypergeometric closed form of the integral, when one applies:
///
/// * `lambda = 0`: the `Phi` kernel form (trig form at `alpha = beta = 1/2`);
/// * `mu = 2, lambda > 0`: the `Psi` kernel form (squared-Bessel form at
///   `alpha = beta = lambda + 1/2`);
/// * `mu = 1, lambda > 0`: the `2F3` convolution form.
///
/// Returns `Ok(None)` when no closed form is known for the parameters.
pub fn integral_closed<R: Real>(p: &IntegralParams<R>, x: R) -> Result<Option<EvalResult<R>>> {
    if !(x > R::zero()) {
        return Err(Error::Domain(format!("x > 0 required, got {x}")));
    }
    let one = R::one();
    let two = R::lit(2.0);
    let half = R::lit(0.5);
    let IntegralParams { mu, lambda, alpha, beta } = *p;
    let s1 = alpha + beta + one;

    if lambda == R::zero() {
        if is_half(alpha) && is_half(beta) {
            // int_0^x J_{1/2}(t) sqrt(t) dt = (2 sqrt(2)/sqrt(pi)) sin^2(x/2)
            let sin_half = (x * half).sin();
            let value = two * two.sqrt() / R::PI().sqrt() * sin_half * sin_half;
            return Ok(Some(EvalResult {
                value,
                abs_err_est: value.abs() * R::epsilon() * R::lit(4.0) + R::SERIES_ABS_FLOOR,
                terms_used: 0,
            }));
        }
        let a = s1 * half;
        let phi = hyper_1f2(&OneF2Params::new(a, beta + one, a + one)?, x)?;
        let pre = x.powf(s1) / (two.powf(beta) * gamma(beta + one) * s1);
        return Ok(Some(scaled(phi, pre)));
    }
    if mu == two {
        if alpha == lambda + half && beta == lambda + half {
            // sqrt(pi) Gamma(lambda+1) (2x^2)^{lambda+1/2} / 2 * J_{lambda+1/2}(x/2)^2
            let j = bessel_j(lambda + half, x * half)?;
            let value = R::PI().sqrt() * gamma(lambda + one) * (two * x * x).powf(lambda + half)
                * half
                * j
                * j;
            return Ok(Some(EvalResult {
                value,
                abs_err_est: value.abs() * R::lit(1e-13) + R::SERIES_ABS_FLOOR,
                terms_used: 0,
            }));
        }
        let a = s1 * half;
        let psi = hyper_1f2(&OneF2Params::new(a, beta + one, lambda + one + a)?, x)?;
        let pre = beta_fn(lambda + one, a)? * x.powf(two * lambda + s1)
            / (two.powf(beta + one) * gamma(beta + one));
        return Ok(Some(scaled(psi, pre)));
    }
    if mu == one {
        let a = s1 * half;
        let f = hyper_2f3(
            &TwoF3Params::new(
                a,
                a + half,
                beta + one,
                (s1 + lambda + one) * half,
                (s1 + lambda + two) * half,
            )?,
            x,
        )?;
        let pre = beta_fn(s1, lambda + one)? * x.powf(lambda + s1)
            / (two.powf(beta) * gamma(beta + one));
        return Ok(Some(scaled(f, pre)));
    }
    Ok(None)
}

fn scaled<R: Real>(e: EvalResult<R>, pre: R) -> EvalResult<R> {
    EvalResult {
        value: pre * e.value,
        abs_err_est: pre.abs() * e.abs_err_est + (pre * e.value).abs() * R::lit(1e-14),
        terms_used: e.terms_used,
    }
}

/// Evaluate one of the named hypergeometric kernels at `x`.
pub fn kernel_value<R: Real>(
    kind: KernelKind,
    alpha: R,
    beta: R,
    lambda: Option<R>,
    x: R,
) -> Result<EvalResult<R>> {
    let one = R::one();
    let half = R::lit(0.5);
    if !(beta > -one) || !(alpha + beta + one > R::zero()) {
        return Err(Error::Domain(format!(
            "kernel needs beta > -1 and alpha + beta + 1 > 0, got alpha = {alpha}, beta = {beta}"
        )));
    }
    let a = (alpha + beta + one) * half;
    match kind {
        KernelKind::Phi => hyper_1f2(&OneF2Params::new(a, beta + one, a + one)?, x),
        KernelKind::Psi => {
            let lam = lambda.ok_or(Error::MissingParameter("Psi kernel needs lambda"))?;
            hyper_1f2(&OneF2Params::new(a, beta + one, lam + one + a)?, x)
        }
        KernelKind::K => {
            if lambda.is_some() {
                return Err(Error::UnexpectedParameter("K kernel does not take lambda"));
            }
            hyper_2f3(
                &TwoF3Params::new(a, a + half, beta + one, a + one, a + R::lit(1.5))?,
                x,
            )
        }
    }
}

/// Try to certify positivity of the parameter set from the proved regions.
pub fn region_certificate<R: Real>(p: &IntegralParams<R>) -> Option<RegionId> {
    let one = R::one();
    let half = R::lit(0.5);
    let IntegralParams { mu, lambda, alpha, beta } = *p;
    // unrestricted mu, lambda; excludes the nonnegative-only trig case
    let r_exceptional = lambda == R::zero() && is_half(alpha) && is_half(beta);
    if !r_exceptional && integral_region_contains(RegionId::R, beta, alpha, None).ok()? {
        return Some(RegionId::R);
    }
    if mu == R::lit(2.0) && lambda > R::zero() {
        let s_exceptional = alpha == lambda + half && beta == lambda + half;
        if !s_exceptional
            && integral_region_contains(RegionId::S, beta, alpha, Some(lambda)).ok()?
        {
            return Some(RegionId::S);
        }
    }
    if mu > R::zero() && mu <= one && lambda >= one {
        if integral_region_contains(RegionId::P, beta, alpha, None).ok()? {
            return Some(RegionId::P);
        }
        if integral_region_contains(RegionId::A, beta, alpha, None).ok()? {
            return Some(RegionId::A);
        }
    }
    if mu == one
        && lambda > R::zero()
        && integral_region_contains(RegionId::O, beta, alpha, Some(lambda)).ok()?
    {
        return Some(RegionId::O);
    }
    None
}

/// Evaluate the integral at `x`, preferring a closed form and falling back to
/// quadrature when none applies or when the series flags precision loss.
pub fn eval_integral<R: Real>(p: &IntegralParams<R>, x: R, tol: R) -> Result<(R, R)> {
    match integral_closed(p, x) {
        Ok(Some(e)) => return Ok((e.value, e.abs_err_est)),
        Ok(None) => {}
        Err(Error::PrecisionLoss { .. }) => {}
        Err(e) => return Err(e),
    }
    let q = integral_direct(p, x, tol)?;
    Ok((q.value, q.abs_err_est))
}

/// Grid positivity scan.
///
/// Evaluates the integral on `{step, 2 step, ..., x_max}` (closed form when
/// trustworthy, else quadrature) and reports the first witness with
/// `value + 10 * err < 0`, the grid minimum otherwise. A matching region
/// certificate short-circuits the scan unless disabled in the config.
pub fn scan_positivity<R: Real>(
    p: &IntegralParams<R>,
    cfg: &ScanConfig<R>,
) -> Result<PositivityVerdict<R>> {
    if !(cfg.x_max > R::zero()) || !(cfg.step > R::zero()) {
        return Err(Error::Domain("scan needs x_max > 0 and step > 0".into()));
    }
    if cfg.use_region_certificates {
        if let Some(region) = region_certificate(p) {
            return Ok(PositivityVerdict::CertifiedByRegion(region));
        }
    }
    let n_pts = (cfg.x_max / cfg.step).to_f64().unwrap_or(0.0).floor() as usize;
    let mut min_value = R::infinity();
    let mut argmin = R::zero();

    const CHUNK: usize = 64;
    let mut k0 = 1usize;
    while k0 <= n_pts {
        let k1 = (k0 + CHUNK - 1).min(n_pts);
        let chunk: Result<Vec<(R, R, R)>> = (k0..=k1)
            .into_par_iter()
            .map(|k| {
                let x = cfg.step * R::lit(k as f64);
                let (v, e) = eval_integral(p, x, cfg.tol)?;
                Ok((x, v, e))
            })
            .collect();
        for (x, v, e) in chunk? {
            let inflated = e * R::lit(10.0);
            if v + inflated < R::zero() {
                return Ok(PositivityVerdict::Refuted { x, value: v, err: inflated });
            }
            if v < min_value {
                min_value = v;
                argmin = x;
            }
        }
        k0 = k1 + 1;
    }
    Ok(PositivityVerdict::NumericallyPositive { min_value, argmin })
}

/// Second positive zero of `J_beta`, to about 1e-12.
///
/// Sign changes are located by a pi/4 scan starting from the origin (where
/// `J_beta > 0`), then the second bracket is bisected.
pub fn bessel_second_zero<R: Real>(beta: R) -> Result<R> {
    if !(beta > -R::one()) {
        return Err(Error::Domain(format!("beta > -1 required, got {beta}")));
    }
    let step = R::PI() * R::lit(0.25);
    let mut sign = R::one();
    let mut brackets: Vec<(R, R)> = Vec::new();
    let mut t_prev = R::zero();
    for k in 1..10_000 {
        let t = step * R::lit(k as f64);
        let v = bessel_j(beta, t)?;
        if v != R::zero() && v.signum() != sign {
            brackets.push((t_prev, t));
            sign = v.signum();
            if brackets.len() == 2 {
                break;
            }
        }
        t_prev = t;
    }
    let (mut lo, mut hi) = *brackets
        .get(1)
        .ok_or(Error::NoSignChange { lo: 0.0, hi: 7853.98 })?;
    let f_lo = bessel_j(beta, lo)?;
    for _ in 0..200 {
        let mid = (lo + hi) * R::lit(0.5);
        if hi - lo <= R::lit(1e-13) * hi.max(R::one()) {
            return Ok(mid);
        }
        let f_mid = bessel_j(beta, mid)?;
        if f_mid == R::zero() {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence { terms: 200 })
}

/// The exponent `alpha` for which the truncated moment
/// `int_0^{j_{beta,2}} t^alpha J_beta(t) dt` vanishes, for `beta in (-1, 1/2)`.
///
/// Found by bracket expansion from `beta + 2` (doubling toward the cap at 5)
/// and bisection until `|F| < tol`. This is a numeric artifact only; it never
/// certifies a positivity region.
pub fn alpha_star<R: Real>(beta: R, tol: R) -> Result<R> {
    if !(beta > -R::one() && beta < R::lit(0.5)) {
        return Err(Error::Domain(format!(
            "alpha_star is defined for beta in (-1, 1/2), got {beta}"
        )));
    }
    let j2 = bessel_second_zero(beta)?;
    let moment = |alpha: R| -> Result<R> {
        let p = IntegralParams::new(R::one(), R::zero(), alpha, beta)?;
        Ok(eval_integral(&p, j2, R::lit(1e-12))?.0)
    };
    let mut lo = -beta - R::one() + R::lit(1e-6);
    let mut f_lo = moment(lo)?;
    if f_lo <= R::zero() {
        return Err(Error::NoSignChange { lo: lo.as_f64(), hi: lo.as_f64() });
    }
    let mut hi = beta + R::lit(2.0);
    let cap = R::lit(5.0);
    let mut f_hi = moment(hi)?;
    while f_hi > R::zero() {
        let width = hi - lo;
        hi = (hi + width).min(cap);
        f_hi = moment(hi)?;
        if hi >= cap && f_hi > R::zero() {
            return Err(Error::NoSignChange { lo: lo.as_f64(), hi: cap.as_f64() });
        }
    }
    for _ in 0..200 {
        let mid = (lo + hi) * R::lit(0.5);
        let f_mid = moment(mid)?;
        if f_mid.abs() < tol {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence { terms: 200 })
}
