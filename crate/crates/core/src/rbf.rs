//! Buhmann's compactly supported radial basis family
//!
//! `W(x) = int_0^inf (1 - ||x||^2/t)_+^lambda t^alpha (1 - t^delta)_+^rho dt`,
//!
//! its radial Fourier transform, the closed-form special members (Wendland's
//! functions, Euclid's hat, and the two log/linear exceptional kernels), Gram
//! assembly, a Cholesky positive-definiteness check, and interpolation.

use crate::error::{Error, Result};
use crate::integrals::{integral_direct, IntegralParams};
use crate::quad::integrate;
use crate::real::Real;
use crate::special::gamma;

/// Parameters `(n, delta, rho, lambda, alpha)` of the family, under the
/// definition constraints `delta > 0`, `rho >= 0`, `lambda > -1`,
/// `alpha > -n/2 - 1` for ambient dimension `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbfSpec<R: Real> {
    pub n: u32,
    pub delta: R,
    pub rho: R,
    pub lambda: R,
    pub alpha: R,
}

impl<R: Real> RbfSpec<R> {
    pub fn new(n: u32, delta: R, rho: R, lambda: R, alpha: R) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("dimension n must be >= 1".into()));
        }
        if !(delta > R::zero()) {
            return Err(Error::Domain(format!("delta > 0 required, got {delta}")));
        }
        if !(rho >= R::zero()) {
            return Err(Error::Domain(format!("rho >= 0 required, got {rho}")));
        }
        if !(lambda > -R::one()) {
            return Err(Error::Domain(format!("lambda > -1 required, got {lambda}")));
        }
        if !(alpha > -R::lit(0.5) * R::lit(n as f64) - R::one()) {
            return Err(Error::Domain(format!(
                "alpha > -n/2 - 1 required, got alpha = {alpha}, n = {n}"
            )));
        }
        Ok(RbfSpec { n, delta, rho, lambda, alpha })
    }
}

/// A finite set of points in `R^n` (row per point).
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet<R: Real> {
    dim: usize,
    points: Vec<Vec<R>>,
}

impl<R: Real> PointSet<R> {
    /// Build a point set, checking that every row has the same dimension.
    pub fn new(points: Vec<Vec<R>>) -> Result<Self> {
        let dim = points.first().map(|p| p.len()).unwrap_or(0);
        if dim == 0 {
            return Err(Error::Domain("point set must be non-empty with dimension >= 1".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<R>] {
        &self.points
    }

    /// Indices of the first coincident pair, if any.
    pub fn duplicate_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                if self.points[i] == self.points[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn distance(&self, i: usize, j: usize) -> R {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(&x, &y)| (x - y) * (x - y))
            .sum::<R>()
            .sqrt()
    }
}

const QUAD_TOL: f64 = 1e-11;
const MAX_PANELS: usize = 3000;

/// `W` at radius `r`: the integrand is supported on `t in [r^2, 1]`, so the
/// value is 0 for `r >= 1`. At `r = 0` the integral converges only for
/// `alpha > -1`; that sub-range of the definition is rejected here because a
/// kernel with an infinite diagonal cannot enter a Gram matrix.
pub fn w_value<R: Real>(spec: &RbfSpec<R>, r: R) -> Result<R> {
    if !(r >= R::zero()) {
        return Err(Error::Domain(format!("radius must be >= 0, got {r}")));
    }
    if r >= R::one() {
        return Ok(R::zero());
    }
    let one = R::one();
    let RbfSpec { delta, rho, lambda, alpha, .. } = *spec;
    let tol = R::lit(QUAD_TOL);

    if r == R::zero() {
        if !(alpha > -one) {
            return Err(Error::Domain(format!(
                "W(0) diverges for alpha <= -1 (alpha = {alpha})"
            )));
        }
        // int_0^1 t^alpha (1 - t^delta)^rho dt
        let q = if alpha < R::zero() {
            // t = v^{1/(1+alpha)} flattens the origin weight exactly
            let e = one / (one + alpha);
            let g = move |v: R| -> R {
                if v <= R::zero() {
                    return R::zero();
                }
                let t = v.powf(e);
                (one - t.powf(delta)).max(R::zero()).powf(rho) * e
            };
            integrate(g, &[R::zero(), R::lit(0.5), one], tol, MAX_PANELS)?
        } else {
            let g = move |t: R| t.powf(alpha) * (one - t.powf(delta)).max(R::zero()).powf(rho);
            integrate(g, &[R::zero(), R::lit(0.5), one], tol, MAX_PANELS)?
        };
        return Ok(q.value);
    }

    let r2 = r * r;
    // (1 - r^2/t)^lambda t^alpha = (t - r^2)^lambda t^{alpha - lambda}
    let body = move |t: R| -> R {
        t.powf(alpha - lambda) * (one - t.powf(delta)).max(R::zero()).powf(rho)
    };
    let q = if lambda < R::zero() {
        // t = r^2 + (1 - r^2) w^{1/(1+lambda)} flattens the endpoint weight
        let e = one / (one + lambda);
        let span = one - r2;
        let g = move |w: R| -> R {
            if w <= R::zero() {
                return R::zero();
            }
            let t = r2 + span * w.powf(e);
            span.powf(lambda + one) * e * body(t)
        };
        integrate(g, &[R::zero(), R::lit(0.5), one], tol, MAX_PANELS)?
    } else {
        let g = move |t: R| (t - r2).max(R::zero()).powf(lambda) * body(t);
        let mid = (r2 + one) * R::lit(0.5);
        integrate(g, &[r2, mid, one], tol, MAX_PANELS)?
    };
    Ok(q.value)
}

/// Radial Fourier transform `omega(s)` of `W`, `Fourier(W)(xi) = omega(||xi||)`:
///
/// ```text
/// omega(s) = (2 pi)^{n/2} 2^{lambda+1} Gamma(lambda+1) s^{-(n+2+2 delta rho + 2 alpha)}
///            * int_0^s (s^{2 delta} - t^{2 delta})^rho t^{2 alpha + 1 - lambda + n/2}
///              J_{lambda + n/2}(t) dt
/// ```
///
/// The inner integral is the central Bessel integral under the renaming
/// `mu = 2 delta`, `lambda -> rho`, `alpha -> 2 alpha + 1 - lambda + n/2`,
/// `beta -> lambda + n/2`.
pub fn w_hat<R: Real>(spec: &RbfSpec<R>, s: R) -> Result<R> {
    w_hat_tol(spec, s, R::lit(1e-10))
}

/// [`w_hat`] with an explicit absolute tolerance on the result.
pub fn w_hat_tol<R: Real>(spec: &RbfSpec<R>, s: R, tol: R) -> Result<R> {
    if !(s > R::zero()) {
        return Err(Error::Domain(format!("frequency must be > 0, got {s}")));
    }
    let one = R::one();
    let two = R::lit(2.0);
    let half_n = R::lit(spec.n as f64) * R::lit(0.5);
    let inner = IntegralParams::new(
        two * spec.delta,
        spec.rho,
        two * spec.alpha + one - spec.lambda + half_n,
        spec.lambda + half_n,
    )?;
    let power = R::lit(spec.n as f64) + two
        + two * spec.delta * spec.rho
        + two * spec.alpha;
    let prefactor = (two * R::PI()).powf(half_n)
        * two.powf(spec.lambda + one)
        * gamma(spec.lambda + one)
        * s.powf(-power);
    let inner_tol = (tol / prefactor.abs()).min(R::lit(1e-8)).max(R::lit(1e-14));
    let q = integral_direct(&inner, s, inner_tol)?;
    Ok(prefactor * q.value)
}

/// Closed-form special members of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialKernel<R: Real> {
    /// `rho = 0, alpha = -1/2, lambda = 0` in dimension 1: `2 (1 - r)`.
    ExceptionalN1,
    /// `rho = 0, alpha = -1, lambda = -1/2` in dimension 2:
    /// `2 ln((1 + sqrt(1 - r^2))/r)`.
    ExceptionalN2,
    /// Wendland's functions: `delta = 1/2`, `rho = (n+1)/2 + sigma`,
    /// `lambda = alpha`; `W(r) = 2 int_r^1 (t^2 - r^2)^alpha t (1-t)^{(n+1)/2+sigma} dt`.
    Wendland { n: u32, sigma: R, alpha: R },
    /// Euclid's hat: the `delta = 1` exceptional member with `rho = (n-1)/2`,
    /// `W(r) = 2 int_r^1 (1 - t^2)^{(n-1)/2} dt`.
    EuclidHat { n: u32 },
}

/// Evaluate a named special kernel at radius `r`. Agrees with [`w_value`]
/// under the corresponding [`RbfSpec`].
pub fn special_w<R: Real>(kind: SpecialKernel<R>, r: R) -> Result<R> {
    if !(r >= R::zero()) {
        return Err(Error::Domain(format!("radius must be >= 0, got {r}")));
    }
    let one = R::one();
    let two = R::lit(2.0);
    if r >= one {
        return Ok(R::zero());
    }
    match kind {
        SpecialKernel::ExceptionalN1 => Ok(two * (one - r)),
        SpecialKernel::ExceptionalN2 => {
            if r == R::zero() {
                return Err(Error::Domain(
                    "the 2-d exceptional kernel diverges at r = 0".into(),
                ));
            }
            Ok(two * ((one + (one - r * r).sqrt()) / r).ln())
        }
        SpecialKernel::Wendland { n, sigma, alpha } => {
            if !(sigma >= R::zero()) {
                return Err(Error::Domain(format!("sigma >= 0 required, got {sigma}")));
            }
            if !(alpha > -one) {
                return Err(Error::Domain(format!("alpha > -1 required, got {alpha}")));
            }
            let p = R::lit((n + 1) as f64) * R::lit(0.5) + sigma;
            let tol = R::lit(QUAD_TOL);
            let q = if alpha < R::zero() && r > R::zero() {
                // (t^2 - r^2)^alpha = (t - r)^alpha (t + r)^alpha; flatten (t - r)^alpha
                let e = one / (one + alpha);
                let span = one - r;
                let g = move |w: R| -> R {
                    if w <= R::zero() {
                        return R::zero();
                    }
                    let t = r + span * w.powf(e);
                    span.powf(alpha + one) * e * (t + r).powf(alpha) * t * (one - t).powf(p)
                };
                integrate(g, &[R::zero(), R::lit(0.5), one], tol, MAX_PANELS)?
            } else if r == R::zero() && two * alpha + one < R::zero() {
                // weight t^{2 alpha + 1} at the origin
                let e = one / (two * alpha + two);
                let g = move |v: R| -> R {
                    if v <= R::zero() {
                        return R::zero();
                    }
                    let t = v.powf(e);
                    e * (one - t).powf(p)
                };
                integrate(g, &[R::zero(), R::lit(0.5), one], tol, MAX_PANELS)?
            } else {
                let g = move |t: R| ((t * t - r * r).max(R::zero())).powf(alpha) * t * (one - t).powf(p);
                integrate(g, &[r, (r + one) * R::lit(0.5), one], tol, MAX_PANELS)?
            };
            Ok(two * q.value)
        }
        SpecialKernel::EuclidHat { n } => {
            let p = R::lit((n - 1) as f64) * R::lit(0.5);
            let g = move |t: R| (one - t * t).max(R::zero()).powf(p);
            let q = integrate(g, &[r, one], R::lit(QUAD_TOL), MAX_PANELS)?;
            Ok(two * q.value)
        }
    }
}

/// Gram matrix `G[i][j] = W(||p_i - p_j||)`, symmetric by construction.
/// Coincident points and specs with a divergent diagonal are rejected.
pub fn gram<R: Real>(spec: &RbfSpec<R>, pts: &PointSet<R>) -> Result<Vec<Vec<R>>> {
    if pts.dim() != spec.n as usize {
        return Err(Error::DimensionMismatch { expected: spec.n as usize, got: pts.dim() });
    }
    if let Some((i, j)) = pts.duplicate_pair() {
        return Err(Error::DuplicatePoints { i, j });
    }
    let n = pts.len();
    let diag = w_value(spec, R::zero())?;
    let mut g = vec![vec![R::zero(); n]; n];
    for i in 0..n {
        g[i][i] = diag;
        for j in (i + 1)..n {
            let v = w_value(spec, pts.distance(i, j))?;
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(g)
}

fn check_square_symmetric<R: Real>(g: &[Vec<R>]) -> Result<usize> {
    let n = g.len();
    for row in g {
        if row.len() != n {
            return Err(Error::NotSquare);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = g[i][j].abs().max(g[j][i].abs()).max(R::one());
            if (g[i][j] - g[j][i]).abs() > R::lit(1e-12) * scale {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok(n)
}

/// Unpivoted Cholesky factorization `G = L L^T`. Fails with the offending
/// pivot when one drops below `1e-12 * max diagonal`.
pub fn cholesky<R: Real>(g: &[Vec<R>]) -> Result<Vec<Vec<R>>> {
    let n = check_square_symmetric(g)?;
    let mut max_diag = R::zero();
    for i in 0..n {
        max_diag = max_diag.max(g[i][i].abs());
    }
    let floor = R::lit(1e-12) * max_diag.max(R::min_positive_value());
    let mut l = vec![vec![R::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = g[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if !(s > floor) {
                    return Err(Error::NotPositiveDefinite { pivot: s.as_f64(), index: i });
                }
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    Ok(l)
}

/// True iff an unpivoted Cholesky factorization succeeds with every pivot
/// above `1e-12 * max diagonal`.
pub fn is_positive_definite<R: Real>(g: &[Vec<R>]) -> Result<bool> {
    check_square_symmetric(g)?;
    match cholesky(g) {
        Ok(_) => Ok(true),
        Err(Error::NotPositiveDefinite { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Solve `G coeffs = values` through the Cholesky factors and verify the
/// residual against `1e-8 * ||values||_inf`.
pub fn fit_interpolant<R: Real>(
    spec: &RbfSpec<R>,
    pts: &PointSet<R>,
    values: &[R],
) -> Result<Vec<R>> {
    if values.len() != pts.len() {
        return Err(Error::DimensionMismatch { expected: pts.len(), got: values.len() });
    }
    let g = gram(spec, pts)?;
    let l = cholesky(&g)?;
    let n = pts.len();
    // forward then back substitution
    let mut y = vec![R::zero(); n];
    for i in 0..n {
        let mut s = values[i];
        for k in 0..i {
            s -= l[i][k] * y[k];
        }
        y[i] = s / l[i][i];
    }
    let mut coeffs = vec![R::zero(); n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[k][i] * coeffs[k];
        }
        coeffs[i] = s / l[i][i];
    }
    // residual check
    let mut resid = R::zero();
    let mut scale = R::zero();
    for i in 0..n {
        let mut row = R::zero();
        for j in 0..n {
            row += g[i][j] * coeffs[j];
        }
        resid = resid.max((row - values[i]).abs());
        scale = scale.max(values[i].abs());
    }
    let bound = R::lit(1e-8) * scale.max(R::min_positive_value());
    if scale > R::zero() && resid >= bound {
        return Err(Error::Residual { residual: resid.as_f64(), bound: bound.as_f64() });
    }
    Ok(coeffs)
}

/// Evaluate a fitted interpolant `sum_i coeffs[i] W(||x - p_i||)` at `x`.
pub fn interpolant_eval<R: Real>(
    spec: &RbfSpec<R>,
    pts: &PointSet<R>,
    coeffs: &[R],
    x: &[R],
) -> Result<R> {
    if x.len() != pts.dim() {
        return Err(Error::DimensionMismatch { expected: pts.dim(), got: x.len() });
    }
    if coeffs.len() != pts.len() {
        return Err(Error::DimensionMismatch { expected: pts.len(), got: coeffs.len() });
    }
    let mut acc = R::zero();
    for (ci, p) in coeffs.iter().zip(pts.points()) {
        let r = p
            .iter()
            .zip(x)
            .map(|(&a, &b)| (a - b) * (a - b))
            .sum::<R>()
            .sqrt();
        acc += *ci * w_value(spec, r)?;
    }
    Ok(acc)
}
