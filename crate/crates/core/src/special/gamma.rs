//! Gamma function, log-gamma, Pochhammer symbol and Euler's beta function.

use crate::error::{Error, Result};
use crate::real::Real;

/// Lanczos coefficients, "An Analysis of the Lanczos Gamma Approximation",
/// G. R. Pugh, 2004, p. 116 (the same tabulation statrs uses). Relative error
/// is below 1e-13 on (0, 50] in double precision.
const GAMMA_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

const GAMMA_R: f64 = 10.900511;
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657173362492472666631120594218414085755;
const LN_2_SQRT_E_OVER_PI: f64 = 0.6207822376352452223455184457816472122518527279025978;
const LN_PI: f64 = 1.1447298858494001741434273513530587116472948129153115;

fn lanczos_sum<R: Real>(x: R, reflected: bool) -> R {
    let mut s = R::lit(GAMMA_DK[0]);
    for (i, dk) in GAMMA_DK.iter().enumerate().skip(1) {
        let i_r = R::lit(i as f64);
        if reflected {
            s += R::lit(*dk) / (i_r - x);
        } else {
            s += R::lit(*dk) / (x + i_r - R::one());
        }
    }
    s
}

/// Gamma function. Poles at non-positive integers return NaN.
pub fn gamma<R: Real>(x: R) -> R {
    let half = R::lit(0.5);
    if x < half {
        if x <= R::zero() && x.fract() == R::zero() {
            return R::nan();
        }
        let s = lanczos_sum(x, true);
        R::PI()
            / ((R::PI() * x).sin()
                * s
                * R::lit(TWO_SQRT_E_OVER_PI)
                * ((half - x + R::lit(GAMMA_R)) / R::E()).powf(half - x))
    } else {
        let s = lanczos_sum(x, false);
        s * R::lit(TWO_SQRT_E_OVER_PI) * ((x - half + R::lit(GAMMA_R)) / R::E()).powf(x - half)
    }
}

/// Natural log of |Gamma(x)|.
pub fn ln_gamma<R: Real>(x: R) -> R {
    let half = R::lit(0.5);
    if x < half {
        let s = lanczos_sum(x, true);
        R::lit(LN_PI)
            - (R::PI() * x).sin().abs().ln()
            - s.abs().ln()
            - R::lit(LN_2_SQRT_E_OVER_PI)
            - (half - x) * ((half - x + R::lit(GAMMA_R)) / R::E()).ln()
    } else {
        let s = lanczos_sum(x, false);
        s.ln() + R::lit(LN_2_SQRT_E_OVER_PI) + (x - half) * ((x - half + R::lit(GAMMA_R)) / R::E()).ln()
    }
}

/// Pochhammer symbol (rising factorial) `(alpha)_k = alpha (alpha+1) ... (alpha+k-1)`
/// with `(alpha)_0 = 1`. Total for every real `alpha`.
pub fn pochhammer<R: Real>(alpha: R, k: u32) -> R {
    let mut p = R::one();
    for i in 0..k {
        p *= alpha + R::lit(i as f64);
    }
    p
}

/// Euler's beta function `B(p, q) = Gamma(p) Gamma(q) / Gamma(p+q)` for `p, q > 0`.
pub fn beta_fn<R: Real>(p: R, q: R) -> Result<R> {
    if !(p > R::zero()) || !(q > R::zero()) {
        return Err(Error::Domain(format!(
            "beta function needs p > 0 and q > 0, got p = {p}, q = {q}"
        )));
    }
    // Direct gamma ratio keeps full relative accuracy for moderate arguments;
    // switch to log form once the intermediate Gamma values would be huge.
    if p + q < R::lit(50.0) {
        Ok(gamma(p) * gamma(q) / gamma(p + q))
    } else {
        Ok((ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)).exp())
    }
}
