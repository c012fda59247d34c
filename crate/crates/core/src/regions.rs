//! Membership predicates for every named positivity region.
//!
//! Each predicate transcribes the defining inequalities exactly as stated,
//! including strict-vs-weak boundary distinctions, and is evaluated in plain
//! floating-point comparisons with no epsilon fuzzing. Callers that need
//! robust classification near a boundary should perturb the query themselves.

use crate::error::{Error, Result};
use crate::real::Real;

/// Tags for the named parameter regions.
///
/// `A`, `R`, `S`, `P`, `O` live in the `(beta, alpha)` plane of the Bessel
/// integral; `Bn`..`Sn` live in the `(lambda, alpha)` plane of the radial
/// basis family and depend on the dimension `n`. `S`/`O` additionally need the
/// weight exponent `lambda`; `On`/`Sn` need `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionId {
    /// Misiewicz-Richards region (0 < mu <= 1 <= lambda).
    A,
    /// Region for unrestricted mu > 0, lambda >= 0.
    R,
    /// Region for mu = 2, lambda > 0.
    S,
    /// Extended Misiewicz-Richards region (0 < mu <= 1 <= lambda).
    P,
    /// Region for mu = 1, lambda > 0.
    O,
    /// Buhmann's positive-definiteness region on R^n.
    Bn,
    /// Extension of `Bn` via region `P` (0 < delta <= 1/2, rho >= 1).
    Pn,
    /// Extension for delta = 1/2, rho >= 1 via region `O`.
    On,
    /// Region for unrestricted delta > 0, rho >= 0 via region `R`.
    Rn,
    /// Region for delta = 1, rho >= 0 via region `S`.
    Sn,
}

impl RegionId {
    pub fn name(self) -> &'static str {
        match self {
            RegionId::A => "A",
            RegionId::R => "R",
            RegionId::S => "S",
            RegionId::P => "P",
            RegionId::O => "O",
            RegionId::Bn => "B_n",
            RegionId::Pn => "P_n",
            RegionId::On => "O_n",
            RegionId::Rn => "R_n",
            RegionId::Sn => "S_n",
        }
    }

    /// Does the region live in the RBF `(lambda, alpha)` plane?
    pub fn is_rbf(self) -> bool {
        matches!(self, RegionId::Bn | RegionId::Pn | RegionId::On | RegionId::Rn | RegionId::Sn)
    }
}

/// Classification of `2F3` parameters `(a, b, c)` against the simultaneous
/// positivity conditions and their two boundary cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaClass {
    /// Both pairs of interior inequalities hold.
    Interior,
    /// On the line `a = b + c/2 + 1/4` with its side conditions.
    BoundaryA,
    /// On the line `c = a - 1` with its side conditions.
    BoundaryC,
    /// The single point `(a, b) = (1/2, 1)` on `c = a - 1`: only `>= 0` holds.
    NonnegOnly,
    Outside,
}

impl OmegaClass {
    /// True when the classification certifies strict positivity of Omega.
    pub fn is_positive(self) -> bool {
        matches!(self, OmegaClass::Interior | OmegaClass::BoundaryA | OmegaClass::BoundaryC)
    }
}

/// Necessary conditions for nonnegativity of `1F2(a; b, c; -x^2/4)`:
/// `b > a`, `c > a` and `b + c >= 3a + 1/2`.
pub fn onef2_necessity<R: Real>(a: R, b: R, c: R) -> bool {
    b > a && c > a && b + c >= R::lit(3.0) * a + R::lit(0.5)
}

/// Newton-diagram sufficiency: `(b, c)` lies in the closed convex hull of the
/// upper-right quadrants anchored at `(a + 1/2, 2a)` and `(2a, a + 1/2)`.
/// Inside the diagram `1F2(a; b, c; -x^2/4) >= 0`, strictly unless `(b, c)`
/// is one of the two anchors.
pub fn newton_contains<R: Real>(a: R, b: R, c: R) -> bool {
    let p = a + R::lit(0.5);
    let q = a + a;
    let m = p.min(q);
    b >= m && c >= m && b + c >= R::lit(3.0) * a + R::lit(0.5)
}

/// Membership in the integral-plane regions `A`, `R`, `S`, `P`, `O`.
///
/// `lambda` must be supplied exactly for `S` and `O`.
pub fn integral_region_contains<R: Real>(
    region: RegionId,
    beta: R,
    alpha: R,
    lambda: Option<R>,
) -> Result<bool> {
    let needs_lambda = matches!(region, RegionId::S | RegionId::O);
    if needs_lambda && lambda.is_none() {
        return Err(Error::MissingParameter("regions S and O need lambda"));
    }
    if !needs_lambda && lambda.is_some() {
        return Err(Error::UnexpectedParameter("only regions S and O take lambda"));
    }
    let half = R::lit(0.5);
    let one = R::one();
    Ok(match region {
        RegionId::A => {
            beta > -half && -beta - one < alpha && alpha <= beta.min(R::lit(1.5))
        }
        RegionId::R => {
            (beta > -one && -beta - one < alpha && alpha <= R::zero())
                || (beta > R::zero() && R::zero() < alpha && alpha <= beta.min(half))
        }
        RegionId::S => {
            let lam = lambda.unwrap();
            (beta > -one && -beta - one < alpha && alpha <= R::zero())
                || (beta > R::zero() && alpha <= beta.min(lam + half))
        }
        RegionId::P => {
            beta > -one
                && -beta - one < alpha
                && alpha <= (beta + one).min(half * (beta + R::lit(1.5))).min(R::lit(1.5))
        }
        RegionId::O => {
            let lam = lambda.unwrap();
            if lam < one {
                beta > -one
                    && -beta + one - lam < alpha
                    && alpha <= (half * (beta + lam + half)).min(lam + half)
            } else {
                beta > -one
                    && -beta - one < alpha
                    && alpha <= (beta + one).min(half * (beta + lam + half)).min(lam + half)
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "{} is not an integral-plane region",
                region.name()
            )))
        }
    })
}

/// Classify `2F3` parameters against the simultaneous positivity conditions:
///
/// ```text
/// c/2 + 3/4 <= a < min(c + 1, b + c/2 + 1/4)
/// -b + c/2 + 5/4 < 2a <= b + 3c/2 + 3/4
/// ```
///
/// plus the two boundary lines (see [`OmegaClass`]). Preconditions: `a > 0`,
/// `b > 0`, `c > -1`.
pub fn omega_classify<R: Real>(a: R, b: R, c: R) -> OmegaClass {
    let half = R::lit(0.5);
    let quarter = R::lit(0.25);
    let one = R::one();
    let two = R::lit(2.0);

    if c == a - one {
        // boundary c = a - 1
        return if a == half && b == one {
            OmegaClass::NonnegOnly
        } else if b >= one.max(half * (a + R::lit(1.5))) {
            OmegaClass::BoundaryC
        } else {
            OmegaClass::Outside
        };
    }
    if a == b + c * half + quarter {
        // boundary a = b + c/2 + 1/4
        return if half < b && b <= c * half + quarter && c > half {
            OmegaClass::BoundaryA
        } else {
            OmegaClass::Outside
        };
    }
    let first = c * half + R::lit(0.75) <= a && a < (c + one).min(b + c * half + quarter);
    let second = -b + c * half + R::lit(1.25) < two * a && two * a <= b + R::lit(1.5) * c + R::lit(0.75);
    if first && second {
        OmegaClass::Interior
    } else {
        OmegaClass::Outside
    }
}

/// The `b = 1` specialization: true iff `(a, c)` satisfies one of
///
/// ```text
/// (i)   c/2 + 3/4 <= a < min(c + 1, c/2 + 5/4)  and  c/2 + 1/4 < 2a <= 3c/2 + 7/4
/// (ii)  a = c/2 + 5/4 and c >= 3/2
/// (iii) c = a - 1 and 0 < a <= 1/2
/// ```
pub fn omega_b1_contains<R: Real>(a: R, c: R) -> bool {
    let half = R::lit(0.5);
    let quarter = R::lit(0.25);
    let one = R::one();
    let two = R::lit(2.0);
    let i = c * half + R::lit(0.75) <= a
        && a < (c + one).min(c * half + R::lit(1.25))
        && c * half + quarter < two * a
        && two * a <= R::lit(1.5) * c + R::lit(1.75);
    let ii = a == c * half + R::lit(1.25) && c >= R::lit(1.5);
    let iii = c == a - one && R::zero() < a && a <= half;
    i || ii || iii
}

/// Membership in the RBF-plane regions `B_n`, `P_n`, `O_n`, `R_n`, `S_n`
/// for dimension `n >= 1`. `rho` must be supplied exactly for `O_n` and `S_n`.
pub fn rbf_region_contains<R: Real>(
    region: RegionId,
    n: u32,
    lambda: R,
    alpha: R,
    rho: Option<R>,
) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("dimension n must be >= 1".into()));
    }
    let needs_rho = matches!(region, RegionId::On | RegionId::Sn);
    if needs_rho && rho.is_none() {
        return Err(Error::MissingParameter("regions O_n and S_n need rho"));
    }
    if !needs_rho && rho.is_some() {
        return Err(Error::UnexpectedParameter("only regions O_n and S_n take rho"));
    }
    let half = R::lit(0.5);
    let one = R::one();
    let two = R::lit(2.0);
    let nf = R::lit(n as f64);
    let lower_n = -(nf + two) * half; // -(n+2)/2

    Ok(match region {
        RegionId::Bn => match n {
            1 => {
                lambda > -half
                    && -one < alpha
                    && alpha <= (lambda - half).min(lambda * half)
            }
            2 => {
                lambda > -half
                    && -one < alpha
                    && alpha <= (half * (lambda - half)).min(lambda - half)
            }
            3 => lambda >= R::zero() && -one < alpha && alpha <= half * (lambda - one),
            _ => {
                lambda > (nf - R::lit(5.0)) * half
                    && -one < alpha
                    && alpha <= half * (lambda - (nf - one) * half)
            }
        },
        RegionId::Pn => {
            let b1 = R::lit(0.25) * (R::lit(3.0) * lambda - (nf + one) * half);
            let b2 = half * (lambda - (nf - one) * half);
            lambda > -one && lower_n < alpha && alpha <= b1.min(b2)
        }
        RegionId::On => {
            let r = rho.unwrap();
            let b1 = lambda;
            let b2 = R::lit(0.25) * (R::lit(3.0) * lambda - (nf + R::lit(3.0)) * half + r);
            let b3 = half * (lambda - (nf + one) * half + r);
            lambda > -one && lower_n < alpha && alpha <= b1.min(b2).min(b3)
        }
        RegionId::Rn => {
            if n == 1 {
                let low = (lambda - R::lit(1.5)) * half;
                (lambda > -one && R::lit(-1.5) < alpha && alpha <= low)
                    || (lambda > -half
                        && low < alpha
                        && alpha <= (lambda - half).min(half * (lambda - one)))
            } else {
                lambda > -one
                    && lower_n < alpha
                    && alpha <= (lambda - half).min(half * (lambda - (nf + one) * half))
            }
        }
        RegionId::Sn => {
            let r = rho.unwrap();
            if n == 1 {
                let low = (lambda - R::lit(1.5)) * half;
                (lambda > -one && R::lit(-1.5) < alpha && alpha <= low)
                    || (lambda > -half
                        && low < alpha
                        && alpha <= (lambda - half).min(half * (lambda - one + r)))
            } else {
                lambda > -one
                    && lower_n < alpha
                    && alpha <= (lambda - half).min(half * (lambda - (nf + one) * half + r))
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "{} is not an RBF-plane region",
                region.name()
            )))
        }
    })
}

/// Simplified form of `P_n` valid for `n >= 5`, used as a consistency check:
/// the second bound is always the binding one there.
pub fn pn_simplified_contains<R: Real>(n: u32, lambda: R, alpha: R) -> bool {
    debug_assert!(n >= 5);
    let half = R::lit(0.5);
    let nf = R::lit(n as f64);
    lambda > -R::one()
        && -(nf + R::lit(2.0)) * half < alpha
        && alpha <= half * (lambda - (nf - R::one()) * half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necessity_examples() {
        assert!(onef2_necessity(1.0_f64, 2.0, 2.0));
        assert!(!onef2_necessity(1.0_f64, 1.6, 1.6));
        // degenerate anchor at a = 1/2: both diagram points coincide at (1, 1)
        assert!(onef2_necessity(0.5_f64, 1.0, 1.0));
    }

    #[test]
    fn newton_examples() {
        assert!(newton_contains(1.0_f64, 2.0, 2.0));
        // an anchor point itself is in the closed diagram
        assert!(newton_contains(1.0_f64, 1.5, 2.0));
        // below the smaller anchor coordinate
        assert!(!newton_contains(1.0_f64, 1.4, 2.2));
    }

    #[test]
    fn newton_brute_force_hull_oracle() {
        // independent oracle: (b,c) is in the hull iff it dominates some convex
        // combination of the two anchors. The combination parameter runs on a
        // grid, so allow slack one grid cell wide; the dyadic sample lattice
        // keeps every true margin far larger than the slack.
        fn hull_oracle(a: f64, b: f64, c: f64) -> bool {
            let (p1, q1) = (a + 0.5, 2.0 * a);
            let (p2, q2) = (2.0 * a, a + 0.5);
            let slack = 1e-3 * (p2 - p1).abs().max(1e-9);
            (0..=1000).any(|i| {
                let th = i as f64 / 1000.0;
                b >= th * p1 + (1.0 - th) * p2 - slack && c >= th * q1 + (1.0 - th) * q2 - slack
            })
        }
        for &a in &[0.25, 0.5, 1.0, 1.75] {
            for ib in 1..=40 {
                for ic in 1..=40 {
                    let b = 0.125 * ib as f64;
                    let c = 0.125 * ic as f64;
                    assert_eq!(
                        newton_contains(a, b, c),
                        hull_oracle(a, b, c),
                        "a={a} b={b} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn newton_implies_necessity() {
        for ia in 1..=20 {
            let a = 0.15 * ia as f64;
            for ib in 0..50 {
                for ic in 0..50 {
                    let b = 0.1 + 0.12 * ib as f64;
                    let c = 0.1 + 0.12 * ic as f64;
                    if newton_contains(a, b, c) {
                        assert!(onef2_necessity(a, b, c), "a={a} b={b} c={c}");
                    }
                }
            }
        }
    }

    #[test]
    fn integral_region_examples() {
        use RegionId::*;
        assert!(integral_region_contains(R, 0.0_f64, -0.5, None).unwrap());
        assert!(!integral_region_contains(R, 0.25_f64, 0.5, None).unwrap());
        // trapezoid vertex (-1/2, 1/2) sits on the boundary alpha = (beta+3/2)/2
        assert!(integral_region_contains(P, -0.5_f64, 0.5, None).unwrap());
        assert!(integral_region_contains(A, 1.0_f64, 1.0, None).unwrap());
        // S and O need lambda
        assert!(integral_region_contains(S, 1.0_f64, 0.5, None).is_err());
        assert!(integral_region_contains(O, 1.0_f64, 0.5, None).is_err());
        assert!(integral_region_contains(R, 0.0_f64, -0.5, Some(1.0)).is_err());
        assert!(integral_region_contains(S, 1.0_f64, 1.0, Some(0.5)).unwrap());
        // O with lambda < 1 has the raised lower bound -beta + 1 - lambda
        assert!(!integral_region_contains(O, 1.0_f64, -0.6, Some(0.5)).unwrap());
        assert!(integral_region_contains(O, 1.0_f64, 0.9, Some(0.5)).unwrap());
    }

    #[test]
    fn region_r_strictness() {
        // alpha = 0 belongs to the first branch; beta = 0 kills the second
        assert!(integral_region_contains(RegionId::R, 0.0_f64, 0.0, None).unwrap());
        assert!(!integral_region_contains(RegionId::R, 0.0_f64, 0.1, None).unwrap());
        // unexplored parallelogram stays outside: (beta, alpha) = (0.3, 0.4)
        assert!(!integral_region_contains(RegionId::R, 0.3_f64, 0.4, None).unwrap());
    }

    #[test]
    fn omega_classify_examples() {
        assert_eq!(omega_classify(1.75_f64, 1.0, 2.0), OmegaClass::Interior);
        assert_eq!(omega_classify(0.5_f64, 1.0, -0.5), OmegaClass::NonnegOnly);
        assert_eq!(omega_classify(3.0_f64, 0.25, 0.0), OmegaClass::Outside);
        // boundary a = b + c/2 + 1/4 with side conditions
        let (b, c) = (0.8_f64, 1.4);
        let a = b + c / 2.0 + 0.25;
        assert_eq!(omega_classify(a, b, c), OmegaClass::BoundaryA);
        // c = a - 1 with b large enough
        assert_eq!(omega_classify(1.5_f64, 2.0, 0.5), OmegaClass::BoundaryC);
        assert_eq!(omega_classify(1.5_f64, 0.9, 0.5), OmegaClass::Outside);
    }

    #[test]
    fn omega_b1_examples() {
        // (1, 1/2) satisfies condition (i): 1 in [1, 1.5), 0.5 < 2 <= 2.5
        assert!(omega_b1_contains(1.0_f64, 0.5));
        // (1, 0.6) fails (i)'s lower bound c/2 + 3/4 = 1.05 > 1
        assert!(!omega_b1_contains(1.0_f64, 0.6));
        assert!(omega_b1_contains(2.0_f64, 1.5)); // (ii)
        assert!(omega_b1_contains(0.5_f64, -0.5)); // (iii)
    }

    #[test]
    fn omega_b1_matches_classification() {
        // apart from the nonnegative-only point, the b = 1 condition system
        // coincides with a positive classification
        for ia in 1..=60 {
            for ic in -10..=60 {
                let a = 0.125 * ia as f64;
                let c = 0.125 * ic as f64;
                if a == 0.5 && c == -0.5 {
                    continue;
                }
                let cor = omega_b1_contains(a, c);
                let cls = omega_classify(a, 1.0, c).is_positive();
                assert_eq!(cor, cls, "a={a} c={c}");
            }
        }
    }

    #[test]
    fn rbf_region_examples() {
        use RegionId::*;
        assert!(rbf_region_contains(Pn, 1, 1.0_f64, 0.25, None).unwrap());
        assert!(!rbf_region_contains(Bn, 1, 1.0_f64, 0.75, None).unwrap());
        assert!(!rbf_region_contains(Pn, 1, 1.0_f64, 0.75, None).unwrap());
        assert!(rbf_region_contains(Pn, 1, 1.0_f64, 0.5, None).unwrap());
        // Wendland instance: n = 1, rho = (n+1)/2 + sigma with sigma = 1, lambda = alpha = 0
        assert!(rbf_region_contains(On, 1, 0.0_f64, 0.0, Some(2.0)).unwrap());
        // rho bookkeeping
        assert!(rbf_region_contains(On, 1, 0.0_f64, 0.0, None).is_err());
        assert!(rbf_region_contains(Rn, 2, 1.0_f64, 0.0, Some(1.0)).is_err());
    }

    #[test]
    fn bn_subset_pn_rejection_sampling() {
        // 10^4 deterministic low-discrepancy points per dimension
        for n in 1..=5u32 {
            let mut inside = 0;
            for i in 0..10_000 {
                let u = (i as f64 * 0.754_877_666_246_692_9) % 1.0;
                let v = (i as f64 * 0.569_840_290_998_053_2) % 1.0;
                let lambda = -1.0 + 8.0 * u;
                let alpha = -4.0 + 8.0 * v;
                if rbf_region_contains(RegionId::Bn, n, lambda, alpha, None).unwrap() {
                    inside += 1;
                    assert!(
                        rbf_region_contains(RegionId::Pn, n, lambda, alpha, None).unwrap(),
                        "B_{n} point ({lambda}, {alpha}) escaped P_{n}"
                    );
                }
            }
            assert!(inside > 100, "sampler missed B_{n}");
        }
    }

    #[test]
    fn a_subset_p_sampling() {
        let mut inside = 0;
        for i in 0..10_000 {
            let u = (i as f64 * 0.754_877_666_246_692_9) % 1.0;
            let v = (i as f64 * 0.569_840_290_998_053_2) % 1.0;
            let beta = -1.0 + 6.0 * u;
            let alpha = -3.0 + 6.0 * v;
            if integral_region_contains(RegionId::A, beta, alpha, None).unwrap() {
                inside += 1;
                assert!(integral_region_contains(RegionId::P, beta, alpha, None).unwrap());
            }
        }
        assert!(inside > 100);
    }

    #[test]
    fn p_halfline_monotone() {
        // (beta, alpha) in P implies (beta + d, alpha - d) in P
        for i in 0..2_000 {
            let u = (i as f64 * 0.754_877_666_246_692_9) % 1.0;
            let v = (i as f64 * 0.569_840_290_998_053_2) % 1.0;
            let beta = -1.0 + 5.0 * u;
            let alpha = -3.0 + 5.0 * v;
            if integral_region_contains(RegionId::P, beta, alpha, None).unwrap() {
                for d in [0.1, 0.5, 1.0] {
                    assert!(
                        integral_region_contains(RegionId::P, beta + d, alpha - d, None).unwrap(),
                        "({beta}, {alpha}) shifted by {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn pn_simplification_for_high_dimension() {
        for n in 5..=8u32 {
            for i in 0..3_000 {
                let u = (i as f64 * 0.754_877_666_246_692_9) % 1.0;
                let v = (i as f64 * 0.569_840_290_998_053_2) % 1.0;
                let lambda = -1.0 + 7.0 * u;
                let alpha = -6.0 + 9.0 * v;
                assert_eq!(
                    rbf_region_contains(RegionId::Pn, n, lambda, alpha, None).unwrap(),
                    pn_simplified_contains(n, lambda, alpha),
                    "n={n} ({lambda}, {alpha})"
                );
            }
        }
    }

    #[test]
    fn predicates_are_deterministic() {
        for _ in 0..3 {
            assert!(integral_region_contains(RegionId::P, -0.5_f64, 0.5, None).unwrap());
            assert_eq!(omega_classify(1.75_f64, 1.0, 2.0), OmegaClass::Interior);
        }
    }

    #[test]
    fn f32_instantiation() {
        assert!(integral_region_contains(RegionId::R, 0.0_f32, -0.5, None).unwrap());
        assert!(newton_contains(1.0_f32, 2.0, 2.0));
    }
}
