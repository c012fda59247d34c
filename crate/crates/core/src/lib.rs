//! Positivity of Bessel integrals of the form
//! `int_0^x (x^mu - t^mu)^lambda t^alpha J_beta(t) dt`, the hypergeometric
//! positivity criteria behind them, and Buhmann's compactly supported radial
//! basis functions as positivity-certified interpolation kernels.
//!
//! Everything numeric is generic over the scalar type through [`real::Real`]
//! (`f64` or `f32`); the `*64` aliases at the crate root fix the production
//! scalar. Terminating hypergeometric sums additionally run over exact
//! rationals via [`ring::RingScalar`].
//!
//! ```
//! use besselpos_core::integrals::{scan_positivity, PositivityVerdict, ScanConfig};
//! use besselpos_core::IntegralParams64;
//!
//! // alpha too large: the weightless integral must go negative somewhere
//! let p = IntegralParams64::new(1.0, 0.0, 1.5, -0.5).unwrap();
//! match scan_positivity(&p, &ScanConfig::default()).unwrap() {
//!     PositivityVerdict::Refuted { x, value, .. } => {
//!         assert!((x - 2.35).abs() < 1e-12 && value < 0.0);
//!     }
//!     other => panic!("expected a refutation, got {other:?}"),
//! }
//! ```

pub mod dd;
pub mod error;
pub mod integrals;
pub mod quad;
pub mod rbf;
pub mod real;
pub mod regions;
pub mod ring;
pub mod sos;
pub mod special;

pub use error::{Error, Result};
pub use real::Real;

// concrete f64 aliases
pub type EvalResult64 = special::EvalResult<f64>;
pub type OneF2Params64 = special::OneF2Params<f64>;
pub type TwoF3Params64 = special::TwoF3Params<f64>;
pub type QuadResult64 = quad::QuadResult<f64>;
pub type IntegralParams64 = integrals::IntegralParams<f64>;
pub type PositivityVerdict64 = integrals::PositivityVerdict<f64>;
pub type ScanConfig64 = integrals::ScanConfig<f64>;
pub type OmegaParams64 = sos::OmegaParams<f64>;
pub type RbfSpec64 = rbf::RbfSpec<f64>;
pub type PointSet64 = rbf::PointSet<f64>;
