//! Spectral machinery for forward and backward time-fractional evolution
//! problems ∂ₜᵅu = Au on a Hilbert space, 0 < α ≤ 1.
//!
//! The crate provides:
//! - [`mlf`]: Mittag-Leffler evaluation with error control plus
//!   complete-monotonicity and log-convexity checkers;
//! - [`specop`]: a catalog of self-adjoint, bounded-above operators as
//!   explicit eigensystems, with projection/synthesis between samples and
//!   spectral coefficients;
//! - [`evolve`]: the spectral forward solver and discrete fractional-calculus
//!   operators (L1 Caputo derivative, product-trapezoid fractional integral);
//! - [`backcast`]: reconstruction of earlier states from exact or noisy final
//!   data, with truncation and Tikhonov regularization;
//! - [`certify`]: numerical verification of the stability inequalities
//!   (logarithmic convexity, dissipation, Hölder bounds, noisy-data bounds),
//!   emitting machine-checkable certificates.

pub mod backcast;
pub mod certify;
pub mod ddreal;
pub mod error;
pub mod evolve;
pub mod mlf;
pub mod rng;
pub mod special;
pub mod specop;

pub use error::{Error, Result};
