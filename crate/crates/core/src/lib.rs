//! Generalized entropies and the pathway model.
//!
//! The crate collects four numerical toolkits that share one set of special
//! functions:
//!
//! * [`entropy`]: Shannon, Rényi, Havrda–Charvát, Tsallis and Mathai entropies
//!   for discrete distributions and gridded densities, Gaussian closed forms,
//!   and the pathway density that maximizes Mathai's entropy.
//! * [`dea`]: diffusion entropy analysis and variance scaling of time series.
//! * [`pathway`]: the pathway fractional integral operator, evaluated by
//!   quadrature and through closed-form Wright function images.
//! * [`kinetics`]: exponential, Mittag-Leffler and rate-mixture relaxation laws.
//!
//! Every closed form in the crate has an independent numeric counterpart
//! (quadrature or direct summation) that the test suite checks it against.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod dea;
pub mod entropy;
pub mod error;
pub mod kinetics;
mod linalg;
pub mod pathway;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
