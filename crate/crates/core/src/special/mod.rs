//! Real-parameter special functions: log-gamma, the generalized Wright
//! function, Mittag-Leffler and Prabhakar functions, and the generalized
//! Bessel function `W_{p,b,c}`.
//!
//! All evaluators are pure functions of their arguments.

mod bessel;
mod gamma;
mod mittag_leffler;
pub(crate) mod series;
mod wright;

pub(crate) use bessel::bessel_core;
pub use bessel::{bessel_w, BesselParams};
pub(crate) use gamma::ln_gamma_pos;
pub use gamma::{gamma, log_beta, log_gamma};
pub use mittag_leffler::{mittag_leffler, prabhakar, Z_MAX};
pub use series::MAX_TERMS;
pub use wright::{wright_eval, WrightSeriesSpec};
