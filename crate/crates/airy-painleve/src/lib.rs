//! Airy function, the Hastings-McLeod solution of Painleve II and the
//! Tracy-Widom distributions for the three classical ensembles.
//!
//! `F_GUE(s) = exp(-int_s^inf (x - s) q(x)^2 dx)` with `q'' = 2 q^3 + x q`
//! and `q(x) ~ Ai(x)` as `x -> inf`. With `E(s) = (1/2) int_s^inf q`,
//! `F_GOE = sqrt(F_GUE) exp(-E)` and `F_GSE = sqrt(F_GUE) cosh(E)`.
//! [`airy_fredholm_det`] computes `F_GUE` independently as a Fredholm
//! determinant of the Airy kernel.

mod airy;
mod error;
mod fredholm;
mod painleve;
mod tracy_widom;

pub use airy::{airy_ai, airy_pair, AIRY_RANGE};
pub use error::AiryError;
pub use fredholm::{airy_fredholm_det, airy_fredholm_det_with, FredholmOptions};
pub use painleve::{hastings_mcleod, HastingsMcLeodSolution};
pub use tracy_widom::{tw_cdf, TWEnsemble, TracyWidom, TW_RANGE};
