//! Exact law of the corner-to-corner last passage time on the truncated
//! staircase `{(i, j) : j <= min(i, m)}`, `m <= n`, with i.i.d. geometric
//! weights of parameter `q`.
//!
//! `P(L <= k) = Pf(J - K)` restricted to the half-integer grid above `k`.
//! The kernel is a double contour integral of
//! `F(z) = (1 - s z)^{-m} (1 - s/z)^{n+1}`, `s = sqrt(q)`.
//!
//! Two evaluators are provided. [`k11`], [`k12`] and [`k22`] sum the
//! integrand on the fixed circles of a [`FiniteKernelConfig`]. They are exact
//! but lose precision once `n` exceeds a few dozen. [`BatchKernel`]
//! deforms the contours to keep the integrand bounded, and is what
//! [`exact_cdf`] uses.

mod batch;
mod cdf;
mod circle;
mod config;
mod error;
mod literal;

pub use batch::BatchKernel;
pub use cdf::{exact_cdf, exact_cdf_detailed, exact_cdf_table, CdfOptions, CdfRow, ExactCdf};
pub use circle::CircleQuadrature;
pub use config::{Block, BlockRadii, FiniteKernelConfig};
pub use error::FiniteKernelError;
pub use literal::{k11, k12, k22, LiteralKernel};
