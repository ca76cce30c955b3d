//! Limiting kernels on ray contours and the distribution functions
//! `F_{u, infinity}` and `F_{u, v}` as continuous Fredholm Pfaffians.
//!
//! All Pfaffians are `Pf(J - K)` on `(s, s + L)` with Gauss-Legendre nodes;
//! see [`f_u_inf_detailed`] for the `u = 0` determinant form.

mod contour;
mod erfcx;
mod error;
mod fredholm;
mod kernel;
mod scaling;

pub use contour::{truncation_radius, RayContour, TRUNCATION_DROP};
pub use erfcx::erfcx;
pub use error::LimitKernelError;
pub use fredholm::{
    f_u_inf, f_u_inf_detailed, f_uv, f_uv_detailed, LimitCdf, LimitOptions, UInfKernel, UvKernel, S_RANGE,
};
pub use kernel::{
    gaussian_contour_integral, gaussian_single_integral, ku_inf_block, ku_inf_k22_correction, ku_inf_matrix, kuv_block,
    kuv_k22_stable, kuv_matrix, LimitKernelConfig, UInfBlock, UvBlock, DEFAULT_RAY_NODES,
};
pub use scaling::lattice_to_kernel_u;
