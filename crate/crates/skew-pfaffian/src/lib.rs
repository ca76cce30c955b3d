//! Pfaffians and Fredholm Pfaffians.
//!
//! Kernel matrices use the interleaved layout: for grid points `x_i, x_j`
//! the `2 x 2` block at rows `2i, 2i+1` and columns `2j, 2j+1` is
//! `[[K11(x_i,x_j), K12(x_i,x_j)], [-K12(x_j,x_i), K22(x_i,x_j)]]`.

mod assemble;
mod error;
mod gauss;
mod pfaffian;
mod schedule;

pub use assemble::{
    assemble_continuous, assemble_discrete, discrete_grid, Blocks, FredholmSign, GridPlacement, KernelEntry,
    SkewKernel, SkewKernelMatrix, ASSEMBLY_DEFECT_LIMIT,
};
pub use error::PfaffianError;
pub use gauss::{gauss_legendre, gauss_legendre_on};
pub use pfaffian::{pfaffian, pfaffian_in_place, symplectic_j, SKEW_TOLERANCE};
pub use schedule::{
    continuous_fredholm, discrete_fredholm, discrete_fredholm_from, ContinuousSchedule, Converged, DiscreteSchedule,
};
