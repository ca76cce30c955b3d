//! Lattice domains for last passage percolation with geometric weights.
//!
//! A [`DomainShape`] fixes which cells of an `n x m` box carry weights,
//! [`GeometricParams`] fixes the per-cell geometric parameters and
//! [`sample_weights`] draws a [`WeightMatrix`] reproducibly from a seed.

mod error;
mod params;
mod sampling;
mod scaling;
mod shape;
mod weights;

pub use error::{DomainError, WeightCsvError};
pub use params::GeometricParams;
pub use sampling::{cell_uniform, geometric_from_uniform, sample_weights, sample_weights_in_stream};
pub use scaling::ScalingConstants;
pub use shape::{DomainKind, DomainShape};
pub use weights::WeightMatrix;

pub(crate) fn check_open_unit(q: f64) -> Result<(), DomainError> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(DomainError::ParameterOutOfRange(q))
    }
}
