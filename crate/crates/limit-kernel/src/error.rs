use skew_pfaffian::PfaffianError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LimitKernelError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("invalid contour: {0}")]
    Contour(String),
    #[error("contour constraint violated: {0}")]
    Constraint(String),
    #[error("no truncation radius found for the ray contour at {apex} with angle {angle}")]
    Radius { apex: f64, angle: f64 },
    #[error("block {block} has imaginary part {im:.3e}")]
    Imaginary { block: &'static str, im: f64 },
    #[error("{what} did not settle: change {delta:.3e} at {size}")]
    Quadrature { what: &'static str, size: usize, delta: f64 },
    #[error("non-finite kernel value in block {0}")]
    NonFinite(&'static str),
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
}
