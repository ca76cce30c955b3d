use skew_pfaffian::PfaffianError;
use thiserror::Error;

use crate::Block;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FiniteKernelError {
    #[error("need 1 <= m <= n, got n={n}, m={m}")]
    Shape { n: usize, m: usize },
    #[error("q must lie in (0, 1), got {0}")]
    Parameter(f64),
    #[error("{block:?} contour radii violate {rule}")]
    Radius { block: Block, rule: &'static str },
    #[error("{block:?} entry has imaginary part {im:.3e}")]
    Imaginary { block: Block, im: f64 },
    #[error("{block:?} quadrature did not settle by {nodes} nodes (last change {delta:.3e})")]
    Quadrature { block: Block, nodes: usize, delta: f64 },
    #[error("the half-integer grid is required by the deformed-contour evaluator")]
    GridPlacement,
    #[error("node doubling did not settle by {nodes} nodes (last change {delta:.3e})")]
    Nodes { nodes: usize, delta: f64 },
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
}
