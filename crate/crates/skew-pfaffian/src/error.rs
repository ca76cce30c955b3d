use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PfaffianError {
    #[error("matrix is {rows} x {cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("Pfaffian needs even dimension, got {0}")]
    OddDimension(usize),
    #[error("matrix is not skew-symmetric (defect {defect:.3e})")]
    Asymmetric { defect: f64 },
    #[error("kernel evaluation inconsistent: skew defect {defect:.3e} after assembly")]
    AssemblyDefect { defect: f64 },
    #[error("kernel produced a non-finite entry")]
    NonFinite,
    #[error("grid needs at least one point")]
    EmptyGrid,
    #[error("invalid window: start {start}, length {length}")]
    InvalidWindow { start: f64, length: f64 },
    #[error("no convergence: last change {delta:.3e} at size {size}")]
    NonConvergence { delta: f64, size: usize, value: f64 },
}
