use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AiryError {
    #[error("argument {x} outside [{lo}, {hi}]")]
    OutOfRange { x: f64, lo: f64, hi: f64 },
    #[error("invalid solver setting: {0}")]
    Setting(String),
    #[error("Newton iteration stalled after {iterations} steps (update {update:.3e})")]
    Newton { iterations: usize, update: f64 },
    #[error("ODE residual {residual:.3e} above {limit:.1e}")]
    Residual { residual: f64, limit: f64 },
    #[error("solution not positive at x = {x}")]
    NotPositive { x: f64 },
    #[error("quadrature did not settle: change {delta:.3e} at {nodes} nodes")]
    Quadrature { nodes: usize, delta: f64 },
}
