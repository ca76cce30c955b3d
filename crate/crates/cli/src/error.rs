use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("self-test failed: {0}")]
    Selftest(String),
    #[error("replay differs from the manifest digests: {0}")]
    ReplayMismatch(String),
    #[error("manifest: {0}")]
    Manifest(#[from] crate::ManifestError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Manifest(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Selftest(_) => 4,
            CliError::ReplayMismatch(_) | CliError::Io { .. } => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

impl From<montecarlo_stats::StatsError> for CliError {
    fn from(e: montecarlo_stats::StatsError) -> Self {
        use montecarlo_stats::StatsError as E;
        match e {
            E::NonFinite(_) | E::TracyWidom(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<finite_kernel::FiniteKernelError> for CliError {
    fn from(e: finite_kernel::FiniteKernelError) -> Self {
        use finite_kernel::FiniteKernelError as E;
        match e {
            E::Shape { .. } | E::Parameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<limit_kernel::LimitKernelError> for CliError {
    fn from(e: limit_kernel::LimitKernelError) -> Self {
        use limit_kernel::LimitKernelError as E;
        match e {
            E::Parameter(_) | E::Contour(_) | E::Constraint(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<airy_painleve::AiryError> for CliError {
    fn from(e: airy_painleve::AiryError) -> Self {
        match e {
            airy_painleve::AiryError::OutOfRange { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<lattice_domain::DomainError> for CliError {
    fn from(e: lattice_domain::DomainError) -> Self {
        CliError::Usage(e.to_string())
    }
}
