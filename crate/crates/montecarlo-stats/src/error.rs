use airy_painleve::AiryError;
use lattice_domain::DomainError;
use lpp_engine::LppError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("{samples} samples over {cells} cells exceed the cap of {cap} cell draws")]
    ResourceCap { samples: usize, cells: usize, cap: u128 },
    #[error("need at least one sample")]
    NoSamples,
    #[error("unknown rescaling mode {0:?} (expected antidiag_goe, corner_gse or truncated_gen)")]
    UnknownMode(String),
    #[error("value {0} is not finite")]
    NonFinite(f64),
    #[error("histogram needs lo < hi and at least one bin (lo = {lo}, hi = {hi}, bins = {bins})")]
    Bins { lo: f64, hi: f64, bins: usize },
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Lpp(#[from] LppError),
    #[error(transparent)]
    TracyWidom(#[from] AiryError),
}
