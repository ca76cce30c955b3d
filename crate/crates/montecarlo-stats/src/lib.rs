//! Ensembles of geometric last passage times and the statistics used to
//! compare them with the Tracy-Widom laws.

mod ecdf;
mod ensemble;
mod error;
mod histogram;
mod rescale;
mod tracy;

pub use ecdf::{ks_distance, Ecdf};
pub use ensemble::{run_ensemble, EnsembleConfig, RESOURCE_CAP};
pub use error::StatsError;
pub use histogram::Histogram;
pub use rescale::{rescale, RescaleMode, Rescaling};
pub use tracy::{ks_to_tracy_widom, tw_cdf_total, EnsembleDistance};
