use lattice_domain::{sample_weights_in_stream, DomainShape, GeometricParams};
use lpp_engine::{lpp, PathFamily};
use rayon::prelude::*;

use crate::StatsError;

/// Largest `samples * rows * cols` accepted by [`run_ensemble`].
pub const RESOURCE_CAP: u128 = 10_000_000_000;

/// Independent samples of one last passage time on `shape`, every cell
/// geometric with ratio `q` (diagonal included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleConfig {
    pub shape: DomainShape,
    pub q: f64,
    pub samples: usize,
    pub seed: u64,
    pub path: PathFamily,
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<(), StatsError> {
        if self.samples == 0 {
            return Err(StatsError::NoSamples);
        }
        let cells = self.shape.rows() * self.shape.cols();
        if self.samples as u128 * cells as u128 > RESOURCE_CAP {
            return Err(StatsError::ResourceCap { samples: self.samples, cells, cap: RESOURCE_CAP });
        }
        if self.path == PathFamily::AntiDiagonal && self.shape.rows() != self.shape.cols() {
            return Err(StatsError::Lpp(lpp_engine::LppError::NotSquare {
                rows: self.shape.rows(),
                cols: self.shape.cols(),
            }));
        }
        Ok(())
    }
}

/// Sample `i` draws its weights from keystream `i` under `seed`, so the
/// output does not depend on the number of worker threads.
pub fn run_ensemble(cfg: &EnsembleConfig) -> Result<Vec<u64>, StatsError> {
    cfg.validate()?;
    let params = GeometricParams::constant(cfg.q, cfg.shape.rows(), cfg.shape.cols(), true)?;
    (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let w = sample_weights_in_stream(&cfg.shape, &params, cfg.seed, i)?;
            Ok(lpp(&w, cfg.path)?)
        })
        .collect()
}
