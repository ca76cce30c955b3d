use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{DomainError, DomainShape, GeometricParams, WeightMatrix};

/// Inverse-CDF geometric draw: `floor(ln u / ln p)`, so `P(k) = (1-p) p^k`.
#[inline]
pub fn geometric_from_uniform(p: f64, u: f64) -> u64 {
    if p <= 0.0 {
        return 0;
    }
    let k = (u.ln() / p.ln()).floor();
    if k.is_finite() && k >= 0.0 {
        k as u64
    } else {
        0
    }
}

#[inline]
fn open_unit(bits: u64) -> f64 {
    ((bits >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform on (0,1) attached to cell `index` (row-major among active cells)
/// of stream `stream` under `seed`. Each cell owns one 64-bit word of the
/// keystream, so the value does not depend on how cells are visited.
pub fn cell_uniform(seed: u64, stream: u64, index: u64) -> f64 {
    let mut rng = stream_rng(seed, stream);
    rng.set_word_pos(2 * index as u128);
    open_unit(rng.next_u64())
}

pub fn sample_weights(shape: &DomainShape, params: &GeometricParams, seed: u64) -> Result<WeightMatrix, DomainError> {
    sample_weights_in_stream(shape, params, seed, 0)
}

/// Samples every active cell from its own keystream position. Different
/// `stream` values give independent matrices under one seed.
pub fn sample_weights_in_stream(
    shape: &DomainShape,
    params: &GeometricParams,
    seed: u64,
    stream: u64,
) -> Result<WeightMatrix, DomainError> {
    params.check_shape(shape)?;
    let mut rng = stream_rng(seed, stream);
    let entries =
        shape.cells().map(|(i, j)| geometric_from_uniform(params.ratio(i, j), open_unit(rng.next_u64()))).collect();
    WeightMatrix::from_entries(*shape, entries)
}
