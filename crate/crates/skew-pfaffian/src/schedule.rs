use log::debug;

use crate::{
    assemble_continuous, discrete_grid, Blocks, FredholmSign, GridPlacement, PfaffianError, SkewKernel,
    SkewKernelMatrix,
};

/// Result of a doubling schedule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Converged {
    pub value: f64,
    /// Grid points (discrete) or quadrature nodes (continuous) used.
    pub size: usize,
    /// Window length; zero for discrete grids.
    pub length: f64,
    /// Change from the previous step.
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteSchedule {
    pub m_start: usize,
    pub m_max: usize,
    pub tol: f64,
}

impl Default for DiscreteSchedule {
    fn default() -> Self {
        Self { m_start: 16, m_max: 256, tol: 1e-9 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuousSchedule {
    pub length_start: f64,
    pub length_step: f64,
    pub n_start: usize,
    pub n_max: usize,
    pub tol: f64,
}

impl Default for ContinuousSchedule {
    fn default() -> Self {
        Self { length_start: 12.0, length_step: 6.0, n_start: 32, n_max: 512, tol: 1e-7 }
    }
}

/// Doubles the grid size until `Pf(J -/+ K)` settles.
pub fn discrete_fredholm<K: SkewKernel + ?Sized>(
    kernel: &K,
    k: i64,
    placement: GridPlacement,
    sign: FredholmSign,
    schedule: &DiscreteSchedule,
) -> Result<Converged, PfaffianError> {
    let grid = discrete_grid(k, schedule.m_max, placement);
    discrete_fredholm_from(|m| Ok(kernel.blocks(&grid[..m])), &grid, sign, schedule)
}

/// As [`discrete_fredholm`], with blocks supplied per grid size. The grid
/// sizes are `m_start, 2 m_start, ...` capped at `m_max`; `grid` must hold
/// at least `m_max` points.
pub fn discrete_fredholm_from<F>(
    mut blocks_for: F,
    grid: &[f64],
    sign: FredholmSign,
    schedule: &DiscreteSchedule,
) -> Result<Converged, PfaffianError>
where
    F: FnMut(usize) -> Result<Blocks, PfaffianError>,
{
    let mut m = schedule.m_start.clamp(1, schedule.m_max);
    let mut prev: Option<f64> = None;
    loop {
        let blocks = blocks_for(m)?;
        let a = SkewKernelMatrix::from_blocks(&blocks, grid[..m].to_vec(), vec![1.0; m])?;
        let value = a.fredholm_pf(sign);
        if !value.is_finite() {
            return Err(PfaffianError::NonFinite);
        }
        if let Some(p) = prev {
            let delta = (value - p).abs();
            debug!("discrete Pf: M={m} value={value:.12e} delta={delta:.2e}");
            if delta < schedule.tol {
                return Ok(Converged { value, size: m, length: 0.0, delta });
            }
            if m >= schedule.m_max {
                return Err(PfaffianError::NonConvergence { delta, size: m, value });
            }
        }
        prev = Some(value);
        m = (2 * m).min(schedule.m_max);
    }
}

/// Doubles the node count and extends the window until `Pf(J -/+ K)` on
/// `(s, s + L)` settles.
pub fn continuous_fredholm<K: SkewKernel + ?Sized>(
    kernel: &K,
    s: f64,
    sign: FredholmSign,
    schedule: &ContinuousSchedule,
) -> Result<Converged, PfaffianError> {
    let mut n = schedule.n_start.max(1);
    let mut length = schedule.length_start;
    let mut prev: Option<f64> = None;
    loop {
        let value = assemble_continuous(kernel, s, length, n)?.fredholm_pf(sign);
        if !value.is_finite() {
            return Err(PfaffianError::NonFinite);
        }
        if let Some(p) = prev {
            let delta = (value - p).abs();
            debug!("continuous Pf: s={s} L={length} N={n} value={value:.12e} delta={delta:.2e}");
            if delta < schedule.tol {
                return Ok(Converged { value, size: n, length, delta });
            }
            if n >= schedule.n_max {
                return Err(PfaffianError::NonConvergence { delta, size: n, value });
            }
        }
        prev = Some(value);
        n = (2 * n).min(schedule.n_max);
        length += schedule.length_step;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::KernelEntry;

    // Pf(J - K) with only K12 = diag-like decaying entries: product of (1 - K12(x,x)).
    fn diagonal(x: f64, y: f64) -> KernelEntry {
        let k12 = if x == y { 0.5f64.powf(x + 0.5) } else { 0.0 };
        KernelEntry { k11: 0.0, k12, k22: 0.0 }
    }

    #[test]
    fn discrete_converges_to_product() {
        let c = discrete_fredholm(
            &diagonal,
            0,
            GridPlacement::HalfInteger,
            FredholmSign::Minus,
            &DiscreteSchedule::default(),
        )
        .unwrap();
        let want: f64 = (1..200).map(|i| 1.0 - 0.5f64.powi(i)).product();
        assert!((c.value - want).abs() < 1e-12, "{} vs {want}", c.value);
        assert_eq!(c.size, 64);
    }

    #[test]
    fn discrete_reports_nonconvergence() {
        let slow = |x: f64, y: f64| KernelEntry {
            k11: 0.0,
            k12: if x == y { 1.0 / (x + 2.0).powi(2) } else { 0.0 },
            k22: 0.0,
        };
        let r = discrete_fredholm(&slow, 0, GridPlacement::Integer, FredholmSign::Minus, &DiscreteSchedule::default());
        assert!(matches!(r, Err(PfaffianError::NonConvergence { size: 256, .. })));
    }

    #[test]
    fn continuous_smooth_kernel() {
        // rank-one K12 = e^{-x-y}: Pf(J - K) = 1 - int_s^inf e^{-2x} dx
        let k = |x: f64, y: f64| KernelEntry { k11: 0.0, k12: (-x - y).exp(), k22: 0.0 };
        let c = continuous_fredholm(&k, 0.0, FredholmSign::Minus, &ContinuousSchedule::default()).unwrap();
        assert!((c.value - 0.5).abs() < 1e-9, "{}", c.value);
    }
}
