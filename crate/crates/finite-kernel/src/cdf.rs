use log::{debug, warn};
use skew_pfaffian::{discrete_grid, Blocks, FredholmSign, GridPlacement, PfaffianError, SkewKernelMatrix};

use crate::config::check_shape;
use crate::{BatchKernel, FiniteKernelError};

/// Truncation and quadrature controls for [`exact_cdf_detailed`].
///
/// The window above level `k` is cut at the smallest `M >= min_window` for
/// which the expected number of points beyond `k + M`, the sum of the
/// one-point density `K12(x, x)`, is below `truncation_tol`. That sum bounds
/// the truncation error of the Pfaffian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfOptions {
    pub truncation_tol: f64,
    pub min_window: usize,
    pub max_window: usize,
    pub nodes_start: usize,
    pub nodes_max: usize,
    pub nodes_tol: f64,
}

impl Default for CdfOptions {
    fn default() -> Self {
        Self {
            truncation_tol: 1e-10,
            min_window: 16,
            max_window: 1024,
            nodes_start: 256,
            nodes_max: 4096,
            nodes_tol: 1e-10,
        }
    }
}

/// A CDF value with its convergence record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactCdf {
    pub k: i64,
    /// Clamped to `[0, 1]`.
    pub value: f64,
    /// Pfaffian before clamping.
    pub raw: f64,
    /// Grid points kept above `k`.
    pub grid_points: usize,
    /// Expected number of points beyond the kept window.
    pub truncation_bound: f64,
    /// Quadrature nodes per contour.
    pub nodes: usize,
    /// Largest change over all requested levels at the last node doubling.
    pub nodes_delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfRow {
    pub k: i64,
    pub cdf: f64,
    pub pmf: f64,
}

/// `P(L <= k)` for the staircase with `n` rows and `m <= n` columns.
pub fn exact_cdf(n: usize, m: usize, q: f64, k: i64) -> Result<f64, FiniteKernelError> {
    Ok(exact_cdf_detailed(n, m, q, &[k], &CdfOptions::default())?[0].value)
}

/// CDF values at each `k` in `ks`, sharing one kernel evaluation per node
/// count. Node counts double until every value moves by less than
/// `nodes_tol`.
pub fn exact_cdf_detailed(
    n: usize,
    m: usize,
    q: f64,
    ks: &[i64],
    opts: &CdfOptions,
) -> Result<Vec<ExactCdf>, FiniteKernelError> {
    check_shape(n, m, q)?;
    let mut out: Vec<ExactCdf> = ks
        .iter()
        .map(|&k| ExactCdf {
            k,
            value: 0.0,
            raw: 0.0,
            grid_points: 0,
            truncation_bound: 0.0,
            nodes: 0,
            nodes_delta: 0.0,
        })
        .collect();
    let live: Vec<i64> = ks.iter().copied().filter(|&k| k >= 0).collect();
    let Some(&k_min) = live.iter().min() else {
        return Ok(out);
    };
    let k_max = *live.iter().max().unwrap();

    let suggested = BatchKernel::new(n, m, q, 8)?.suggested_nodes(k_min as f64 + 0.5);
    let mut nodes = opts.nodes_start.max(suggested.next_power_of_two()).min(opts.nodes_max / 2).max(8);
    debug!("starting at N={nodes} (suggested {suggested})");
    let mut tail = 2 * opts.min_window.max(1);
    let mut prev: Option<Vec<f64>> = None;
    loop {
        let attempt = levels_at(n, m, q, &live, k_min, k_max, nodes, opts, &mut tail);
        let attempt = match attempt {
            Ok(a) => a,
            Err(e) => {
                debug!("N={nodes}: {e}");
                if nodes >= opts.nodes_max {
                    return Err(e);
                }
                prev = None;
                nodes *= 2;
                continue;
            }
        };
        let values: Vec<f64> = attempt.iter().map(|l| l.value).collect();
        if let Some(p) = &prev {
            let delta = values.iter().zip(p).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            debug!("N={nodes}: max change {delta:.2e}");
            if delta < opts.nodes_tol {
                let mut it = attempt.iter();
                for slot in out.iter_mut().filter(|s| s.k >= 0) {
                    let l = it.next().unwrap();
                    *slot = ExactCdf {
                        k: slot.k,
                        value: clamp_probability(l.value, slot.k),
                        raw: l.value,
                        grid_points: l.window,
                        truncation_bound: l.bound,
                        nodes,
                        nodes_delta: delta,
                    };
                }
                return Ok(out);
            }
            if nodes >= opts.nodes_max {
                return Err(FiniteKernelError::Nodes { nodes, delta });
            }
        }
        prev = Some(values);
        nodes *= 2;
    }
}

struct Level {
    value: f64,
    window: usize,
    bound: f64,
}

// Pfaffians for every level at one node count. The grid reaches `tail`
// points past the highest level; it is doubled until the one-point density
// has died out at its far end. `tail` carries over to the next node count.
#[allow(clippy::too_many_arguments)]
fn levels_at(
    n: usize,
    m: usize,
    q: f64,
    live: &[i64],
    k_min: i64,
    k_max: i64,
    nodes: usize,
    opts: &CdfOptions,
    tail: &mut usize,
) -> Result<Vec<Level>, FiniteKernelError> {
    let span = (k_max - k_min) as usize;
    let kernel = BatchKernel::new(n, m, q, nodes)?;
    let (grid, blocks, mass_above) = loop {
        *tail = (*tail).min(opts.max_window);
        let grid = discrete_grid(k_min, span + *tail, GridPlacement::HalfInteger);
        let blocks = kernel.try_blocks(&grid)?;
        // mass_above[i] = expected number of points at grid[i] or beyond
        let len = grid.len();
        let mut mass_above = vec![0.0; len + 1];
        for i in (0..len).rev() {
            mass_above[i] = mass_above[i + 1] + blocks.k12[(i, i)].abs();
        }
        // density over the last quarter of the grid must be negligible
        let quarter = len - *tail / 4;
        if mass_above[quarter] < opts.truncation_tol * 1e-2 {
            break (grid, blocks, mass_above);
        }
        if *tail >= opts.max_window {
            return Err(
                PfaffianError::NonConvergence { delta: mass_above[quarter], size: *tail, value: f64::NAN }.into()
            );
        }
        *tail *= 2;
    };
    let mut out = Vec::with_capacity(live.len());
    for &k in live {
        let off = (k - k_min) as usize;
        let mut window = opts.min_window.min(grid.len() - off);
        while off + window < grid.len() && mass_above[off + window] >= opts.truncation_tol {
            window += 1;
        }
        let value = pfaffian_window(&blocks, &grid, off, window)?;
        out.push(Level { value, window, bound: mass_above[(off + window).min(grid.len())] });
    }
    Ok(out)
}

fn pfaffian_window(blocks: &Blocks, grid: &[f64], off: usize, window: usize) -> Result<f64, PfaffianError> {
    let a = SkewKernelMatrix::from_blocks(
        &blocks.window(off, window),
        grid[off..off + window].to_vec(),
        vec![1.0; window],
    )?;
    let v = a.fredholm_pf(FredholmSign::Minus);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(PfaffianError::NonFinite)
    }
}

fn clamp_probability(v: f64, k: i64) -> f64 {
    if !(0.0..=1.0).contains(&v) {
        let level = if !(-1e-9..=1.0 + 1e-9).contains(&v) { log::Level::Warn } else { log::Level::Debug };
        log::log!(level, "clamping P(L <= {k}) = {v:.3e} into [0, 1]");
    }
    v.clamp(0.0, 1.0)
}

/// CSV-ready rows `k, cdf, pmf` for consecutive `k`; `pmf` is the
/// difference from the previous row (from zero below the first).
pub fn exact_cdf_table(
    n: usize,
    m: usize,
    q: f64,
    k_from: i64,
    k_to: i64,
    opts: &CdfOptions,
) -> Result<Vec<CdfRow>, FiniteKernelError> {
    if k_to < k_from {
        return Ok(Vec::new());
    }
    let ks: Vec<i64> = (k_from - 1..=k_to).collect();
    let vals = exact_cdf_detailed(n, m, q, &ks, opts)?;
    let rows: Vec<CdfRow> =
        vals.windows(2).map(|w| CdfRow { k: w[1].k, cdf: w[1].value, pmf: w[1].value - w[0].value }).collect();
    if rows.windows(2).any(|w| w[1].cdf < w[0].cdf - 1e-9) {
        warn!("exact CDF table is not monotone beyond 1e-9");
    }
    Ok(rows)
}
