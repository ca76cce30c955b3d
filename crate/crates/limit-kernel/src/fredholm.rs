use log::{debug, warn};
use nalgebra::{DMatrix, DVector};
use skew_pfaffian::{gauss_legendre_on, Blocks, FredholmSign, KernelEntry, SkewKernel, SkewKernelMatrix};

use crate::kernel::{ku_inf_derivative, STABLE_K22_FROM};
use crate::{
    ku_inf_k22_correction, ku_inf_matrix, kuv_k22_stable, kuv_matrix, LimitKernelConfig, LimitKernelError, UInfBlock,
    UvBlock, DEFAULT_RAY_NODES,
};

/// Range of `s` accepted by [`f_u_inf`] and [`f_uv`].
pub const S_RANGE: (f64, f64) = (-8.0, 5.0);

/// Window, node and ray-node schedule for the continuous Fredholm Pfaffians.
///
/// Window length and node count grow together until the value moves by less
/// than `tol`; the ray nodes are then doubled once and must agree within
/// `tol` as well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitOptions {
    pub length_start: f64,
    pub length_step: f64,
    pub n_start: usize,
    pub n_max: usize,
    pub tol: f64,
    pub ray_nodes: usize,
    pub ray_nodes_max: usize,
}

impl Default for LimitOptions {
    fn default() -> Self {
        Self {
            length_start: 12.0,
            length_step: 6.0,
            n_start: 32,
            n_max: 512,
            tol: 1e-8,
            ray_nodes: DEFAULT_RAY_NODES,
            ray_nodes_max: 4 * DEFAULT_RAY_NODES,
        }
    }
}

/// A limiting distribution value with its convergence record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitCdf {
    /// Clamped to `[0, 1]`.
    pub value: f64,
    pub raw: f64,
    pub nodes: usize,
    pub length: f64,
    pub delta: f64,
    pub ray_nodes: usize,
    pub ray_delta: f64,
    /// Largest `|A + A^T|` entry of the assembled kernel (zero on the
    /// determinant route).
    pub defect: f64,
}

/// `v = infinity` kernel with the Gaussian term in `K22` (`u > 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UInfKernel {
    pub u: f64,
    pub ray_nodes: usize,
}

impl UInfKernel {
    pub fn try_blocks(&self, points: &[f64]) -> Result<Blocks, LimitKernelError> {
        if self.u.is_nan() || self.u <= 0.0 {
            return Err(LimitKernelError::Parameter(format!("Pfaffian route needs u > 0, got {}", self.u)));
        }
        let k11 = ku_inf_matrix(UInfBlock::K11, self.u, points, points, self.ray_nodes)?;
        let k12 = ku_inf_matrix(UInfBlock::K12, self.u, points, points, self.ray_nodes)?;
        let mut k22 = ku_inf_matrix(UInfBlock::K22, self.u, points, points, self.ray_nodes)?;
        for i in 0..points.len() {
            for j in 0..points.len() {
                k22[(i, j)] += ku_inf_k22_correction(self.u, points[i] - points[j]);
            }
        }
        Ok(Blocks { k11, k12, k22 })
    }
}

/// Finite-`v` kernel; `K22` uses [`kuv_k22_stable`] for `v >= 0.5` and the
/// printed contours below.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UvKernel {
    pub cfg: LimitKernelConfig,
}

impl UvKernel {
    pub fn try_blocks(&self, points: &[f64]) -> Result<Blocks, LimitKernelError> {
        let cfg = &self.cfg;
        if cfg.u.is_nan() || cfg.u <= 0.0 {
            return Err(LimitKernelError::Parameter(format!("finite-v Pfaffian needs u > 0, got {}", cfg.u)));
        }
        let k11 = kuv_matrix(UvBlock::K11, cfg, points, points)?;
        let k12 = kuv_matrix(UvBlock::K12, cfg, points, points)?;
        let k22 = if cfg.v >= STABLE_K22_FROM {
            kuv_k22_stable(cfg, points, points)?
        } else {
            kuv_matrix(UvBlock::K22a, cfg, points, points)? + kuv_matrix(UvBlock::K22b, cfg, points, points)?
        };
        Ok(Blocks { k11, k12, k22 })
    }
}

fn nan_entry() -> KernelEntry {
    KernelEntry { k11: f64::NAN, k12: f64::NAN, k22: f64::NAN }
}

fn entry_of(blocks: Result<Blocks, LimitKernelError>) -> KernelEntry {
    match blocks {
        Ok(b) => KernelEntry { k11: b.k11[(0, 0)], k12: b.k12[(0, 0)], k22: b.k22[(0, 0)] },
        Err(e) => {
            warn!("limit kernel entry failed: {e}");
            nan_entry()
        }
    }
}

fn blocks_or_nan(points: &[f64], blocks: Result<Blocks, LimitKernelError>) -> Blocks {
    blocks.unwrap_or_else(|e| {
        warn!("limit kernel blocks failed: {e}");
        let n = points.len();
        Blocks {
            k11: DMatrix::from_element(n, n, f64::NAN),
            k12: DMatrix::from_element(n, n, f64::NAN),
            k22: DMatrix::from_element(n, n, f64::NAN),
        }
    })
}

// Entry-wise use goes through the batched path on 2 points so that K22's
// off-diagonal pair (x, y) is evaluated with one contour fit.
impl SkewKernel for UInfKernel {
    fn entry(&self, x: f64, y: f64) -> KernelEntry {
        entry_of(pair_blocks(|p| self.try_blocks(p), x, y))
    }

    fn blocks(&self, points: &[f64]) -> Blocks {
        blocks_or_nan(points, self.try_blocks(points))
    }
}

impl SkewKernel for UvKernel {
    fn entry(&self, x: f64, y: f64) -> KernelEntry {
        entry_of(pair_blocks(|p| self.try_blocks(p), x, y))
    }

    fn blocks(&self, points: &[f64]) -> Blocks {
        blocks_or_nan(points, self.try_blocks(points))
    }
}

fn pair_blocks(
    f: impl Fn(&[f64]) -> Result<Blocks, LimitKernelError>,
    x: f64,
    y: f64,
) -> Result<Blocks, LimitKernelError> {
    let b = f(&[x, y])?;
    let pick = |m: &DMatrix<f64>| DMatrix::from_element(1, 1, m[(0, 1)]);
    if x == y {
        let d = |m: &DMatrix<f64>| DMatrix::from_element(1, 1, m[(0, 0)]);
        return Ok(Blocks { k11: d(&b.k11), k12: d(&b.k12), k22: d(&b.k22) });
    }
    Ok(Blocks { k11: pick(&b.k11), k12: pick(&b.k12), k22: pick(&b.k22) })
}

fn check_s(s: f64) -> Result<(), LimitKernelError> {
    let (lo, hi) = S_RANGE;
    if !(lo..=hi).contains(&s) {
        return Err(LimitKernelError::Parameter(format!("s = {s} outside [{lo}, {hi}]")));
    }
    Ok(())
}

/// `F_{u, infinity}(s)`.
pub fn f_u_inf(u: f64, s: f64) -> Result<f64, LimitKernelError> {
    Ok(f_u_inf_detailed(u, s, &LimitOptions::default())?.value)
}

/// `F_{u, infinity}(s)` with its convergence record. `u > 0` evaluates
/// `Pf(J - K)` with the Gaussian term in `K22`; `u = 0` uses the squared
/// form `det(I - K12) det(I + X)` on the same nodes, where the Gaussian
/// term has become a derivative of the delta function.
pub fn f_u_inf_detailed(u: f64, s: f64, opts: &LimitOptions) -> Result<LimitCdf, LimitKernelError> {
    check_s(s)?;
    if !(u >= 0.0 && u.is_finite()) {
        return Err(LimitKernelError::Parameter(format!("u = {u} must be finite and >= 0")));
    }
    if u == 0.0 {
        converge(s, opts, |x, w, nr| Ok((gse_route(x, w, nr)?, 0.0)))
    } else {
        converge(s, opts, |x, w, nr| pfaffian_route(UInfKernel { u, ray_nodes: nr }.try_blocks(x)?, x, w))
    }
}

/// `F_{u, v}(s)` for `u > 0` with the default contours.
pub fn f_uv(u: f64, v: f64, s: f64) -> Result<f64, LimitKernelError> {
    Ok(f_uv_detailed(&LimitKernelConfig::new(u, v)?, s, &LimitOptions::default())?.value)
}

pub fn f_uv_detailed(cfg: &LimitKernelConfig, s: f64, opts: &LimitOptions) -> Result<LimitCdf, LimitKernelError> {
    check_s(s)?;
    cfg.validate()?;
    let base = *cfg;
    converge(s, opts, |x, w, nr| pfaffian_route(UvKernel { cfg: base.with_ray_nodes(nr) }.try_blocks(x)?, x, w))
}

fn pfaffian_route(blocks: Blocks, x: &[f64], w: &[f64]) -> Result<(f64, f64), LimitKernelError> {
    let a = SkewKernelMatrix::from_blocks(&blocks, x.to_vec(), w.to_vec())?;
    Ok((a.fredholm_pf(FredholmSign::Minus), a.defect()))
}

// sqrt(det(I - K12 W) det(I + X W)) with
// X = -K12^T + S22 W H + 2 dH, H = (I - K12 W)^{-1} K11, dH = dK11 + dK12 W H,
// where dK is the derivative in the first argument and S22 the printed K22.
fn gse_route(x: &[f64], w: &[f64], ray_nodes: usize) -> Result<f64, LimitKernelError> {
    let n = x.len();
    let k11 = ku_inf_matrix(UInfBlock::K11, 0.0, x, x, ray_nodes)?;
    let k12 = ku_inf_matrix(UInfBlock::K12, 0.0, x, x, ray_nodes)?;
    let s22 = ku_inf_matrix(UInfBlock::K22, 0.0, x, x, ray_nodes)?;
    let dk11 = ku_inf_derivative(UInfBlock::K11, 0.0, x, x, ray_nodes)?;
    let dk12 = ku_inf_derivative(UInfBlock::K12, 0.0, x, x, ray_nodes)?;
    let wd = DMatrix::from_diagonal(&DVector::from_column_slice(w));
    let id = DMatrix::<f64>::identity(n, n);
    let a = &id - &k12 * &wd;
    let lu = a.clone().lu();
    let h = lu.solve(&k11).ok_or(LimitKernelError::NonFinite("K12"))?;
    let dh = &dk11 + &dk12 * &wd * &h;
    let xm = -k12.transpose() + &s22 * &wd * &h + 2.0 * dh;
    let d1 = lu.determinant();
    let d2 = (&id + xm * &wd).determinant();
    let sq = d1 * d2;
    if !sq.is_finite() {
        return Err(LimitKernelError::NonFinite("determinant"));
    }
    if sq < 0.0 {
        debug!("squared value {sq:.3e} below zero");
    }
    Ok(sq.max(0.0).sqrt())
}

fn converge<F>(s: f64, opts: &LimitOptions, eval: F) -> Result<LimitCdf, LimitKernelError>
where
    F: Fn(&[f64], &[f64], usize) -> Result<(f64, f64), LimitKernelError>,
{
    let mut n = opts.n_start.max(1);
    let mut length = opts.length_start;
    let mut prev: Option<f64> = None;
    let nr = opts.ray_nodes;
    let (value, defect, delta) = loop {
        let (x, w) = gauss_legendre_on(s, s + length, n);
        let (value, defect) = eval(&x, &w, nr)?;
        if !value.is_finite() {
            return Err(LimitKernelError::NonFinite("Pfaffian"));
        }
        if let Some(p) = prev {
            let delta = (value - p).abs();
            debug!("s={s} L={length} N={n} value={value:.12e} delta={delta:.2e}");
            if delta < opts.tol {
                break (value, defect, delta);
            }
            if n >= opts.n_max {
                return Err(LimitKernelError::Quadrature { what: "Fredholm window", size: n, delta });
            }
        }
        prev = Some(value);
        n = (2 * n).min(opts.n_max);
        length += opts.length_step;
    };

    let (x, w) = gauss_legendre_on(s, s + length, n);
    let mut nr_used = nr;
    let mut last = value;
    let (value, ray_delta) = loop {
        let next_nr = 2 * nr_used;
        let (v2, _) = eval(&x, &w, next_nr)?;
        let d = (v2 - last).abs();
        nr_used = next_nr;
        if d < opts.tol {
            break (v2, d);
        }
        if nr_used >= opts.ray_nodes_max {
            return Err(LimitKernelError::Quadrature { what: "ray nodes", size: nr_used, delta: d });
        }
        last = v2;
    };
    Ok(LimitCdf { value: clamp(value, s), raw: value, nodes: n, length, delta, ray_nodes: nr_used, ray_delta, defect })
}

fn clamp(v: f64, s: f64) -> f64 {
    if !(0.0..=1.0).contains(&v) {
        if !(-1e-6..=1.0 + 1e-6).contains(&v) {
            warn!("limit value {v:.3e} at s = {s} is outside [0, 1] by more than 1e-6");
        } else {
            debug!("clamping {v:.3e} at s = {s}");
        }
    }
    v.clamp(0.0, 1.0)
}
