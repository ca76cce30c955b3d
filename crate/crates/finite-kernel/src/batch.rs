use log::debug;
use nalgebra::DMatrix;
use num_complex::Complex64;
use skew_pfaffian::{Blocks, KernelEntry, SkewKernel};
use std::f64::consts::TAU;

use crate::config::check_shape;
use crate::FiniteKernelError;

const SEARCH_NODES: usize = 256;
const SEARCH_RADII: usize = 60;
const SHIFTS: [f64; 6] = [1.0, 1.5, 2.0, 3.0, 5.0, 8.0];
// e-folds of peak magnitude traded for faster quadrature convergence
const PRECISION_SLACK: f64 = 3.0;
// -ln(1e-16)
const DIGITS: f64 = 37.0;

/// Kernel blocks on deformed contours, evaluated for a whole grid at once.
///
/// The `z`-type contours (both variables of `K11`, `z` of `K12`) are circles
/// through `r0 in (1, q^{-1/2})` and `-shift * r0`. The `w`-type contours
/// (`w` of `K12`, both variables of `K22`) are circles about the origin
/// inside the unit disk. `K22` is then the `|zw| < 1` integral plus the
/// residue picked up when crossing `zw = 1`, which depends only on `x - y`.
/// All three blocks are conjugated by `F(1)`, which leaves `Pf(J - K)`
/// unchanged and keeps the entries of order one.
#[derive(Debug, Clone)]
pub struct BatchKernel {
    n: usize,
    m: usize,
    q: f64,
    nodes: usize,
}

#[derive(Debug, Clone, Copy)]
struct Contour {
    r0: f64,
    shift: f64,
}

impl Contour {
    fn centre(&self) -> f64 {
        self.r0 * (1.0 - self.shift) / 2.0
    }

    fn radius(&self) -> f64 {
        self.r0 * (1.0 + self.shift) / 2.0
    }

    // smallest imaginary-angle distance from the circle to the given real points
    fn gap(&self, points: &[f64]) -> f64 {
        points.iter().map(|&p| ((p - self.centre()).abs() / self.radius()).ln().abs()).fold(f64::INFINITY, f64::min)
    }

    fn rule(&self, nodes: usize) -> (Vec<Complex64>, Vec<Complex64>) {
        let (centre, radius) = (self.centre(), self.radius());
        (0..nodes)
            .map(|j| {
                let e = Complex64::from_polar(1.0, TAU * j as f64 / nodes as f64);
                // dz / (2 pi i) = radius e dtheta / (2 pi)
                (centre + radius * e, radius * e / nodes as f64)
            })
            .unzip()
    }
}

// Complex matrix held as real and imaginary parts so products use real gemm.
struct CMat {
    re: DMatrix<f64>,
    im: DMatrix<f64>,
}

impl CMat {
    fn from_fn(r: usize, c: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut re = DMatrix::zeros(r, c);
        let mut im = DMatrix::zeros(r, c);
        for j in 0..c {
            for i in 0..r {
                let v = f(i, j);
                re[(i, j)] = v.re;
                im[(i, j)] = v.im;
            }
        }
        Self { re, im }
    }

    fn mul(&self, o: &CMat) -> CMat {
        CMat { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn transpose(&self) -> CMat {
        CMat { re: self.re.transpose(), im: self.im.transpose() }
    }

    // real and imaginary part of self * o
    fn mul_parts(&self, o: &CMat) -> (DMatrix<f64>, DMatrix<f64>) {
        let p = self.mul(o);
        (p.re, p.im)
    }
}

impl BatchKernel {
    /// `nodes` quadrature points per contour.
    pub fn new(n: usize, m: usize, q: f64, nodes: usize) -> Result<Self, FiniteKernelError> {
        check_shape(n, m, q)?;
        Ok(Self { n, m, q, nodes: nodes.max(8) })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    fn s(&self) -> f64 {
        self.q.sqrt()
    }

    fn a(&self) -> f64 {
        self.m as f64
    }

    fn b(&self) -> f64 {
        self.n as f64 + 1.0
    }

    fn ln_f1(&self) -> f64 {
        (self.b() - self.a()) * (1.0 - self.s()).ln()
    }

    fn log_z(&self, z: Complex64, x: f64) -> Complex64 {
        let s = self.s();
        -self.a() * (1.0 - s * z).ln() + self.b() * (1.0 - s / z).ln() + (0.5 - x) * z.ln()
    }

    fn log_w(&self, w: Complex64, y: f64) -> Complex64 {
        let s = self.s();
        self.a() * (1.0 - s * w).ln() - self.b() * (1.0 - s / w).ln() + (y - 1.5) * w.ln()
    }

    // width of the edge window, used to keep contours off the saddle
    fn edge_gap(&self) -> f64 {
        let s = self.s();
        (1.0 - s) / (self.q.powf(1.0 / 6.0) * (1.0 + s).cbrt()) * (self.n.max(1) as f64).powf(-1.0 / 3.0)
    }

    // Candidates whose peak log-magnitude is within PRECISION_SLACK of the
    // best are compared by the node count the trapezoid rule needs, which is
    // set by the distance (in the angle variable) to the nearest singularity.
    fn choose(
        &self,
        f: impl Fn(Complex64) -> f64,
        lo: f64,
        hi: f64,
        shifts: &[f64],
        singular: &[f64],
    ) -> (Contour, f64) {
        let mut cands = Vec::with_capacity(SEARCH_RADII * shifts.len());
        for t in 0..SEARCH_RADII {
            let r0 = lo + (hi - lo) * t as f64 / (SEARCH_RADII - 1) as f64;
            for &shift in shifts {
                let c = Contour { r0, shift };
                let (pts, _) = c.rule(SEARCH_NODES);
                let peak = pts.iter().map(|&z| f(z)).fold(f64::NEG_INFINITY, f64::max);
                cands.push((peak, c));
            }
        }
        let best = cands.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        cands
            .into_iter()
            .filter(|c| c.0 <= best + PRECISION_SLACK)
            .map(|(peak, c)| (c, (peak.max(0.0) + DIGITS) / c.gap(singular)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap()
    }

    fn contours(&self, x_ref: f64) -> (Contour, Contour, usize) {
        let s = self.s();
        let h = self.edge_gap();
        let top = 1.0 / s;
        let z_lo = 1.0 + (0.5 * h).min(0.45 * (top - 1.0));
        let z_hi = top - 0.05 * (top - 1.0);
        let w_lo = s + 0.05 * (1.0 - s);
        let w_hi = 1.0 - (0.5 * h).min(0.45 * (1.0 - s));
        // z meets poles at +-1, 1/s and 0, and the w contour from outside
        let (zc, zn) = self.choose(|z| self.log_z(z, x_ref).re, z_lo, z_hi, &SHIFTS, &[1.0, -1.0, top, 0.0, w_hi]);
        // w meets s, 0, the z contour, and 1/w' for w' on its own circle
        let (wc, wn) = self.choose(|w| self.log_w(w, x_ref).re, w_lo, w_hi, &[1.0], &[s, 0.0, zc.r0, 1.0 / w_hi, top]);
        let want = zn.max(wn).ceil() as usize;
        (zc, wc, want)
    }

    /// Node count the deformed contours are expected to need at `x_ref`.
    pub fn suggested_nodes(&self, x_ref: f64) -> usize {
        self.contours(x_ref).2
    }

    // residue part of K22 as a function of the integer x - y
    fn toeplitz(&self, max_d: usize) -> Vec<f64> {
        let s = self.s();
        let e = self.b() - self.a();
        let two_ln_f1 = 2.0 * self.ln_f1();
        let count = 4 * self.nodes;
        let samples: Vec<(Complex64, Complex64)> = (0..count)
            .map(|t| {
                let u = Complex64::from_polar(1.0, TAU * t as f64 / count as f64);
                let g = (-e * ((1.0 - s * u).ln() + (1.0 - s / u).ln()) + two_ln_f1).exp();
                (u, (1.0 - 1.0 / (u * u)) * g * u)
            })
            .collect();
        (0..2 * max_d + 1)
            .map(|idx| {
                let d = idx as i32 - max_d as i32;
                let sum: Complex64 = samples.iter().map(|&(u, h)| h * u.powi(d)).sum();
                sum.re / count as f64
            })
            .collect()
    }

    /// Blocks on a half-integer grid. Contours are tuned to the smallest
    /// grid point; larger points only make the integrand smaller.
    pub fn try_blocks(&self, grid: &[f64]) -> Result<Blocks, FiniteKernelError> {
        if grid.iter().any(|x| (x - 0.5).fract() != 0.0) {
            return Err(FiniteKernelError::GridPlacement);
        }
        let mm = grid.len();
        if mm == 0 {
            return Ok(Blocks::zeros(0));
        }
        let x_ref = grid.iter().copied().fold(f64::INFINITY, f64::min);
        let (zc, wc, _) = self.contours(x_ref);
        let nn = self.nodes;
        let (z, dz) = zc.rule(nn);
        let (w, dw) = wc.rule(nn);
        let lf1 = self.ln_f1();
        debug!(
            "batch kernel n={} m={} q={} N={nn}: z contour r0={:.4} shift={}, w radius {:.4}",
            self.n, self.m, self.q, zc.r0, zc.shift, wc.r0
        );

        let zp = CMat::from_fn(mm, nn, |i, j| (self.log_z(z[j], grid[i]) - lf1).exp() * dz[j]);
        let wp = CMat::from_fn(mm, nn, |i, j| (self.log_w(w[j], grid[i]) + lf1).exp() * dw[j]);
        let g11 = CMat::from_fn(nn, nn, |j, l| {
            let (a, b) = (z[j], z[l]);
            (a - b) / ((a * a - 1.0) * (b * b - 1.0) * (a * b - 1.0))
        });
        let g12 = CMat::from_fn(nn, nn, |j, l| {
            let (a, b) = (z[j], w[l]);
            (a * b - 1.0) / ((a - b) * (a * a - 1.0))
        });
        let g22 = CMat::from_fn(nn, nn, |j, l| {
            let (a, b) = (w[j], w[l]);
            (a - b) / (a * b - 1.0)
        });

        let zt = zp.transpose();
        let wt = wp.transpose();
        let (k11, i11) = zp.mul_parts(&g11.mul(&zt));
        let (k12, i12) = zp.mul_parts(&g12.mul(&wt));
        let (mut k22, i22) = wp.mul_parts(&g22.mul(&wt));

        let span = (grid.iter().copied().fold(f64::NEG_INFINITY, f64::max) - x_ref) as usize;
        let t = self.toeplitz(span);
        for i in 0..mm {
            for j in 0..mm {
                let d = (grid[i] - grid[j]).round() as i64 + span as i64;
                k22[(i, j)] += t[d as usize];
            }
        }
        debug!("batch kernel imaginary residue: {:.2e} {:.2e} {:.2e}", i11.amax(), i12.amax(), i22.amax());
        Ok(Blocks { k11, k12, k22 })
    }
}

impl SkewKernel for BatchKernel {
    fn entry(&self, x: f64, y: f64) -> KernelEntry {
        match self.try_blocks(&[x, y]) {
            Ok(b) => KernelEntry { k11: b.k11[(0, 1)], k12: b.k12[(0, 1)], k22: b.k22[(0, 1)] },
            Err(_) => KernelEntry { k11: f64::NAN, k12: f64::NAN, k22: f64::NAN },
        }
    }

    fn blocks(&self, points: &[f64]) -> Blocks {
        self.try_blocks(points).unwrap_or_else(|_| {
            let mut b = Blocks::zeros(points.len());
            b.k11.fill(f64::NAN);
            b
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{k11, k12, k22, FiniteKernelConfig};

    #[test]
    fn agrees_with_literal_circles() {
        let (n, m, q) = (3, 2, 0.25);
        let grid: Vec<f64> = (0..8).map(|i| 0.5 + i as f64).collect();
        let b = BatchKernel::new(n, m, q, 256).unwrap().try_blocks(&grid).unwrap();
        let cfg = FiniteKernelConfig::new(n, m, q).unwrap();
        // the batch blocks are conjugated by F(1)
        let f1 = ((n + 1 - m) as f64 * (1.0 - q.sqrt()).ln()).exp();
        for i in 0..grid.len() {
            for j in 0..grid.len() {
                let (x, y) = (grid[i], grid[j]);
                assert!((b.k11[(i, j)] * f1 * f1 - k11(x, y, &cfg).unwrap()).abs() < 1e-9);
                assert!((b.k12[(i, j)] - k12(x, y, &cfg).unwrap()).abs() < 1e-9);
                assert!((b.k22[(i, j)] / (f1 * f1) - k22(x, y, &cfg).unwrap()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn integer_grid_rejected() {
        let k = BatchKernel::new(2, 2, 0.5, 64).unwrap();
        assert_eq!(k.try_blocks(&[1.0, 2.0]).unwrap_err(), FiniteKernelError::GridPlacement);
    }

    #[test]
    fn contours_respect_bounds() {
        let k = BatchKernel::new(100, 100, 0.618, 64).unwrap();
        let (zc, wc, _) = k.contours(650.5);
        let s = 0.618f64.sqrt();
        assert!(zc.r0 > 1.0 && zc.r0 < 1.0 / s);
        assert!(wc.r0 > s && wc.r0 < 1.0);
    }
}
