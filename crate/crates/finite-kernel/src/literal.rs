use log::warn;
use num_complex::Complex64;
use skew_pfaffian::{KernelEntry, SkewKernel};

use crate::{Block, CircleQuadrature, FiniteKernelConfig, FiniteKernelError};

const NODE_TOL: f64 = 1e-11;
const IMAG_TOL: f64 = 1e-9;

// ln F(z) = -m ln(1 - s z) + (n + 1) ln(1 - s / z)
fn ln_f(cfg: &FiniteKernelConfig, z: Complex64) -> Complex64 {
    let s = cfg.s();
    -(cfg.m as f64) * (1.0 - s * z).ln() + (cfg.n as f64 + 1.0) * (1.0 - s / z).ln()
}

// Returns the quadrature value and the sum of absolute terms, which sets the
// rounding floor.
fn one_sum(cfg: &FiniteKernelConfig, block: Block, x: f64, y: f64, nodes: usize) -> (Complex64, f64) {
    let (rz, rw) = match block {
        Block::K11 => cfg.radii.k11,
        Block::K12 => cfg.radii.k12,
        Block::K22 => cfg.radii.k22,
    };
    let z_rule = CircleQuadrature::new(rz, nodes).rule();
    let w_rule = CircleQuadrature::new(rw, nodes).rule();
    // per-variable factors including the quadrature weight
    let zf: Vec<Complex64> = z_rule
        .iter()
        .map(|&(z, dz)| {
            let lf = ln_f(cfg, z);
            let e = match block {
                Block::K11 | Block::K12 => lf + (0.5 - x) * z.ln(),
                Block::K22 => -lf + (x - 1.5) * z.ln(),
            };
            e.exp() * dz
        })
        .collect();
    let wf: Vec<Complex64> = w_rule
        .iter()
        .map(|&(w, dw)| {
            let lf = ln_f(cfg, w);
            let e = match block {
                Block::K11 => lf + (0.5 - y) * w.ln(),
                Block::K12 | Block::K22 => -lf + (y - 1.5) * w.ln(),
            };
            e.exp() * dw
        })
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for (&(z, _), &a) in z_rule.iter().zip(&zf) {
        let mut row = Complex64::new(0.0, 0.0);
        let mut row_abs = 0.0;
        for (&(w, _), &b) in w_rule.iter().zip(&wf) {
            let g = match block {
                Block::K11 => (z - w) / ((z * z - 1.0) * (w * w - 1.0) * (z * w - 1.0)),
                Block::K12 => (z * w - 1.0) / ((z - w) * (z * z - 1.0)),
                Block::K22 => (z - w) / (z * w - 1.0),
            };
            row += g * b;
            row_abs += (g * b).norm();
        }
        total += row * a;
        scale += row_abs * a.norm();
    }
    (total, scale)
}

fn entry(cfg: &FiniteKernelConfig, block: Block, x: f64, y: f64) -> Result<f64, FiniteKernelError> {
    cfg.validate()?;
    let mut nodes = cfg.nodes.max(4);
    let (mut prev, _) = one_sum(cfg, block, x, y, nodes);
    loop {
        if nodes * 2 > cfg.max_nodes {
            return Err(FiniteKernelError::Quadrature { block, nodes, delta: f64::NAN });
        }
        nodes *= 2;
        let (v, scale) = one_sum(cfg, block, x, y, nodes);
        let delta = (v - prev).norm();
        let floor = 64.0 * f64::EPSILON * scale;
        if delta < (NODE_TOL * v.norm().max(1.0)).max(floor) {
            if v.im.abs() > (IMAG_TOL * v.re.abs().max(1.0)).max(floor) {
                return Err(FiniteKernelError::Imaginary { block, im: v.im });
            }
            return Ok(v.re);
        }
        if nodes * 2 > cfg.max_nodes {
            return Err(FiniteKernelError::Quadrature { block, nodes, delta });
        }
        prev = v;
    }
}

/// `K11(x, y)` on the configured circles.
pub fn k11(x: f64, y: f64, cfg: &FiniteKernelConfig) -> Result<f64, FiniteKernelError> {
    entry(cfg, Block::K11, x, y)
}

/// `K12(x, y)` on the configured circles.
pub fn k12(x: f64, y: f64, cfg: &FiniteKernelConfig) -> Result<f64, FiniteKernelError> {
    entry(cfg, Block::K12, x, y)
}

/// `K22(x, y)` on the configured circles.
pub fn k22(x: f64, y: f64, cfg: &FiniteKernelConfig) -> Result<f64, FiniteKernelError> {
    entry(cfg, Block::K22, x, y)
}

/// Entry-by-entry kernel on fixed circles. Failed entries become NaN, which
/// assembly rejects.
#[derive(Debug, Clone)]
pub struct LiteralKernel {
    pub cfg: FiniteKernelConfig,
}

impl SkewKernel for LiteralKernel {
    fn entry(&self, x: f64, y: f64) -> KernelEntry {
        let get = |r: Result<f64, FiniteKernelError>| {
            r.unwrap_or_else(|e| {
                warn!("kernel entry at ({x}, {y}) failed: {e}");
                f64::NAN
            })
        };
        KernelEntry { k11: get(k11(x, y, &self.cfg)), k12: get(k12(x, y, &self.cfg)), k22: get(k22(x, y, &self.cfg)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> FiniteKernelConfig {
        FiniteKernelConfig::new(2, 2, 0.25).unwrap()
    }

    #[test]
    fn antisymmetric_blocks() {
        let c = cfg();
        for &(x, y) in &[(0.5, 0.5), (1.5, 3.5), (0.5, 6.5), (4.5, 2.5)] {
            let a = k11(x, y, &c).unwrap();
            assert!((a + k11(y, x, &c).unwrap()).abs() < 1e-10);
            let b = k22(x, y, &c).unwrap();
            assert!((b + k22(y, x, &c).unwrap()).abs() < 1e-10);
        }
        assert!(k11(2.5, 2.5, &c).unwrap().abs() < 1e-10);
        assert!(k22(2.5, 2.5, &c).unwrap().abs() < 1e-10);
    }

    #[test]
    fn radius_invariance() {
        let base = cfg();
        for rz in [1.05, 1.15] {
            let mut r = base.radii;
            r.k11 = (rz, 1.3);
            r.k12 = (rz, 0.8);
            r.k22 = (rz, 1.2);
            let moved = base.clone().with_radii(r).unwrap();
            for &(x, y) in &[(0.5, 1.5), (2.5, 0.5), (3.5, 5.5)] {
                for f in [k11, k12, k22] {
                    let (a, b) = (f(x, y, &base).unwrap(), f(x, y, &moved).unwrap());
                    assert!((a - b).abs() < 1e-9, "rz={rz} ({x},{y}): {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn node_doubling_settles() {
        let c = cfg();
        for nodes in [128usize, 256] {
            let (a, _) = one_sum(&c, Block::K12, 1.5, 2.5, nodes);
            let (b, _) = one_sum(&c, Block::K12, 1.5, 2.5, 2 * nodes);
            assert!((a - b).norm() < 1e-11);
        }
    }

    #[test]
    fn k12_decays_in_first_argument() {
        let c = cfg();
        for x in [0.5, 2.5, 5.5] {
            let near = k12(x, 1.5, &c).unwrap();
            let far = k12(x + 10.0, 1.5, &c).unwrap();
            assert!((far / near).abs() < 1.0);
        }
    }

    #[test]
    fn one_point_density_is_geometric_pmf() {
        // n = m = 1: the top point sits at L - 1/2, so K12(k + 1/2, k + 1/2) = P(L = k + 1)
        let c = FiniteKernelConfig::new(1, 1, 0.25).unwrap();
        for k in 0..6 {
            let want = 0.75 * 0.25f64.powi(k + 1);
            let got = k12(k as f64 + 0.5, k as f64 + 0.5, &c).unwrap();
            assert!((got - want).abs() < 1e-12, "k={k}: {got} vs {want}");
        }
    }

    #[test]
    fn invalid_radii_reported() {
        let mut c = cfg();
        c.radii.k12 = (1.2, 1.3);
        assert!(matches!(k12(0.5, 0.5, &c), Err(FiniteKernelError::Radius { .. })));
    }
}
