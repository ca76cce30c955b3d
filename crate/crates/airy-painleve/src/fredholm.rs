use nalgebra::DMatrix;
use skew_pfaffian::gauss_legendre_on;

use crate::{airy_pair, AiryError, TW_RANGE};

/// Node schedule for [`airy_fredholm_det_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FredholmOptions {
    pub nodes_start: usize,
    pub nodes_max: usize,
    pub tol: f64,
}

impl Default for FredholmOptions {
    fn default() -> Self {
        Self { nodes_start: 32, nodes_max: 512, tol: 1e-13 }
    }
}

/// `det(I - K_Ai)` on `L^2(s, inf)`, the GUE Tracy-Widom distribution.
pub fn airy_fredholm_det(s: f64) -> Result<f64, AiryError> {
    let (lo, hi) = TW_RANGE;
    if !(lo..=hi).contains(&s) {
        return Err(AiryError::OutOfRange { x: s, lo, hi });
    }
    airy_fredholm_det_with(s, &FredholmOptions::default())
}

/// Gauss-Legendre Nystrom discretisation on `[s, max(s, 0) + 14]`, nodes
/// doubled until the determinant moves by less than `opts.tol`.
pub fn airy_fredholm_det_with(s: f64, opts: &FredholmOptions) -> Result<f64, AiryError> {
    if !s.is_finite() {
        return Err(AiryError::OutOfRange { x: s, lo: TW_RANGE.0, hi: TW_RANGE.1 });
    }
    let upper = s.max(0.0) + 14.0;
    let mut nodes = opts.nodes_start.max(4);
    let mut prev = nystrom(s, upper, nodes);
    loop {
        nodes *= 2;
        let next = nystrom(s, upper, nodes);
        let delta = (next - prev).abs();
        if delta < opts.tol {
            return Ok(next);
        }
        if nodes >= opts.nodes_max {
            return Err(AiryError::Quadrature { nodes, delta });
        }
        prev = next;
    }
}

fn nystrom(a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre_on(a, b, n);
    let ai: Vec<(f64, f64)> = x.iter().map(|&t| airy_pair(t)).collect();
    let sw: Vec<f64> = w.iter().map(|v| v.sqrt()).collect();
    let m = DMatrix::from_fn(n, n, |i, j| {
        let (ax, dx) = ai[i];
        let (ay, dy) = ai[j];
        let k = if i == j { dx * dx - x[i] * ax * ax } else { (ax * dy - dx * ay) / (x[i] - x[j]) };
        let id = if i == j { 1.0 } else { 0.0 };
        id - sw[i] * k * sw[j]
    });
    m.determinant()
}
