use std::f64::consts::PI;

use num_complex::Complex64;
use skew_pfaffian::gauss_legendre_on;

use crate::LimitKernelError;

/// Log-magnitude drop required between the peak of an integrand and the
/// contour end.
pub const TRUNCATION_DROP: f64 = 40.0;
const RADIUS_STEP: f64 = 0.25;
const RADIUS_MAX: f64 = 60.0;

/// `C_a^phi`: the rays `a + t e^{-i phi}` (run inwards) and `a + t e^{i phi}`
/// (run outwards), `t in [0, radius]`, with Gauss-Legendre nodes per ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayContour {
    pub apex: Complex64,
    pub angle: f64,
    pub radius: f64,
    pub nodes: usize,
}

impl RayContour {
    pub fn new(apex: Complex64, angle: f64, radius: f64, nodes: usize) -> Result<Self, LimitKernelError> {
        if !(apex.re.is_finite() && apex.im.is_finite()) {
            return Err(LimitKernelError::Contour(format!("apex {apex} is not finite")));
        }
        if !(angle > 0.0 && angle < PI) {
            return Err(LimitKernelError::Contour(format!("angle {angle} outside (0, pi)")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(LimitKernelError::Contour(format!("radius {radius} must be positive")));
        }
        if nodes == 0 {
            return Err(LimitKernelError::Contour("no quadrature nodes".into()));
        }
        Ok(Self { apex, angle, radius, nodes })
    }

    /// Real apex with the radius chosen by [`truncation_radius`].
    pub fn fitted<F>(apex: f64, angle: f64, nodes: usize, log_magnitude: F) -> Result<Self, LimitKernelError>
    where
        F: Fn(Complex64) -> f64,
    {
        let apex = Complex64::new(apex, 0.0);
        let radius = truncation_radius(apex, angle, log_magnitude)?;
        Self::new(apex, angle, radius, nodes)
    }

    /// Point on the outgoing ray at distance `t`.
    pub fn point(&self, t: f64) -> Complex64 {
        self.apex + Complex64::from_polar(t, self.angle)
    }

    /// Nodes `z` and weights `dz / (2 pi i)` in contour orientation.
    pub fn quadrature(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let (t, w) = gauss_legendre_on(0.0, self.radius, self.nodes);
        let out = Complex64::from_polar(1.0, self.angle);
        let inw = out.conj();
        let scale = Complex64::new(0.0, 2.0 * PI).inv();
        let mut z = Vec::with_capacity(2 * self.nodes);
        let mut dz = Vec::with_capacity(2 * self.nodes);
        for (&ti, &wi) in t.iter().zip(&w) {
            z.push(self.apex + ti * inw);
            dz.push(-wi * inw * scale);
        }
        for (&ti, &wi) in t.iter().zip(&w) {
            z.push(self.apex + ti * out);
            dz.push(wi * out * scale);
        }
        (z, dz)
    }

    pub fn with_nodes(self, nodes: usize) -> Self {
        Self { nodes, ..self }
    }

    pub fn with_radius(self, radius: f64) -> Self {
        Self { radius, ..self }
    }
}

/// Smallest radius, on a 0.25 grid, at which `log_magnitude` on both rays
/// sits `TRUNCATION_DROP` below its largest value along the way.
pub fn truncation_radius<F>(apex: Complex64, angle: f64, log_magnitude: F) -> Result<f64, LimitKernelError>
where
    F: Fn(Complex64) -> f64,
{
    let dirs = [Complex64::from_polar(1.0, angle), Complex64::from_polar(1.0, -angle)];
    let mut peak = f64::NEG_INFINITY;
    let mut t = 0.0;
    while t <= RADIUS_MAX {
        let mut end = f64::NEG_INFINITY;
        for d in dirs {
            let v = log_magnitude(apex + t * d);
            peak = peak.max(v);
            end = end.max(v);
        }
        if t >= 1.0 && end <= peak - TRUNCATION_DROP {
            return Ok(t);
        }
        t += RADIUS_STEP;
    }
    Err(LimitKernelError::Radius { apex: apex.re, angle })
}
