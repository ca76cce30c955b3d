use num_complex::Complex64;
use std::f64::consts::TAU;

/// Trapezoid rule on the counterclockwise circle `|z| = radius`:
/// `(1/2 pi i) \oint f(z) dz ~ (1/N) sum f(z_j) z_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleQuadrature {
    pub radius: f64,
    pub nodes: usize,
}

impl CircleQuadrature {
    pub fn new(radius: f64, nodes: usize) -> Self {
        Self { radius, nodes }
    }

    pub fn points(&self) -> Vec<Complex64> {
        (0..self.nodes).map(|j| Complex64::from_polar(self.radius, TAU * j as f64 / self.nodes as f64)).collect()
    }

    /// `(point, weight)` pairs with `weight = z_j / N`.
    pub fn rule(&self) -> Vec<(Complex64, Complex64)> {
        let n = self.nodes as f64;
        self.points().into_iter().map(|z| (z, z / n)).collect()
    }

    pub fn integrate(&self, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        self.rule().into_iter().map(|(z, w)| f(z) * w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        let c = CircleQuadrature::new(1.3, 64);
        let one = c.integrate(|z| 1.0 / z);
        assert!((one - 1.0).norm() < 1e-14);
        let none = c.integrate(|z| 1.0 / (z - 2.0));
        assert!(none.norm() < 1e-10);
        let pole = c.integrate(|z| z * z / (z - 0.5));
        assert!((pole - 0.25).norm() < 1e-14);
    }
}
