use crate::{check_open_unit, DomainError};

/// Centering speed and fluctuation constant of geometric LPP with ratio `q`:
/// `speed = sqrt(q)/(1-sqrt(q))`, `edge = (1-sqrt(q))/(q^(1/6) (1+sqrt(q))^(1/3))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingConstants {
    pub q: f64,
    pub speed: f64,
    pub edge: f64,
}

impl ScalingConstants {
    pub fn new(q: f64) -> Result<Self, DomainError> {
        check_open_unit(q)?;
        let r = q.sqrt();
        Ok(Self { q, speed: r / (1.0 - r), edge: (1.0 - r) / (q.powf(1.0 / 6.0) * (1.0 + r).cbrt()) })
    }

    /// Fluctuation scale `n^(1/3) / edge`.
    pub fn fluctuation(&self, n: f64) -> f64 {
        n.cbrt() / self.edge
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter() {
        let c = ScalingConstants::new(0.25).unwrap();
        assert_eq!(c.speed, 1.0);
        assert!((c.edge - 0.550_321_208_149_104_4).abs() < 1e-12);
    }

    #[test]
    fn golden() {
        let c = ScalingConstants::new(0.618).unwrap();
        assert!((c.speed - 3.675_732_356_757_439).abs() < 1e-12);
        assert!((c.edge - 0.190_991_750_038_227_8).abs() < 1e-12);
    }

    #[test]
    fn speed_increases_with_q() {
        let speeds: Vec<f64> = (1..=9).map(|k| ScalingConstants::new(k as f64 / 10.0).unwrap().speed).collect();
        assert!(speeds.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_closed_endpoints() {
        assert!(ScalingConstants::new(1.0).is_err());
        assert!(ScalingConstants::new(-0.5).is_err());
    }
}
