use std::fmt;
use std::str::FromStr;

use lattice_domain::ScalingConstants;

use crate::StatsError;

/// Centering and scale for each limiting law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RescaleMode {
    /// Anti-diagonal time on the lower triangle: `(b n, n^{1/3} / (2 c))`.
    AntidiagGoe,
    /// Corner-to-corner time on the lower triangle: `(2 b n, n^{1/3} / c)`.
    CornerGse,
    /// Corner time on the staircase with `m` columns:
    /// `(b (2n - u n^{2/3}), n^{1/3} / c)`, `u = (n - m) / n^{2/3}`.
    TruncatedGen,
}

impl RescaleMode {
    pub const ALL: [RescaleMode; 3] = [RescaleMode::AntidiagGoe, RescaleMode::CornerGse, RescaleMode::TruncatedGen];

    pub fn name(self) -> &'static str {
        match self {
            RescaleMode::AntidiagGoe => "antidiag_goe",
            RescaleMode::CornerGse => "corner_gse",
            RescaleMode::TruncatedGen => "truncated_gen",
        }
    }
}

impl fmt::Display for RescaleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RescaleMode {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| StatsError::UnknownMode(s.to_string()))
    }
}

/// `s = (L - center) / scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rescaling {
    pub center: f64,
    pub scale: f64,
}

impl Rescaling {
    pub fn new(mode: RescaleMode, n: usize, m: usize, q: f64) -> Result<Self, StatsError> {
        let c = ScalingConstants::new(q)?;
        let nf = n as f64;
        let fluct = c.fluctuation(nf);
        Ok(match mode {
            RescaleMode::AntidiagGoe => Self { center: c.speed * nf, scale: fluct / 2.0 },
            RescaleMode::CornerGse => Self { center: 2.0 * c.speed * nf, scale: fluct },
            RescaleMode::TruncatedGen => {
                let n23 = nf.powf(2.0 / 3.0);
                let u = (nf - m as f64) / n23;
                Self { center: c.speed * (2.0 * nf - u * n23), scale: fluct }
            }
        })
    }

    pub fn apply(&self, value: f64) -> f64 {
        (value - self.center) / self.scale
    }

    /// Inverse of [`Rescaling::apply`].
    pub fn level(&self, s: f64) -> f64 {
        self.center + self.scale * s
    }
}

pub fn rescale(samples: &[u64], mode: RescaleMode, n: usize, m: usize, q: f64) -> Result<Vec<f64>, StatsError> {
    let r = Rescaling::new(mode, n, m, q)?;
    Ok(samples.iter().map(|&x| r.apply(x as f64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centering() {
        let c = ScalingConstants::new(0.618).unwrap();
        let r = Rescaling::new(RescaleMode::AntidiagGoe, 100, 100, 0.618).unwrap();
        assert_eq!(r.apply(c.speed * 100.0), 0.0);
    }

    #[test]
    fn antidiag_reference_value() {
        let s = rescale(&[400], RescaleMode::AntidiagGoe, 100, 100, 0.618).unwrap()[0];
        assert!((s - 2.668_588_144_437_743).abs() < 1e-12, "{s}");
    }

    #[test]
    fn truncated_without_truncation_is_corner() {
        let xs = [0, 17, 250, 401];
        let a = rescale(&xs, RescaleMode::TruncatedGen, 60, 60, 0.25).unwrap();
        let b = rescale(&xs, RescaleMode::CornerGse, 60, 60, 0.25).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn truncated_center_counts_columns() {
        let c = ScalingConstants::new(0.25).unwrap();
        let r = Rescaling::new(RescaleMode::TruncatedGen, 60, 45, 0.25).unwrap();
        assert!((r.center - c.speed * 105.0).abs() < 1e-12);
        assert!((r.apply(r.level(-1.3)) + 1.3).abs() < 1e-12);
    }

    #[test]
    fn mode_names() {
        for m in RescaleMode::ALL {
            assert_eq!(m.name().parse::<RescaleMode>().unwrap(), m);
        }
        assert_eq!("goe".parse::<RescaleMode>(), Err(StatsError::UnknownMode("goe".into())));
        assert!(rescale(&[1], RescaleMode::CornerGse, 10, 10, 1.0).is_err());
    }
}
