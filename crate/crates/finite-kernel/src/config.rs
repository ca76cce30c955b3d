use skew_pfaffian::GridPlacement;

use crate::FiniteKernelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    K11,
    K12,
    K22,
}

/// `(r_z, r_w)` for each block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockRadii {
    pub k11: (f64, f64),
    pub k12: (f64, f64),
    pub k22: (f64, f64),
}

impl BlockRadii {
    pub fn default_for(q: f64) -> Self {
        let s = q.sqrt();
        let outer = (1.0 + 1.0 / s) / 2.0;
        let inner = (1.0 + s) / 2.0;
        Self { k11: (outer, outer), k12: (outer, inner), k22: (outer, outer) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteKernelConfig {
    pub n: usize,
    pub m: usize,
    pub q: f64,
    pub radii: BlockRadii,
    /// Initial node count per contour; doubled until entries settle.
    pub nodes: usize,
    pub max_nodes: usize,
    pub grid: GridPlacement,
}

impl FiniteKernelConfig {
    pub fn new(n: usize, m: usize, q: f64) -> Result<Self, FiniteKernelError> {
        check_shape(n, m, q)?;
        Ok(Self {
            n,
            m,
            q,
            radii: BlockRadii::default_for(q),
            nodes: 64,
            max_nodes: 8192,
            grid: GridPlacement::HalfInteger,
        })
    }

    pub fn with_radii(mut self, radii: BlockRadii) -> Result<Self, FiniteKernelError> {
        self.radii = radii;
        self.validate()?;
        Ok(self)
    }

    pub fn s(&self) -> f64 {
        self.q.sqrt()
    }

    pub fn validate(&self) -> Result<(), FiniteKernelError> {
        check_shape(self.n, self.m, self.q)?;
        let s = self.s();
        let top = 1.0 / s;
        let (z, w) = self.radii.k11;
        if !(1.0 < z && z < top && 1.0 < w && w < top) {
            return Err(FiniteKernelError::Radius { block: Block::K11, rule: "1 < r_z, r_w < q^(-1/2)" });
        }
        let (z, w) = self.radii.k12;
        if !(s < w && w < z && z < top && 1.0 < z) {
            return Err(FiniteKernelError::Radius {
                block: Block::K12,
                rule: "q^(1/2) < r_w < r_z < q^(-1/2) and r_z > 1",
            });
        }
        let (z, w) = self.radii.k22;
        if !(s < z && z < top && s < w && w < top && z * w > 1.0) {
            return Err(FiniteKernelError::Radius {
                block: Block::K22,
                rule: "q^(1/2) < r_z, r_w < q^(-1/2) and r_z r_w > 1",
            });
        }
        Ok(())
    }
}

pub(crate) fn check_shape(n: usize, m: usize, q: f64) -> Result<(), FiniteKernelError> {
    if m == 0 || m > n {
        return Err(FiniteKernelError::Shape { n, m });
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(FiniteKernelError::Parameter(q));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_admissible() {
        for q in [0.01, 0.25, 0.5, 0.618, 0.9, 0.99] {
            FiniteKernelConfig::new(3, 2, q).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn rejects_bad_radii() {
        let cfg = FiniteKernelConfig::new(2, 2, 0.25).unwrap();
        let mut r = cfg.radii;
        r.k12 = (1.5, 1.6);
        assert!(matches!(cfg.clone().with_radii(r), Err(FiniteKernelError::Radius { block: Block::K12, .. })));
        let mut r = cfg.radii;
        r.k11 = (0.9, 1.5);
        assert!(cfg.clone().with_radii(r).is_err());
        let mut r = cfg.radii;
        r.k22 = (0.8, 1.1);
        assert!(cfg.with_radii(r).is_err());
    }

    #[test]
    fn rejects_bad_shape() {
        assert!(FiniteKernelConfig::new(2, 3, 0.5).is_err());
        assert!(FiniteKernelConfig::new(2, 0, 0.5).is_err());
        assert!(FiniteKernelConfig::new(2, 2, 1.0).is_err());
    }
}
