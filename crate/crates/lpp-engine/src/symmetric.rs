use lattice_domain::{sample_weights_in_stream, DomainShape, GeometricParams, WeightMatrix};

use crate::LppError;

/// Reflects a lower-triangular matrix (diagonal included) into a full
/// symmetric square matrix.
pub fn symmetrize(lower: &WeightMatrix) -> Result<WeightMatrix, LppError> {
    if !lower.shape().is_lower_triangle() {
        return Err(LppError::NotLowerTriangular);
    }
    let n = lower.rows();
    let shape = DomainShape::square(n, n)?;
    let mut out = WeightMatrix::zeros(shape);
    for i in 1..=n {
        for j in 1..=n {
            out.set(i, j, lower.get(i.max(j), i.min(j)));
        }
    }
    Ok(out)
}

/// Symmetric geometric matrix: off-diagonal ratio `a_i a_j`, diagonal ratio
/// `alpha a_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricModel {
    pub a: Vec<f64>,
    pub alpha: f64,
}

impl SymmetricModel {
    pub fn constant(q: f64, n: usize) -> Self {
        let r = q.sqrt();
        Self { a: vec![r; n], alpha: r }
    }

    fn params(&self) -> Result<GeometricParams, LppError> {
        Ok(GeometricParams::new(self.a.clone(), self.a.clone(), Some(self.alpha))?)
    }
}

/// Samples the lower triangle independently and mirrors it.
pub fn sample_symmetric_model(
    model: &SymmetricModel,
    n: usize,
    seed: u64,
    stream: u64,
) -> Result<WeightMatrix, LppError> {
    let shape = DomainShape::lower_triangular(n)?;
    let params = model.params()?;
    let lower = sample_weights_in_stream(&shape, &params, seed, stream)?;
    symmetrize(&lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_domain::DomainError;

    #[test]
    fn reflects_two_by_two() {
        let shape = DomainShape::lower_triangular(2).unwrap();
        let w = WeightMatrix::from_entries(shape, vec![2, 1, 3]).unwrap();
        let s = symmetrize(&w).unwrap();
        assert_eq!(s.to_dense(), vec![vec![2, 1], vec![1, 3]]);
    }

    #[test]
    fn idempotent_on_lower_triangle() {
        let shape = DomainShape::lower_triangular(4).unwrap();
        let w = WeightMatrix::from_entries(shape, (1..=10).collect()).unwrap();
        let s = symmetrize(&w).unwrap();
        let back = WeightMatrix::from_rows(shape, &s.to_dense()).unwrap();
        assert_eq!(symmetrize(&back).unwrap(), s);
    }

    #[test]
    fn rejects_square_input() {
        let w = WeightMatrix::zeros(DomainShape::square(2, 2).unwrap());
        assert_eq!(symmetrize(&w), Err(LppError::NotLowerTriangular));
    }

    #[test]
    fn zero_alpha_clears_diagonal() {
        let model = SymmetricModel { a: vec![0.7; 6], alpha: 0.0 };
        for s in 0..50 {
            let w = sample_symmetric_model(&model, 6, 3, s).unwrap();
            assert!((1..=6).all(|i| w.get(i, i) == 0));
        }
    }

    #[test]
    fn constant_model_has_uniform_ratio() {
        let model = SymmetricModel::constant(0.36, 5);
        let p = model.params().unwrap();
        for i in 1..=5 {
            for j in 1..=i {
                assert!((p.ratio(i, j) - 0.36).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn constraint_violation() {
        let model = SymmetricModel { a: vec![0.9, 0.95], alpha: 1.5 };
        assert!(matches!(
            sample_symmetric_model(&model, 2, 0, 0),
            Err(LppError::Domain(DomainError::InvalidParameter { .. }))
        ));
    }

    #[test]
    fn diagonal_mean() {
        // alpha * a = 0.5 on the diagonal
        let model = SymmetricModel { a: vec![0.625], alpha: 0.8 };
        let draws = 100_000;
        let total: u64 = (0..draws).map(|s| sample_symmetric_model(&model, 1, 17, s).unwrap().get(1, 1)).sum();
        let mean = total as f64 / draws as f64;
        assert!((mean - 1.0).abs() < 0.02, "{mean}");
    }
}
