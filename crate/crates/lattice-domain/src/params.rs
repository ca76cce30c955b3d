use crate::{check_open_unit, DomainError, DomainShape};

/// Row parameters `x`, column parameters `y` and an optional diagonal
/// parameter `alpha`. Cell `(i, j)` is geometric with ratio `x_i * y_j`,
/// or `alpha * x_i` on the diagonal when `alpha` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricParams {
    x: Vec<f64>,
    y: Vec<f64>,
    alpha: Option<f64>,
}

fn check_unit(what: impl Fn() -> String, value: f64) -> Result<(), DomainError> {
    if (0.0..1.0).contains(&value) {
        Ok(())
    } else {
        Err(DomainError::InvalidParameter { what: what(), value })
    }
}

impl GeometricParams {
    pub fn new(x: Vec<f64>, y: Vec<f64>, alpha: Option<f64>) -> Result<Self, DomainError> {
        for (i, &v) in x.iter().enumerate() {
            check_unit(|| format!("x[{}]", i + 1), v)?;
        }
        for (j, &v) in y.iter().enumerate() {
            check_unit(|| format!("y[{}]", j + 1), v)?;
        }
        if let Some(a) = alpha {
            check_unit(|| "alpha".to_string(), a)?;
        }
        Ok(Self { x, y, alpha })
    }

    /// All row and column parameters equal to `sqrt(q)`; `alpha = sqrt(q)`
    /// when `with_alpha`.
    pub fn constant(q: f64, n: usize, m: usize, with_alpha: bool) -> Result<Self, DomainError> {
        check_open_unit(q)?;
        let r = q.sqrt();
        Ok(Self { x: vec![r; n], y: vec![r; m], alpha: with_alpha.then_some(r) })
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// Geometric ratio of cell `(i, j)`, 1-based.
    pub fn ratio(&self, i: usize, j: usize) -> f64 {
        match self.alpha {
            Some(a) if i == j => a * self.x[i - 1],
            _ => self.x[i - 1] * self.y[j - 1],
        }
    }

    /// Checks dimensions and `ratio < 1` on every active cell of `shape`.
    pub fn check_shape(&self, shape: &DomainShape) -> Result<(), DomainError> {
        if self.x.len() < shape.rows() || self.y.len() < shape.cols() {
            return Err(DomainError::DimensionMismatch {
                rows: self.x.len(),
                cols: self.y.len(),
                need_rows: shape.rows(),
                need_cols: shape.cols(),
            });
        }
        for (i, j) in shape.cells() {
            let p = self.ratio(i, j);
            if p >= 1.0 {
                return Err(DomainError::ProductTooLarge { i, j, product: p });
            }
        }
        Ok(())
    }
}
