use crate::DomainError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Square,
    LowerTriangular,
    TruncatedStaircase,
}

/// Active cells of an `n x m` box, 1-based. Every row's active cells form
/// a prefix `1..=row_len(i)` of the columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DomainShape {
    kind: DomainKind,
    rows: usize,
    cols: usize,
}

impl DomainShape {
    pub fn new(kind: DomainKind, n: usize, m: usize) -> Result<Self, DomainError> {
        if n == 0 || m == 0 {
            return Err(DomainError::EmptyDomain { n, m });
        }
        match kind {
            DomainKind::Square => {}
            DomainKind::LowerTriangular if m != n => return Err(DomainError::NotSquare { n, m }),
            DomainKind::TruncatedStaircase if m > n => return Err(DomainError::StaircaseTooWide { n, m }),
            _ => {}
        }
        Ok(Self { kind, rows: n, cols: m })
    }

    pub fn square(n: usize, m: usize) -> Result<Self, DomainError> {
        Self::new(DomainKind::Square, n, m)
    }

    pub fn lower_triangular(n: usize) -> Result<Self, DomainError> {
        Self::new(DomainKind::LowerTriangular, n, n)
    }

    pub fn staircase(n: usize, m: usize) -> Result<Self, DomainError> {
        Self::new(DomainKind::TruncatedStaircase, n, m)
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of active cells in row `i` (1-based).
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 || i > self.rows {
            return 0;
        }
        match self.kind {
            DomainKind::Square => self.cols,
            DomainKind::LowerTriangular => i,
            DomainKind::TruncatedStaircase => i.min(self.cols),
        }
    }

    pub fn is_active(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.row_len(i)
    }

    pub fn active_count(&self) -> usize {
        (1..=self.rows).map(|i| self.row_len(i)).sum()
    }

    /// Active cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.rows).flat_map(move |i| (1..=self.row_len(i)).map(move |j| (i, j)))
    }

    /// Whether the shape has the same active set as the `n x n` lower triangle.
    pub fn is_lower_triangle(&self) -> bool {
        self.rows == self.cols && self.kind != DomainKind::Square
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn active(shape: &DomainShape) -> BTreeSet<(usize, usize)> {
        shape.cells().collect()
    }

    #[test]
    fn smallest_lower_triangle() {
        let s = DomainShape::lower_triangular(1).unwrap();
        assert_eq!(active(&s), BTreeSet::from([(1, 1)]));
    }

    #[test]
    fn staircase_six_by_four() {
        let s = DomainShape::staircase(6, 4).unwrap();
        let row5: Vec<usize> = s.cells().filter(|c| c.0 == 5).map(|c| c.1).collect();
        let row3: Vec<usize> = s.cells().filter(|c| c.0 == 3).map(|c| c.1).collect();
        assert_eq!(row5, vec![1, 2, 3, 4]);
        assert_eq!(row3, vec![1, 2, 3]);
        assert!(!s.is_active(2, 3));
        assert!(s.is_active(6, 4));
        assert!(!s.is_active(6, 5));
    }

    #[test]
    fn full_staircase_is_lower_triangle() {
        let a = DomainShape::staircase(5, 5).unwrap();
        let b = DomainShape::lower_triangular(5).unwrap();
        assert_eq!(active(&a), active(&b));
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert_eq!(DomainShape::staircase(3, 4), Err(DomainError::StaircaseTooWide { n: 3, m: 4 }));
        assert_eq!(DomainShape::new(DomainKind::LowerTriangular, 3, 2), Err(DomainError::NotSquare { n: 3, m: 2 }));
        assert!(DomainShape::square(0, 2).is_err());
    }

    #[test]
    fn active_counts() {
        for n in 1..=50 {
            for m in 1..=50 {
                assert_eq!(DomainShape::square(n, m).unwrap().active_count(), n * m);
                if m <= n {
                    let s = DomainShape::staircase(n, m).unwrap();
                    assert_eq!(s.active_count(), m * (m + 1) / 2 + (n - m) * m);
                }
            }
            let lt = DomainShape::lower_triangular(n).unwrap();
            assert_eq!(lt.active_count(), n * (n + 1) / 2);
        }
    }
}
