use lattice_domain::WeightMatrix;

/// Pairs `(i, j)` repeated `w_ij` times, in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Biword {
    pairs: Vec<(u32, u32)>,
}

impl Biword {
    /// Builds from arbitrary pairs, sorting them lexicographically.
    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn top_word(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottom_word(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

pub fn biword(w: &WeightMatrix) -> Biword {
    let mut pairs = Vec::with_capacity(w.total() as usize);
    for i in 1..=w.rows() {
        for (jj, &a) in w.row(i).iter().enumerate() {
            for _ in 0..a {
                pairs.push((i as u32, jj as u32 + 1));
            }
        }
    }
    Biword { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_domain::DomainShape;

    #[test]
    fn zero_matrix_is_empty() {
        let w = WeightMatrix::zeros(DomainShape::square(1, 1).unwrap());
        assert!(biword(&w).is_empty());
    }

    #[test]
    fn unrolls_in_lex_order() {
        let shape = DomainShape::square(2, 2).unwrap();
        let w = WeightMatrix::from_rows(shape, &[vec![1, 0], vec![2, 1]]).unwrap();
        assert_eq!(biword(&w).pairs(), &[(1, 1), (2, 1), (2, 1), (2, 2)]);
    }

    #[test]
    fn from_pairs_sorts() {
        let b = Biword::from_pairs(vec![(2, 1), (1, 3), (1, 2)]);
        assert_eq!(b.pairs(), &[(1, 2), (1, 3), (2, 1)]);
    }
}
