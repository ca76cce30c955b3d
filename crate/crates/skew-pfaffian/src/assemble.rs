use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::{gauss_legendre_on, pfaffian_in_place, PfaffianError};

/// Largest tolerated pre-symmetrisation defect, relative to the largest entry.
pub const ASSEMBLY_DEFECT_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KernelEntry {
    pub k11: f64,
    pub k12: f64,
    pub k22: f64,
}

/// The three kernel blocks evaluated on a grid, `blocks.kab[(i, j)] = Kab(x_i, x_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Blocks {
    pub k11: DMatrix<f64>,
    pub k12: DMatrix<f64>,
    pub k22: DMatrix<f64>,
}

impl Blocks {
    pub fn zeros(m: usize) -> Self {
        Self { k11: DMatrix::zeros(m, m), k12: DMatrix::zeros(m, m), k22: DMatrix::zeros(m, m) }
    }

    pub fn len(&self) -> usize {
        self.k11.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Leading `m x m` corner of each block.
    pub fn leading(&self, m: usize) -> Self {
        self.window(0, m)
    }

    /// The `m x m` diagonal window starting at grid index `offset`.
    pub fn window(&self, offset: usize, m: usize) -> Self {
        Self {
            k11: self.k11.view((offset, offset), (m, m)).into_owned(),
            k12: self.k12.view((offset, offset), (m, m)).into_owned(),
            k22: self.k22.view((offset, offset), (m, m)).into_owned(),
        }
    }
}

/// A 2 x 2 matrix kernel. Implementors with a faster batch evaluation
/// override [`SkewKernel::blocks`].
pub trait SkewKernel: Sync {
    fn entry(&self, x: f64, y: f64) -> KernelEntry;

    fn blocks(&self, points: &[f64]) -> Blocks {
        let m = points.len();
        let rows: Vec<Vec<KernelEntry>> =
            points.par_iter().map(|&x| points.iter().map(|&y| self.entry(x, y)).collect()).collect();
        let mut b = Blocks::zeros(m);
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                b.k11[(i, j)] = e.k11;
                b.k12[(i, j)] = e.k12;
                b.k22[(i, j)] = e.k22;
            }
        }
        b
    }
}

impl<F: Fn(f64, f64) -> KernelEntry + Sync> SkewKernel for F {
    fn entry(&self, x: f64, y: f64) -> KernelEntry {
        self(x, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FredholmSign {
    /// `Pf(J - K)`
    #[default]
    Minus,
    /// `Pf(J + K)`
    Plus,
}

impl FredholmSign {
    fn factor(self) -> f64 {
        match self {
            FredholmSign::Minus => -1.0,
            FredholmSign::Plus => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridPlacement {
    /// `k+1, k+2, ...`
    Integer,
    /// `k+1/2, k+3/2, ...`
    #[default]
    HalfInteger,
}

/// First `m` grid points above level `k`.
pub fn discrete_grid(k: i64, m: usize, placement: GridPlacement) -> Vec<f64> {
    let start = match placement {
        GridPlacement::Integer => k as f64 + 1.0,
        GridPlacement::HalfInteger => k as f64 + 0.5,
    };
    (0..m).map(|i| start + i as f64).collect()
}

/// Skew-symmetric kernel matrix on a grid, quadrature weights folded in.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewKernelMatrix {
    matrix: DMatrix<f64>,
    grid: Vec<f64>,
    weights: Vec<f64>,
    defect: f64,
}

impl SkewKernelMatrix {
    /// Interleaves the blocks, scales by `sqrt(w_i w_j)` and symmetrises.
    pub fn from_blocks(blocks: &Blocks, grid: Vec<f64>, weights: Vec<f64>) -> Result<Self, PfaffianError> {
        let m = grid.len();
        if m == 0 {
            return Err(PfaffianError::EmptyGrid);
        }
        assert_eq!(blocks.len(), m, "blocks and grid disagree");
        assert_eq!(weights.len(), m, "weights and grid disagree");
        let sw: Vec<f64> = weights.iter().map(|w| w.sqrt()).collect();
        let mut a = DMatrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            for j in 0..m {
                let s = sw[i] * sw[j];
                a[(2 * i, 2 * j)] = s * blocks.k11[(i, j)];
                a[(2 * i, 2 * j + 1)] = s * blocks.k12[(i, j)];
                a[(2 * i + 1, 2 * j)] = -s * blocks.k12[(j, i)];
                a[(2 * i + 1, 2 * j + 1)] = s * blocks.k22[(i, j)];
            }
        }
        if a.iter().any(|v| !v.is_finite()) {
            return Err(PfaffianError::NonFinite);
        }
        let defect = (&a + a.transpose()).amax();
        if defect > ASSEMBLY_DEFECT_LIMIT * a.amax().max(1.0) {
            return Err(PfaffianError::AssemblyDefect { defect });
        }
        let matrix = (&a - a.transpose()) * 0.5;
        Ok(Self { matrix, grid, weights, defect })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Largest `|A + A^T|` entry before symmetrisation.
    pub fn defect(&self) -> f64 {
        self.defect
    }

    /// Number of grid points (the matrix has twice as many rows).
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// `Pf(J + sign * K)` on this grid.
    pub fn fredholm_pf(&self, sign: FredholmSign) -> f64 {
        let mut b = &self.matrix * sign.factor();
        for i in 0..self.len() {
            b[(2 * i, 2 * i + 1)] += 1.0;
            b[(2 * i + 1, 2 * i)] -= 1.0;
        }
        pfaffian_in_place(b)
    }
}

/// Kernel on `m` lattice points above `k`, unit weights.
pub fn assemble_discrete<K: SkewKernel + ?Sized>(
    kernel: &K,
    k: i64,
    m: usize,
    placement: GridPlacement,
) -> Result<SkewKernelMatrix, PfaffianError> {
    if m == 0 {
        return Err(PfaffianError::EmptyGrid);
    }
    let grid = discrete_grid(k, m, placement);
    let blocks = kernel.blocks(&grid);
    SkewKernelMatrix::from_blocks(&blocks, grid, vec![1.0; m])
}

/// Kernel on `n` Gauss-Legendre nodes of `(s, s + length)`.
pub fn assemble_continuous<K: SkewKernel + ?Sized>(
    kernel: &K,
    s: f64,
    length: f64,
    n: usize,
) -> Result<SkewKernelMatrix, PfaffianError> {
    if !(length > 0.0 && length.is_finite() && s.is_finite()) {
        return Err(PfaffianError::InvalidWindow { start: s, length });
    }
    if n == 0 {
        return Err(PfaffianError::EmptyGrid);
    }
    let (grid, weights) = gauss_legendre_on(s, s + length, n);
    let blocks = kernel.blocks(&grid);
    SkewKernelMatrix::from_blocks(&blocks, grid, weights)
}
