//! Last passage times on weight matrices.
//!
//! Two path families are supported: down-right paths from the top-left
//! corner to `(n, m)` and down-left paths from `(1, n)` to `(n, 1)`.

mod brute;
mod dp;
mod symmetric;

pub use brute::{lpp_bruteforce, BRUTEFORCE_MAX_SPAN};
pub use dp::{lpp, lpp_antidiagonal, lpp_corner};
pub use symmetric::{sample_symmetric_model, symmetrize, SymmetricModel};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathFamily {
    /// `(1,1) -> (n,m)` with unit steps down or right.
    CornerToCorner,
    /// `(1,n) -> (n,1)` with unit steps down or left.
    AntiDiagonal,
}

impl PathFamily {
    /// Cells visited by any path of this family on an `n x m` box.
    pub fn path_len(self, n: usize, m: usize) -> usize {
        match self {
            PathFamily::CornerToCorner => n + m - 1,
            PathFamily::AntiDiagonal => 2 * n - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LppError {
    #[error("anti-diagonal paths need a square box, got {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("brute force is capped at n + m <= {cap}, got {span}")]
    TooLarge { span: usize, cap: usize },
    #[error("input has active cells above the diagonal")]
    NotLowerTriangular,
    #[error(transparent)]
    Domain(#[from] lattice_domain::DomainError),
}
