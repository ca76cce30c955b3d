use lattice_domain::WeightMatrix;

use crate::{LppError, PathFamily};

/// Largest `n + m` accepted by [`lpp_bruteforce`].
pub const BRUTEFORCE_MAX_SPAN: usize = 16;

/// Maximum path weight by explicit enumeration of every path.
pub fn lpp_bruteforce(w: &WeightMatrix, family: PathFamily) -> Result<u64, LppError> {
    let (n, m) = (w.rows(), w.cols());
    if n + m > BRUTEFORCE_MAX_SPAN {
        return Err(LppError::TooLarge { span: n + m, cap: BRUTEFORCE_MAX_SPAN });
    }
    match family {
        PathFamily::CornerToCorner => Ok(walk(w, 1, 1, n, m, true)),
        PathFamily::AntiDiagonal => {
            if n != m {
                return Err(LppError::NotSquare { rows: n, cols: m });
            }
            Ok(walk(w, 1, n, n, 1, false))
        }
    }
}

// Enumerates paths from (i, j); the second step is right when `rightward`,
// otherwise left.
fn walk(w: &WeightMatrix, i: usize, j: usize, ti: usize, tj: usize, rightward: bool) -> u64 {
    let here = w.get(i, j);
    if (i, j) == (ti, tj) {
        return here;
    }
    let mut best = 0;
    if i < ti {
        best = best.max(walk(w, i + 1, j, ti, tj, rightward));
    }
    if rightward && j < tj {
        best = best.max(walk(w, i, j + 1, ti, tj, rightward));
    }
    if !rightward && j > tj {
        best = best.max(walk(w, i, j - 1, ti, tj, rightward));
    }
    here + best
}
