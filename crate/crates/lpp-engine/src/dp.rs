use lattice_domain::WeightMatrix;

use crate::{LppError, PathFamily};

/// Down-right last passage time from `(1,1)` to `(n,m)`; inactive cells
/// count as zero.
pub fn lpp_corner(w: &WeightMatrix) -> u64 {
    let (n, m) = (w.rows(), w.cols());
    let mut prev = vec![0u64; m + 1];
    for i in 1..=n {
        let mut left = 0u64;
        let len = w.shape().row_len(i);
        let row = w.row(i);
        for j in 1..=m {
            let wij = if j <= len { row[j - 1] } else { 0 };
            let best = if i == 1 {
                left
            } else if j == 1 {
                prev[1]
            } else {
                prev[j].max(left)
            };
            left = best + wij;
            prev[j] = left;
        }
    }
    prev[m]
}

/// Down-left last passage time from `(1,n)` to `(n,1)` on a square box.
pub fn lpp_antidiagonal(w: &WeightMatrix) -> Result<u64, LppError> {
    let n = w.rows();
    if w.cols() != n {
        return Err(LppError::NotSquare { rows: n, cols: w.cols() });
    }
    // prev[j] holds L(i-1, j); columns are swept right to left
    let mut prev = vec![0u64; n + 2];
    for i in 1..=n {
        let mut right = 0u64;
        for j in (1..=n).rev() {
            let best = match (i == 1, j == n) {
                (true, true) => 0,
                (true, false) => right,
                (false, true) => prev[j],
                (false, false) => prev[j].max(right),
            };
            right = best + w.get(i, j);
            prev[j] = right;
        }
    }
    Ok(prev[1])
}

pub fn lpp(w: &WeightMatrix, family: PathFamily) -> Result<u64, LppError> {
    match family {
        PathFamily::CornerToCorner => Ok(lpp_corner(w)),
        PathFamily::AntiDiagonal => lpp_antidiagonal(w),
    }
}
