use nalgebra::DMatrix;

use crate::PfaffianError;

/// Relative tolerance for the skew-symmetry check in [`pfaffian`].
pub const SKEW_TOLERANCE: f64 = 1e-9;

/// Pfaffian of a skew-symmetric matrix by Parlett-Reid elimination with
/// partial pivoting.
pub fn pfaffian(a: &DMatrix<f64>) -> Result<f64, PfaffianError> {
    let (r, c) = a.shape();
    if r != c {
        return Err(PfaffianError::NotSquare { rows: r, cols: c });
    }
    if r % 2 == 1 {
        return Err(PfaffianError::OddDimension(r));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(PfaffianError::NonFinite);
    }
    let scale = a.amax().max(1.0);
    let defect = (a + a.transpose()).amax();
    if defect > SKEW_TOLERANCE * scale {
        return Err(PfaffianError::Asymmetric { defect });
    }
    Ok(pfaffian_in_place(a.clone()))
}

/// Same elimination without input checks; consumes the matrix. Only the
/// strictly upper triangle of each trailing block is trusted.
pub fn pfaffian_in_place(mut a: DMatrix<f64>) -> f64 {
    let n = a.nrows();
    if n % 2 == 1 {
        return 0.0;
    }
    let mut pf = 1.0;
    let mut k = 0;
    while k + 1 < n {
        // pivot: largest entry in row k beyond the diagonal
        let mut kp = k + 1;
        let mut best = a[(k, k + 1)].abs();
        for j in k + 2..n {
            let v = a[(k, j)].abs();
            if v > best {
                best = v;
                kp = j;
            }
        }
        if kp != k + 1 {
            a.swap_rows(k + 1, kp);
            a.swap_columns(k + 1, kp);
            pf = -pf;
        }
        let piv = a[(k, k + 1)];
        if piv == 0.0 {
            return 0.0;
        }
        pf *= piv;
        if k + 2 < n {
            let tail = n - k - 2;
            let tau: Vec<f64> = (0..tail).map(|t| a[(k, k + 2 + t)] / piv).collect();
            let row: Vec<f64> = (0..tail).map(|t| a[(k + 1, k + 2 + t)]).collect();
            for c in 0..tail {
                let (rc, tc) = (row[c], tau[c]);
                for r in 0..tail {
                    a[(k + 2 + r, k + 2 + c)] += row[r] * tc - tau[r] * rc;
                }
            }
        }
        k += 2;
    }
    pf
}

/// Block-diagonal `[[0,1],[-1,0]]` of size `2m`.
pub fn symplectic_j(m: usize) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        j[(2 * i, 2 * i + 1)] = 1.0;
        j[(2 * i + 1, 2 * i)] = -1.0;
    }
    j
}
