use crate::{airy_ai, AiryError};

const NEWTON_MAX: usize = 60;
const RESIDUAL_LIMIT: f64 = 1e-8;

/// Hastings-McLeod solution of `q'' = 2 q^3 + x q` on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct HastingsMcLeodSolution {
    pub grid: Vec<f64>,
    pub q_values: Vec<f64>,
    pub qprime_values: Vec<f64>,
    /// Largest change against a solve with twice the step, on shared nodes.
    pub accuracy: f64,
    /// Largest `|q'' - 2q^3 - xq| / max(1, |2q^3| + |xq|)` with `q''` from a
    /// fourth-order difference of the stored values.
    pub residual: f64,
}

impl HastingsMcLeodSolution {
    pub fn x_min(&self) -> f64 {
        self.grid[0]
    }

    pub fn x_max(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    pub fn step(&self) -> f64 {
        self.grid[1] - self.grid[0]
    }

    /// Cubic Hermite interpolation of `(q, q')` at `x` inside the grid.
    pub fn interpolate(&self, x: f64) -> Option<(f64, f64)> {
        if !(self.x_min()..=self.x_max()).contains(&x) {
            return None;
        }
        let h = self.step();
        let i = (((x - self.x_min()) / h).floor() as usize).min(self.grid.len() - 2);
        Some(hermite(
            (self.q_values[i], self.qprime_values[i]),
            (self.q_values[i + 1], self.qprime_values[i + 1]),
            h,
            (x - self.grid[i]) / h,
        ))
    }
}

// Cubic Hermite value and derivative at fraction t of a cell of width h.
pub(crate) fn hermite(left: (f64, f64), right: (f64, f64), h: f64, t: f64) -> (f64, f64) {
    let (p0, m0) = left;
    let (p1, m1) = right;
    let t2 = t * t;
    let t3 = t2 * t;
    let v = (2.0 * t3 - 3.0 * t2 + 1.0) * p0
        + (t3 - 2.0 * t2 + t) * h * m0
        + (-2.0 * t3 + 3.0 * t2) * p1
        + (t3 - t2) * h * m1;
    let d = (6.0 * t2 - 6.0 * t) * p0 / h
        + (3.0 * t2 - 4.0 * t + 1.0) * m0
        + (-6.0 * t2 + 6.0 * t) * p1 / h
        + (3.0 * t2 - 2.0 * t) * m1;
    (v, d)
}

/// Left boundary value `sqrt(-x/2) (1 + 1/(8x^3) - 73/(128x^6))`.
pub fn left_asymptote(x: f64) -> f64 {
    let x3 = x * x * x;
    (-x / 2.0).sqrt() * (1.0 + 1.0 / (8.0 * x3) - 73.0 / (128.0 * x3 * x3))
}

/// Solves the boundary-value problem on `[x_min, x_max]` with step about
/// `h`: `q(x_max) = Ai(x_max)`, `q(x_min)` from [`left_asymptote`].
/// Fourth-order Numerov discretisation, damped Newton with a tridiagonal
/// Jacobian.
pub fn hastings_mcleod(x_min: f64, x_max: f64, h: f64) -> Result<HastingsMcLeodSolution, AiryError> {
    if !(x_min.is_finite() && x_max.is_finite() && h.is_finite()) {
        return Err(AiryError::Setting("non-finite bounds or step".into()));
    }
    if x_min > -6.0 {
        return Err(AiryError::Setting(format!("x_min = {x_min} must be <= -6 for the left asymptote")));
    }
    if !(4.0..=15.0).contains(&x_max) {
        return Err(AiryError::Setting(format!("x_max = {x_max} must lie in [4, 15]")));
    }
    if !(h > 0.0 && h <= 0.05) {
        return Err(AiryError::Setting(format!("step {h} must lie in (0, 0.05]")));
    }
    let cells = ((x_max - x_min) / h).round().max(8.0) as usize;
    let (grid, q) = solve(x_min, x_max, cells)?;
    let h = (x_max - x_min) / cells as f64;

    let coarse = if cells % 2 == 0 { Some(solve(x_min, x_max, cells / 2)?.1) } else { None };
    let accuracy = match coarse {
        Some(c) => c.iter().enumerate().map(|(i, v)| (v - q[2 * i]).abs()).fold(0.0, f64::max),
        None => f64::NAN,
    };

    let qp = derivative(&q, h, airy_ai(x_max)?.1);
    let residual = residual(&grid, &q, h);
    if let Some(i) = q.iter().position(|&v| v <= 0.0) {
        return Err(AiryError::NotPositive { x: grid[i] });
    }
    if residual.is_nan() || residual >= RESIDUAL_LIMIT {
        return Err(AiryError::Residual { residual, limit: RESIDUAL_LIMIT });
    }
    Ok(HastingsMcLeodSolution { grid, q_values: q, qprime_values: qp, accuracy, residual })
}

fn solve(x_min: f64, x_max: f64, cells: usize) -> Result<(Vec<f64>, Vec<f64>), AiryError> {
    let h = (x_max - x_min) / cells as f64;
    let grid: Vec<f64> = (0..=cells).map(|i| x_min + i as f64 * h).collect();
    let right = airy_ai(x_max)?.0;
    let mut q: Vec<f64> = grid
        .iter()
        .map(|&x| {
            let a = if x >= -15.0 { airy_ai(x.min(15.0)).map(|p| p.0).unwrap_or(0.0) } else { 0.0 };
            (a * a + (-x).max(0.0) / 2.0).sqrt()
        })
        .collect();
    q[0] = left_asymptote(x_min);
    q[cells] = right;

    let c = h * h / 12.0;
    let force = |q: f64, x: f64| 2.0 * q * q * q + x * q;
    let residuals = |q: &[f64]| -> Vec<f64> {
        let f: Vec<f64> = q.iter().zip(&grid).map(|(&v, &x)| force(v, x)).collect();
        (1..cells).map(|i| q[i + 1] - 2.0 * q[i] + q[i - 1] - c * (f[i + 1] + 10.0 * f[i] + f[i - 1])).collect()
    };
    let norm = |r: &[f64]| r.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut r = residuals(&q);
    let mut update = f64::INFINITY;
    for _ in 0..NEWTON_MAX {
        let slope: Vec<f64> = q.iter().zip(&grid).map(|(&v, &x)| 6.0 * v * v + x).collect();
        let n = cells - 1;
        let diag: Vec<f64> = (1..cells).map(|i| -2.0 - 10.0 * c * slope[i]).collect();
        let lower: Vec<f64> = (1..cells).map(|i| 1.0 - c * slope[i - 1]).collect();
        let upper: Vec<f64> = (1..cells).map(|i| 1.0 - c * slope[i + 1]).collect();
        let rhs: Vec<f64> = r.iter().map(|v| -v).collect();
        let step = thomas(&lower[..n], &diag, &upper[..n], &rhs);

        let before = norm(&r);
        let mut lambda = 1.0;
        loop {
            let mut trial = q.clone();
            for i in 0..n {
                trial[i + 1] += lambda * step[i];
            }
            let rt = residuals(&trial);
            if norm(&rt) < before || lambda < 1e-4 {
                q = trial;
                r = rt;
                break;
            }
            lambda *= 0.5;
        }
        update = lambda * norm(&step);
        if update < 1e-14 * q.iter().fold(1.0f64, |m, v| m.max(v.abs())) {
            return Ok((grid, q));
        }
    }
    Err(AiryError::Newton { iterations: NEWTON_MAX, update })
}

// Tridiagonal solve; lower[0] and upper[n-1] are ignored.
fn thomas(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let m = diag[i] - lower[i] * c[i - 1];
        c[i] = if i + 1 < n { upper[i] / m } else { 0.0 };
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}

// Fourth-order differences; the right end uses the known Ai'.
fn derivative(q: &[f64], h: f64, right: f64) -> Vec<f64> {
    let n = q.len();
    let mut d = vec![0.0; n];
    for i in 2..n - 2 {
        d[i] = (q[i - 2] - 8.0 * q[i - 1] + 8.0 * q[i + 1] - q[i + 2]) / (12.0 * h);
    }
    d[0] = (-25.0 * q[0] + 48.0 * q[1] - 36.0 * q[2] + 16.0 * q[3] - 3.0 * q[4]) / (12.0 * h);
    d[1] = (-3.0 * q[0] - 10.0 * q[1] + 18.0 * q[2] - 6.0 * q[3] + q[4]) / (12.0 * h);
    d[n - 2] = (3.0 * q[n - 1] + 10.0 * q[n - 2] - 18.0 * q[n - 3] + 6.0 * q[n - 4] - q[n - 5]) / (12.0 * h);
    d[n - 1] = right;
    d
}

fn residual(grid: &[f64], q: &[f64], h: f64) -> f64 {
    (2..q.len() - 2)
        .map(|i| {
            let second = (-q[i - 2] + 16.0 * q[i - 1] - 30.0 * q[i] + 16.0 * q[i + 1] - q[i + 2]) / (12.0 * h * h);
            let cubic = 2.0 * q[i].powi(3);
            let linear = grid[i] * q[i];
            (second - cubic - linear).abs() / (cubic.abs() + linear.abs()).max(1.0)
        })
        .fold(0.0, f64::max)
}
