use std::io::{self, Write};

use crate::StatsError;

/// Right-continuous empirical CDF, `F(t) = #{x_i <= t} / N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ecdf {
    sorted: Vec<f64>,
}

impl Ecdf {
    pub fn new(mut values: Vec<f64>) -> Result<Self, StatsError> {
        if values.is_empty() {
            return Err(StatsError::NoSamples);
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(StatsError::NonFinite(bad));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self { sorted: values })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.sorted.partition_point(|&x| x <= t) as f64 / self.len() as f64
    }

    /// Distinct sample values with `F` just after each jump.
    pub fn jumps(&self) -> Vec<(f64, f64)> {
        let n = self.len() as f64;
        let mut out: Vec<(f64, f64)> = Vec::new();
        for (i, &x) in self.sorted.iter().enumerate() {
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 = (i + 1) as f64 / n,
                _ => out.push((x, (i + 1) as f64 / n)),
            }
        }
        out
    }

    /// CSV `value,ecdf` with one row per distinct value.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "value,ecdf")?;
        for (x, f) in self.jumps() {
            writeln!(out, "{x:.16e},{f:.16e}")?;
        }
        Ok(())
    }
}

/// `sup_t |F_hat(t) - F(t)|`, checked at every jump on both sides. The
/// left side compares `F_hat(t-)` with `F` at the next float below `t`.
pub fn ks_distance(ecdf: &Ecdf, cdf: impl Fn(f64) -> f64) -> f64 {
    let mut below = 0.0;
    let mut worst: f64 = 0.0;
    for (x, after) in ecdf.jumps() {
        worst = worst.max((after - cdf(x)).abs()).max((below - cdf(x.next_down())).abs());
        below = after;
    }
    worst
}
