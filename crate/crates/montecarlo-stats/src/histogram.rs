use std::io::{self, Write};

use crate::StatsError;

/// Counts over consecutive bins `[edges[k], edges[k + 1])`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    /// One unit bin `[k - 1/2, k + 1/2)` per integer between the smallest
    /// and largest sample.
    pub fn integer(samples: &[u64]) -> Result<Self, StatsError> {
        let (Some(&lo), Some(&hi)) = (samples.iter().min(), samples.iter().max()) else {
            return Err(StatsError::NoSamples);
        };
        let mut counts = vec![0u64; (hi - lo + 1) as usize];
        for &x in samples {
            counts[(x - lo) as usize] += 1;
        }
        let edges = (0..=counts.len()).map(|k| lo as f64 + k as f64 - 0.5).collect();
        Ok(Self { edges, counts })
    }

    /// `bins` equal bins on `[lo, hi]`; the last bin is closed and values
    /// outside are dropped.
    pub fn uniform(values: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Self, StatsError> {
        if !(lo < hi && lo.is_finite() && hi.is_finite()) || bins == 0 {
            return Err(StatsError::Bins { lo, hi, bins });
        }
        let width = (hi - lo) / bins as f64;
        let mut counts = vec![0u64; bins];
        for &x in values {
            if x < lo || x > hi {
                continue;
            }
            let k = (((x - lo) / width) as usize).min(bins - 1);
            counts[k] += 1;
        }
        let edges = (0..=bins).map(|k| lo + width * k as f64).collect();
        Ok(Self { edges, counts })
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// CSV `bin_left,bin_right,count`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "bin_left,bin_right,count")?;
        for (k, c) in self.counts.iter().enumerate() {
            writeln!(out, "{:.16e},{:.16e},{c}", self.edges[k], self.edges[k + 1])?;
        }
        Ok(())
    }
}
