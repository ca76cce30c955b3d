use airy_painleve::{TWEnsemble, TracyWidom, TW_RANGE};

use crate::{ks_distance, Ecdf, StatsError};

/// Tracy-Widom CDF on the whole line: 0 below and 1 above the tabulated
/// range, where both tails are below 1e-15.
pub fn tw_cdf_total(tw: &TracyWidom, ensemble: TWEnsemble, s: f64) -> f64 {
    let (lo, hi) = TW_RANGE;
    if s < lo {
        0.0
    } else if s > hi {
        1.0
    } else {
        tw.cdf(ensemble, s).expect("inside the tabulated range")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleDistance {
    pub ensemble: TWEnsemble,
    pub ks: f64,
}

/// KS distances to GOE, GUE and GSE, closest first.
pub fn ks_to_tracy_widom(ecdf: &Ecdf) -> Result<Vec<EnsembleDistance>, StatsError> {
    let tw = TracyWidom::shared()?;
    let mut out: Vec<EnsembleDistance> = TWEnsemble::ALL
        .iter()
        .map(|&e| EnsembleDistance { ensemble: e, ks: ks_distance(ecdf, |s| tw_cdf_total(tw, e, s)) })
        .collect();
    out.sort_by(|a, b| a.ks.total_cmp(&b.ks));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantile_samples_pick_their_ensemble() {
        // midpoint quantiles of GUE found by bisection
        let tw = TracyWidom::shared().unwrap();
        let n = 400;
        let values: Vec<f64> = (0..n)
            .map(|i| {
                let p = (i as f64 + 0.5) / n as f64;
                let (mut a, mut b) = (-9.0, 5.0);
                for _ in 0..60 {
                    let mid = 0.5 * (a + b);
                    if tw_cdf_total(tw, TWEnsemble::Gue, mid) < p {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                0.5 * (a + b)
            })
            .collect();
        let d = ks_to_tracy_widom(&Ecdf::new(values).unwrap()).unwrap();
        assert_eq!(d[0].ensemble, TWEnsemble::Gue);
        assert!(d[0].ks < 2.0 / n as f64, "{d:?}");
        assert!(d[1].ks > 0.1);
    }

    #[test]
    fn tails() {
        let tw = TracyWidom::shared().unwrap();
        assert_eq!(tw_cdf_total(tw, TWEnsemble::Goe, -50.0), 0.0);
        assert_eq!(tw_cdf_total(tw, TWEnsemble::Gse, 50.0), 1.0);
    }
}
