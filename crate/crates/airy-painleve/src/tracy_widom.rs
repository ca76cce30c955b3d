use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use skew_pfaffian::gauss_legendre_on;

use crate::painleve::hermite;
use crate::{airy_pair, hastings_mcleod, AiryError, HastingsMcLeodSolution};

/// Range of `s` accepted by [`tw_cdf`].
pub const TW_RANGE: (f64, f64) = (-10.0, 6.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TWEnsemble {
    Goe,
    Gue,
    Gse,
}

impl TWEnsemble {
    pub const ALL: [TWEnsemble; 3] = [TWEnsemble::Goe, TWEnsemble::Gue, TWEnsemble::Gse];
}

impl fmt::Display for TWEnsemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TWEnsemble::Goe => "GOE",
            TWEnsemble::Gue => "GUE",
            TWEnsemble::Gse => "GSE",
        })
    }
}

impl FromStr for TWEnsemble {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GOE" => Ok(TWEnsemble::Goe),
            "GUE" => Ok(TWEnsemble::Gue),
            "GSE" => Ok(TWEnsemble::Gse),
            _ => Err(format!("unknown ensemble {s:?} (expected GOE, GUE or GSE)")),
        }
    }
}

/// Tracy-Widom distribution functions backed by one Painleve solution.
///
/// Holds running integrals of `q^2`, `x q^2` and `q` from each grid point to
/// infinity; past the grid `q` is replaced by `Ai`.
#[derive(Debug, Clone)]
pub struct TracyWidom {
    solution: HastingsMcLeodSolution,
    sq: Vec<f64>,
    xsq: Vec<f64>,
    lin: Vec<f64>,
}

impl TracyWidom {
    pub fn new(solution: HastingsMcLeodSolution) -> Self {
        let x = &solution.grid;
        let q = &solution.q_values;
        let qp = &solution.qprime_values;
        let n = x.len();
        let h = solution.step();

        let (tx, tw) = gauss_legendre_on(solution.x_max(), solution.x_max() + 12.0, 48);
        let (mut sq_t, mut xsq_t, mut lin_t) = (0.0, 0.0, 0.0);
        for (&t, &w) in tx.iter().zip(&tw) {
            let a = airy_pair(t).0;
            sq_t += w * a * a;
            xsq_t += w * t * a * a;
            lin_t += w * a;
        }

        let mut sq = vec![0.0; n];
        let mut xsq = vec![0.0; n];
        let mut lin = vec![0.0; n];
        sq[n - 1] = sq_t;
        xsq[n - 1] = xsq_t;
        lin[n - 1] = lin_t;
        // trapezoid with end correction h^2/12 (g'(a) - g'(b)), exact through cubics
        let cell = |ga: f64, da: f64, gb: f64, db: f64| h / 2.0 * (ga + gb) + h * h / 12.0 * (da - db);
        for i in (0..n - 1).rev() {
            let (a, b) = (i, i + 1);
            let s2 = |j: usize| (q[j] * q[j], 2.0 * q[j] * qp[j]);
            let xs2 = |j: usize| (x[j] * q[j] * q[j], q[j] * q[j] + 2.0 * x[j] * q[j] * qp[j]);
            let ((ga, da), (gb, db)) = (s2(a), s2(b));
            sq[i] = sq[i + 1] + cell(ga, da, gb, db);
            let ((ga, da), (gb, db)) = (xs2(a), xs2(b));
            xsq[i] = xsq[i + 1] + cell(ga, da, gb, db);
            lin[i] = lin[i + 1] + cell(q[a], qp[a], q[b], qp[b]);
        }
        Self { solution, sq, xsq, lin }
    }

    /// Instance on `[-10, 8]` with step `1e-3`, built once per process.
    pub fn shared() -> Result<&'static TracyWidom, AiryError> {
        static SHARED: OnceLock<Result<TracyWidom, AiryError>> = OnceLock::new();
        SHARED.get_or_init(|| hastings_mcleod(-10.0, 8.0, 1e-3).map(TracyWidom::new)).as_ref().map_err(Clone::clone)
    }

    pub fn solution(&self) -> &HastingsMcLeodSolution {
        &self.solution
    }

    // (int_s^inf q^2, int_s^inf x q^2, int_s^inf q)
    fn integrals(&self, s: f64) -> Result<(f64, f64, f64), AiryError> {
        let sol = &self.solution;
        let (lo, hi) = (sol.x_min(), sol.x_max());
        if !(lo..=hi).contains(&s) {
            return Err(AiryError::OutOfRange { x: s, lo, hi });
        }
        let h = sol.step();
        let i = (((s - lo) / h).floor() as usize).min(sol.grid.len() - 2);
        let b = sol.grid[i + 1];
        let (mut a0, mut a1, mut e) = (self.sq[i + 1], self.xsq[i + 1], self.lin[i + 1]);
        if b > s {
            let (nodes, weights) = gauss_legendre_on(s, b, 4);
            let left = (sol.q_values[i], sol.qprime_values[i]);
            let right = (sol.q_values[i + 1], sol.qprime_values[i + 1]);
            for (&t, &w) in nodes.iter().zip(&weights) {
                let (v, _) = hermite(left, right, h, (t - sol.grid[i]) / h);
                a0 += w * v * v;
                a1 += w * t * v * v;
                e += w * v;
            }
        }
        Ok((a0, a1, e))
    }

    /// `ln F_GUE(s)` and `E(s) = (1/2) int_s^inf q`.
    pub fn log_gue_and_e(&self, s: f64) -> Result<(f64, f64), AiryError> {
        let (a0, a1, e) = self.integrals(s)?;
        Ok((-(a1 - s * a0), 0.5 * e))
    }

    /// Distribution function on the solution grid.
    pub fn cdf(&self, ensemble: TWEnsemble, s: f64) -> Result<f64, AiryError> {
        let (log_gue, e) = self.log_gue_and_e(s)?;
        let half = (0.5 * log_gue).exp();
        Ok(match ensemble {
            TWEnsemble::Gue => log_gue.exp(),
            TWEnsemble::Goe => half * (-e).exp(),
            TWEnsemble::Gse => half * e.cosh(),
        })
    }
}

/// Tracy-Widom distribution function for `s` in [`TW_RANGE`].
pub fn tw_cdf(ensemble: TWEnsemble, s: f64) -> Result<f64, AiryError> {
    let (lo, hi) = TW_RANGE;
    if !(lo..=hi).contains(&s) {
        return Err(AiryError::OutOfRange { x: s, lo, hi });
    }
    TracyWidom::shared()?.cdf(ensemble, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ensemble_names_round_trip() {
        for e in TWEnsemble::ALL {
            assert_eq!(e.to_string().parse::<TWEnsemble>().unwrap(), e);
        }
        assert_eq!("gse".parse::<TWEnsemble>().unwrap(), TWEnsemble::Gse);
        assert!("GXE".parse::<TWEnsemble>().is_err());
    }

    #[test]
    fn tails() {
        assert!(tw_cdf(TWEnsemble::Gue, -6.0).unwrap() < 1e-3);
        assert!(tw_cdf(TWEnsemble::Gue, 4.0).unwrap() > 1.0 - 1e-4);
        for e in TWEnsemble::ALL {
            assert!(tw_cdf(e, -10.0).unwrap() < 1e-3, "{e}");
            assert!(tw_cdf(e, 6.0).unwrap() > 1.0 - 1e-4, "{e}");
        }
    }

    #[test]
    fn reference_values() {
        // values at s = -2 from Fredholm determinants of Airy-type kernels
        let want = [
            (TWEnsemble::Gue, 0.413_224_142_505),
            (TWEnsemble::Goe, 0.274_320_197_912),
            (TWEnsemble::Gse, 0.890_338_584_638),
        ];
        for (e, v) in want {
            let got = tw_cdf(e, -2.0).unwrap();
            assert!((got - v).abs() < 1e-9, "{e}: {got} vs {v}");
        }
    }

    #[test]
    fn algebraic_identity() {
        let mut s = -10.0;
        while s <= 6.0 {
            let goe = tw_cdf(TWEnsemble::Goe, s).unwrap();
            let gue = tw_cdf(TWEnsemble::Gue, s).unwrap();
            let gse = tw_cdf(TWEnsemble::Gse, s).unwrap();
            let (_, e) = TracyWidom::shared().unwrap().log_gue_and_e(s).unwrap();
            let want = gue * (1.0 + (-2.0 * e).exp()) / 2.0;
            assert!((goe * gse - want).abs() < 1e-10, "s={s}");
            s += 0.125;
        }
    }

    #[test]
    fn out_of_range() {
        assert!(tw_cdf(TWEnsemble::Goe, -10.5).is_err());
        assert!(tw_cdf(TWEnsemble::Goe, 6.5).is_err());
        assert!(tw_cdf(TWEnsemble::Goe, f64::NAN).is_err());
    }
}
