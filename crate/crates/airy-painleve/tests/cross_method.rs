use airy_painleve::{airy_fredholm_det, airy_pair, hastings_mcleod, tw_cdf, TWEnsemble, TracyWidom};
use nalgebra::DMatrix;
use proptest::prelude::*;
use skew_pfaffian::gauss_legendre_on;

// F_GOE(s) = det(I - B) on L^2(s, inf) with B(x, y) = Ai((x + y) / 2) / 2.
fn goe_fredholm(s: f64, nodes: usize) -> f64 {
    let (x, w) = gauss_legendre_on(s, s.max(0.0) + 20.0, nodes);
    DMatrix::from_fn(nodes, nodes, |i, j| {
        let b = 0.5 * airy_pair(0.5 * (x[i] + x[j])).0;
        (if i == j { 1.0 } else { 0.0 }) - w[i].sqrt() * b * w[j].sqrt()
    })
    .determinant()
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|i| lo + i as f64 * step).collect()
}

#[test]
fn painleve_matches_fredholm() {
    let mut worst: f64 = 0.0;
    for s in grid(-6.0, 3.0, 0.25) {
        let p = tw_cdf(TWEnsemble::Gue, s).unwrap();
        let f = airy_fredholm_det(s).unwrap();
        worst = worst.max((p - f).abs());
    }
    assert!(worst < 1e-6, "sup difference {worst:.3e}");
}

#[test]
fn painleve_matches_fredholm_on_full_range() {
    for s in grid(-10.0, 6.0, 1.0) {
        let p = tw_cdf(TWEnsemble::Gue, s).unwrap();
        let f = airy_fredholm_det(s).unwrap();
        assert!((p - f).abs() < 1e-8, "s={s}: {p} vs {f}");
    }
}

#[test]
fn ordering_and_monotonicity() {
    let mut prev = [0.0; 3];
    for s in grid(-10.0, 6.0, 0.05) {
        let v = TWEnsemble::ALL.map(|e| tw_cdf(e, s).unwrap());
        let [goe, gue, gse] = v;
        assert!(gse >= gue.sqrt() && gue.sqrt() >= goe, "s={s}: {v:?}");
        assert!(gse >= gue, "s={s}");
        for k in 0..3 {
            assert!(v[k] > prev[k] && v[k] > 0.0 && v[k] < 1.0, "s={s}, {}", TWEnsemble::ALL[k]);
        }
        prev = v;
    }
}

#[test]
fn goe_matches_its_own_fredholm_determinant() {
    for s in grid(-8.0, 4.0, 0.5) {
        let p = tw_cdf(TWEnsemble::Goe, s).unwrap();
        let f = goe_fredholm(s, 160);
        assert!((p - f).abs() < 1e-8, "s={s}: {p} vs {f}");
    }
}

// The GOE law has the lighter left tail (log F ~ -|s|^3/24 against
// -|s|^3/12), so F_GUE >= F_GOE holds only to the right of a crossing.
#[test]
fn gue_and_goe_cross_once() {
    let xs = grid(-10.0, 6.0, 0.01);
    let diff: Vec<f64> =
        xs.iter().map(|&s| tw_cdf(TWEnsemble::Gue, s).unwrap() - tw_cdf(TWEnsemble::Goe, s).unwrap()).collect();
    let signs: Vec<usize> = (1..xs.len()).filter(|&i| (diff[i] > 0.0) != (diff[i - 1] > 0.0)).collect();
    assert_eq!(signs.len(), 1, "{signs:?}");
    let crossing = xs[signs[0]];
    assert!((-3.26..=-3.22).contains(&crossing), "{crossing}");
    // the independent determinants agree on the sign at s = -4
    assert!(goe_fredholm(-4.0, 160) > airy_fredholm_det(-4.0).unwrap());
}

#[test]
fn step_refinement_is_stable() {
    let fine = TracyWidom::new(hastings_mcleod(-10.0, 8.0, 5e-4).unwrap());
    let coarse = TracyWidom::new(hastings_mcleod(-10.0, 8.0, 2e-3).unwrap());
    for s in grid(-8.0, 4.0, 0.5) {
        for e in TWEnsemble::ALL {
            let a = fine.cdf(e, s).unwrap();
            let b = coarse.cdf(e, s).unwrap();
            assert!((a - b).abs() < 1e-9, "{e} at {s}");
        }
    }
}

#[test]
fn moments() {
    // mean and standard deviation from the tabulated distribution functions
    let want =
        [(TWEnsemble::Goe, -1.2065, 1.2680), (TWEnsemble::Gue, -1.7711, 0.9018), (TWEnsemble::Gse, -3.2624, 1.0178)];
    for (e, mean, sd) in want {
        let xs = grid(-10.0, 6.0, 0.01);
        let f: Vec<f64> = xs.iter().map(|&s| tw_cdf(e, s).unwrap()).collect();
        let (mut m1, mut m2) = (0.0, 0.0);
        for i in 1..xs.len() {
            let mid = 0.5 * (xs[i] + xs[i - 1]);
            let p = f[i] - f[i - 1];
            m1 += mid * p;
            m2 += mid * mid * p;
        }
        let var = m2 - m1 * m1;
        assert!((m1 - mean).abs() < 2e-3, "{e} mean {m1}");
        assert!((var.sqrt() - sd).abs() < 2e-3, "{e} sd {}", var.sqrt());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn identity_between_ensembles(s in -10.0f64..6.0) {
        let tw = TracyWidom::shared().unwrap();
        let goe = tw.cdf(TWEnsemble::Goe, s).unwrap();
        let gue = tw.cdf(TWEnsemble::Gue, s).unwrap();
        let gse = tw.cdf(TWEnsemble::Gse, s).unwrap();
        let (_, e) = tw.log_gue_and_e(s).unwrap();
        prop_assert!(e > 0.0);
        prop_assert!((goe * gse - gue * (1.0 + (-2.0 * e).exp()) / 2.0).abs() < 1e-10);
        prop_assert!(gse >= gue && gue.sqrt() >= goe);
        if s > -3.2 {
            prop_assert!(gue >= goe);
        }
    }
}
