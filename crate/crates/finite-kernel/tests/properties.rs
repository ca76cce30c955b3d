use finite_kernel::{exact_cdf_detailed, k11, k22, CdfOptions, FiniteKernelConfig};
use proptest::prelude::*;

fn small_staircase() -> impl Strategy<Value = (usize, usize, f64)> {
    (1usize..=5, 0.1f64..0.7).prop_flat_map(|(n, q)| (Just(n), 1..=n, Just(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagonal_blocks_antisymmetric((n, m, q) in small_staircase(), a in 0u32..8, b in 0u32..8) {
        let cfg = FiniteKernelConfig::new(n, m, q).unwrap();
        let (x, y) = (a as f64 + 0.5, b as f64 + 0.5);
        for f in [k11, k22] {
            let (xy, yx) = (f(x, y, &cfg).unwrap(), f(y, x, &cfg).unwrap());
            prop_assert!((xy + yx).abs() <= 1e-10 * (1.0 + xy.abs()), "({x},{y}): {xy} vs {yx}");
        }
    }

    #[test]
    fn cdf_nondecreasing_within_unit_interval((n, m, q) in small_staircase()) {
        let ks: Vec<i64> = (-1..=25).collect();
        let vals = exact_cdf_detailed(n, m, q, &ks, &CdfOptions::default()).unwrap();
        prop_assert_eq!(vals[0].value, 0.0);
        for w in vals.windows(2) {
            prop_assert!(w[1].value >= w[0].value - 1e-9, "k={}: {} < {}", w[1].k, w[1].value, w[0].value);
            prop_assert!((0.0..=1.0).contains(&w[1].value));
        }
    }
}
