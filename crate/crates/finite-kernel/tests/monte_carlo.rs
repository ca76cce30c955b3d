use finite_kernel::{exact_cdf_detailed, CdfOptions};
use lattice_domain::{sample_weights_in_stream, DomainShape, GeometricParams};
use lpp_engine::lpp_corner;

// 3 x the 1% Kolmogorov critical value at 1e5 samples
const TOL: f64 = 3.0 * 1.628 / 316.227_766_016_837_94;

#[test]
fn exact_law_matches_simulation() {
    let draws = 100_000u64;
    for n in [2usize, 3, 5] {
        for q in [0.25, 0.618] {
            let shape = DomainShape::lower_triangular(n).unwrap();
            let params = GeometricParams::constant(q, n, n, true).unwrap();
            let samples: Vec<u64> =
                (0..draws).map(|s| lpp_corner(&sample_weights_in_stream(&shape, &params, 99, s).unwrap())).collect();
            let top = *samples.iter().max().unwrap() as i64;
            let ks: Vec<i64> = (0..=top).collect();
            let exact = exact_cdf_detailed(n, n, q, &ks, &CdfOptions::default()).unwrap();
            let mut counts = vec![0u64; top as usize + 1];
            samples.iter().for_each(|&v| counts[v as usize] += 1);
            let mut acc = 0u64;
            let mut sup = 0.0f64;
            for (k, c) in counts.iter().enumerate() {
                acc += c;
                sup = sup.max((acc as f64 / draws as f64 - exact[k].value).abs());
            }
            assert!(sup < TOL, "n={n} q={q}: sup {sup}");
        }
    }
}
