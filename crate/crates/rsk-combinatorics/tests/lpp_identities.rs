use lattice_domain::{sample_weights_in_stream, DomainShape, GeometricParams, WeightMatrix};
use lpp_engine::{lpp_antidiagonal, lpp_corner};
use proptest::prelude::*;
use rsk_combinatorics::{biword, column_insert_rsk, lnds, row_insert_rsk, ColumnReading};

fn shape_strategy() -> impl Strategy<Value = DomainShape> {
    (1usize..=20, any::<bool>()).prop_map(|(n, lower)| {
        if lower {
            DomainShape::lower_triangular(n).unwrap()
        } else {
            DomainShape::square(n, n).unwrap()
        }
    })
}

fn matrix() -> impl Strategy<Value = WeightMatrix> {
    shape_strategy().prop_flat_map(|shape| {
        proptest::collection::vec(0u64..4, shape.active_count())
            .prop_map(move |v| WeightMatrix::from_entries(shape, v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn biword_length_is_total(w in matrix()) {
        prop_assert_eq!(biword(&w).len() as u64, w.total());
    }

    #[test]
    fn row_insertion_first_row_is_corner_time(w in matrix()) {
        let b = biword(&w);
        let (p, q) = row_insert_rsk(&b);
        prop_assert_eq!(p.first_row_len() as u64, lpp_corner(&w));
        prop_assert_eq!(lnds(&b.bottom_word()) as u64, lpp_corner(&w));
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(p.is_semistandard() && q.is_semistandard());
    }

    #[test]
    fn column_insertion_shapes_agree(w in matrix()) {
        let b = biword(&w);
        for reading in [ColumnReading::Lexicographic, ColumnReading::RowReversed] {
            let (p, q) = column_insert_rsk(&b, reading);
            prop_assert_eq!(p.shape(), q.shape());
            prop_assert!(p.is_semistandard());
        }
    }

    #[test]
    fn column_insertion_first_row_is_antidiagonal_time(n in 1usize..=20, seed in any::<u64>()) {
        let shape = DomainShape::lower_triangular(n).unwrap();
        let params = GeometricParams::constant(0.5, n, n, true).unwrap();
        let w = sample_weights_in_stream(&shape, &params, seed, 0).unwrap();
        let (p, _) = column_insert_rsk(&biword(&w), ColumnReading::RowReversed);
        prop_assert_eq!(p.first_row_len() as u64, lpp_antidiagonal(&w).unwrap());
    }
}

#[test]
fn lexicographic_reading_is_not_samplewise_antidiagonal() {
    let shape = DomainShape::lower_triangular(2).unwrap();
    let w = WeightMatrix::from_entries(shape, vec![0, 1, 1]).unwrap();
    let (p, _) = column_insert_rsk(&biword(&w), ColumnReading::Lexicographic);
    assert_eq!(lpp_antidiagonal(&w).unwrap(), 2);
    assert_eq!(p.first_row_len(), 1);
}

fn ks_counts(a: &[u64], b: &[u64]) -> f64 {
    let top = *a.iter().chain(b).max().unwrap() as usize;
    let (mut ca, mut cb) = (vec![0f64; top + 1], vec![0f64; top + 1]);
    a.iter().for_each(|&x| ca[x as usize] += 1.0);
    b.iter().for_each(|&x| cb[x as usize] += 1.0);
    let (mut fa, mut fb, mut d) = (0.0, 0.0, 0.0f64);
    for k in 0..=top {
        fa += ca[k] / a.len() as f64;
        fb += cb[k] / b.len() as f64;
        d = d.max((fa - fb).abs());
    }
    d
}

#[test]
fn column_insertion_law_matches_antidiagonal_law() {
    let (n, draws) = (10, 100_000u64);
    let shape = DomainShape::lower_triangular(n).unwrap();
    let params = GeometricParams::constant(0.4, n, n, true).unwrap();
    let stat: Vec<u64> = (0..draws)
        .map(|s| {
            let w = sample_weights_in_stream(&shape, &params, 11, s).unwrap();
            column_insert_rsk(&biword(&w), ColumnReading::RowReversed).0.first_row_len() as u64
        })
        .collect();
    let direct: Vec<u64> = (0..draws)
        .map(|s| lpp_antidiagonal(&sample_weights_in_stream(&shape, &params, 12, s).unwrap()).unwrap())
        .collect();
    let d = ks_counts(&stat, &direct);
    assert!(d < 0.02, "KS {d}");
}
