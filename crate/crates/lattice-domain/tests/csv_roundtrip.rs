use lattice_domain::{sample_weights, DomainKind, DomainShape, GeometricParams, WeightMatrix};
use proptest::prelude::*;

fn shape_strategy() -> impl Strategy<Value = DomainShape> {
    (1usize..12, 1usize..12, 0usize..3).prop_map(|(n, m, k)| match k {
        0 => DomainShape::square(n, m).unwrap(),
        1 => DomainShape::lower_triangular(n).unwrap(),
        _ => DomainShape::new(DomainKind::TruncatedStaircase, n.max(m), m.min(n)).unwrap(),
    })
}

proptest! {
    #[test]
    fn sampled_matrices_roundtrip(shape in shape_strategy(), q in 0.01f64..0.95, seed in any::<u64>()) {
        let params = GeometricParams::constant(q, shape.rows(), shape.cols(), true).unwrap();
        let w = sample_weights(&shape, &params, seed).unwrap();
        let mut buf = Vec::new();
        w.write_csv(&mut buf).unwrap();
        let back = WeightMatrix::read_csv(shape, buf.as_slice()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn parser_never_panics(shape in shape_strategy(), text in "\\PC{0,200}") {
        let _ = WeightMatrix::parse_csv(shape, &text);
    }

    #[test]
    fn parser_never_panics_on_csvish(shape in shape_strategy(), rows in proptest::collection::vec((0u64..15, 0u64..15, any::<u64>()), 0..30)) {
        let mut text = String::from("i,j,w\n");
        for (i, j, w) in rows {
            text.push_str(&format!("{i},{j},{w}\n"));
        }
        let _ = WeightMatrix::parse_csv(shape, &text);
    }
}
