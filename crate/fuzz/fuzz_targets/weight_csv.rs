#![no_main]

use lattice_domain::{DomainKind, DomainShape, WeightMatrix};
use libfuzzer_sys::fuzz_target;

// First two bytes pick the shape, the rest is the CSV text.
fuzz_target!(|data: &[u8]| {
    if data.len() < 2 {
        return;
    }
    let n = 1 + (data[0] % 12) as usize;
    let m = 1 + (data[1] % 12) as usize;
    let kind =
        [DomainKind::Square, DomainKind::LowerTriangular, DomainKind::TruncatedStaircase][(data[0] / 12 % 3) as usize];
    let Ok(shape) = DomainShape::new(kind, n, m) else { return };
    if let Ok(w) = WeightMatrix::read_csv(shape, &data[2..]) {
        let mut out = Vec::new();
        w.write_csv(&mut out).unwrap();
        assert_eq!(WeightMatrix::read_csv(shape, out.as_slice()).unwrap(), w);
    }
});
