use airy_painleve::TWEnsemble;
use lattice_domain::DomainShape;
use lpp_engine::PathFamily;
use montecarlo_stats::{ks_to_tracy_widom, run_ensemble, Ecdf, EnsembleConfig, Histogram, RescaleMode, Rescaling};
use serde_json::{json, Map, Value};

use super::limits::tw_table;
use super::Produced;
use crate::args::Figure4Args;
use crate::output::{grid, OutputSet};
use crate::CliError;

/// Reference table range and step.
const TW_REFERENCE: (f64, f64, f64) = (-8.0, 5.0, 0.02);

struct Panel {
    name: &'static str,
    path: PathFamily,
    mode: RescaleMode,
    expected: TWEnsemble,
}

const PANELS: [Panel; 2] = [
    Panel {
        name: "antidiag",
        path: PathFamily::AntiDiagonal,
        mode: RescaleMode::AntidiagGoe,
        expected: TWEnsemble::Goe,
    },
    Panel { name: "corner", path: PathFamily::CornerToCorner, mode: RescaleMode::CornerGse, expected: TWEnsemble::Gse },
];

pub(super) fn run(a: &Figure4Args) -> Result<Produced, CliError> {
    let shape = DomainShape::lower_triangular(a.n)?;
    let mut files = OutputSet::new();
    let mut summary = Map::new();
    for p in &PANELS {
        let cfg = EnsembleConfig { shape, q: a.q, samples: a.samples, seed: a.seed, path: p.path };
        let samples = run_ensemble(&cfg)?;
        let r = Rescaling::new(p.mode, a.n, a.n, a.q)?;

        let h = Histogram::integer(&samples)?;
        let h = Histogram { edges: h.edges.iter().map(|&e| r.apply(e)).collect(), counts: h.counts };
        let mut buf = Vec::new();
        h.write_csv(&mut buf).expect("write to memory");
        files.add(&format!("{}_histogram.csv", p.name), buf);

        let ecdf = Ecdf::new(samples.iter().map(|&v| r.apply(v as f64)).collect())?;
        let mut buf = Vec::new();
        ecdf.write_csv(&mut buf).expect("write to memory");
        files.add(&format!("{}_ecdf.csv", p.name), buf);

        let distances = ks_to_tracy_widom(&ecdf)?;
        let ks: Map<String, Value> = distances.iter().map(|d| (d.ensemble.to_string(), json!(d.ks))).collect();
        log::info!("{}: closest {} (KS {:.4})", p.name, distances[0].ensemble, distances[0].ks);
        summary.insert(
            p.name.to_string(),
            json!({
                "path": format!("{:?}", p.path),
                "rescaling": p.mode.name(),
                "center": r.center,
                "scale": r.scale,
                "expected": p.expected.to_string(),
                "ks": ks,
                "closest": distances[0].ensemble.to_string(),
            }),
        );
    }
    let (lo, hi, ds) = TW_REFERENCE;
    files.add_text("tw_reference.csv", tw_table(&grid(lo, hi, ds)?)?);
    files.add_json(
        "ks_summary.json",
        &json!({ "n": a.n, "q": a.q, "samples": a.samples, "seed": a.seed, "panels": summary }),
    );
    Ok(Produced { files, seed: Some(a.seed), quadrature: Value::Null })
}
