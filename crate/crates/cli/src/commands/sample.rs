use lattice_domain::DomainShape;
use lpp_engine::PathFamily;
use montecarlo_stats::{run_ensemble, Ecdf, EnsembleConfig, Histogram};

use super::Produced;
use crate::args::{PathArg, SampleArgs, ShapeArg};
use crate::output::{csv, OutputSet};
use crate::CliError;

pub(crate) fn shape_of(shape: ShapeArg, n: usize, m: Option<usize>) -> Result<DomainShape, CliError> {
    Ok(match shape {
        ShapeArg::Square => DomainShape::square(n, m.unwrap_or(n))?,
        ShapeArg::Lt => {
            if m.is_some_and(|m| m != n) {
                return Err(CliError::Usage("--shape lt is n x n; drop --m or set it to n".into()));
            }
            DomainShape::lower_triangular(n)?
        }
        ShapeArg::Staircase => DomainShape::staircase(n, m.unwrap_or(n))?,
    })
}

pub(super) fn run(a: &SampleArgs) -> Result<Produced, CliError> {
    let shape = shape_of(a.shape, a.n, a.m)?;
    let path = match a.path {
        PathArg::Corner => PathFamily::CornerToCorner,
        PathArg::Antidiag => PathFamily::AntiDiagonal,
    };
    if path == PathFamily::AntiDiagonal && shape.rows() != shape.cols() {
        return Err(CliError::Usage(format!(
            "--path antidiag needs a square box, got {} x {}",
            shape.rows(),
            shape.cols()
        )));
    }
    let cfg = EnsembleConfig { shape, q: a.q, samples: a.samples, seed: a.seed, path };
    let samples = run_ensemble(&cfg)?;

    let mut files = OutputSet::new();
    files.add_text(
        "samples.csv",
        csv(&["index", "value"], samples.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()])),
    );
    let mut buf = Vec::new();
    Histogram::integer(&samples)?.write_csv(&mut buf).expect("write to memory");
    files.add("histogram.csv", buf);
    let mut buf = Vec::new();
    Ecdf::new(samples.iter().map(|&v| v as f64).collect())?.write_csv(&mut buf).expect("write to memory");
    files.add("ecdf.csv", buf);
    Ok(Produced { files, seed: Some(a.seed), quadrature: serde_json::Value::Null })
}
