use finite_kernel::{exact_cdf_detailed, CdfOptions};
use serde_json::json;

use super::Produced;
use crate::args::ExactArgs;
use crate::output::{csv, num, OutputSet};
use crate::CliError;

/// Longest `k` range accepted in one table.
const MAX_LEVELS: i64 = 100_000;

pub(super) fn run(a: &ExactArgs) -> Result<Produced, CliError> {
    let m = a.m.unwrap_or(a.n);
    if a.n == 0 || m == 0 {
        return Err(CliError::Usage("--n and --m must be at least 1".into()));
    }
    if m > a.n {
        return Err(CliError::Usage(format!("--m {m} exceeds --n {}", a.n)));
    }
    if a.kmax < a.kmin {
        return Err(CliError::Usage(format!("--kmax {} < --kmin {}", a.kmax, a.kmin)));
    }
    if a.kmax - a.kmin >= MAX_LEVELS {
        return Err(CliError::Usage(format!("at most {MAX_LEVELS} levels per table")));
    }
    let opts = CdfOptions::default();
    let ks: Vec<i64> = (a.kmin - 1..=a.kmax).collect();
    let vals = exact_cdf_detailed(a.n, m, a.q, &ks, &opts)?;
    let rows = vals.windows(2).map(|w| vec![w[1].k.to_string(), num(w[1].value), num(w[1].value - w[0].value)]);

    let mut files = OutputSet::new();
    files.add_text("cdf.csv", csv(&["k", "cdf", "pmf"], rows));
    let live = vals.iter().filter(|v| v.k >= 0);
    let quadrature = json!({
        "truncation_tol": opts.truncation_tol,
        "min_window": opts.min_window,
        "max_window": opts.max_window,
        "nodes_start": opts.nodes_start,
        "nodes_max": opts.nodes_max,
        "nodes_tol": opts.nodes_tol,
        "nodes_used": vals.iter().map(|v| v.nodes).max(),
        "nodes_delta": vals.iter().map(|v| v.nodes_delta).fold(0.0, f64::max),
        "max_truncation_bound": live.clone().map(|v| v.truncation_bound).fold(0.0, f64::max),
        "max_grid_points": live.map(|v| v.grid_points).max(),
    });
    Ok(Produced { files, seed: None, quadrature })
}
