use airy_painleve::{TWEnsemble, TracyWidom, TW_RANGE};
use limit_kernel::{f_u_inf_detailed, f_uv_detailed, LimitCdf, LimitKernelConfig, LimitOptions, S_RANGE};
use serde_json::{json, Value};

use super::Produced;
use crate::args::{FuinfArgs, FuvArgs, TwArgs};
use crate::output::{csv, grid, num, OutputSet};
use crate::CliError;

fn checked_grid(smin: f64, smax: f64, ds: f64, range: (f64, f64)) -> Result<Vec<f64>, CliError> {
    let s = grid(smin, smax, ds)?;
    let (lo, hi) = range;
    if smin < lo || s.last().is_some_and(|&x| x > hi) {
        return Err(CliError::Usage(format!("grid must lie in [{lo}, {hi}]")));
    }
    Ok(s)
}

pub(crate) fn tw_table(s: &[f64]) -> Result<String, CliError> {
    let tw = TracyWidom::shared()?;
    let mut rows = Vec::with_capacity(s.len());
    for &x in s {
        let mut row = vec![num(x)];
        for e in TWEnsemble::ALL {
            row.push(num(tw.cdf(e, x)?));
        }
        rows.push(row);
    }
    Ok(csv(&["s", "F_GOE", "F_GUE", "F_GSE"], rows))
}

pub(super) fn tw(a: &TwArgs) -> Result<Produced, CliError> {
    let s = checked_grid(a.smin, a.smax, a.ds, TW_RANGE)?;
    let mut files = OutputSet::new();
    files.add_text("tw.csv", tw_table(&s)?);
    let quadrature = json!({ "painleve_grid": [TW_RANGE.0, TW_RANGE.1] });
    Ok(Produced { files, seed: None, quadrature })
}

fn options_json(opts: &LimitOptions) -> Value {
    json!({
        "length_start": opts.length_start,
        "length_step": opts.length_step,
        "n_start": opts.n_start,
        "n_max": opts.n_max,
        "tol": opts.tol,
        "ray_nodes": opts.ray_nodes,
        "ray_nodes_max": opts.ray_nodes_max,
    })
}

fn point_json(s: f64, c: &LimitCdf) -> Value {
    json!({
        "s": s,
        "raw": c.raw,
        "nodes": c.nodes,
        "length": c.length,
        "delta": c.delta,
        "ray_nodes": c.ray_nodes,
        "ray_delta": c.ray_delta,
        "defect": c.defect,
    })
}

fn limit_table(
    stem: &str,
    parameters: Value,
    s: &[f64],
    opts: &LimitOptions,
    eval: impl Fn(f64) -> Result<LimitCdf, limit_kernel::LimitKernelError>,
) -> Result<Produced, CliError> {
    let mut rows = Vec::with_capacity(s.len());
    let mut points = Vec::with_capacity(s.len());
    for &x in s {
        let c = eval(x)?;
        rows.push(vec![num(x), num(c.value)]);
        points.push(point_json(x, &c));
    }
    let settings = options_json(opts);
    let mut files = OutputSet::new();
    files.add_text(&format!("{stem}.csv"), csv(&["s", "F"], rows));
    files.add_json(
        &format!("{stem}_quadrature.json"),
        &json!({ "parameters": parameters, "settings": settings, "points": points }),
    );
    Ok(Produced { files, seed: None, quadrature: settings })
}

pub(super) fn fuinf(a: &FuinfArgs) -> Result<Produced, CliError> {
    if !(a.u.is_finite() && a.u >= 0.0) {
        return Err(CliError::Usage(format!("--u must be finite and >= 0, got {}", a.u)));
    }
    let s = checked_grid(a.smin, a.smax, a.ds, S_RANGE)?;
    let opts = LimitOptions::default();
    limit_table("fuinf", json!({ "u": a.u }), &s, &opts, |x| f_u_inf_detailed(a.u, x, &opts))
}

pub(super) fn fuv(a: &FuvArgs) -> Result<Produced, CliError> {
    if !(a.u.is_finite() && a.u > 0.0) {
        return Err(CliError::Usage(format!("--u must be finite and > 0, got {}", a.u)));
    }
    if !a.v.is_finite() {
        return Err(CliError::Usage(format!("--v must be finite, got {}", a.v)));
    }
    let s = checked_grid(a.smin, a.smax, a.ds, S_RANGE)?;
    let cfg = LimitKernelConfig::new(a.u, a.v)?;
    let opts = LimitOptions::default();
    limit_table("fuv", json!({ "u": a.u, "v": a.v }), &s, &opts, |x| f_uv_detailed(&cfg, x, &opts))
}
