use std::time::Instant;

use airy_painleve::{airy_fredholm_det, TWEnsemble, TracyWidom};
use finite_kernel::{exact_cdf_detailed, CdfOptions};
use lattice_domain::{cell_uniform, sample_weights_in_stream, DomainShape, GeometricParams, WeightMatrix};
use limit_kernel::f_u_inf;
use lpp_engine::{lpp, lpp_bruteforce, lpp_corner, PathFamily};
use montecarlo_stats::{ks_distance, Ecdf};
use nalgebra::DMatrix;
use rsk_combinatorics::{biword, row_insert_rsk};
use skew_pfaffian::{pfaffian, symplectic_j};

use crate::args::SelftestArgs;
use crate::output::grid;
use crate::CliError;

/// Numerical tolerances of the suites. The exact suites compare integers
/// and do not use them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub pfaffian_rel: f64,
    pub pfaffian_identity: f64,
    pub painleve: f64,
    pub finite_kernel: f64,
    pub limit_gse: f64,
    /// KS distance of 10^4 uniform draws (1% critical value 0.0163).
    pub ks_uniform: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            pfaffian_rel: 1e-8,
            pfaffian_identity: 4.0 * f64::EPSILON,
            painleve: 1e-6,
            finite_kernel: 1e-6,
            limit_gse: 1e-4,
            ks_uniform: 0.0163,
        }
    }
}

impl Tolerances {
    fn corrupted() -> Self {
        Self {
            pfaffian_rel: 0.0,
            pfaffian_identity: 0.0,
            painleve: 0.0,
            finite_kernel: 0.0,
            limit_gse: 0.0,
            ks_uniform: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Suite = fn(&Tolerances) -> Result<String, String>;

const SUITES: [(&str, Suite); 7] = [
    ("lpp-dp-vs-bruteforce", dp_vs_bruteforce),
    ("rsk-first-row-vs-lpp", rsk_vs_lpp),
    ("pfaffian-vs-determinant", pfaffian_vs_det),
    ("painleve-vs-fredholm", painleve_vs_fredholm),
    ("finite-kernel-vs-enumeration", finite_vs_enumeration),
    ("limit-kernel-u0-vs-gse", limit_vs_gse),
    ("ks-harness-uniform", ks_uniform),
];

pub fn run_suites(tol: &Tolerances) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|&(name, suite)| {
            let start = Instant::now();
            let outcome = suite(tol);
            let seconds = start.elapsed().as_secs_f64();
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SuiteResult { name, passed, detail, seconds }
        })
        .collect()
}

pub(super) fn run(a: &SelftestArgs) -> Result<(), CliError> {
    let tol = if a.corrupt_tolerance { Tolerances::corrupted() } else { Tolerances::default() };
    let results = run_suites(&tol);
    println!("{:<30} {:<6} {:>8}  detail", "suite", "result", "seconds");
    for r in &results {
        println!("{:<30} {:<6} {:>8.2}  {}", r.name, if r.passed { "PASS" } else { "FAIL" }, r.seconds, r.detail);
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    println!("{} of {} suites passed", results.len() - failed.len(), results.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Selftest(failed.join(", ")))
    }
}

fn check(ok: bool, detail: String) -> Result<String, String> {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn dp_vs_bruteforce(_: &Tolerances) -> Result<String, String> {
    let mut cases = 0;
    for i in 0..400u64 {
        let n = 1 + (i % 7) as usize;
        let m = 1 + ((i / 7) % 7) as usize;
        let q = [0.2, 0.5, 0.8][(i % 3) as usize];
        let shapes = [DomainShape::square(n, m), DomainShape::lower_triangular(n), DomainShape::square(n, n)];
        for (s, shape) in shapes.into_iter().enumerate() {
            let shape = shape.map_err(|e| e.to_string())?;
            let params = GeometricParams::constant(q, shape.rows(), shape.cols(), false).map_err(|e| e.to_string())?;
            let w = sample_weights_in_stream(&shape, &params, 11, 3 * i + s as u64).map_err(|e| e.to_string())?;
            let mut families = vec![PathFamily::CornerToCorner];
            if shape.rows() == shape.cols() {
                families.push(PathFamily::AntiDiagonal);
            }
            for f in families {
                let fast = lpp(&w, f).map_err(|e| e.to_string())?;
                let slow = lpp_bruteforce(&w, f).map_err(|e| e.to_string())?;
                if fast != slow {
                    return Err(format!("{f:?} on {}x{} instance {i}: {fast} vs {slow}", shape.rows(), shape.cols()));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} instances equal"))
}

fn rsk_vs_lpp(_: &Tolerances) -> Result<String, String> {
    for i in 0..300u64 {
        let n = 1 + (i % 12) as usize;
        let shape = DomainShape::lower_triangular(n).map_err(|e| e.to_string())?;
        let params = GeometricParams::constant(0.6, n, n, true).map_err(|e| e.to_string())?;
        let w = sample_weights_in_stream(&shape, &params, 12, i).map_err(|e| e.to_string())?;
        let (p, _) = row_insert_rsk(&biword(&w));
        let corner = lpp_corner(&w);
        if p.first_row_len() as u64 != corner {
            return Err(format!("instance {i} (n={n}): first row {} vs lpp {corner}", p.first_row_len()));
        }
    }
    Ok("300 lower-triangular instances equal".into())
}

fn random_skew(size: usize, stream: u64) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(size, size);
    for i in 0..size {
        for j in i + 1..size {
            let x = 2.0 * cell_uniform(13, stream, (i * size + j) as u64) - 1.0;
            a[(i, j)] = x;
            a[(j, i)] = -x;
        }
    }
    a
}

fn pfaffian_vs_det(tol: &Tolerances) -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for (k, size) in [2, 4, 10, 40, 100].into_iter().enumerate() {
        let a = random_skew(size, k as u64);
        let pf = pfaffian(&a).map_err(|e| e.to_string())?;
        let det = a.determinant();
        worst = worst.max((pf * pf - det).abs() / det.abs());
    }
    let mut identity: f64 = 0.0;
    for m in [1, 5, 50] {
        identity = identity.max((pfaffian(&symplectic_j(m)).map_err(|e| e.to_string())? - 1.0).abs());
    }
    check(
        worst < tol.pfaffian_rel && identity <= tol.pfaffian_identity,
        format!("max rel |Pf^2 - det| {worst:.1e}, |Pf(J) - 1| {identity:.1e}"),
    )
}

fn painleve_vs_fredholm(tol: &Tolerances) -> Result<String, String> {
    let tw = TracyWidom::shared().map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for s in grid(-6.0, 3.0, 0.5).map_err(|e| e.to_string())? {
        let a = tw.cdf(TWEnsemble::Gue, s).map_err(|e| e.to_string())?;
        let b = airy_fredholm_det(s).map_err(|e| e.to_string())?;
        worst = worst.max((a - b).abs());
    }
    check(worst < tol.painleve, format!("sup |F_GUE - det(I - K_Ai)| {worst:.1e} on [-6, 3]"))
}

// P(L <= k) on the 2 x 2 staircase by summing over all weight triples.
fn enumerated_cdf(q: f64, k_max: u64) -> Result<Vec<f64>, String> {
    let shape = DomainShape::staircase(2, 2).map_err(|e| e.to_string())?;
    let mut pmf = vec![0.0; k_max as usize + 1];
    let p = |w: u64| (1.0 - q) * q.powi(w as i32);
    for a in 0..=k_max {
        for b in 0..=k_max {
            for c in 0..=k_max {
                let w = WeightMatrix::from_entries(shape, vec![a, b, c]).map_err(|e| e.to_string())?;
                let l = lpp_corner(&w);
                if l <= k_max {
                    pmf[l as usize] += p(a) * p(b) * p(c);
                }
            }
        }
    }
    Ok(pmf
        .iter()
        .scan(0.0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect())
}

fn finite_vs_enumeration(tol: &Tolerances) -> Result<String, String> {
    let k_max = 12u64;
    let ks: Vec<i64> = (0..=k_max as i64).collect();
    let mut worst: f64 = 0.0;
    for q in [0.25, 0.618] {
        let oracle = enumerated_cdf(q, k_max)?;
        let got = exact_cdf_detailed(2, 2, q, &ks, &CdfOptions::default()).map_err(|e| e.to_string())?;
        for (c, want) in got.iter().zip(&oracle) {
            worst = worst.max((c.value - want).abs());
        }
        let single = exact_cdf_detailed(1, 1, q, &ks, &CdfOptions::default()).map_err(|e| e.to_string())?;
        for c in single {
            worst = worst.max((c.value - (1.0 - q.powi(c.k as i32 + 1))).abs());
        }
    }
    check(
        worst < tol.finite_kernel,
        format!("max deviation {worst:.1e} (n=m=1 geometric, n=m=2 enumeration, k<={k_max})"),
    )
}

fn limit_vs_gse(tol: &Tolerances) -> Result<String, String> {
    let tw = TracyWidom::shared().map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for s in [-3.0, -1.0, 1.0] {
        let a = f_u_inf(0.0, s).map_err(|e| e.to_string())?;
        let b = tw.cdf(TWEnsemble::Gse, s).map_err(|e| e.to_string())?;
        worst = worst.max((a - b).abs());
    }
    check(worst < tol.limit_gse, format!("sup |F_(0,inf) - F_GSE| {worst:.1e} at s = -3, -1, 1"))
}

fn ks_uniform(tol: &Tolerances) -> Result<String, String> {
    let draws: Vec<f64> = (0..10_000u64).map(|i| cell_uniform(14, 0, i)).collect();
    let ecdf = Ecdf::new(draws).map_err(|e| e.to_string())?;
    let d = ks_distance(&ecdf, |x| x.clamp(0.0, 1.0));
    check(d < tol.ks_uniform, format!("KS of 10^4 uniforms {d:.4}"))
}
