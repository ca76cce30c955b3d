use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::manifest::{sha256_hex, RunManifest, MANIFEST_FILE};
use crate::CliError;

/// Files of one run, held in memory and written together with their
/// manifest once the computation has finished.
#[derive(Debug, Default)]
pub struct OutputSet {
    files: Vec<(String, Vec<u8>)>,
}

impl OutputSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: &str, bytes: Vec<u8>) {
        debug_assert!(!self.files.iter().any(|(n, _)| n == name), "duplicate output {name}");
        self.files.push((name.to_string(), bytes));
    }

    pub fn add_text(&mut self, name: &str, text: String) {
        self.add(name, text.into_bytes());
    }

    pub fn add_json(&mut self, name: &str, value: &serde_json::Value) {
        let mut text = serde_json::to_string_pretty(value).expect("JSON value serialises");
        text.push('\n');
        self.add_text(name, text);
    }

    /// Writes every file and the manifest into `dir`, filling in the digests.
    pub fn write(self, dir: &Path, mut manifest: RunManifest) -> Result<RunManifest, CliError> {
        fs::create_dir_all(dir).map_err(CliError::io(dir))?;
        for (name, bytes) in &self.files {
            let path = dir.join(name);
            fs::write(&path, bytes).map_err(CliError::io(&path))?;
            manifest.outputs.insert(name.clone(), sha256_hex(bytes));
        }
        let path: PathBuf = dir.join(MANIFEST_FILE);
        fs::write(&path, manifest.to_json()).map_err(CliError::io(&path))?;
        Ok(manifest)
    }
}

/// Float field with 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV text from a header and rows of preformatted fields.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

/// `smin, smin + ds, ...` up to `smax` (inclusive within a rounding slack).
pub fn grid(smin: f64, smax: f64, ds: f64) -> Result<Vec<f64>, CliError> {
    if !(smin.is_finite() && smax.is_finite() && ds.is_finite()) {
        return Err(CliError::Usage("grid bounds and step must be finite".into()));
    }
    if ds <= 0.0 {
        return Err(CliError::Usage(format!("--ds must be positive, got {ds}")));
    }
    if smax < smin {
        return Err(CliError::Usage(format!("empty grid: --smax {smax} < --smin {smin}")));
    }
    let steps = ((smax - smin) / ds + 1e-9).floor();
    if steps > 1e6 {
        return Err(CliError::Usage(format!("grid of {steps} steps is too long")));
    }
    Ok((0..=steps as usize).map(|i| smin + ds * i as f64).collect())
}
