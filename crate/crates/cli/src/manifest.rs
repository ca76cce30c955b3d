use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::args::Command;

/// File name of the manifest written into every output directory.
pub const MANIFEST_FILE: &str = "manifest.json";
pub const MANIFEST_SCHEMA: &str = "lpp-run-manifest/1";
/// Floating-point environment the outputs were produced under.
pub const FLOAT_MODE: &str = "ieee754-binary64, round-to-nearest-even, no fast-math";

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema {found:?}, expected {expected:?}")]
    Schema { found: String, expected: &'static str },
    #[error("subcommand {recorded:?} does not match the recorded parameters ({actual:?})")]
    Subcommand { recorded: String, actual: &'static str },
    #[error("{0:?} cannot be replayed")]
    NotReplayable(&'static str),
    #[error("output name {0:?} must be a plain file name")]
    OutputName(String),
    #[error("digest for {name:?} is not 64 lowercase hex characters")]
    Digest { name: String },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
}

/// Record of one run: enough to repeat it and to check the repeat.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub schema: String,
    pub tool_version: String,
    pub subcommand: String,
    pub parameters: Command,
    pub seed: Option<u64>,
    pub quadrature: serde_json::Value,
    pub float_mode: String,
    pub wall_clock_seconds: f64,
    /// SHA-256 of every output file, keyed by file name.
    pub outputs: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &Command, seed: Option<u64>, quadrature: serde_json::Value) -> Self {
        Self {
            schema: MANIFEST_SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            subcommand: command.name().to_string(),
            parameters: command.clone(),
            seed,
            quadrature,
            float_mode: FLOAT_MODE.to_string(),
            wall_clock_seconds: 0.0,
            outputs: BTreeMap::new(),
        }
    }

    /// Parses and checks a manifest.
    pub fn from_json(text: &str) -> Result<Self, ManifestError> {
        let m: RunManifest = serde_json::from_str(text)?;
        m.validate()?;
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Self, ManifestError> {
        let mut text = String::new();
        fs::File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|source| ManifestError::Read { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), ManifestError> {
        if self.schema != MANIFEST_SCHEMA {
            return Err(ManifestError::Schema { found: self.schema.clone(), expected: MANIFEST_SCHEMA });
        }
        let actual = self.parameters.name();
        if self.subcommand != actual {
            return Err(ManifestError::Subcommand { recorded: self.subcommand.clone(), actual });
        }
        if self.parameters.out_dir().is_none() {
            return Err(ManifestError::NotReplayable(actual));
        }
        for (name, digest) in &self.outputs {
            if !is_plain_file_name(name) {
                return Err(ManifestError::OutputName(name.clone()));
            }
            if digest.len() != 64 || !digest.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
                return Err(ManifestError::Digest { name: name.clone() });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serialises");
        s.push('\n');
        s
    }
}

fn is_plain_file_name(name: &str) -> bool {
    !name.is_empty()
        && name != "."
        && name != ".."
        && name != MANIFEST_FILE
        && !name.contains(['/', '\\', '\0'])
        && !name.starts_with('.')
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::parse_args;

    fn sample_manifest() -> RunManifest {
        let cli =
            parse_args(["lpp", "exact", "--n", "3", "--q", "0.5", "--kmin", "0", "--kmax", "4", "--out", "o"]).unwrap();
        let mut m = RunManifest::new(&cli.command, None, serde_json::json!({"nodes": 256}));
        m.outputs.insert("cdf.csv".into(), sha256_hex(b"k,cdf,pmf\n"));
        m
    }

    #[test]
    fn round_trip() {
        let m = sample_manifest();
        assert_eq!(RunManifest::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn unknown_fields_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&sample_manifest().to_json()).unwrap();
        v["extra"] = serde_json::json!(1);
        assert!(matches!(RunManifest::from_json(&v.to_string()), Err(ManifestError::Json(_))));
    }

    #[test]
    fn hostile_output_names_rejected() {
        for name in ["../x.csv", "a/b.csv", ".hidden", "manifest.json", ""] {
            let mut m = sample_manifest();
            m.outputs.insert(name.into(), sha256_hex(b""));
            assert!(matches!(m.validate(), Err(ManifestError::OutputName(_))), "{name}");
        }
    }

    #[test]
    fn inconsistent_fields_rejected() {
        let mut m = sample_manifest();
        m.subcommand = "sample".into();
        assert!(matches!(m.validate(), Err(ManifestError::Subcommand { .. })));
        let mut m = sample_manifest();
        m.outputs.insert("x.csv".into(), "ABC".into());
        assert!(matches!(m.validate(), Err(ManifestError::Digest { .. })));
        let mut m = sample_manifest();
        m.schema = "other".into();
        assert!(matches!(m.validate(), Err(ManifestError::Schema { .. })));
    }

    #[test]
    fn known_digest() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
