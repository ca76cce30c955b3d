use std::path::PathBuf;

use super::execute;
use crate::args::ReplayArgs;
use crate::manifest::RunManifest;
use crate::CliError;

pub(super) fn run(a: &ReplayArgs) -> Result<(), CliError> {
    let recorded = RunManifest::read(&a.manifest)?;
    if recorded.tool_version != env!("CARGO_PKG_VERSION") {
        log::warn!(
            "manifest written by version {}, replaying with {}",
            recorded.tool_version,
            env!("CARGO_PKG_VERSION")
        );
    }
    let scratch;
    let dir: PathBuf = match &a.out {
        Some(d) => d.clone(),
        None => {
            scratch = tempfile::tempdir().map_err(CliError::io(std::env::temp_dir()))?;
            scratch.path().to_path_buf()
        }
    };
    let rerun = execute(&recorded.parameters.with_out_dir(dir.clone()))?.expect("validated manifests are replayable");

    let mut differing = Vec::new();
    for (name, digest) in &recorded.outputs {
        let status = match rerun.outputs.get(name) {
            Some(d) if d == digest => "identical",
            Some(_) => "differs",
            None => "missing",
        };
        println!("{name:<28} {status}");
        if status != "identical" {
            differing.push(name.clone());
        }
    }
    for name in rerun.outputs.keys().filter(|n| !recorded.outputs.contains_key(*n)) {
        println!("{name:<28} not in manifest");
        differing.push(name.clone());
    }
    if differing.is_empty() {
        println!("replay of {} identical ({} files)", recorded.subcommand, recorded.outputs.len());
        Ok(())
    } else {
        Err(CliError::ReplayMismatch(differing.join(", ")))
    }
}
