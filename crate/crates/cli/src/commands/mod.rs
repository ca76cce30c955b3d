use std::time::Instant;

use crate::args::{Command, LimitsCommand};
use crate::manifest::RunManifest;
use crate::output::OutputSet;
use crate::CliError;

mod exact;
mod figure4;
mod limits;
mod replay;
mod sample;
pub mod selftest;

/// What a file-writing command hands back before the manifest is written.
pub(crate) struct Produced {
    pub files: OutputSet,
    pub seed: Option<u64>,
    pub quadrature: serde_json::Value,
}

/// Runs one command. File-writing commands return the manifest they wrote.
pub fn execute(command: &Command) -> Result<Option<RunManifest>, CliError> {
    let start = Instant::now();
    let produced = match command {
        Command::Sample(a) => sample::run(a)?,
        Command::Exact(a) => exact::run(a)?,
        Command::Limits(LimitsCommand::Tw(a)) => limits::tw(a)?,
        Command::Limits(LimitsCommand::Fuinf(a)) => limits::fuinf(a)?,
        Command::Limits(LimitsCommand::Fuv(a)) => limits::fuv(a)?,
        Command::Figure4(a) => figure4::run(a)?,
        Command::Selftest(a) => {
            selftest::run(a)?;
            return Ok(None);
        }
        Command::Replay(a) => {
            replay::run(a)?;
            return Ok(None);
        }
    };
    let dir = command.out_dir().expect("file-writing command has --out");
    let mut manifest = RunManifest::new(command, produced.seed, produced.quadrature);
    manifest.wall_clock_seconds = start.elapsed().as_secs_f64();
    let manifest = produced.files.write(dir, manifest)?;
    log::info!("{}: wrote {} files to {}", command.name(), manifest.outputs.len() + 1, dir.display());
    Ok(Some(manifest))
}
