use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "lpp", version, about = "Last passage percolation on lower-triangular and staircase domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Parses an argument vector (program name first) without exiting.
pub fn parse_args<I, T>(args: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args)
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Monte Carlo samples of a last passage time
    Sample(SampleArgs),
    /// Exact CDF table from the finite Pfaffian kernel
    Exact(ExactArgs),
    /// Tables of the limiting distributions
    #[command(subcommand)]
    Limits(LimitsCommand),
    /// Both panels of the anti-diagonal / corner comparison with Tracy-Widom
    Figure4(Figure4Args),
    /// Run the built-in oracle suites
    Selftest(SelftestArgs),
    /// Re-run the command recorded in a manifest and compare digests
    Replay(ReplayArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sample(_) => "sample",
            Command::Exact(_) => "exact",
            Command::Limits(LimitsCommand::Tw(_)) => "limits tw",
            Command::Limits(LimitsCommand::Fuinf(_)) => "limits fuinf",
            Command::Limits(LimitsCommand::Fuv(_)) => "limits fuv",
            Command::Figure4(_) => "figure4",
            Command::Selftest(_) => "selftest",
            Command::Replay(_) => "replay",
        }
    }

    /// Output directory, for commands that write files.
    pub fn out_dir(&self) -> Option<&PathBuf> {
        match self {
            Command::Sample(a) => Some(&a.out),
            Command::Exact(a) => Some(&a.out),
            Command::Limits(LimitsCommand::Tw(a)) => Some(&a.out),
            Command::Limits(LimitsCommand::Fuinf(a)) => Some(&a.out),
            Command::Limits(LimitsCommand::Fuv(a)) => Some(&a.out),
            Command::Figure4(a) => Some(&a.out),
            Command::Selftest(_) | Command::Replay(_) => None,
        }
    }

    pub fn with_out_dir(&self, out: PathBuf) -> Command {
        let mut c = self.clone();
        match &mut c {
            Command::Sample(a) => a.out = out,
            Command::Exact(a) => a.out = out,
            Command::Limits(LimitsCommand::Tw(a)) => a.out = out,
            Command::Limits(LimitsCommand::Fuinf(a)) => a.out = out,
            Command::Limits(LimitsCommand::Fuv(a)) => a.out = out,
            Command::Figure4(a) => a.out = out,
            Command::Selftest(_) | Command::Replay(_) => {}
        }
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeArg {
    Square,
    Lt,
    Staircase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathArg {
    Corner,
    Antidiag,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub shape: ShapeArg,
    #[arg(long)]
    pub n: usize,
    /// Columns (defaults to n)
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub q: f64,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = PathArg::Corner)]
    pub path: PathArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExactArgs {
    #[arg(long)]
    pub n: usize,
    /// Columns of the staircase (defaults to n)
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub q: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub kmin: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub kmax: i64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitsCommand {
    /// F_GOE, F_GUE and F_GSE on a grid
    Tw(TwArgs),
    /// F_{u,inf} on a grid
    Fuinf(FuinfArgs),
    /// F_{u,v} on a grid
    Fuv(FuvArgs),
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub smin: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub smax: f64,
    #[arg(long)]
    pub ds: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuinfArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub u: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub smin: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub smax: f64,
    #[arg(long)]
    pub ds: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuvArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub u: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub v: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub smin: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub smax: f64,
    #[arg(long)]
    pub ds: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Figure4Args {
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long, default_value_t = 0.618)]
    pub q: f64,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestArgs {
    /// Debug aid: zero every numerical tolerance so that the run must fail
    #[arg(long, hide = true)]
    pub corrupt_tolerance: bool,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Where to write the rerun (a temporary directory when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_negative_grid() {
        let cli =
            parse_args(["lpp", "limits", "tw", "--smin", "-6", "--smax", "3", "--ds", "0.25", "--out", "d"]).unwrap();
        match cli.command {
            Command::Limits(LimitsCommand::Tw(a)) => assert_eq!((a.smin, a.smax, a.ds), (-6.0, 3.0, 0.25)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_q_is_usage_error() {
        let e = parse_args(["lpp", "sample", "--shape", "lt", "--n", "10", "--out", "d"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn command_round_trips_through_json() {
        let cli = parse_args(["lpp", "figure4", "--out", "x", "--samples", "100"]).unwrap();
        let text = serde_json::to_string(&cli.command).unwrap();
        let back: Command = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cli.command);
        assert_eq!(back.name(), "figure4");
    }
}
