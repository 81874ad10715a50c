//! Command-line front end: config ingestion, subcommands, CSV/JSON
//! emission, the bundled reference dataset, and the self-test.
//!
//! Exit statuses: 0 success, 2 usage, 3 config/input parse failure,
//! 4 computation or I/O failure, 5 self-test failure.

pub mod commands;
pub mod config;
pub mod dataset;
pub mod report;
pub mod selftest;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::design::Objective;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Compute(String),
    #[error("selftest: {failed} case(s) failed")]
    SelftestFailed { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Compute(_) => 4,
            CliError::SelftestFailed { .. } => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown output format '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    MaxSpan,
    MinSnapTime,
    MinEnergyBarrier,
}

impl From<ObjectiveArg> for Objective {
    fn from(a: ObjectiveArg) -> Self {
        match a {
            ObjectiveArg::MaxSpan => Objective::MaxSpan,
            ObjectiveArg::MinSnapTime => Objective::MinSnapTime,
            ObjectiveArg::MinEnergyBarrier => Objective::MinEnergyBarrier,
        }
    }
}

/// Design and analysis toolkit for prestressed bistable hair-clip-mechanism
/// gripper fingers.
#[derive(Debug, Parser)]
#[command(name = "hcm", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute critical load, span, snap time, and energy barrier for one
    /// design.
    Analyze {
        /// Path to the TOML run configuration.
        config: PathBuf,
        /// Echo the parsed configuration as TOML and exit.
        #[arg(long)]
        dump_config: bool,
        /// Output format (default: text; config [output].format applies
        /// when unset).
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        /// Write the report here instead of stdout (atomic).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep one parameter and write the fixed-schema CSV table.
    Sweep {
        config: PathBuf,
        /// Which parameter to vary: D, t, h, or l.
        #[arg(long)]
        vary: String,
        /// Range start, mm.
        #[arg(long)]
        from: f64,
        /// Range end (inclusive), mm.
        #[arg(long)]
        to: f64,
        /// Number of rows.
        #[arg(long)]
        steps: usize,
        /// Output CSV path (written atomically).
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate grasp feasibility for an object; prints a JSON report.
    GraspCheck {
        config: PathBuf,
        /// Object spec: a TOML file path or a bundled dataset key.
        #[arg(long)]
        object: Option<String>,
        /// Write the JSON here instead of stdout (atomic).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the configured design space under constraints.
    Optimize {
        config: PathBuf,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        /// Require at least this reported span, mm.
        #[arg(long)]
        min_span_mm: Option<f64>,
        /// Cap the snap-time estimate, ms.
        #[arg(long)]
        max_snap_time_ms: Option<f64>,
        /// Cap the critical load, N.
        #[arg(long)]
        max_pcr_n: Option<f64>,
        /// Cap the energy barrier, J.
        #[arg(long)]
        max_energy_barrier_j: Option<f64>,
        /// Require at least this fatigue-advisory cycle count
        /// (conservative band edge).
        #[arg(long)]
        min_fatigue_cycles: Option<f64>,
        /// Also print the exhaustive grid enumeration winner (debug
        /// oracle).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Run the built-in oracle-comparison suite.
    Selftest,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            config,
            dump_config,
            format,
            out,
        } => commands::analyze(&config, dump_config, format, out),
        Command::Sweep {
            config,
            vary,
            from,
            to,
            steps,
            out,
        } => commands::sweep_command(&config, &vary, from, to, steps, &out),
        Command::GraspCheck {
            config,
            object,
            out,
        } => commands::grasp_check(&config, object.as_deref(), out),
        Command::Optimize {
            config,
            objective,
            min_span_mm,
            max_snap_time_ms,
            max_pcr_n,
            max_energy_barrier_j,
            min_fatigue_cycles,
            exhaustive,
        } => commands::optimize_command(
            &config,
            objective.into(),
            min_span_mm,
            max_snap_time_ms,
            max_pcr_n,
            max_energy_barrier_j,
            min_fatigue_cycles,
            exhaustive,
        ),
        Command::Selftest => commands::selftest_command(),
    }
}
