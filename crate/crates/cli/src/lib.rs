//! Experiment harness and command-line plumbing for `cyclecover`.

pub mod config;
pub mod error;
pub mod experiment;
pub mod probe;

pub use config::{Check, ExperimentConfig, Family, SolverKind};
pub use error::{CliError, CliResult};
pub use experiment::{collect_report, run_experiment, solve_with, verify_options, ExperimentReport, Row};
pub use probe::{ramsey_probe, seed_search, RamseyProbeResult};
