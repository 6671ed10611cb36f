//! The `hvlab` command line.
//!
//! Exit codes: 0 success, 1 input or check failure, 2 when a gate has no
//! faithful functional representation.

use std::io::Write;
use std::path::Path;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::derive::derive_full;
use crate::error::{Error, Result};
use crate::experiment::{run_contradiction, ExperimentBranch, Verdict};
use crate::qstate::GateMatrix;
use crate::registry::Registry;
use crate::report::{render_contradiction, to_json, CheckReport, DerivationReport, EprReport};
use crate::verify::{oracle_checks, verify_reps};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_FUNCTIONAL: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hvlab", version, about = "Exact triplet hidden-variable laboratory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive the triplet representation of a builtin gate or a JSON matrix file.
    Derive {
        /// H, S, CNOT, X, Y, Z, T, I, or a path to a gate file.
        gate: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cross-check builtin representations against derivations and the oracle.
    VerifyReps {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Propagate symbolic triplets through the EPR-pair circuit.
    #[command(group(ArgGroup::new("branch").required(true).args(["phase_shift", "no_phase_shift"])))]
    Epr {
        #[arg(long)]
        phase_shift: bool,
        #[arg(long)]
        no_phase_shift: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate all hidden-variable assignments against both experiment branches.
    Contradiction {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the exact quantum predictions the model is compared with.
    OracleCheck {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A builtin name, else a path to a gate JSON file.
pub fn resolve_gate(arg: &str) -> Result<GateMatrix> {
    if let Some(g) = GateMatrix::builtin(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::UnknownGate(arg.to_owned()));
    }
    GateMatrix::from_json(&std::fs::read_to_string(path)?)
}

pub fn cmd_derive(gate: &str, format: Format, out: &mut dyn Write) -> Result<i32> {
    let g = resolve_gate(gate)?;
    let d = derive_full(&g)?;
    let report = DerivationReport::new(&g, &d);
    emit(out, format, &report, DerivationReport::render_text)?;
    Ok(if report.total { EXIT_OK } else { EXIT_NOT_FUNCTIONAL })
}

pub fn cmd_verify_reps(registry: &Registry, format: Format, out: &mut dyn Write) -> Result<i32> {
    let report = CheckReport::new(verify_reps(registry));
    emit(out, format, &report, CheckReport::render_text)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILURE })
}

pub fn cmd_epr(branch: ExperimentBranch, format: Format, out: &mut dyn Write) -> Result<i32> {
    let report = EprReport::new(branch);
    emit(out, format, &report, EprReport::render_text)?;
    Ok(EXIT_OK)
}

pub fn cmd_contradiction(format: Format, out: &mut dyn Write) -> Result<i32> {
    let report = run_contradiction()?;
    emit(out, format, &report, render_contradiction)?;
    Ok(match report.verdict {
        Verdict::Contradiction => EXIT_OK,
        Verdict::Consistent => EXIT_FAILURE,
    })
}

pub fn cmd_oracle_check(format: Format, out: &mut dyn Write) -> Result<i32> {
    let report = CheckReport::new(oracle_checks());
    emit(out, format, &report, CheckReport::render_text)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILURE })
}

fn emit<T: serde::Serialize>(
    out: &mut dyn Write,
    format: Format,
    report: &T,
    text: impl Fn(&T) -> String,
) -> Result<()> {
    let body = match format {
        Format::Text => text(report),
        Format::Json => to_json(report)?,
    };
    out.write_all(body.as_bytes())?;
    Ok(())
}

pub fn run(cli: Cli, registry: &Registry, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Derive { gate, format } => cmd_derive(&gate, format, out),
        Command::VerifyReps { format } => cmd_verify_reps(registry, format, out),
        Command::Epr {
            phase_shift,
            format,
            ..
        } => {
            let branch = if phase_shift {
                ExperimentBranch::SHIFT
            } else {
                ExperimentBranch::NO_SHIFT
            };
            cmd_epr(branch, format, out)
        }
        Command::Contradiction { format } => cmd_contradiction(format, out),
        Command::OracleCheck { format } => cmd_oracle_check(format, out),
    }
}
