//! `grpd`: load JSON descriptions of groupoids, algebras, partial actions and
//! graphs, then check, build or analyze them.
//!
//! Exit status: 0 when every check passes, 1 when violations are reported,
//! 2 on unreadable or malformed input.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grpd_core::{Error, FieldSpec};

#[derive(Parser, Debug)]
#[command(
    name = "grpd",
    version,
    about = "Exact algebra over groupoids, partial actions and graphs"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the groupoid axioms.
    CheckGroupoid { file: PathBuf },
    /// Check the partial action axioms.
    CheckAction { file: PathBuf },
    /// Build the partial skew groupoid ring of an action.
    BuildSkew {
        file: PathBuf,
        /// Write the algebra document here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Analyze an algebra: radical, centre, Wedderburn blocks.
    Analyze { file: PathBuf },
    /// Build a groupoid ring, one coefficient ring per connected component.
    GroupoidRing {
        file: PathBuf,
        /// Coefficient algebra documents; the base field when omitted.
        #[arg(long = "coeff")]
        coeffs: Vec<PathBuf>,
        /// Characteristic of the base field: 0 or a prime.
        #[arg(long, default_value_t = 0)]
        field: u32,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Build the ring of the pair groupoid on n objects and match it with M_n(T).
    MatrixRing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        coeff: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        field: u32,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Build the partial group algebra of a finite group.
    PartialGroupAlgebra {
        file: Option<PathBuf>,
        /// Use the cyclic group of this order instead of a file.
        #[arg(long)]
        cyclic: Option<usize>,
        #[arg(long, default_value_t = 0)]
        field: u32,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Classify the Leavitt path algebra of a graph and check both models.
    Leavitt {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        field: u32,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Globalize a unital partial action and verify the result.
    Globalize {
        file: PathBuf,
        /// Write the global action document here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Run the semisimplicity criteria for a skew groupoid ring.
    Maschke { file: PathBuf },
}

fn field(p: u32) -> anyhow::Result<FieldSpec> {
    Ok(FieldSpec::new(p)?)
}

fn run(cli: &Cli) -> commands::Outcome {
    use commands as c;
    match &cli.command {
        Command::CheckGroupoid { file } => c::check_groupoid(file),
        Command::CheckAction { file } => c::check_action(file),
        Command::BuildSkew { file, dump } => c::build_skew(file, dump.as_ref()),
        Command::Analyze { file } => c::analyze(file),
        Command::GroupoidRing {
            file,
            coeffs,
            field: p,
            dump,
        } => c::groupoid_ring(file, coeffs, field(*p)?, dump.as_ref()),
        Command::MatrixRing {
            n,
            coeff,
            field: p,
            dump,
        } => c::matrix_ring(*n, coeff.as_ref(), field(*p)?, dump.as_ref()),
        Command::PartialGroupAlgebra {
            file,
            cyclic,
            field: p,
            dump,
        } => c::partial_group_algebra(file.as_ref(), *cyclic, field(*p)?, dump.as_ref()),
        Command::Leavitt {
            file,
            field: p,
            dump,
        } => c::leavitt(file, field(*p)?, dump.as_ref()),
        Command::Globalize { file, dump } => c::globalize(file, dump.as_ref()),
        Command::Maschke { file } => c::maschke(file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if report.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => match e.downcast_ref::<Error>() {
            Some(Error::InvalidAction(vs) | Error::InvalidGroupoid(vs)) => {
                let mut r = report::Report::new();
                for v in vs {
                    r.violation(v);
                }
                print!("{}", r.render(cli.json));
                ExitCode::from(1)
            }
            _ => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}
