use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use quadrangle::format::parse_tuple;
use quadrangle::parallel::worker_count;
use quadrangle::{run, Command, Format, RunConfig};
use quadrangle_core::Modulus;

/// (Z/nZ)² covers of the plane branched on a complete quadrangle.
#[derive(Parser, Debug)]
#[command(name = "quadrangle", version)]
struct Cli {
    /// Prime modulus n in 2..=31.
    #[arg(long, short = 'n', global = true, default_value_t = 5)]
    modulus: u32,
    #[arg(long, short, global = true, value_enum, default_value_t = OutFormat::Md)]
    format: OutFormat,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Compare against the embedded reference data; exit 2 on mismatch.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Md,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Count the admissible tuples.
    Enumerate {
        /// Also write every tuple to this file, one per line.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Partition the admissible tuples into symmetry orbits.
    Orbits,
    /// K², χ, p_g and q of the surface of a tuple.
    Invariants { tuple: String },
    /// The character sheaves L_(a,b) of a tuple.
    SheafTable { tuple: String },
    /// Fixed part, base points and degree of the canonical map.
    Canonical { tuple: String },
    /// Intersection table and first homology of the branch complement.
    Homology,
    /// The relations w_χ w_χ' = σ^ε w_(χ+χ') of the cover.
    Equations { tuple: String },
    /// Everything above in one document.
    Report,
}

fn config(cli: Cli) -> Result<RunConfig> {
    let m = Modulus::new(cli.modulus)?;
    let mut dump = None;
    let command = match cli.command {
        Cmd::Enumerate { dump: d } => {
            dump = d;
            Command::Enumerate
        }
        Cmd::Orbits => Command::Orbits,
        Cmd::Invariants { tuple } => Command::Invariants(parse_tuple(m, &tuple)?),
        Cmd::SheafTable { tuple } => Command::SheafTable(parse_tuple(m, &tuple)?),
        Cmd::Canonical { tuple } => Command::Canonical(parse_tuple(m, &tuple)?),
        Cmd::Homology => Command::Homology,
        Cmd::Equations { tuple } => Command::Equations(parse_tuple(m, &tuple)?),
        Cmd::Report => Command::Report,
    };
    Ok(RunConfig {
        modulus: m,
        command,
        format: match cli.format {
            OutFormat::Json => Format::Json,
            OutFormat::Md => Format::Md,
            OutFormat::Csv => Format::Csv,
        },
        output: cli.output,
        verify: cli.verify,
        dump,
        threads: worker_count(),
    })
}

fn main() -> ExitCode {
    let result = config(Cli::parse()).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.output {
            Some(path) => std::fs::write(path, &outcome.text)?,
            None => print!("{}", outcome.text),
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            if let Some(v) = &outcome.verify {
                for note in &v.notes {
                    eprintln!("verify: note: {note}");
                }
                for f in &v.failures {
                    eprintln!("verify: MISMATCH: {f}");
                }
                eprintln!("verify: {} checks, {} mismatches", v.checked, v.failures.len());
            }
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
