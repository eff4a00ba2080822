//! Command-line front end: parses options, runs one subcommand and renders
//! its records as a table, CSV or JSON.

pub mod commands;
pub mod input;
pub mod render;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use twintau_core::catalog::{load_catalog, validate_catalog};
use twintau_core::ieclosed::DEFAULT_CLASSIFY_BOUND;
use twintau_core::{interval_catalog, Error, Result, Side, TorsionLattice};

use input::{parse_algebra_file, Fixture};
use render::{key_values, render, Format, Names, Output, Row};

#[derive(Debug, Parser)]
#[command(
    name = "twintau",
    version,
    about = "Twin support τ-tilting modules and IE-closed subcategories"
)]
pub struct Cli {
    /// Algebra description (JSON).
    #[arg(long, global = true, conflicts_with = "fixture")]
    pub algebra: Option<PathBuf>,

    /// Bundled algebra to use when no --algebra is given.
    #[arg(long, global = true, value_enum)]
    pub fixture: Option<Fixture>,

    /// Catalog of indecomposables (JSON); by default the interval catalog.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,

    /// Prime for the ground field, overriding the algebra file.
    #[arg(long, global = true)]
    pub p: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write modules as S1S3P1, Λ, DΛ in tables.
    #[arg(long, global = true)]
    pub paper_names: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Indecomposables with τ and τ⁻.
    Catalog,
    /// Basic support τ-tilting modules.
    Stt {
        /// Support τ⁻-tilting modules instead.
        #[arg(long)]
        minus: bool,
    },
    /// All twin support τ-tilting modules.
    Twins {
        #[arg(long)]
        canonical_only: bool,
    },
    /// IE-closed subcategories with canonical twins, Ext-pairs and flags.
    Ie {
        #[arg(long, default_value_t = DEFAULT_CLASSIFY_BOUND)]
        bound: usize,
    },
    /// Canonicalize a twin pair given as module expressions like S1+S3+P1.
    Canonicalize {
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
    },
    /// Canonical Ext-pairs of all IE-closed subcategories.
    ExtPairs,
    /// Torsion, torsion-free, ICE and IKE flags.
    Classify {
        /// Multiplicity bound for the cokernel and kernel searches.
        #[arg(long, default_value_t = DEFAULT_CLASSIFY_BOUND)]
        bound: usize,
    },
    /// Compare both bundled fixtures against the golden tables.
    VerifyPaper,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Consistency(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn load_lattice(cli: &Cli, err: &mut dyn Write) -> Result<TorsionLattice> {
    let alg = match &cli.algebra {
        Some(path) => Arc::new(parse_algebra_file(path, cli.p)?),
        None => cli.fixture.unwrap_or(Fixture::NakayamaA3).algebra(cli.p)?,
    };
    let cat = match &cli.catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            let cat = load_catalog(&alg, &text)?;
            for w in validate_catalog(&cat)?.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            cat
        }
        None => interval_catalog(&alg)?,
    };
    TorsionLattice::new(cat)
}

fn emit<R: Row + serde::Serialize>(lat: &TorsionLattice, cli: &Cli, records: Vec<R>) -> Result<String> {
    let out = Output {
        algebra: lat.catalog().algebra().hash_hex(),
        records,
    };
    let names = Names {
        cat: lat.catalog(),
        concat: cli.paper_names,
    };
    render(&out, cli.format, &names)
}

/// Runs a parsed command; returns the exit code and writes to `out`/`err`.
pub fn run_command(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, err) {
        Ok((code, text)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(i32, String)> {
    if let Command::VerifyPaper = cli.command {
        let golden = verify::Golden::bundled()?;
        let checks = verify::verify_golden(&golden, cli.p.unwrap_or(2))?;
        let code = if checks.iter().all(|c| c.passed) {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        };
        let cat = interval_catalog(&Fixture::NakayamaA3.algebra(cli.p)?)?;
        let out = Output {
            algebra: cat.algebra().hash_hex(),
            records: checks,
        };
        let names = Names {
            cat: &cat,
            concat: cli.paper_names,
        };
        return Ok((code, render(&out, cli.format, &names)?));
    }
    let lat = load_lattice(cli, err)?;
    let text = match &cli.command {
        Command::Catalog => emit(&lat, cli, commands::catalog(&lat)?)?,
        Command::Stt { minus } => {
            let side = if *minus { Side::Minus } else { Side::Plus };
            emit(&lat, cli, commands::stt(&lat, side)?)?
        }
        Command::Twins { canonical_only } => emit(&lat, cli, commands::twins(&lat, *canonical_only)?)?,
        Command::Ie { bound } => emit(&lat, cli, commands::ie(&lat, *bound)?)?,
        Command::ExtPairs => emit(&lat, cli, commands::ext_pairs(&lat, DEFAULT_CLASSIFY_BOUND)?)?,
        Command::Classify { bound } => emit(&lat, cli, commands::classify_all(&lat, *bound)?)?,
        Command::Canonicalize { m, n } => {
            let record = commands::canonicalize_cmd(&lat, m, n)?;
            if cli.format == Format::Table {
                let names = Names {
                    cat: lat.catalog(),
                    concat: cli.paper_names,
                };
                key_values(&record.key_values(&names))
            } else {
                emit(&lat, cli, vec![record])?
            }
        }
        Command::VerifyPaper => unreachable!("handled above"),
    };
    Ok((EXIT_OK, text))
}

/// Parses `args` (including the program name) and runs; clap errors exit 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            code
        }
    }
}
