//! Command-line surface for the CNF-to-polynomial pipeline.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 enumeration guard
//! exceeded, 3 verification mismatch.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;
use sparse_roots::{
    brute, corpus, parse_dimacs, reduce, Cnf, FieldContext, FieldError, GuardError,
    ReductionOutput, SparsePolynomial,
};
use std::fmt;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Largest padded dimension `verify` will brute-force.
const VERIFY_LIMIT: usize = 16;

#[derive(Parser)]
#[command(
    name = "sparseroots",
    version,
    about = "Turn 3-CNF formulas into sparse polynomials over GF(2^n) whose roots count the models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical GF(2^n) description as JSON
    GenField {
        /// Extension degree (n >= 1)
        #[arg(short, long)]
        n: i64,
    },
    /// Transform a DIMACS CNF (file, or stdin when omitted) into one sparse polynomial
    Reduce {
        /// DIMACS CNF file; stdin when omitted
        file: Option<PathBuf>,
        /// Write the JSON result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count the roots of a polynomial given as JSON (bare polynomial or reduce output)
    CountRoots {
        /// Polynomial JSON file
        file: PathBuf,
    },
    /// Count the satisfying assignments of a DIMACS CNF by enumeration
    CountSat {
        /// DIMACS CNF file
        file: PathBuf,
    },
    /// Reduce a formula and check that root count equals model count
    Verify {
        /// DIMACS CNF file; a seeded random instance when omitted
        file: Option<PathBuf>,
        /// Seed for the generated instance when no file is given
        #[arg(long, default_value_t = corpus::DEFAULT_SEED)]
        seed: u64,
        /// Check this previously produced reduce output instead of reducing afresh
        #[arg(long)]
        reduction: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String),
    Guard(String),
    Mismatch { models: u64, roots: u64 },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Parse(msg) | CliError::Guard(msg) => {
                write!(f, "{msg}")
            }
            CliError::Mismatch { models, roots } => {
                write!(f, "verification failed: models={models} roots={roots}")
            }
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Guard(_) => 2,
            CliError::Mismatch { .. } => 3,
        }
    }
}

impl From<GuardError> for CliError {
    fn from(e: GuardError) -> Self {
        CliError::Guard(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::GenField { n } => cmd_gen_field(n),
        Command::Reduce { file, out } => cmd_reduce(file.as_deref(), out.as_deref()),
        Command::CountRoots { file } => cmd_count_roots(&file),
        Command::CountSat { file } => cmd_count_sat(&file),
        Command::Verify {
            file,
            seed,
            reduction,
        } => cmd_verify(file.as_deref(), seed, reduction.as_deref()),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn read_dimacs(path: Option<&Path>) -> Result<Cnf, CliError> {
    let text = match path {
        Some(path) => read_file(path)?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_dimacs(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn cmd_gen_field(n: i64) -> Result<(), CliError> {
    if n < 1 {
        return Err(CliError::Usage(format!("n must be at least 1, got {n}")));
    }
    let field = FieldContext::new(n as u32).map_err(|e| match e {
        FieldError::UnsupportedDegree { .. } => CliError::Guard(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    let json = serde_json::to_string(&field).expect("context serializes");
    println!("{json}");
    Ok(())
}

fn cmd_reduce(file: Option<&Path>, out: Option<&Path>) -> Result<(), CliError> {
    let cnf = read_dimacs(file)?;
    let output = reduce(&cnf).map_err(|e| CliError::Guard(e.to_string()))?;
    eprintln!(
        "n={} terms={} bit_size={}",
        output.field.n(),
        output.poly.term_count(),
        output.poly.bit_size()
    );
    let json = serde_json::to_string(&output).expect("output serializes");
    match out {
        Some(path) => fs::write(path, json + "\n")
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{json}"),
    }
    Ok(())
}

/// Accepts either the `reduce` output or a bare polynomial.
#[derive(Deserialize)]
#[serde(untagged)]
enum PolyInput {
    Reduction(ReductionOutput),
    Poly(SparsePolynomial),
}

fn read_poly(path: &Path) -> Result<SparsePolynomial, CliError> {
    let text = read_file(path)?;
    let input: PolyInput = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(match input {
        PolyInput::Reduction(r) => r.poly,
        PolyInput::Poly(p) => p,
    })
}

fn cmd_count_roots(file: &Path) -> Result<(), CliError> {
    let poly = read_poly(file)?;
    let count = brute::count_roots_bruteforce(&poly)?;
    println!("{count}");
    Ok(())
}

fn cmd_count_sat(file: &Path) -> Result<(), CliError> {
    let cnf = read_dimacs(Some(file))?;
    let count = brute::count_sat_bruteforce(&cnf)?;
    println!("{count}");
    Ok(())
}

fn cmd_verify(file: Option<&Path>, seed: u64, reduction: Option<&Path>) -> Result<(), CliError> {
    let cnf = match file {
        Some(path) => read_dimacs(Some(path))?,
        None => {
            let mut rng = corpus::SplitMix64::new(seed);
            let v = rng.next_range(3, 10) as usize;
            let m = rng.next_range(1, v as u64) as usize;
            let cnf = corpus::random_cnf(&mut rng, v, m);
            eprintln!("generated instance: seed={seed} vars={v} clauses={m}");
            cnf
        }
    };
    let padded_vars = sparse_roots::pad(cnf.clone()).total_vars();
    if padded_vars > VERIFY_LIMIT {
        return Err(CliError::Guard(format!(
            "padded formula needs GF(2^{padded_vars}); verify enumerates up to 2^{VERIFY_LIMIT}"
        )));
    }
    let output = match reduction {
        Some(path) => {
            let text = read_file(path)?;
            serde_json::from_str::<ReductionOutput>(&text)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?
        }
        None => reduce(&cnf).map_err(|e| CliError::Guard(e.to_string()))?,
    };
    let models = brute::count_sat_bruteforce(&cnf)?;
    let roots = brute::count_roots_bruteforce(&output.poly)?;
    let verdict = if models == roots { "PASS" } else { "FAIL" };
    println!("models={models} roots={roots} {verdict}");
    let parity = if models % 2 == roots % 2 {
        "PASS"
    } else {
        "FAIL"
    };
    println!("models≡roots (mod 2): {parity}");
    if models != roots {
        return Err(CliError::Mismatch { models, roots });
    }
    Ok(())
}
