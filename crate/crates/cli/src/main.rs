use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qpbasis::genbasis::PrimeChoice;
use qpbasis::homalg::{Sampling, DEFAULT_HEIGHT, DEFAULT_TRIALS};
use qpbasis_cli::{
    cmd_generic_basis, cmd_mutate, cmd_seed, cmd_verify, parse_delta, parse_primes, parse_vertices, verify, CliError,
};
use serde_json::Value;

/// Generic bases of cluster algebras from quivers with potential.
#[derive(Parser)]
#[command(name = "qpbasis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sampling rounds for generic maps.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Random coefficients are drawn from [-H, H].
    #[arg(long, global = true, default_value_t = DEFAULT_HEIGHT)]
    height: i64,
    /// Primes for point counting, e.g. 2,3,5,7.
    #[arg(long, global = true)]
    primes: Option<String>,
    /// Path-length bound when building the Jacobian algebra from the potential.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Mutate a quiver at a sequence of vertices.
    Mutate {
        /// Quiver JSON file, bare or under a "quiver" key.
        quiver: PathBuf,
        /// Mutable vertices, 1-based, space or comma separated.
        #[arg(allow_hyphen_values = true)]
        vertices: Vec<String>,
    },
    /// Mutate the initial seed at a sequence of vertices.
    Seed {
        /// Quiver JSON file, bare or under a "quiver" key.
        quiver: PathBuf,
        /// Mutable vertices, 1-based, space or comma separated.
        #[arg(allow_hyphen_values = true)]
        vertices: Vec<String>,
    },
    /// Evaluate the generic basis element of an index, e.g. `labardini 1,0,-1`.
    GenericBasis {
        /// Built-in fixture name or fixture JSON file.
        fixture: String,
        /// Index as `1,0,-1`, `[1,0,-1]` or `{"g":[1,0,-1]}`.
        #[arg(allow_hyphen_values = true)]
        delta: String,
    },
    /// Run a verification suite.
    Verify {
        /// paper-example, invariants, mutation-commutes-acyclic or independence.
        suite: String,
        /// Comma-separated fixtures for the invariants suite; empty for none.
        #[arg(long)]
        fixtures: Option<String>,
        /// Random indices per fixture for the E-invariant check.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    let o = &cli.opts;
    let sampling = Sampling { height: o.height, trials: o.trials, seed: o.seed };
    if o.trials == 0 || o.height <= 0 {
        return Err(CliError::usage("--trials and --height must be positive"));
    }
    let primes = match &o.primes {
        Some(p) => parse_primes(p)?,
        None => PrimeChoice::default(),
    };
    match &cli.command {
        Command::Mutate { quiver, vertices } => cmd_mutate(quiver, &parse_vertices(vertices)?),
        Command::Seed { quiver, vertices } => cmd_seed(quiver, &parse_vertices(vertices)?),
        Command::GenericBasis { fixture, delta } => {
            cmd_generic_basis(fixture, &parse_delta(delta)?, sampling, &primes, o.bound)
        }
        Command::Verify { suite, fixtures, samples } => {
            let names: Option<Vec<String>> = fixtures.as_ref().map(|f| {
                f.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
            });
            let settings = verify::Settings { sampling, primes, samples: *samples };
            cmd_verify(suite, names.as_deref(), &settings)
        }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("json")
    } else {
        serde_json::to_string(v).expect("json")
    }
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn emit(v: &Value, pretty: bool) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", render(v, pretty));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            emit(&v, cli.opts.pretty);
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e.payload {
                Some(p) => emit(p, cli.opts.pretty),
                None => eprintln!("error: {e}"),
            }
            ExitCode::from(e.code as u8)
        }
    }
}
