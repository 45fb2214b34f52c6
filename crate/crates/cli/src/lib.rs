//! Command implementations behind the `qpbasis` binary. Each command returns
//! a JSON value or a [`CliError`] carrying the process exit code.

pub mod fixture;
pub mod verify;

use std::path::Path;

use qpbasis::genbasis::{generic_basis_element, GenbasisError, PrimeChoice};
use qpbasis::homalg::{DeltaVector, HomalgError, Sampling};
use qpbasis::quiver::{IceQuiver, QuiverError};
use qpbasis::seed::{initial_seed, mutate_seed, SeedError};
use serde_json::{json, Value};

pub const EXIT_LOGIC: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    /// Printed on stdout instead of the message when present.
    pub payload: Option<Value>,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: EXIT_LOGIC, message: message.into(), payload: None }
    }

    pub fn logic(message: impl Into<String>) -> Self {
        CliError { code: EXIT_LOGIC, message: message.into(), payload: None }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into(), payload: None }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        match e {
            QuiverError::VertexOutOfRange(..) | QuiverError::FrozenVertex(_) => CliError::usage(e.to_string()),
            other => CliError::logic(other.to_string()),
        }
    }
}

impl From<SeedError> for CliError {
    fn from(e: SeedError) -> Self {
        match e {
            SeedError::Quiver(q) => q.into(),
            other => CliError::logic(other.to_string()),
        }
    }
}

impl From<GenbasisError> for CliError {
    fn from(e: GenbasisError) -> Self {
        match e {
            GenbasisError::Homalg(HomalgError::NotStabilized(stats)) => CliError {
                code: EXIT_UNSTABLE,
                message: "generic sampling did not stabilize".into(),
                payload: Some(json!({ "error": "not stabilized", "stats": *stats })),
            },
            GenbasisError::Homalg(HomalgError::Length { expected, got }) | GenbasisError::Length { expected, got } => {
                CliError::usage(format!("index has length {got}, expected {expected}"))
            }
            other => CliError::logic(other.to_string()),
        }
    }
}

/// Vertex sequence from arguments such as `1 2 3`, `"1 2 3"` or `1,2,3`.
pub fn parse_vertices(args: &[String]) -> Result<Vec<usize>, CliError> {
    args.iter()
        .flat_map(|a| a.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()))
        .map(|t| t.parse::<usize>().map_err(|_| CliError::parse(format!("not a vertex: {t:?}"))))
        .collect()
}

/// An index from `1,0,-1`, `[1,0,-1]` or `{"g":[1,0,-1]}`.
pub fn parse_delta(s: &str) -> Result<DeltaVector, CliError> {
    let t = s.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| CliError::parse(format!("index {s:?}: {e}")));
    }
    let inner = t.trim_start_matches('[').trim_end_matches(']');
    let g = inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|_| CliError::parse(format!("index {s:?}: bad entry {x:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DeltaVector::new(g))
}

/// Prime list from `2,3,5`; composite entries are rejected.
pub fn parse_primes(s: &str) -> Result<PrimeChoice, CliError> {
    let ps = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|x| !x.is_empty())
        .map(|x| match x.parse::<u64>() {
            Ok(p) if qpbasis::field::is_prime(p) => Ok(p),
            _ => Err(CliError::usage(format!("not a prime: {x:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PrimeChoice::Listed(ps))
}

pub fn cmd_mutate(quiver: &Path, vertices: &[usize]) -> Result<Value, CliError> {
    let mut q: IceQuiver = fixture::load_quiver(quiver)?;
    for &k in vertices {
        q = q.mutate(k)?;
    }
    Ok(serde_json::to_value(&q).expect("quiver serializes"))
}

pub fn cmd_seed(quiver: &Path, vertices: &[usize]) -> Result<Value, CliError> {
    let q = fixture::load_quiver(quiver)?;
    let mut s = initial_seed(&q);
    for &k in vertices {
        s = mutate_seed(&s, k)?;
    }
    Ok(serde_json::to_value(&s).expect("seed serializes"))
}

pub fn cmd_generic_basis(
    fixture_spec: &str,
    delta: &DeltaVector,
    sampling: Sampling,
    primes: &PrimeChoice,
    bound: Option<usize>,
) -> Result<Value, CliError> {
    let fx = fixture::load_fixture(fixture_spec, bound)?;
    let v = generic_basis_element(delta, &fx.algebra, &fx.quiver, sampling, primes)?;
    Ok(v.to_json())
}

/// The suite report; an error with the report as payload when a criterion fails.
pub fn cmd_verify(suite: &str, fixture_names: Option<&[String]>, s: &verify::Settings) -> Result<Value, CliError> {
    let names: Vec<String> = match fixture_names {
        Some(n) => n.to_vec(),
        None => qpbasis::fixtures::NAMES.iter().map(|s| s.to_string()).collect(),
    };
    let fixtures = names.iter().map(|n| fixture::load_fixture(n, None)).collect::<Result<Vec<_>, _>>()?;
    let criteria = verify::run_suite(suite, &fixtures, s).ok_or_else(|| {
        CliError::usage(format!("unknown suite {suite:?}; expected one of {}", verify::SUITES.join(", ")))
    })?;
    let report = verify::report(suite, &criteria);
    if criteria.iter().all(|c| c.pass) {
        Ok(report)
    } else {
        Err(CliError { code: EXIT_LOGIC, message: format!("suite {suite} failed"), payload: Some(report) })
    }
}
