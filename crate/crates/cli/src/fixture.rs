//! Loading quivers and algebras from built-in names or JSON files.

use std::fs;
use std::path::Path;

use qpbasis::fdalg::FDAlgebra;
use qpbasis::fixtures::{self, Fixture};
use qpbasis::potential::{jacobian_algebra, Potential};
use qpbasis::quiver::IceQuiver;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// Fixture file schema. `potential` and `bound` are optional; a bare quiver
/// object is also accepted wherever only a quiver is needed.
#[derive(Deserialize)]
struct FixtureFile {
    #[serde(default)]
    name: Option<String>,
    quiver: IceQuiver,
    #[serde(default)]
    potential: Option<Potential>,
    #[serde(default)]
    bound: Option<usize>,
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

/// A quiver from a file holding either a quiver or a fixture object.
pub fn load_quiver(path: &Path) -> Result<IceQuiver, CliError> {
    let v = read_json(path)?;
    let q = match v.get("quiver") {
        Some(inner) => inner.clone(),
        None => v,
    };
    serde_json::from_value(q).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

/// Resolves a built-in fixture name or a fixture file. With `bound` the
/// algebra is recomputed from the potential with that path-length bound.
pub fn load_fixture(spec: &str, bound: Option<usize>) -> Result<Fixture, CliError> {
    if let Some(fx) = fixtures::by_name(spec) {
        return match bound {
            None => Ok(fx),
            Some(b) => {
                let algebra = jacobian(&fx.quiver, &fx.potential, b)?;
                Ok(Fixture { algebra, ..fx })
            }
        };
    }
    let path = Path::new(spec);
    if !path.exists() {
        let names = fixtures::NAMES.join(", ");
        return Err(CliError::usage(format!("unknown fixture {spec:?}; built-in fixtures are {names}")));
    }
    let file: FixtureFile =
        serde_json::from_value(read_json(path)?).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    let potential = file.potential.unwrap_or_default();
    let potential = Potential::new(&file.quiver.as_quiver(), potential.terms).map_err(|e| CliError::parse(e.to_string()))?;
    let b = bound.or(file.bound).unwrap_or(file.quiver.n() + 1);
    let algebra = jacobian(&file.quiver, &potential, b)?;
    let name = file.name.unwrap_or_else(|| spec.to_string());
    Ok(Fixture { name, quiver: file.quiver, potential, algebra })
}

fn jacobian(q: &IceQuiver, w: &Potential, bound: usize) -> Result<FDAlgebra, CliError> {
    jacobian_algebra(q, w, bound).map_err(|e| CliError::logic(format!("Jacobian algebra: {e}")))
}
