//! Reading the JSON input files.

use std::path::Path;

use serde_json::Value;

use plhom::exact_algebra::{parse_rational, Rational};
use plhom::graph_core::{parse_graph_json, EmbeddedGraph, Multigraph};
use plhom::interpolation::MonomialMatrix;
use plhom::partition::{parse_matrix_json, SymMatrix};
use plhom::Error;

use super::{CliResult, Failure};

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn json(path: &Path) -> CliResult<Value> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())).into())
}

pub fn matrix(path: &Path) -> CliResult<SymMatrix> {
    Ok(parse_matrix_json(&read(path)?)?)
}

pub fn graph(path: &Path) -> CliResult<(Multigraph, Option<EmbeddedGraph>)> {
    Ok(parse_graph_json(&read(path)?)?)
}

pub fn rational(s: &str) -> CliResult<Rational> {
    Ok(parse_rational(s)?)
}

pub fn rationals(items: &[String]) -> CliResult<Vec<Rational>> {
    items.iter().map(|s| rational(s)).collect()
}

/// A JSON number or string holding a rational.
fn scalar(v: &Value) -> CliResult<Rational> {
    match v {
        Value::String(s) => rational(s),
        Value::Number(n) => rational(&n.to_string()),
        other => Err(Error::Input(format!("expected a rational, found {other}")).into()),
    }
}

pub fn rational_list(path: &Path) -> CliResult<Vec<Rational>> {
    match json(path)? {
        Value::Array(items) => items.iter().map(scalar).collect(),
        _ => Err(Error::Input("expected a JSON list of rationals".into()).into()),
    }
}

/// A square grid given either bare or as `{"entries": ...}`.
pub fn rational_grid(path: &Path) -> CliResult<Vec<Vec<Rational>>> {
    let v = json(path)?;
    let rows = match &v {
        Value::Object(map) => map.get("entries").ok_or_else(|| Error::Input("missing \"entries\"".into()))?,
        other => other,
    };
    let Value::Array(rows) = rows else { return Err(Error::Input("expected a list of rows".into()).into()) };
    rows.iter()
        .map(|r| match r {
            Value::Array(cells) => cells.iter().map(scalar).collect(),
            _ => Err(Error::Input("each row must be a list".into()).into()),
        })
        .collect()
}

pub fn exponent_matrix(path: &Path) -> CliResult<MonomialMatrix> {
    let grid = rational_grid(path)?;
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let mut row = Vec::with_capacity(r.len());
        for v in r {
            let e = v.to_integer();
            if !v.is_integer() || e < 0.into() {
                return Err(Error::Input(format!("exponents must be nonnegative integers, got {v}")).into());
            }
            row.push(u64::try_from(e).map_err(|_| Error::Input("exponent too large".into()))?);
        }
        rows.push(row);
    }
    Ok(MonomialMatrix::new(rows)?)
}
