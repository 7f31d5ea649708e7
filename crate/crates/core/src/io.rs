//! Space files: a JSON document or a bare CSV matrix.
//!
//! JSON:
//!
//! ```json
//! {
//!   "points": ["a", "b", "c"],
//!   "matrix": [[0, 1, 5], [1, 0, 1], [5, 1, 0]],
//!   "witness": {"f": "ln", "alpha": 0},
//!   "map": {"kind": "affine", "a": 0.5, "b": 0}
//! }
//! ```
//!
//! CSV: the header row holds the labels, each following row one matrix row.
//!
//! A map is only meaningful when every label is a number; images are snapped
//! to the label within `1e-12`, and the map is undefined where none exists.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fclass::generator;
use crate::fspace::Witness;
use crate::space::{FiniteSpace, Map};

const LABEL_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub f: String,
    pub alpha: f64,
}

impl WitnessSpec {
    pub fn resolve(&self) -> Result<Witness> {
        Witness::new(generator(&self.f)?, self.alpha)
    }
}

/// Maps a space file may name.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapSpec {
    /// `x ↦ a·x + b`.
    Affine { a: f64, b: f64 },
    /// `identity` or `interval-halving` (`x ↦ 1 − x/2`).
    Named { name: String },
}

impl MapSpec {
    fn real_map(&self) -> Result<Map<f64>> {
        match self {
            MapSpec::Affine { a, b } => Ok(Map::affine(*a, *b)),
            MapSpec::Named { name } => match name.as_str() {
                "identity" => Ok(Map::identity()),
                "interval-halving" => Ok(Map::total("1-x/2", |x: &f64| 1.0 - x / 2.0)),
                other => Err(Error::Parse(format!("field `map.name`: unknown map `{other}`"))),
            },
        }
    }

    /// The map on label values, transported to point indices of `space`.
    pub fn on_space(&self, space: &FiniteSpace) -> Result<Map<usize>> {
        let values = space
            .labels()
            .iter()
            .map(|l| {
                l.trim().parse::<f64>().map_err(|_| {
                    Error::Parse(format!("field `map`: needs numeric labels, `{l}` is not a number"))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        let real = self.real_map()?;
        Ok(Map::new(real.name().to_string(), move |&i: &usize| {
            let y = real.apply(values.get(i)?)?;
            values.iter().position(|v| (v - y).abs() <= LABEL_SNAP)
        }))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpaceFile {
    points: Vec<String>,
    matrix: Vec<Vec<f64>>,
    witness: Option<WitnessSpec>,
    map: Option<MapSpec>,
}

/// A parsed space file.
#[derive(Debug, Clone)]
pub struct SpaceFile {
    pub space: FiniteSpace,
    pub witness: Option<WitnessSpec>,
    pub map: Option<MapSpec>,
}

/// Reads a space file; `.csv` files are CSV, everything else is tried as JSON
/// when it starts with `{` and as CSV otherwise.
pub fn load_space(path: &Path) -> Result<SpaceFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let parsed = if is_csv || !text.trim_start().starts_with('{') {
        parse_csv(&text)
    } else {
        parse_json(&text)
    };
    parsed.map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_json(text: &str) -> Result<SpaceFile> {
    let raw: RawSpaceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = raw.points.len();
    if raw.matrix.len() != n {
        return Err(Error::Parse(format!(
            "field `matrix`: {} rows for {n} points",
            raw.matrix.len()
        )));
    }
    for (i, row) in raw.matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse(format!(
                "field `matrix`, row {i}: expected {n} entries, found {}",
                row.len()
            )));
        }
    }
    Ok(SpaceFile {
        space: FiniteSpace::new(raw.points, raw.matrix)?,
        witness: raw.witness,
        map: raw.map,
    })
}

pub fn parse_csv(text: &str) -> Result<SpaceFile> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let labels: Vec<String> = reader
        .headers()
        .map_err(|e| Error::Parse(format!("header: {e}")))?
        .iter()
        .map(str::to_string)
        .collect();
    if labels.iter().any(String::is_empty) {
        return Err(Error::Parse("header: empty label".into()));
    }
    let n = labels.len();
    let mut matrix = Vec::with_capacity(n);
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != n {
            return Err(Error::Parse(format!(
                "line {line}: expected {n} fields, found {}",
                record.len()
            )));
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.parse::<f64>().map_err(|_| {
                    Error::Parse(format!(
                        "line {line}, field {} (`{}`): `{v}` is not a number",
                        k + 1,
                        labels[k]
                    ))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        matrix.push(row);
    }
    if matrix.len() != n {
        return Err(Error::Parse(format!("{} matrix rows for {n} labels", matrix.len())));
    }
    Ok(SpaceFile {
        space: FiniteSpace::new(labels, matrix)?,
        witness: None,
        map: None,
    })
}
