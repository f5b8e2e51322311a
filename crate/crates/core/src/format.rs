//! Exact text encodings of triangles: JSON with shift metadata, and bare CSV.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presets::Shift;
use crate::scalar::{parse_rational, Rational};
use crate::triangle::Provenance;
use crate::Triangle;

#[derive(Serialize)]
struct TableOut<'a> {
    preset: &'a str,
    n_max: usize,
    rows: Vec<Vec<String>>,
    shift: &'a Shift,
}

#[derive(Deserialize)]
struct TableIn {
    preset: String,
    rows: Vec<Vec<String>>,
}

fn row_strings(row: &[Rational]) -> Vec<String> {
    row.iter().map(|v| v.to_string()).collect()
}

/// `{"preset", "n_max", "rows", "shift"}`; entries are `"p/q"` or integer strings.
pub fn to_json(preset: &str, t: &Triangle, shift: &Shift) -> String {
    let out = TableOut { preset, n_max: t.depth(), rows: t.rows().iter().map(|r| row_strings(r)).collect(), shift };
    serde_json::to_string_pretty(&out).expect("plain data serializes")
}

/// One row per line, comma separated, no header.
pub fn to_csv(t: &Triangle) -> String {
    t.rows().iter().map(|r| row_strings(r).join(",") + "\n").collect()
}

fn parse_row(cells: impl Iterator<Item = String>) -> Result<Vec<Rational>> {
    cells
        .map(|c| parse_rational(c.trim()).ok_or_else(|| Error::Parse(format!("not a rational: {c:?}"))))
        .collect()
}

pub fn from_csv(text: &str) -> Result<Triangle> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_row(l.split(',').map(str::to_string)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::from_rows(rows, Provenance::new("csv")))
}

/// Returns the preset id and the triangle.
pub fn from_json(text: &str) -> Result<(String, Triangle)> {
    let t: TableIn = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let rows = t.rows.into_iter().map(|r| parse_row(r.into_iter())).collect::<Result<Vec<_>>>()?;
    Ok((t.preset.clone(), Triangle::from_rows(rows, Provenance::new(format!("json:{}", t.preset)))))
}
