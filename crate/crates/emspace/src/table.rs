//! Finite monoid files.
//!
//! JSON:
//!
//! ```json
//! {"name": "Bool", "elements": ["0", "1"], "table": [["0", "1"], ["1", "1"]]}
//! ```
//!
//! Text, `#` starting a comment:
//!
//! ```text
//! name: Bool
//! elements: 0 1
//! 0 1
//! 1 1
//! ```
//!
//! Row `i`, column `j` of the table names `elements[i] ⊕ elements[j]`.

use std::path::Path;

use emspace_core::Monoid;
use serde::Deserialize;

use crate::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    name: Option<String>,
    elements: Vec<String>,
    table: Vec<Vec<String>>,
}

pub fn load(path: &Path) -> Result<Monoid> {
    let wrap = |message: String| Error::Table { path: path.to_path_buf(), message };
    let src = std::fs::read_to_string(path).map_err(|e| wrap(e.to_string()))?;
    parse(&src).map_err(wrap)
}

/// Picks the format from the first non-blank character.
pub fn parse(src: &str) -> Result<Monoid, String> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn parse_json(src: &str) -> Result<Monoid, String> {
    let file: TableFile = serde_json::from_str(src).map_err(|e| format!("invalid table JSON: {e}"))?;
    build(file)
}

pub fn parse_text(src: &str) -> Result<Monoid, String> {
    let mut name = None;
    let mut elements = None;
    let mut table = Vec::new();
    for (no, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("elements:") {
            elements = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if elements.is_none() {
            return Err(format!("line {}: table row before the `elements:` line", no + 1));
        } else {
            table.push(line.split_whitespace().map(str::to_string).collect());
        }
    }
    let elements = elements.ok_or("missing `elements:` line")?;
    build(TableFile { name, elements, table })
}

fn build(file: TableFile) -> Result<Monoid, String> {
    let index = |s: &str| file.elements.iter().position(|e| e == s).ok_or_else(|| format!("table entry {s:?} is not an element"));
    let table = file
        .table
        .iter()
        .map(|row| row.iter().map(|s| index(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let m = Monoid::from_table(file.elements.clone(), table).map_err(|v| v.to_string())?;
    Ok(match &file.name {
        Some(n) => m.with_name(n),
        None => m,
    })
}
