//! Matrix and vector files in CSV or JSON.
//!
//! CSV: one row per line, comma-separated decimal literals. JSON: an object
//! `{"rows": n, "cols": p, "data": [[...], ...]}`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use fourspace::Matrix;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `.json` files are JSON, everything else CSV.
    pub fn infer(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("ragged rows: line {line} has {found} entries, expected {expected}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-finite entry at line {line}, column {column}")]
    NonFinite { line: usize, column: usize },
    #[error("{0}")]
    Shape(String),
}

impl InputError {
    pub fn name(&self) -> &'static str {
        match self {
            InputError::Io { .. } => "io-error",
            InputError::Parse { .. } => "parse-error",
            InputError::Ragged { .. } => "ragged-rows",
            InputError::NonFinite { .. } => "non-finite-entry",
            InputError::Shape(_) => "shape-error",
        }
    }
}

pub fn parse_matrix(path: &Path, format: Format) -> Result<Matrix, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match format {
        Format::Csv => parse_csv(&text),
        Format::Json => parse_json(&text),
    }
}

/// Reads a vector stored as an n×1 or 1×n matrix; 1×1 is a scalar.
pub fn parse_vector(path: &Path, format: Format) -> Result<Vec<f64>, InputError> {
    let m = parse_matrix(path, format)?;
    match m.shape() {
        (1, _) => Ok(m.row(0).to_vec()),
        (_, 1) => Ok(m.column(0)),
        (n, p) => Err(InputError::Shape(format!(
            "{} holds a {n}x{p} matrix, expected a vector",
            path.display()
        ))),
    }
}

pub fn parse_csv(text: &str) -> Result<Matrix, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            InputError::Parse {
                line,
                column: 0,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map_or(rows.len() + 1, |p| p.line() as usize);
        if record.iter().all(|f| f.is_empty()) {
            continue;
        }
        let mut row = Vec::with_capacity(record.len());
        for (i, field) in record.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| InputError::Parse {
                line,
                column: i + 1,
                message: format!("{field:?} is not a decimal number"),
            })?;
            if !value.is_finite() {
                return Err(InputError::NonFinite { line, column: i + 1 });
            }
            row.push(value);
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(InputError::Ragged {
                    line,
                    expected: w,
                    found: row.len(),
                })
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(InputError::Shape("empty matrix file".into()));
    }
    Matrix::from_rows(&rows).map_err(|e| InputError::Shape(e.to_string()))
}

#[derive(Deserialize)]
struct JsonMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<f64>>,
}

pub fn parse_json(text: &str) -> Result<Matrix, InputError> {
    let m: JsonMatrix = serde_json::from_str(text).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if m.data.len() != m.rows {
        return Err(InputError::Shape(format!(
            "\"rows\" is {} but \"data\" has {} rows",
            m.rows,
            m.data.len()
        )));
    }
    for (i, row) in m.data.iter().enumerate() {
        if row.len() != m.cols {
            return Err(InputError::Ragged {
                line: i + 1,
                expected: m.cols,
                found: row.len(),
            });
        }
    }
    Matrix::from_rows(&m.data).map_err(|e| InputError::Shape(e.to_string()))
}
