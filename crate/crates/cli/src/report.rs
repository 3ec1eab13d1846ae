//! Structured command output and its JSON / text rendering.

use std::io::{self, Write};

use fourspace::Matrix;
use serde_json::{json, Map, Value};
use thiserror::Error;

/// A payload entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Count(usize),
    Real(f64),
    Flag(bool),
    Text(String),
    Vector(Vec<f64>),
    Matrix(Matrix),
    /// A list of basis vectors.
    Basis(Vec<Vec<f64>>),
    Group(Vec<(String, Field)>),
    Null,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorInfo {
    pub name: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    /// `None` when the input could not be read.
    pub input_shape: Option<(usize, usize)>,
    pub tolerance: f64,
    pub payload: Vec<(String, Field)>,
    pub residuals: Vec<(String, f64)>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn new(command: &str, tolerance: f64) -> Self {
        Report {
            command: command.to_string(),
            input_shape: None,
            tolerance,
            payload: Vec::new(),
            residuals: Vec::new(),
            error: None,
        }
    }

    pub fn put(&mut self, key: &str, value: Field) -> &mut Self {
        self.payload.push((key.to_string(), value));
        self
    }

    pub fn residual(&mut self, key: &str, value: f64) -> &mut Self {
        self.residuals.push((key.to_string(), value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.payload.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// 0 on success, 1 when the report carries an error.
    pub fn exit_code(&self) -> i32 {
        if self.error.is_some() {
            1
        } else {
            0
        }
    }
}

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn check(path: &str, x: f64) -> Result<f64, EmitError> {
    if x.is_finite() {
        Ok(round12(x))
    } else {
        Err(EmitError::NonFinite(path.to_string()))
    }
}

fn number(path: &str, x: f64) -> Result<Value, EmitError> {
    Ok(json!(check(path, x)?))
}

fn numbers(path: &str, xs: &[f64]) -> Result<Value, EmitError> {
    xs.iter().map(|x| number(path, *x)).collect::<Result<Vec<_>, _>>().map(Value::Array)
}

pub fn matrix_json(path: &str, m: &Matrix) -> Result<Value, EmitError> {
    let data = m
        .to_rows()
        .iter()
        .map(|r| numbers(path, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(json!({ "rows": m.n_rows(), "cols": m.n_cols(), "data": data }))
}

fn field_json(path: &str, f: &Field) -> Result<Value, EmitError> {
    Ok(match f {
        Field::Count(n) => json!(n),
        Field::Real(x) => number(path, *x)?,
        Field::Flag(b) => json!(b),
        Field::Text(s) => json!(s),
        Field::Vector(v) => numbers(path, v)?,
        Field::Matrix(m) => matrix_json(path, m)?,
        Field::Basis(vs) => Value::Array(vs.iter().map(|v| numbers(path, v)).collect::<Result<_, _>>()?),
        Field::Group(items) => {
            let mut map = Map::new();
            for (k, v) in items {
                map.insert(k.clone(), field_json(&format!("{path}.{k}"), v)?);
            }
            Value::Object(map)
        }
        Field::Null => Value::Null,
    })
}

/// The report as one JSON document. Every number is rounded to 12
/// significant digits; non-finite numbers are rejected.
pub fn report_json(report: &Report) -> Result<Value, EmitError> {
    let mut payload = Map::new();
    for (k, v) in &report.payload {
        payload.insert(k.clone(), field_json(&format!("payload.{k}"), v)?);
    }
    let mut residuals = Map::new();
    for (k, v) in &report.residuals {
        residuals.insert(k.clone(), number(&format!("residuals.{k}"), *v)?);
    }
    let mut doc = Map::new();
    doc.insert("command".into(), json!(report.command));
    doc.insert(
        "input_shape".into(),
        match report.input_shape {
            Some((n, p)) => json!([n, p]),
            None => Value::Null,
        },
    );
    doc.insert("tolerance".into(), number("tolerance", report.tolerance)?);
    doc.insert("payload".into(), Value::Object(payload));
    doc.insert("residuals".into(), Value::Object(residuals));
    doc.insert(
        "error".into(),
        match &report.error {
            Some(e) => json!({ "name": e.name, "message": e.message }),
            None => Value::Null,
        },
    );
    Ok(Value::Object(doc))
}

fn fmt_num(x: f64) -> String {
    let r = round12(x);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e12) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn fmt_rows(rows: &[Vec<f64>], indent: usize, out: &mut Vec<String>) {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| fmt_num(*x)).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(0);
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push(format!("{:indent$}{}", "", line.join("  ")));
    }
}

/// Lines of the text table, keys right-aligned to `key_width`.
fn text_field(key: &str, f: &Field, key_width: usize, out: &mut Vec<String>) {
    let head = format!("{key:>key_width$}:");
    let indent = key_width + 2;
    match f {
        Field::Count(n) => out.push(format!("{head} {n}")),
        Field::Real(x) => out.push(format!("{head} {}", fmt_num(*x))),
        Field::Flag(b) => out.push(format!("{head} {}", if *b { "yes" } else { "no" })),
        Field::Text(s) => out.push(format!("{head} {s}")),
        Field::Null => out.push(format!("{head} n/a")),
        Field::Vector(v) => {
            let cells: Vec<String> = v.iter().map(|x| fmt_num(*x)).collect();
            out.push(format!("{head} [{}]", cells.join(", ")));
        }
        Field::Matrix(m) => {
            out.push(format!("{head} {}x{}", m.n_rows(), m.n_cols()));
            fmt_rows(&m.to_rows(), indent, out);
        }
        Field::Basis(vs) => {
            out.push(format!("{head} {} vector(s)", vs.len()));
            fmt_rows(vs, indent, out);
        }
        Field::Group(items) => {
            out.push(head);
            let inner = items.iter().map(|(k, _)| k.len()).max().unwrap_or(0).max(key_width);
            for (k, v) in items {
                text_field(k, v, inner + 2, out);
            }
        }
    }
}

fn check_finite(path: &str, f: &Field) -> Result<(), EmitError> {
    let bad = || Err(EmitError::NonFinite(path.to_string()));
    match f {
        Field::Real(x) if !x.is_finite() => bad(),
        Field::Vector(v) if v.iter().any(|x| !x.is_finite()) => bad(),
        Field::Basis(vs) if vs.iter().flatten().any(|x| !x.is_finite()) => bad(),
        Field::Matrix(m) if m.data().iter().any(|x| !x.is_finite()) => bad(),
        Field::Group(items) => items
            .iter()
            .try_for_each(|(k, v)| check_finite(&format!("{path}.{k}"), v)),
        _ => Ok(()),
    }
}

pub fn report_text(report: &Report) -> Result<String, EmitError> {
    for (k, v) in &report.payload {
        check_finite(&format!("payload.{k}"), v)?;
    }
    for (k, v) in &report.residuals {
        check(&format!("residuals.{k}"), *v)?;
    }

    let keys = ["command", "input shape", "tolerance"];
    let width = report
        .payload
        .iter()
        .map(|(k, _)| k.len())
        .chain(report.residuals.iter().map(|(k, _)| k.len()))
        .chain(keys.iter().map(|k| k.len()))
        .max()
        .unwrap_or(0);

    let mut out = Vec::new();
    text_field("command", &Field::Text(report.command.clone()), width, &mut out);
    if let Some((n, p)) = report.input_shape {
        text_field("input shape", &Field::Text(format!("{n}x{p}")), width, &mut out);
    }
    text_field("tolerance", &Field::Real(report.tolerance), width, &mut out);
    if let Some(e) = &report.error {
        text_field("error", &Field::Text(format!("{} ({})", e.name, e.message)), width, &mut out);
    }
    for (k, v) in &report.payload {
        text_field(k, v, width, &mut out);
    }
    if !report.residuals.is_empty() {
        out.push(String::new());
        out.push(format!("{:>width$}", "residuals"));
        for (k, v) in &report.residuals {
            text_field(k, &Field::Real(*v), width, &mut out);
        }
    }
    let mut text = out.join("\n");
    text.push('\n');
    Ok(text)
}

/// Writes the report as one JSON document or as a text table. Nothing is
/// written if any number is non-finite.
pub fn emit_report<W: Write>(report: &Report, json_mode: bool, sink: &mut W) -> Result<(), EmitError> {
    let bytes = if json_mode {
        let mut s = serde_json::to_string_pretty(&report_json(report)?).expect("json values serialize");
        s.push('\n');
        s
    } else {
        report_text(report)?
    };
    sink.write_all(bytes.as_bytes())?;
    sink.flush()?;
    Ok(())
}
