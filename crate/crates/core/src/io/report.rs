//! Tabular reports with a stable byte-level rendering in JSON and CSV.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_PRECISION: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Report(format!("unknown format `{other}` (expected json or csv)"))),
        }
    }
}

/// One cell of a report.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
}

impl From<i64> for Field {
    fn from(v: i64) -> Self {
        Field::Int(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Real(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

/// A report: discriminator, scalar metadata and a table of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub kind: String,
    pub schema_version: u32,
    /// Significant digits used for every real field.
    pub precision: usize,
    pub meta: BTreeMap<String, Field>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Field>>,
}

impl Report {
    pub fn new<S: Into<String>>(kind: S, columns: &[&str]) -> Self {
        Report {
            kind: kind.into(),
            schema_version: SCHEMA_VERSION,
            precision: DEFAULT_PRECISION,
            meta: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_meta<K: Into<String>, V: Into<Field>>(mut self, key: K, value: V) -> Self {
        self.meta.insert(key.into(), value.into());
        self
    }

    pub fn set_meta<K: Into<String>, V: Into<Field>>(&mut self, key: K, value: V) {
        self.meta.insert(key.into(), value.into());
    }

    pub fn push_row(&mut self, row: Vec<Field>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::Report(format!("row has {} fields, report has {} columns", row.len(), self.columns.len())));
        }
        self.rows.push(row);
        Ok(())
    }

    /// Parses JSON produced by [`emit_report`] back into a report.
    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::Report(format!("malformed report JSON: {what}"));
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| bad("not an object"))?;
        let kind = obj.get("kind").and_then(Value::as_str).ok_or_else(|| bad("kind"))?.to_string();
        let schema_version = obj.get("schema_version").and_then(Value::as_u64).ok_or_else(|| bad("schema_version"))? as u32;
        let precision = obj.get("precision").and_then(Value::as_u64).ok_or_else(|| bad("precision"))? as usize;
        let meta = obj
            .get("meta")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("meta"))?
            .iter()
            .map(|(k, v)| Ok((k.clone(), field_from_json(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let columns = obj
            .get("columns")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("columns"))?
            .iter()
            .map(|c| c.as_str().map(str::to_string).ok_or_else(|| bad("column name")))
            .collect::<Result<Vec<_>>>()?;
        let rows = obj
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("rows"))?
            .iter()
            .map(|r| r.as_array().ok_or_else(|| bad("row"))?.iter().map(field_from_json).collect())
            .collect::<Result<Vec<_>>>()?;
        Ok(Report { kind, schema_version, precision, meta, columns, rows })
    }
}

fn field_from_json(v: &Value) -> Result<Field> {
    Ok(match v {
        Value::Bool(b) => Field::Bool(*b),
        Value::String(s) => Field::Text(s.clone()),
        Value::Number(n) if n.is_i64() => Field::Int(n.as_i64().unwrap_or_default()),
        Value::Number(n) => Field::Real(n.as_f64().unwrap_or(f64::NAN)),
        other => return Err(Error::Report(format!("unsupported JSON value {other}"))),
    })
}

/// Formats `x` with exactly `digits` significant digits, positional when the
/// exponent is moderate and scientific otherwise.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..digits as i32).contains(&exp) {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, x)
    } else {
        sci
    }
}

/// Rounds `x` to `digits` significant digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    format!("{:.*e}", digits.max(1) - 1, x).parse().unwrap_or(x)
}

fn field_to_json(f: &Field, precision: usize) -> Result<Value> {
    Ok(match f {
        Field::Int(i) => Value::from(*i),
        Field::Bool(b) => Value::Bool(*b),
        Field::Text(s) => Value::String(s.clone()),
        Field::Real(x) => Value::Number(
            Number::from_f64(round_significant(*x, precision))
                .ok_or_else(|| Error::Report(format!("non-finite real {x} cannot be serialized")))?,
        ),
    })
}

fn field_to_csv(f: &Field, precision: usize) -> Result<String> {
    Ok(match f {
        Field::Int(i) => i.to_string(),
        Field::Bool(b) => b.to_string(),
        Field::Text(s) => s.clone(),
        Field::Real(x) if !x.is_finite() => {
            return Err(Error::Report(format!("non-finite real {x} cannot be serialized")))
        }
        Field::Real(x) => format_significant(*x, precision),
    })
}

/// Renders a report to bytes. Output depends only on the report contents.
pub fn render_report(r: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("kind".into(), Value::String(r.kind.clone()));
            obj.insert("schema_version".into(), Value::from(r.schema_version));
            obj.insert("precision".into(), Value::from(r.precision));
            let meta = r
                .meta
                .iter()
                .map(|(k, v)| Ok((k.clone(), field_to_json(v, r.precision)?)))
                .collect::<Result<Map<_, _>>>()?;
            obj.insert("meta".into(), Value::Object(meta));
            obj.insert("columns".into(), Value::from(r.columns.clone()));
            let rows = r
                .rows
                .iter()
                .map(|row| Ok(Value::Array(row.iter().map(|f| field_to_json(f, r.precision)).collect::<Result<_>>()?)))
                .collect::<Result<Vec<_>>>()?;
            obj.insert("rows".into(), Value::Array(rows));
            let mut out = serde_json::to_vec_pretty(&Value::Object(obj)).map_err(|e| Error::Report(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Report(e.to_string());
            let mut header = vec!["schema_version".to_string(), "kind".to_string()];
            header.extend(r.columns.iter().cloned());
            w.write_record(&header).map_err(csv_err)?;
            for row in &r.rows {
                let mut rec = vec![r.schema_version.to_string(), r.kind.clone()];
                for f in row {
                    rec.push(field_to_csv(f, r.precision)?);
                }
                w.write_record(&rec).map_err(csv_err)?;
            }
            w.into_inner().map_err(|e| Error::Report(e.to_string()))
        }
    }
}

/// Writes a report to `sink`.
pub fn emit_report<W: Write>(r: &Report, format: Format, sink: &mut W) -> Result<()> {
    let bytes = render_report(r, format)?;
    sink.write_all(&bytes)?;
    sink.flush()?;
    Ok(())
}
