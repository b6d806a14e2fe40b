//! Rendering of reports to the selected sink.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use agspectra::io::{render_report, round_significant, Field, Format, Report};
use agspectra::{Error, Result};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Plain text for reading at a terminal.
    Text,
    Json,
    Csv,
}

pub fn text_field(f: &Field, precision: usize) -> String {
    match f {
        Field::Int(i) => i.to_string(),
        Field::Real(x) => round_significant(*x, precision).to_string(),
        Field::Text(s) => s.clone(),
        Field::Bool(b) => b.to_string(),
    }
}

/// Meta entries as `key: value` lines, then rows separated by tabs under a
/// header.
fn render_text(r: &Report) -> Vec<u8> {
    let mut out = String::new();
    for (k, v) in &r.meta {
        out.push_str(&format!("{k}: {}\n", text_field(v, r.precision)));
    }
    if !r.columns.is_empty() && !r.rows.is_empty() {
        out.push_str(&r.columns.join("\t"));
        out.push('\n');
        for row in &r.rows {
            let cells: Vec<String> = row.iter().map(|f| text_field(f, r.precision)).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
    }
    out.into_bytes()
}

pub fn render(r: &Report, format: OutputFormat) -> Result<Vec<u8>> {
    match format {
        OutputFormat::Text => Ok(render_text(r)),
        OutputFormat::Json => render_report(r, Format::Json),
        OutputFormat::Csv => render_report(r, Format::Csv),
    }
}

pub fn write_output(bytes: &[u8], path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
