//! Interchange formats: graph6, plain edge lists and JSON/CSV reports.

mod edge_list;
mod graph6;
mod report;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};
pub use report::{
    emit_report, format_significant, render_report, round_significant, Field, Format, Report, DEFAULT_PRECISION,
    SCHEMA_VERSION,
};

use std::io::Write;

use crate::error::Result;
use crate::graph::Graph;

/// Writes one graph6 line per graph.
pub fn write_graph6_lines<'a, W, I>(graphs: I, sink: &mut W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(sink, "{}", write_graph6(g)?)?;
    }
    Ok(())
}

/// Reads a graph6 line file, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}
