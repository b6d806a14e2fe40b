//! Resolution of the graph a command operates on.

use std::fs;
use std::path::PathBuf;

use agspectra::graph::{make_named, DegreeVector, Graph, NamedGraph, NamedId};
use agspectra::io::{parse_edge_list, parse_graph6};
use agspectra::{Error, Result};
use clap::Args;

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph literal: path:N, star:N, cycle:N, starplus:N, dstar:P,Q or named:ID
    /// (ID is T1, T2, T4, T7 or G1(N)).
    #[arg(long)]
    pub graph: Option<String>,
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File holding an edge list (`n <count>` header, then `i j` lines).
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

/// A graph plus any stipulated degrees carried by a named literal.
pub struct Resolved {
    pub graph: Graph,
    pub degree_override: Option<DegreeVector>,
}

fn number(s: &str, literal: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad number `{s}` in graph literal `{literal}`")))
}

pub fn parse_literal(literal: &str) -> Result<NamedGraph> {
    let (kind, arg) = literal
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("graph literal `{literal}` must look like kind:args")))?;
    let id = match kind {
        "path" => NamedId::Path(number(arg, literal)?),
        "star" => NamedId::Star(number(arg, literal)?),
        "cycle" => NamedId::Cycle(number(arg, literal)?),
        "starplus" => NamedId::StarPlusEdge(number(arg, literal)?),
        "dstar" => {
            let (p, q) = arg
                .split_once(',')
                .ok_or_else(|| Error::InvalidParameter(format!("double star literal `{literal}` needs p,q")))?;
            NamedId::DoubleStar(number(p, literal)?, number(q, literal)?)
        }
        "named" => arg.parse()?,
        other => return Err(Error::InvalidParameter(format!("unknown graph kind `{other}`"))),
    };
    make_named(id)
}

impl GraphSource {
    pub fn resolve(&self) -> Result<Resolved> {
        if let Some(lit) = &self.graph {
            let g = parse_literal(lit)?;
            return Ok(Resolved { graph: g.graph, degree_override: g.degree_override });
        }
        if let Some(s) = &self.graph6 {
            return Ok(Resolved { graph: parse_graph6(s)?, degree_override: None });
        }
        let path = self.edges.as_ref().expect("clap enforces one source");
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Ok(Resolved { graph: parse_edge_list(&text)?, degree_override: None })
    }
}
