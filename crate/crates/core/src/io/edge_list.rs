use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the plain edge-list format: a header line `n <count>` followed by
/// one `i j` pair per line, 0-based. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(Error::EdgeList { line: 1, reason: "missing `n <count>` header".into() })?;
    let mut parts = header.split_whitespace();
    let n = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => count
            .parse::<usize>()
            .map_err(|e| Error::EdgeList { line: line_no, reason: format!("bad vertex count: {e}") })?,
        _ => return Err(Error::EdgeList { line: line_no, reason: "expected `n <count>`".into() }),
    };
    let mut g = Graph::empty(n).map_err(|e| Error::EdgeList { line: line_no, reason: e.to_string() })?;

    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::EdgeList { line: line_no, reason: format!("expected two vertex indices, got `{line}`") });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::EdgeList { line: line_no, reason: format!("bad index `{s}`: {e}") })
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        g.add_edge(u, v).map_err(|e| Error::EdgeList { line: line_no, reason: e.to_string() })?;
    }
    Ok(g)
}

/// Inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
