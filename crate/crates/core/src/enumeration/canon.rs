//! Exact canonical labelling for small graphs.
//!
//! The canonical form of a graph is the lexicographically largest graph6
//! string over all labellings reachable by individualization-refinement:
//! vertices are split into equitable cells (starting from the degree
//! partition), and while a cell is not a singleton each of its vertices is
//! tried in turn as the next label. Vertices with identical neighbourhoods
//! (twins) are interchangeable by an automorphism that fixes the current
//! partition, so only one twin per cell is branched on.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 16;

/// Relabelling-invariant signature: the graph6 encoding of the canonically
/// relabelled graph. Ordered bytewise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical form is itself valid graph6.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).unwrap_or_default()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

/// Canonical form of `g`. Two graphs of order at most 16 share a form
/// exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form plus a labelling `perm` such that `g.relabel(&perm)` is
/// the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::InvalidOrder { n, reason: "exact canonical labelling supports at most 16 vertices" });
    }
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(g, vec![0; n], &mut best)?;
    let (bytes, perm) = best.expect("search visits at least one leaf");
    Ok((CanonicalForm(bytes), perm))
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<(CanonicalForm, Graph)> {
    let (form, perm) = canonical_labeling(g)?;
    Ok((form, g.relabel(&perm)))
}

fn search(g: &Graph, mut cells: Vec<usize>, best: &mut Option<(Vec<u8>, Vec<usize>)>) -> Result<()> {
    let n = g.order();
    let count = refine(g, &mut cells);
    if count == n {
        let candidate = write_graph6(&g.relabel(&cells))?.into_bytes();
        if best.as_ref().is_none_or(|(b, _)| candidate > *b) {
            *best = Some((candidate, cells));
        }
        return Ok(());
    }

    let mut size = vec![0usize; count];
    for &c in &cells {
        size[c] += 1;
    }
    let target = (0..count).find(|&c| size[c] > 1).expect("a non-discrete partition has a non-singleton cell");
    let members: Vec<usize> = (0..n).filter(|&v| cells[v] == target).collect();

    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let next = individualize(&cells, v);
        search(g, next, best)?;
    }
    Ok(())
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    (g.neighbor_bits(u) & !(1 << v)) == (g.neighbor_bits(v) & !(1 << u))
}

/// Splits `v` off its cell, placing it first among its former cellmates.
fn individualize(cells: &[usize], v: usize) -> Vec<usize> {
    cells.iter().enumerate().map(|(u, &c)| 2 * c + usize::from(u != v)).collect()
}

/// Equitable refinement. Renumbers `cells` to `0..k` in an order that depends
/// only on the structure, and returns `k`.
fn refine(g: &Graph, cells: &mut [usize]) -> usize {
    let n = g.order();
    let initial = cells.to_vec();
    let mut count = rerank(cells, |v| vec![initial[v]]);
    loop {
        let snapshot = cells.to_vec();
        let new_count = rerank(cells, |v| {
            let mut key = vec![0usize; count + 1];
            key[0] = snapshot[v];
            for u in g.neighbors(v) {
                key[1 + snapshot[u]] += 1;
            }
            key
        });
        if new_count == count {
            return count;
        }
        count = new_count;
        if count == n {
            return count;
        }
    }
}

fn rerank<F>(cells: &mut [usize], key: F) -> usize
where
    F: Fn(usize) -> Vec<usize>,
{
    let keys: Vec<Vec<usize>> = (0..cells.len()).map(&key).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for (v, k) in keys.iter().enumerate() {
        cells[v] = distinct.binary_search(k).expect("key is present");
    }
    distinct.len()
}
