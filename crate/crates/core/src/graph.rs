//! Simple undirected graphs on at most 64 vertices, plus constructors for the
//! families and small proof-device trees used throughout the crate.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so every graph here is
//! cheap to copy, hash and compare.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder { n, reason: "a graph needs at least one vertex" });
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, reason: "orders above 64 are not supported" });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for idx in [u, v] {
            if idx >= self.n {
                return Err(Error::VertexOutOfRange { index: idx, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Copy of `self` with the extra edge `{u, v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbor_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            BitIter(self.adj[i] & !((2u128 << i) - 1) as u64).map(move |j| (i, j))
        })
    }

    /// Unordered vertex pairs that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| ((i + 1)..self.n).filter(move |&j| !self.has_edge(i, j)).map(move |j| (i, j)))
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut adj = vec![0u64; self.n];
        for (i, j) in self.edges() {
            adj[perm[i]] |= 1 << perm[j];
            adj[perm[j]] |= 1 << perm[i];
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = Graph::empty(vertices.len())?;
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b)?;
                }
            }
        }
        Ok(g)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Per-vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeVector(pub Vec<usize>);

impl DegreeVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Degrees sorted in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl std::ops::Index<usize> for DegreeVector {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

pub fn degrees(g: &Graph) -> DegreeVector {
    DegreeVector((0..g.order()).map(|v| g.degree(v)).collect())
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= g.neighbor_bits(v);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

pub fn is_tree(g: &Graph) -> bool {
    g.size() + 1 == g.order() && is_connected(g)
}

pub fn is_unicyclic(g: &Graph) -> bool {
    g.size() == g.order() && is_connected(g)
}

/// Largest value of `d_i + d_j` over the edges of `g`.
pub fn max_adjacent_degree_sum(g: &Graph) -> Result<usize> {
    g.edges().map(|(i, j)| g.degree(i) + g.degree(j)).max().ok_or(Error::EmptyEdgeSet)
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, reason: "a path needs at least one vertex" });
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Star `K_{1,n-1}` with centre 0.
pub fn make_star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidOrder { n, reason: "a star needs at least two vertices" });
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder { n, reason: "a cycle needs at least three vertices" });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with centre 0 plus the edge `{1, 2}` between two leaves.
pub fn make_star_plus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder { n, reason: "S_n + e needs at least three vertices" });
    }
    make_star(n)?.with_edge(1, 2)
}

/// Double star `DT(p, q)`: centres 0 and 1, with `p` leaves on 0 and `q` on 1.
pub fn make_double_star(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter(format!("double star needs p, q >= 1 (got p={p}, q={q})")));
    }
    let n = p + q + 2;
    let edges = std::iter::once((0, 1))
        .chain((2..2 + p).map(|v| (0, v)))
        .chain((2 + p..n).map(|v| (1, v)));
    Graph::from_edges(n, edges)
}

/// Identifier of a graph the crate knows how to build by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedId {
    Path(usize),
    Star(usize),
    Cycle(usize),
    StarPlusEdge(usize),
    DoubleStar(usize, usize),
    /// `K_{1,4}`.
    T1,
    /// Five-vertex tree with edges 01, 02, 03, 34.
    T2,
    /// Six-vertex tree whose vertices 4 and 5 carry stipulated degree 2.
    T4,
    /// Seven-vertex tree whose vertices 5 and 6 carry stipulated degree 2.
    T7,
    /// Alias of `S_n + e`.
    G1(usize),
}

impl std::str::FromStr for NamedId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownNamedGraph(s.to_string());
        let trimmed = s.trim();
        match trimmed {
            "T1" => return Ok(NamedId::T1),
            "T2" => return Ok(NamedId::T2),
            "T4" => return Ok(NamedId::T4),
            "T7" => return Ok(NamedId::T7),
            _ => {}
        }
        // G1(8) or G1:8
        if let Some(rest) = trimmed.strip_prefix("G1") {
            let inner = rest.trim_start_matches(['(', ':']).trim_end_matches(')');
            return inner.parse().map(NamedId::G1).map_err(|_| unknown());
        }
        Err(unknown())
    }
}

/// A constructed graph together with stipulated degrees, when it has any.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedGraph {
    pub id: NamedId,
    pub graph: Graph,
    pub degree_override: Option<DegreeVector>,
}

fn with_override(g: &Graph, stipulated: &[(usize, usize)]) -> DegreeVector {
    let mut d = degrees(g);
    for &(v, deg) in stipulated {
        d.0[v] = deg;
    }
    d
}

pub fn make_named(id: NamedId) -> Result<NamedGraph> {
    let (graph, degree_override) = match id {
        NamedId::Path(n) => (make_path(n)?, None),
        NamedId::Star(n) => (make_star(n)?, None),
        NamedId::Cycle(n) => (make_cycle(n)?, None),
        NamedId::StarPlusEdge(n) | NamedId::G1(n) => (make_star_plus_edge(n)?, None),
        NamedId::DoubleStar(p, q) => (make_double_star(p, q)?, None),
        NamedId::T1 => (make_star(5)?, None),
        NamedId::T2 => (Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])?, None),
        NamedId::T4 => {
            let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (2, 5)])?;
            let d = with_override(&g, &[(4, 2), (5, 2)]);
            (g, Some(d))
        }
        NamedId::T7 => {
            let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (2, 6)])?;
            let d = with_override(&g, &[(5, 2), (6, 2)]);
            (g, Some(d))
        }
    };
    Ok(NamedGraph { id, graph, degree_override })
}
