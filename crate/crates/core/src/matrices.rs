//! Degree-weighted adjacency matrices and edge-sum topological indices.
//!
//! Every scheme puts `h(d_i, d_j)` on the entries of edges `v_i v_j` and zero
//! elsewhere; they differ only in the weight rule `h`.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{degrees, DegreeVector, Graph};
use crate::io::format_significant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightScheme {
    /// `h = 1`.
    Adjacency,
    /// `h(x, y) = (x + y) / (2 sqrt(xy))`.
    ArithmeticGeometric,
    /// `h(x, y) = 1 / (xy)`, the Randić weight with the square root dropped.
    RandicInverse,
    /// `h(x, y) = 1 / sqrt(xy)`, the Randić weight as usually defined.
    RandicClassic,
    /// `h(x, y) = (x/y + y/x) / 2`.
    Extended,
    /// `h(x, y) = sqrt((x + y - 2) / (xy))`.
    AtomBondConnectivity,
}

impl WeightScheme {
    pub const ALL: [WeightScheme; 6] = [
        WeightScheme::Adjacency,
        WeightScheme::ArithmeticGeometric,
        WeightScheme::RandicInverse,
        WeightScheme::RandicClassic,
        WeightScheme::Extended,
        WeightScheme::AtomBondConnectivity,
    ];

    /// Whether the weight depends on (and needs positive) endpoint degrees.
    pub fn degree_dependent(self) -> bool {
        self != WeightScheme::Adjacency
    }

    /// Edge weight for endpoint degrees `x` and `y`.
    pub fn weight(self, x: f64, y: f64) -> f64 {
        match self {
            WeightScheme::Adjacency => 1.0,
            WeightScheme::ArithmeticGeometric => (x + y) / (2.0 * (x * y).sqrt()),
            WeightScheme::RandicInverse => 1.0 / (x * y),
            WeightScheme::RandicClassic => 1.0 / (x * y).sqrt(),
            WeightScheme::Extended => 0.5 * (x / y + y / x),
            WeightScheme::AtomBondConnectivity => ((x + y - 2.0) / (x * y)).sqrt(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::Adjacency => "adjacency",
            WeightScheme::ArithmeticGeometric => "ag",
            WeightScheme::RandicInverse => "randic",
            WeightScheme::RandicClassic => "randic-classic",
            WeightScheme::Extended => "extended",
            WeightScheme::AtomBondConnectivity => "abc",
        }
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "adj" | "a" => Ok(WeightScheme::Adjacency),
            "ag" | "arithmetic-geometric" => Ok(WeightScheme::ArithmeticGeometric),
            "randic" | "randic-inverse" => Ok(WeightScheme::RandicInverse),
            "randic-classic" => Ok(WeightScheme::RandicClassic),
            "extended" | "ex" => Ok(WeightScheme::Extended),
            "abc" => Ok(WeightScheme::AtomBondConnectivity),
            other => Err(Error::InvalidParameter(format!("unknown weight scheme `{other}`"))),
        }
    }
}

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    /// Builds from rows, checking squareness and symmetry to `1e-12` relative.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = SymmetricMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn check_symmetric(&self) -> Result<()> {
        let scale = self.max_abs().max(1.0);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (self.get(i, j) - self.get(j, i)).abs() > 1e-12 * scale {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn entry_sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |a, &x| a.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n).map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Principal submatrix on the given index set, in the given order.
    pub fn principal_submatrix(&self, idx: &[usize]) -> SymmetricMatrix {
        let k = idx.len();
        let mut m = SymmetricMatrix::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.data[a * k + b] = self.get(i, j);
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// CSV dump, one row per line, 17 significant digits.
    pub fn write_csv<W: Write>(&self, sink: &mut W) -> Result<()> {
        for i in 0..self.n {
            let line: Vec<String> = self.row(i).iter().map(|&x| format_significant(x, 17)).collect();
            writeln!(sink, "{}", line.join(","))?;
        }
        Ok(())
    }
}

fn effective_degrees(g: &Graph, scheme: WeightScheme, over: Option<&DegreeVector>) -> Result<DegreeVector> {
    let n = g.order();
    let d = match over {
        Some(o) => {
            if o.len() != n {
                return Err(Error::OverrideLength { got: o.len(), expected: n });
            }
            if let Some(v) = o.as_slice().iter().position(|&x| x == 0) {
                return Err(Error::OverrideZero(v));
            }
            o.clone()
        }
        None => degrees(g),
    };
    if scheme.degree_dependent() {
        if let Some(v) = d.as_slice().iter().position(|&x| x == 0) {
            return Err(Error::IsolatedVertex(v));
        }
    }
    Ok(d)
}

/// Weighted adjacency matrix of `g` under `scheme`. Degrees come from
/// `override_degrees` when given, otherwise from `g`.
pub fn build_weighted(
    g: &Graph,
    scheme: WeightScheme,
    override_degrees: Option<&DegreeVector>,
) -> Result<SymmetricMatrix> {
    let d = effective_degrees(g, scheme, override_degrees)?;
    let mut m = SymmetricMatrix::zeros(g.order());
    for (i, j) in g.edges() {
        m.set_sym(i, j, scheme.weight(d[i] as f64, d[j] as f64));
    }
    Ok(m)
}

/// `true` iff `a[i][j] >= b[i][j] >= 0` for all entries.
pub fn matrix_dominates(a: &SymmetricMatrix, b: &SymmetricMatrix) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a.data.iter().zip(&b.data).all(|(&x, &y)| x >= y && y >= 0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// Sum of `(d_i + d_j) / (2 sqrt(d_i d_j))`.
    ArithmeticGeometric,
    /// Sum of `1 / (d_i d_j)`.
    RandicMinusOne,
    /// Sum of `d_i/d_j + d_j/d_i`.
    SymmetricDivisionDeg,
    /// Sum of `sqrt((d_i + d_j - 2) / (d_i d_j))`.
    AtomBondConnectivity,
    /// Sum of `d_i + d_j`.
    FirstZagreb,
}

impl IndexKind {
    pub const ALL: [IndexKind; 5] = [
        IndexKind::ArithmeticGeometric,
        IndexKind::RandicMinusOne,
        IndexKind::SymmetricDivisionDeg,
        IndexKind::AtomBondConnectivity,
        IndexKind::FirstZagreb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::ArithmeticGeometric => "ag",
            IndexKind::RandicMinusOne => "r-1",
            IndexKind::SymmetricDivisionDeg => "sdd",
            IndexKind::AtomBondConnectivity => "abc",
            IndexKind::FirstZagreb => "m1",
        }
    }

    fn term(self, x: f64, y: f64) -> f64 {
        match self {
            IndexKind::ArithmeticGeometric => (x + y) / (2.0 * (x * y).sqrt()),
            IndexKind::RandicMinusOne => 1.0 / (x * y),
            IndexKind::SymmetricDivisionDeg => x / y + y / x,
            IndexKind::AtomBondConnectivity => ((x + y - 2.0) / (x * y)).sqrt(),
            IndexKind::FirstZagreb => x + y,
        }
    }

    fn needs_positive_degrees(self) -> bool {
        self != IndexKind::FirstZagreb
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ag" => Ok(IndexKind::ArithmeticGeometric),
            "r-1" | "randic" | "r_minus1" => Ok(IndexKind::RandicMinusOne),
            "sdd" => Ok(IndexKind::SymmetricDivisionDeg),
            "abc" => Ok(IndexKind::AtomBondConnectivity),
            "m1" | "zagreb" => Ok(IndexKind::FirstZagreb),
            other => Err(Error::InvalidParameter(format!("unknown index `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexValue {
    pub kind: IndexKind,
    pub value: f64,
}

pub fn topological_index(g: &Graph, kind: IndexKind) -> Result<IndexValue> {
    if kind.needs_positive_degrees() {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let value = g.edges().map(|(i, j)| kind.term(g.degree(i) as f64, g.degree(j) as f64)).sum();
    Ok(IndexValue { kind, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_trees, enumerate_unicyclic};
    use crate::graph::{make_cycle, make_named, make_path, make_star, NamedId};

    const EPS: f64 = 1e-12;

    #[test]
    fn ag_weight_is_at_least_one() {
        let ag = WeightScheme::ArithmeticGeometric;
        for x in 1..=50 {
            for y in 1..=50 {
                let h = ag.weight(x as f64, y as f64);
                if x == y {
                    assert!((h - 1.0).abs() < EPS);
                } else {
                    assert!(h > 1.0 + 1e-9, "h({x},{y}) = {h}");
                }
            }
        }
    }

    #[test]
    fn small_ag_matrices() {
        let k2 = build_weighted(&make_path(2).unwrap(), WeightScheme::ArithmeticGeometric, None).unwrap();
        assert_eq!(k2.to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let p3 = build_weighted(&make_path(3).unwrap(), WeightScheme::ArithmeticGeometric, None).unwrap();
        let w = 3.0 * 2f64.sqrt() / 4.0;
        assert!((p3.get(0, 1) - w).abs() < EPS && (p3.get(1, 2) - w).abs() < EPS);
        assert!((w - 1.0607).abs() < 5e-5);
    }

    #[test]
    fn t2_matrix_matches_display() {
        let t2 = make_named(NamedId::T2).unwrap();
        let m = build_weighted(&t2.graph, WeightScheme::ArithmeticGeometric, None).unwrap();
        let a = 2.0 * 3f64.sqrt() / 3.0;
        let b = 5.0 * 6f64.sqrt() / 12.0;
        let c = 3.0 * 2f64.sqrt() / 4.0;
        let expected = [
            [0.0, a, a, b, 0.0],
            [a, 0.0, 0.0, 0.0, 0.0],
            [a, 0.0, 0.0, 0.0, 0.0],
            [b, 0.0, 0.0, 0.0, c],
            [0.0, 0.0, 0.0, c, 0.0],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert!((m.get(i, j) - expected[i][j]).abs() < EPS, "({i},{j})");
            }
        }
    }

    #[test]
    fn t4_override_matrix_matches_display() {
        let t4 = make_named(NamedId::T4).unwrap();
        let m = build_weighted(&t4.graph, WeightScheme::ArithmeticGeometric, t4.degree_override.as_ref()).unwrap();
        let a = 2.0 * 3f64.sqrt() / 3.0;
        let b = 5.0 * 6f64.sqrt() / 12.0;
        let expected = [
            [0.0, a, b, b, 0.0, 0.0],
            [a, 0.0, 0.0, 0.0, 0.0, 0.0],
            [b, 0.0, 0.0, 0.0, 0.0, 1.0],
            [b, 0.0, 0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
        ];
        for i in 0..6 {
            for j in 0..6 {
                assert!((m.get(i, j) - expected[i][j]).abs() < EPS, "({i},{j})");
            }
        }
    }

    #[test]
    fn g1_matrix_matches_display() {
        for n in 4..=12usize {
            let g = make_named(NamedId::G1(n)).unwrap();
            let m = build_weighted(&g.graph, WeightScheme::ArithmeticGeometric, None).unwrap();
            let nf = n as f64;
            let hub_tri = (nf + 1.0) / (2.0 * (2.0 * (nf - 1.0)).sqrt());
            let hub_leaf = nf / (2.0 * (nf - 1.0).sqrt());
            assert!((m.get(0, 1) - hub_tri).abs() < EPS);
            assert!((m.get(0, 2) - hub_tri).abs() < EPS);
            assert!((m.get(1, 2) - 1.0).abs() < EPS);
            for v in 3..n {
                assert!((m.get(0, v) - hub_leaf).abs() < EPS);
            }
        }
    }

    #[test]
    fn override_and_isolation_errors() {
        let p3 = make_path(3).unwrap();
        let empty = Graph::empty(3).unwrap();
        assert_eq!(build_weighted(&empty, WeightScheme::ArithmeticGeometric, None), Err(Error::IsolatedVertex(0)));
        assert!(build_weighted(&empty, WeightScheme::Adjacency, None).is_ok());
        let short = DegreeVector(vec![1, 2]);
        assert!(matches!(build_weighted(&p3, WeightScheme::ArithmeticGeometric, Some(&short)), Err(Error::OverrideLength { .. })));
        let zero = DegreeVector(vec![1, 0, 1]);
        assert_eq!(build_weighted(&p3, WeightScheme::ArithmeticGeometric, Some(&zero)), Err(Error::OverrideZero(1)));
    }

    #[test]
    fn indices() {
        let m1 = topological_index(&make_path(3).unwrap(), IndexKind::FirstZagreb).unwrap();
        assert_eq!(m1.value, 6.0);
        for n in 3..10 {
            let ag = topological_index(&make_cycle(n).unwrap(), IndexKind::ArithmeticGeometric).unwrap();
            assert!((ag.value - n as f64).abs() < EPS);
        }
        let s4 = topological_index(&make_star(4).unwrap(), IndexKind::ArithmeticGeometric).unwrap();
        assert!((s4.value - 2.0 * 3f64.sqrt()).abs() < EPS);
        assert!((s4.value - 3.4641).abs() < 5e-5);
        let r = topological_index(&make_star(4).unwrap(), IndexKind::RandicMinusOne).unwrap();
        assert!((r.value - 1.0).abs() < EPS);
        let sdd = topological_index(&make_path(3).unwrap(), IndexKind::SymmetricDivisionDeg).unwrap();
        assert!((sdd.value - 5.0).abs() < EPS);
        let abc = topological_index(&make_path(3).unwrap(), IndexKind::AtomBondConnectivity).unwrap();
        assert!((abc.value - 2f64.sqrt()).abs() < EPS);
        assert!(topological_index(&Graph::empty(2).unwrap(), IndexKind::ArithmeticGeometric).is_err());
        assert_eq!(topological_index(&Graph::empty(2).unwrap(), IndexKind::FirstZagreb).unwrap().value, 0.0);
    }

    #[test]
    fn structural_properties_on_families() {
        let mut graphs: Vec<Graph> = Vec::new();
        for n in 2..=8 {
            graphs.extend(enumerate_trees(n).unwrap());
        }
        for n in 3..=8 {
            graphs.extend(enumerate_unicyclic(n).unwrap());
        }
        for g in &graphs {
            let adj = build_weighted(g, WeightScheme::Adjacency, None).unwrap();
            for scheme in WeightScheme::ALL {
                let m = build_weighted(g, scheme, None).unwrap();
                m.check_symmetric().unwrap();
                assert!((0..m.dim()).all(|i| m.get(i, i) == 0.0));
                assert!(m.to_rows().iter().flatten().all(|&x| x >= 0.0));
            }
            let ag = build_weighted(g, WeightScheme::ArithmeticGeometric, None).unwrap();
            assert!(matrix_dominates(&ag, &adj).unwrap());
            assert!(matrix_dominates(&ag, &ag).unwrap());
            let idx = topological_index(g, IndexKind::ArithmeticGeometric).unwrap();
            assert!((idx.value - ag.entry_sum() / 2.0).abs() < 1e-9);
        }
        let p3 = make_path(3).unwrap();
        let a = build_weighted(&p3, WeightScheme::Adjacency, None).unwrap();
        let h = build_weighted(&p3, WeightScheme::ArithmeticGeometric, None).unwrap();
        assert!(!matrix_dominates(&a, &h).unwrap());
        assert!(matrix_dominates(&a, &SymmetricMatrix::zeros(2)).is_err());
    }

    #[test]
    fn regular_graphs_have_plain_ag_matrix() {
        for n in 3..=10 {
            let c = make_cycle(n).unwrap();
            assert_eq!(
                build_weighted(&c, WeightScheme::ArithmeticGeometric, None).unwrap(),
                build_weighted(&c, WeightScheme::Adjacency, None).unwrap()
            );
        }
        let mut k5 = Graph::empty(5).unwrap();
        for (i, j) in Graph::empty(5).unwrap().non_edges() {
            k5.add_edge(i, j).unwrap();
        }
        assert_eq!(
            build_weighted(&k5, WeightScheme::ArithmeticGeometric, None).unwrap(),
            build_weighted(&k5, WeightScheme::Adjacency, None).unwrap()
        );
    }

    #[test]
    fn csv_dump_round_trips() {
        let m = build_weighted(&make_path(3).unwrap(), WeightScheme::ArithmeticGeometric, None).unwrap();
        let mut buf = Vec::new();
        m.write_csv(&mut buf).unwrap();
        let rows: Vec<Vec<f64>> = String::from_utf8(buf)
            .unwrap()
            .lines()
            .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows, m.to_rows());
    }

    #[test]
    fn from_rows_validates() {
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0]]).is_err());
        assert!(SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).is_ok());
    }
}
