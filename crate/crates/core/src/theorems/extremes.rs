//! Exhaustive extremal checks over whole families of one order.

use rayon::prelude::*;

use crate::enumeration::{canonical_form, enumerate, CanonicalForm, GraphClass};
use crate::error::{Error, Result};
use crate::graph::{make_cycle, make_path, make_star, make_star_plus_edge, Graph};
use crate::io::{Field, Report};
use crate::matrices::{build_weighted, WeightScheme};
use crate::spectra::{spectral_radius, DEFAULT_TOL};

use super::{Check, EQ_TOL, UNIQUE_MARGIN};

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusEntry {
    pub form: CanonicalForm,
    pub graph: Graph,
    pub radius: f64,
}

/// Spectral radius of `scheme`'s matrix for every member of the family,
/// ascending by radius, ties by canonical form.
pub fn family_radii(class: GraphClass, n: usize, scheme: WeightScheme) -> Result<Vec<RadiusEntry>> {
    let members: Vec<(CanonicalForm, Graph)> = enumerate(class, n)?.with_forms().collect();
    let mut entries: Vec<RadiusEntry> = members
        .into_par_iter()
        .map(|(form, graph)| {
            let m = build_weighted(&graph, scheme, None)?;
            let radius = spectral_radius(&m, DEFAULT_TOL)?.radius;
            Ok(RadiusEntry { form, graph, radius })
        })
        .collect::<Result<_>>()?;
    entries.sort_by(|a, b| a.radius.total_cmp(&b.radius).then_with(|| a.form.cmp(&b.form)));
    Ok(entries)
}

pub fn ag_radius(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(&build_weighted(g, WeightScheme::ArithmeticGeometric, None)?, DEFAULT_TOL)?.radius)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalReport {
    pub n: usize,
    pub class: GraphClass,
    pub scheme: WeightScheme,
    /// Ascending by radius.
    pub entries: Vec<RadiusEntry>,
    /// Classes within the uniqueness margin of the minimum / maximum.
    pub min_graphs: Vec<CanonicalForm>,
    pub max_graphs: Vec<CanonicalForm>,
    pub checks: Vec<Check>,
    pub bounds_ok: bool,
}

impl ExtremalReport {
    fn new(n: usize, class: GraphClass, scheme: WeightScheme, entries: Vec<RadiusEntry>) -> Self {
        let lo = entries.first().map_or(f64::NAN, |e| e.radius);
        let hi = entries.last().map_or(f64::NAN, |e| e.radius);
        let min_graphs = entries.iter().filter(|e| e.radius <= lo + UNIQUE_MARGIN).map(|e| e.form.clone()).collect();
        let max_graphs = entries.iter().filter(|e| e.radius >= hi - UNIQUE_MARGIN).map(|e| e.form.clone()).collect();
        ExtremalReport { n, class, scheme, entries, min_graphs, max_graphs, checks: Vec::new(), bounds_ok: true }
    }

    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.radius).collect()
    }

    pub fn min_value(&self) -> f64 {
        self.entries[0].radius
    }

    pub fn max_value(&self) -> f64 {
        self.entries[self.entries.len() - 1].radius
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.bounds_ok &= passed;
        self.checks.push(Check::new(name, passed, detail));
    }

    fn expect_unique(&mut self, which: &str, expected: &Graph, label: &str) -> Result<()> {
        let want = canonical_form(expected)?;
        let got = if which == "min" { &self.min_graphs } else { &self.max_graphs };
        let passed = got.len() == 1 && got[0] == want;
        let detail = format!("{which} attained by [{}], expected {label} ({want})", join_forms(got));
        self.check(format!("{which} uniquely at {label}"), passed, detail);
        Ok(())
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("extremal", &["rank", "graph6", "radius", "is_min", "is_max"])
            .with_meta("n", self.n)
            .with_meta("class", self.class.name())
            .with_meta("scheme", self.scheme.name())
            .with_meta("count", self.entries.len())
            .with_meta("bounds_ok", self.bounds_ok)
            .with_meta("min", self.min_value())
            .with_meta("max", self.max_value());
        for c in &self.checks {
            r.set_meta(format!("check: {}", c.name), c.passed);
        }
        for (i, e) in self.entries.iter().enumerate() {
            let row = vec![
                Field::from(i + 1),
                Field::from(e.form.as_graph6()),
                Field::from(e.radius),
                Field::from(self.min_graphs.contains(&e.form)),
                Field::from(self.max_graphs.contains(&e.form)),
            ];
            r.push_row(row).expect("row width matches columns");
        }
        r
    }
}

fn join_forms(forms: &[CanonicalForm]) -> String {
    forms.iter().map(|f| f.as_graph6().to_string()).collect::<Vec<_>>().join(", ")
}

/// Lower and upper bounds on the AG radius of `P_n`: `(radius, 2cos(π/(n+1)))`.
pub fn path_radius_with_lower_bound(n: usize) -> Result<(f64, f64)> {
    let rho = ag_radius(&make_path(n)?)?;
    Ok((rho, 2.0 * (std::f64::consts::PI / (n + 1) as f64).cos()))
}

/// Over all trees of order `n`, `2 ≤ n ≤ 10`: minimum uniquely at `P_n`,
/// maximum uniquely at `S_n` with value `n/2`, every other tree at least 2
/// (`n ≥ 4`), and `2cos(π/(n+1)) < ρ(P_n) < 2`. The lower bound is asserted
/// strictly, beyond `EQ_TOL`.
pub fn verify_tree_extremes(n: usize) -> Result<ExtremalReport> {
    if !(2..=10).contains(&n) {
        return Err(Error::InvalidOrder { n, reason: "tree extremes are verified for 2..=10" });
    }
    let entries = family_radii(GraphClass::Tree, n, WeightScheme::ArithmeticGeometric)?;
    let mut rep = ExtremalReport::new(n, GraphClass::Tree, WeightScheme::ArithmeticGeometric, entries);
    rep.expect_unique("min", &make_path(n)?, "path")?;
    rep.expect_unique("max", &make_star(n)?, "star")?;

    let top = rep.max_value();
    let half = n as f64 / 2.0;
    rep.check("max equals n/2", (top - half).abs() <= EQ_TOL, format!("max {top:.12}, n/2 = {half}"));

    let (rho, lower) = path_radius_with_lower_bound(n)?;
    rep.check("path radius below 2", rho < 2.0 - EQ_TOL, format!("rho(P_{n}) = {rho:.12}"));
    rep.check(
        "path radius strictly above 2cos(pi/(n+1))",
        rho - lower > EQ_TOL,
        format!("rho(P_{n}) - 2cos(pi/{}) = {:.3e}", n + 1, rho - lower),
    );

    if n >= 4 {
        let path = canonical_form(&make_path(n)?)?;
        let worst = rep.entries.iter().filter(|e| e.form != path).map(|e| e.radius).fold(f64::INFINITY, f64::min);
        rep.check("non-path trees at least 2", worst >= 2.0 - EQ_TOL, format!("smallest non-path radius {worst:.12}"));
    }
    Ok(rep)
}

/// Over all unicyclic graphs of order `n`, `3 ≤ n ≤ 9`: minimum 2 uniquely
/// at `C_n`, maximum uniquely at `S_n + e`, and for `n ≥ 7` that maximum
/// lies below `n/2`.
pub fn verify_unicyclic_extremes(n: usize) -> Result<ExtremalReport> {
    if !(3..=9).contains(&n) {
        return Err(Error::InvalidOrder { n, reason: "unicyclic extremes are verified for 3..=9" });
    }
    unicyclic_extremes(n, WeightScheme::ArithmeticGeometric)
}

/// The same extremal statement for the plain adjacency matrix.
pub fn verify_adjacency_extremes(n: usize) -> Result<ExtremalReport> {
    if !(3..=9).contains(&n) {
        return Err(Error::InvalidOrder { n, reason: "adjacency unicyclic extremes are verified for 3..=9" });
    }
    unicyclic_extremes(n, WeightScheme::Adjacency)
}

fn unicyclic_extremes(n: usize, scheme: WeightScheme) -> Result<ExtremalReport> {
    let entries = family_radii(GraphClass::Unicyclic, n, scheme)?;
    let mut rep = ExtremalReport::new(n, GraphClass::Unicyclic, scheme, entries);
    rep.expect_unique("min", &make_cycle(n)?, "cycle")?;
    rep.expect_unique("max", &make_star_plus_edge(n)?, "star plus edge")?;
    let low = rep.min_value();
    rep.check("min equals 2", (low - 2.0).abs() <= 1e-10, format!("min {low:.12}"));
    if scheme == WeightScheme::ArithmeticGeometric && n >= 7 {
        let top = rep.max_value();
        let half = n as f64 / 2.0;
        rep.check("max below n/2", top < half - EQ_TOL, format!("max {top:.12} vs n/2 = {half}"));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_of_order_five() {
        let rep = verify_tree_extremes(5).unwrap();
        assert!(rep.bounds_ok, "{:?}", rep.checks);
        assert_eq!(rep.entries.len(), 3);
        assert!((rep.max_value() - 2.5).abs() < 1e-9);
    }

    #[test]
    fn single_edge_tree() {
        let rep = verify_tree_extremes(2).unwrap();
        assert_eq!(rep.entries.len(), 1);
        assert!((rep.min_value() - 1.0).abs() < 1e-12);
        assert_eq!(rep.min_graphs, rep.max_graphs);
        // 2cos(π/3) = 1 = ρ(K₂): the strict lower bound is an equality here.
        let strict = rep.checks.iter().find(|c| c.name.contains("strictly")).unwrap();
        assert!(!strict.passed);
        assert!(!rep.bounds_ok);
    }

    #[test]
    fn unicyclic_small() {
        let rep = verify_unicyclic_extremes(4).unwrap();
        assert!(rep.bounds_ok, "{:?}", rep.checks);
        let v = rep.values();
        assert!((v[0] - 2.0).abs() < 1e-10 && (v[1] - 2.2536).abs() < 5e-5);
        let three = verify_unicyclic_extremes(3).unwrap();
        assert!(three.bounds_ok && three.entries.len() == 1);
    }

    #[test]
    fn adjacency_variant() {
        for n in 3..=6 {
            let rep = verify_adjacency_extremes(n).unwrap();
            assert!(rep.bounds_ok, "n={n}: {:?}", rep.checks);
        }
    }

    #[test]
    fn ranges() {
        assert!(verify_tree_extremes(1).is_err());
        assert!(verify_tree_extremes(11).is_err());
        assert!(verify_unicyclic_extremes(10).is_err());
    }

    #[test]
    fn report_shape() {
        let r = verify_unicyclic_extremes(5).unwrap().to_report();
        assert_eq!(r.rows.len(), 5);
        assert_eq!(r.meta["bounds_ok"], Field::Bool(true));
    }
}
