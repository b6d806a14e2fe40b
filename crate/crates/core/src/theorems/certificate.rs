//! Perron-type upper bounds: if a positive vector `x` satisfies `Mx ≤ kx`
//! entrywise for a nonnegative `M`, the spectral radius of `M` is at most `k`.

use rayon::prelude::*;

use crate::enumeration::{canonical_form, enumerate_unicyclic};
use crate::error::{Error, Result};
use crate::graph::{degrees, make_star_plus_edge, max_adjacent_degree_sum, Graph};
use crate::io::{write_graph6, Field, Report};
use crate::matrices::{build_weighted, WeightScheme};
use crate::spectra::{spectral_radius, DEFAULT_TOL};

use super::{Check, EQ_TOL, UNIQUE_MARGIN};

/// Slack below which a row counts as violated.
pub const SLACK_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub graph6: String,
    pub k: f64,
    /// Test vector `x_i = √d_i`.
    pub x: Vec<f64>,
    /// `k·x_i − (AG·x)_i`.
    pub slack: Vec<f64>,
    pub certified: bool,
    pub radius: f64,
    /// `!certified || radius ≤ k + 1e-9`.
    pub consistent: bool,
}

impl CertificateReport {
    pub fn min_slack(&self) -> f64 {
        self.slack.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("certificate", &["vertex", "x", "slack"])
            .with_meta("graph6", self.graph6.as_str())
            .with_meta("k", self.k)
            .with_meta("certified", self.certified)
            .with_meta("radius", self.radius)
            .with_meta("consistent", self.consistent);
        for (i, (x, s)) in self.x.iter().zip(&self.slack).enumerate() {
            r.push_row(vec![Field::from(i), Field::from(*x), Field::from(*s)]).expect("row width");
        }
        r
    }
}

pub fn perron_certificate(g: &Graph, k: f64) -> Result<CertificateReport> {
    if !(k > 0.0) {
        return Err(Error::InvalidParameter(format!("certificate bound must be positive, got {k}")));
    }
    let m = build_weighted(g, WeightScheme::ArithmeticGeometric, None)?;
    let x: Vec<f64> = degrees(g).as_slice().iter().map(|&d| (d as f64).sqrt()).collect();
    let mx = m.mul_vec(&x);
    let slack: Vec<f64> = x.iter().zip(&mx).map(|(xi, yi)| k * xi - yi).collect();
    let certified = slack.iter().all(|&s| s >= -SLACK_TOL);
    let radius = spectral_radius(&m, DEFAULT_TOL)?.radius;
    Ok(CertificateReport {
        graph6: write_graph6(g)?,
        k,
        x,
        slack,
        certified,
        radius,
        consistent: !certified || radius <= k + EQ_TOL,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseSplitRow {
    pub graph6: String,
    pub max_adjacent_sum: usize,
    /// `max_adjacent_sum ≤ n − 1`.
    pub low_part: bool,
    pub certified: bool,
    pub consistent: bool,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseSplitReport {
    pub n: usize,
    pub rows: Vec<CaseSplitRow>,
    pub maximizer: String,
    pub checks: Vec<Check>,
}

impl CaseSplitReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("case-split", &["graph6", "max_adjacent_sum", "low_part", "certified", "radius"])
            .with_meta("n", self.n)
            .with_meta("maximizer", self.maximizer.as_str())
            .with_meta("passed", self.passed());
        for c in &self.checks {
            r.set_meta(format!("check: {}", c.name), c.passed);
        }
        for row in &self.rows {
            r.push_row(vec![
                Field::from(row.graph6.as_str()),
                Field::from(row.max_adjacent_sum),
                Field::from(row.low_part),
                Field::from(row.certified),
                Field::from(row.radius),
            ])
            .expect("row width");
        }
        r
    }
}

/// Splits the unicyclic graphs of order `n`, `8 ≤ n ≤ 10`, by whether some
/// edge has degree sum at least `n`. Graphs below the threshold must be
/// certified at `k = (n−1)/2`; the rest must be certified there or have
/// radius below `n/2`; `S_n + e` must be the unique maximizer.
pub fn verify_unicyclic_case_split(n: usize) -> Result<CaseSplitReport> {
    if !(8..=10).contains(&n) {
        return Err(Error::InvalidOrder { n, reason: "case split is verified for 8..=10" });
    }
    let k = (n - 1) as f64 / 2.0;
    let half = n as f64 / 2.0;
    let graphs: Vec<Graph> = enumerate_unicyclic(n)?.collect();
    let rows: Vec<CaseSplitRow> = graphs
        .par_iter()
        .map(|g| {
            let s = max_adjacent_degree_sum(g)?;
            let cert = perron_certificate(g, k)?;
            Ok(CaseSplitRow {
                graph6: cert.graph6,
                max_adjacent_sum: s,
                low_part: s < n,
                certified: cert.certified,
                consistent: cert.consistent,
                radius: cert.radius,
            })
        })
        .collect::<Result<_>>()?;

    let star_e = make_star_plus_edge(n)?;
    let target = canonical_form(&star_e)?;
    let maximizer = target.as_graph6().to_string();
    let top = rows.iter().find(|r| r.graph6 == maximizer).map(|r| r.radius).unwrap_or(f64::NAN);

    let uncertified_low: Vec<&str> = rows.iter().filter(|r| r.low_part && !r.certified).map(|r| r.graph6.as_str()).collect();
    let bad_high: Vec<&str> = rows
        .iter()
        .filter(|r| !r.low_part && !r.certified && r.radius >= half)
        .map(|r| r.graph6.as_str())
        .collect();
    let inconsistent: Vec<&str> = rows.iter().filter(|r| !r.consistent).map(|r| r.graph6.as_str()).collect();
    let rivals: Vec<&str> = rows
        .iter()
        .filter(|r| r.graph6 != maximizer && r.radius >= top - UNIQUE_MARGIN)
        .map(|r| r.graph6.as_str())
        .collect();
    let list = |v: &[&str]| if v.is_empty() { "none".to_string() } else { v.join(", ") };

    let checks = vec![
        Check::new("low part certified at (n-1)/2", uncertified_low.is_empty(), format!("uncertified: {}", list(&uncertified_low))),
        Check::new("high part certified or below n/2", bad_high.is_empty(), format!("violations: {}", list(&bad_high))),
        Check::new("certificates consistent with radii", inconsistent.is_empty(), format!("inconsistent: {}", list(&inconsistent))),
        Check::new(
            "star plus edge is the unique maximizer",
            rivals.is_empty() && top.is_finite(),
            format!("rho(S_n+e) = {top:.10}; rivals: {}", list(&rivals)),
        ),
    ];
    Ok(CaseSplitReport { n, rows, maximizer, checks })
}
