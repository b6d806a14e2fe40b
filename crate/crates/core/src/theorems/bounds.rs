//! Scalar bounds and positivity sweeps behind the extremal arguments.

use crate::error::{Error, Result};
use crate::graph::{make_star_plus_edge, Graph};
use crate::io::{Field, Report};
use crate::spectra::{double_star_radius, largest_root};

use super::extremes::ag_radius;
use super::polynomials::{sufficient_inequalities, t1_bracket_values, t1_coeffs, ProofPolynomial};
use super::{Check, EQ_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCountBound {
    pub bound: f64,
    pub radius: f64,
    /// `|radius − bound| ≤ 1e-9`.
    pub tight: bool,
    /// `radius ≤ bound + 1e-9`.
    pub holds: bool,
}

/// `½(√(n−1) + 1/√(n−1))·√(2m − n + 1)`, an upper bound on the AG radius of
/// a graph without isolated vertices, attained exactly by stars.
pub fn edge_count_bound(g: &Graph) -> Result<EdgeCountBound> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidOrder { n, reason: "edge-count bound needs at least 2 vertices" });
    }
    let radius = ag_radius(g)?;
    let r = ((n - 1) as f64).sqrt();
    let bound = 0.5 * (r + 1.0 / r) * ((2 * g.size() + 1) as f64 - n as f64).sqrt();
    Ok(EdgeCountBound { bound, radius, tight: (radius - bound).abs() <= EQ_TOL, holds: radius <= bound + EQ_TOL })
}

/// The double-star radical with `d_p − 1` and `d_q − 1` leaves, and whether
/// it reaches 2. Requires `d_p ≥ d_q ≥ 3`.
pub fn adjacent_hubs_radical(dp: usize, dq: usize) -> Result<(f64, bool)> {
    if dq < 3 || dp < dq {
        return Err(Error::InvalidParameter(format!("need dp >= dq >= 3, got ({dp}, {dq})")));
    }
    let s = (dp + dq - 1) as f64;
    let value = ((s + (s * s - 4.0 * ((dp - 1) * (dq - 1)) as f64).sqrt()) / 2.0).sqrt();
    Ok((value, value >= 2.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub what: String,
    pub n: usize,
    pub rho: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityReport {
    pub kind: &'static str,
    pub samples: usize,
    pub violations: Vec<Violation>,
    pub checks: Vec<Check>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new(self.kind, &["what", "n", "rho", "value"])
            .with_meta("samples", self.samples)
            .with_meta("violations", self.violations.len())
            .with_meta("passed", self.passed());
        for c in &self.checks {
            r.set_meta(format!("check: {}", c.name), c.passed);
        }
        for v in &self.violations {
            r.push_row(vec![Field::from(v.what.as_str()), Field::from(v.n), Field::from(v.rho), Field::from(v.value)])
                .expect("row width");
        }
        r
    }
}

/// `g(ρ, n) > 0` and `f(ρ, n) > 0` for `ρ = 2 + 0.01k`, `k = 1..=400`, and
/// `f(2, n) = (49n + 77)/64` within 1e-8, for every `4 ≤ n ≤ n_max ≤ 60`.
pub fn verify_g_positive(n_max: usize) -> Result<PositivityReport> {
    if !(4..=60).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("n_max must lie in 4..=60, got {n_max}")));
    }
    let mut samples = 0;
    let mut violations = Vec::new();
    let mut worst_f2 = 0.0f64;
    for n in 4..=n_max {
        for k in 1..=400 {
            let rho = 2.0 + 0.01 * k as f64;
            for p in [ProofPolynomial::G, ProofPolynomial::F] {
                let value = p.eval(rho, n)?;
                samples += 1;
                if !(value > 0.0) {
                    violations.push(Violation { what: p.name().into(), n, rho, value });
                }
            }
        }
        let want = (49.0 * n as f64 + 77.0) / 64.0;
        worst_f2 = worst_f2.max((ProofPolynomial::F.eval(2.0, n)? - want).abs());
    }
    let checks = vec![Check::new("f(2,n) = (49n+77)/64", worst_f2 <= 1e-8, format!("max deviation {worst_f2:.3e}"))];
    Ok(PositivityReport { kind: "g-positive", samples, violations, checks })
}

/// `g₂, g₃, g₄ > 0` on `ρ = (n−1)/2 + 0.01k ≤ n` for `n_lo ≤ n ≤ n_hi`
/// within `8..=20`; the three sufficient inequalities on the same grid for
/// `n ≥ 14`.
pub fn verify_g234_positive(n_lo: usize, n_hi: usize) -> Result<PositivityReport> {
    if !(8 <= n_lo && n_lo <= n_hi && n_hi <= 20) {
        return Err(Error::InvalidParameter(format!("range must satisfy 8 <= lo <= hi <= 20, got {n_lo}..{n_hi}")));
    }
    let mut samples = 0;
    let mut violations = Vec::new();
    for n in n_lo..=n_hi {
        let start = (n - 1) as f64 / 2.0;
        for k in 0..=50 * (n + 1) {
            let rho = start + 0.01 * k as f64;
            for p in [ProofPolynomial::G2, ProofPolynomial::G3, ProofPolynomial::G4] {
                let value = p.eval(rho, n)?;
                samples += 1;
                if !(value > 0.0) {
                    violations.push(Violation { what: p.name().into(), n, rho, value });
                }
            }
            if n >= 14 {
                for (i, ok) in sufficient_inequalities(rho, n).into_iter().enumerate() {
                    samples += 1;
                    if !ok {
                        violations.push(Violation { what: format!("sufficient inequality ({})", i + 1), n, rho, value: 0.0 });
                    }
                }
            }
        }
    }
    Ok(PositivityReport { kind: "g234-positive", samples, violations, checks: Vec::new() })
}

#[derive(Debug, Clone, PartialEq)]
pub struct T1Bracket {
    pub n: usize,
    /// Largest root of `t₁(·, n)`.
    pub root: f64,
    /// AG radius of `S_n + e` computed by the eigensolver.
    pub radius: f64,
    pub at_lo: f64,
    pub at_hi: f64,
    /// `t₁((n−1)/2, n) < 0` and equal to its closed form.
    pub lo_ok: bool,
    /// `t₁(n/2, n) > 0` and equal to its closed form.
    pub hi_ok: bool,
}

impl T1Bracket {
    pub fn root_matches_radius(&self) -> bool {
        (self.root - self.radius).abs() <= 1e-8
    }

    pub fn to_report(&self) -> Report {
        Report::new("t1-bracket", &[])
            .with_meta("n", self.n)
            .with_meta("root", self.root)
            .with_meta("radius", self.radius)
            .with_meta("t1_at_lo", self.at_lo)
            .with_meta("t1_at_hi", self.at_hi)
            .with_meta("lo_ok", self.lo_ok)
            .with_meta("hi_ok", self.hi_ok)
            .with_meta("root_matches_radius", self.root_matches_radius())
    }
}

/// Largest root of `t₁(·, n)` for `n ≥ 4`, with the sign checks at the
/// bracket ends `(n−1)/2` and `n/2` compared to their closed forms.
pub fn t1_root_bracket(n: usize) -> Result<T1Bracket> {
    if n < 4 {
        return Err(Error::InvalidOrder { n, reason: "t1 is defined here for n >= 4" });
    }
    let nf = n as f64;
    let root = largest_root(&t1_coeffs(n), 0.0, nf, 1e-13)?;
    let radius = ag_radius(&make_star_plus_edge(n)?)?;
    let at_lo = ProofPolynomial::T1.eval((nf - 1.0) / 2.0, n)?;
    let at_hi = ProofPolynomial::T1.eval(nf / 2.0, n)?;
    let (closed_lo, closed_hi) = t1_bracket_values(n);
    let same = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(1.0);
    Ok(T1Bracket {
        n,
        root,
        radius,
        at_lo,
        at_hi,
        lo_ok: at_lo < 0.0 && same(at_lo, closed_lo),
        hi_ok: at_hi > 0.0 && same(at_hi, closed_hi),
    })
}

/// Double-star radius consistency: the radical above equals the closed form
/// for the double star with `d_p − 1` and `d_q − 1` leaves.
pub fn adjacent_hubs_match_double_star(dp: usize, dq: usize) -> Result<bool> {
    let (v, _) = adjacent_hubs_radical(dp, dq)?;
    Ok((v - double_star_radius(dp - 1, dq - 1)?).abs() <= 1e-12)
}
