//! `agspectra`: spectral radii, characteristic polynomials, enumeration and
//! verification of extremal AG-radius results from the command line.

mod output;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use agspectra::enumeration::{enumerate, GraphClass};
use agspectra::io::{round_significant, write_graph6, Field, Report};
use agspectra::matrices::{build_weighted, topological_index, IndexKind, WeightScheme};
use agspectra::spectra::{char_poly, full_spectrum, spectral_radius, DEFAULT_TOL};
use agspectra::theorems::suite::{run_suite, suite_report, CriterionOutcome};
use agspectra::theorems::{self, PolyTarget, ProofPolynomial, DEFAULT_MATCH_TOL};
use agspectra::{Error, Result};
use clap::{Parser, Subcommand};

use output::{render, text_field, write_output, OutputFormat};
use source::GraphSource;

#[derive(Debug, Parser)]
#[command(name = "agspectra", version, about = "Arithmetic-geometric spectral radii of trees and unicyclic graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Eigenvalue tolerance (radius, spectrum) or polynomial match tolerance (verify match).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Worker threads for per-graph parallel work.
    #[arg(long, env = "AGSPECTRA_WORKERS", global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Largest eigenvalue of a weighted adjacency matrix.
    Radius {
        #[arg(long, default_value = "ag")]
        scheme: WeightScheme,
        #[command(flatten)]
        source: GraphSource,
    },
    /// All eigenvalues, descending.
    Spectrum {
        #[arg(long, default_value = "ag")]
        scheme: WeightScheme,
        #[command(flatten)]
        source: GraphSource,
    },
    /// Coefficients of det(xI - M), ascending by power.
    Charpoly {
        #[arg(long, default_value = "ag")]
        scheme: WeightScheme,
        #[command(flatten)]
        source: GraphSource,
    },
    /// All trees or unicyclic graphs of one order, up to isomorphism.
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
    },
    /// AG radii of all unicyclic graphs for a range of orders.
    Tables {
        #[arg(long, default_value_t = 4)]
        lo: usize,
        #[arg(long, default_value_t = 7)]
        hi: usize,
    },
    /// Run a verification; exit status 1 when it fails.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Test whether x_i = sqrt(d_i) certifies AG radius at most k.
    Certificate {
        #[arg(long)]
        k: f64,
        #[command(flatten)]
        source: GraphSource,
    },
    /// A degree-based topological index (ag, r-1, sdd, abc, m1).
    Index {
        #[arg(long, default_value = "ag")]
        kind: IndexKind,
        #[command(flatten)]
        source: GraphSource,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    /// Tree extremes: path minimum, star maximum, path bounds.
    TreeExtremes {
        #[arg(long)]
        n: usize,
    },
    /// Unicyclic extremes: cycle minimum, star-plus-edge maximum.
    UnicyclicExtremes {
        #[arg(long)]
        n: usize,
    },
    /// Reference table of unicyclic radii.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Unicyclic extremes under the adjacency matrix.
    AdjacencyExtremes {
        #[arg(long)]
        n: usize,
    },
    /// Edge-count upper bound on the AG radius.
    EdgeBound {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Double-star radical at adjacent degrees dp >= dq >= 3 reaches 2.
    AdjacentHubs {
        #[arg(long)]
        dp: usize,
        #[arg(long)]
        dq: usize,
    },
    /// Positivity of g and f on (2, 6].
    GPositive {
        #[arg(long, default_value_t = 50)]
        n_max: usize,
    },
    /// Positivity of g2, g3, g4 and the sufficient inequalities.
    G234 {
        #[arg(long, default_value_t = 8)]
        lo: usize,
        #[arg(long, default_value_t = 20)]
        hi: usize,
    },
    /// Largest root of t1 and its bracket.
    T1 {
        #[arg(long)]
        n: usize,
    },
    /// Certificate-based case split over unicyclic graphs.
    CaseSplit {
        #[arg(long)]
        n: usize,
    },
    /// Unicyclic graphs whose AG characteristic polynomial is g1..g4.
    Match {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: ProofPolynomial,
    },
    /// Values of the auxiliary trees, and searches for those known only by value.
    Devices,
    /// Every criterion of the acceptance suite.
    All,
}

/// A rendered report and its verdict.
struct Outcome {
    report: Report,
    passed: bool,
    /// Replaces the default text rendering.
    text: Option<String>,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, passed: true, text: None }
    }

    fn verdict(report: Report, passed: bool) -> Self {
        Outcome { report, passed, text: None }
    }
}

fn radius(scheme: WeightScheme, source: &GraphSource, tol: f64) -> Result<Outcome> {
    let g = source.resolve()?;
    let m = build_weighted(&g.graph, scheme, g.degree_override.as_ref())?;
    let r = spectral_radius(&m, tol)?;
    let report = Report::new("radius", &[])
        .with_meta("value", r.radius)
        .with_meta("scheme", scheme.name())
        .with_meta("n", g.graph.order())
        .with_meta("residual", r.residual)
        .with_meta("iterations", r.iterations)
        .with_meta("degree_override", g.degree_override.is_some());
    let text = format!("{}\n", round_significant(r.radius, report.precision));
    Ok(Outcome { report, passed: true, text: Some(text) })
}

fn spectrum(scheme: WeightScheme, source: &GraphSource, tol: f64) -> Result<Outcome> {
    let g = source.resolve()?;
    let m = build_weighted(&g.graph, scheme, g.degree_override.as_ref())?;
    let mut report = Report::new("spectrum", &["index", "eigenvalue"]).with_meta("scheme", scheme.name());
    for (i, x) in full_spectrum(&m, tol)?.into_iter().enumerate() {
        report.push_row(vec![Field::from(i + 1), Field::from(x)])?;
    }
    Ok(Outcome::ok(report))
}

fn charpoly(scheme: WeightScheme, source: &GraphSource) -> Result<Outcome> {
    let g = source.resolve()?;
    let p = char_poly(&build_weighted(&g.graph, scheme, g.degree_override.as_ref())?)?;
    let mut report = Report::new("charpoly", &["power", "coefficient"])
        .with_meta("scheme", scheme.name())
        .with_meta("degree", p.degree());
    for (i, c) in p.coeffs().iter().enumerate() {
        report.push_row(vec![Field::from(i), Field::from(*c)])?;
    }
    Ok(Outcome::ok(report))
}

fn enumerate_cmd(class: GraphClass, n: usize) -> Result<Outcome> {
    let mut report = Report::new("enumerate", &["index", "graph6", "edges"]).with_meta("class", class.name()).with_meta("n", n);
    let members: Vec<_> = enumerate(class, n)?.collect();
    report.set_meta("count", members.len());
    for (i, g) in members.iter().enumerate() {
        report.push_row(vec![Field::from(i + 1), Field::from(write_graph6(g)?), Field::from(g.size())])?;
    }
    Ok(Outcome::ok(report))
}

fn suite_text(outcomes: &[CriterionOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let verdict = if o.passed() { "PASS" } else { "FAIL" };
        let budget = if o.over_budget() { " over budget" } else { "" };
        out.push_str(&format!("criterion {:>2} {verdict} {} ({:.2}s{budget})\n", o.id, o.title, o.elapsed.as_secs_f64()));
        for c in o.checks.iter().filter(|c| !c.passed) {
            out.push_str(&format!("    failed: {}: {}\n", c.name, c.detail));
        }
        for n in &o.notes {
            out.push_str(&format!("    note: {n}\n"));
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
    out
}

fn verify(target: &VerifyTarget, tol: Option<f64>) -> Result<Outcome> {
    Ok(match target {
        VerifyTarget::TreeExtremes { n } => {
            let r = theorems::verify_tree_extremes(*n)?;
            Outcome::verdict(r.to_report(), r.bounds_ok)
        }
        VerifyTarget::UnicyclicExtremes { n } => {
            let r = theorems::verify_unicyclic_extremes(*n)?;
            Outcome::verdict(r.to_report(), r.bounds_ok)
        }
        VerifyTarget::AdjacencyExtremes { n } => {
            let r = theorems::verify_adjacency_extremes(*n)?;
            Outcome::verdict(r.to_report(), r.bounds_ok)
        }
        VerifyTarget::Table { n } => {
            let r = theorems::reproduce_table(*n)?;
            Outcome::verdict(r.to_report(), r.passed())
        }
        VerifyTarget::EdgeBound { source } => {
            let g = source.resolve()?;
            let b = theorems::edge_count_bound(&g.graph)?;
            let report = Report::new("edge-count-bound", &[])
                .with_meta("bound", b.bound)
                .with_meta("radius", b.radius)
                .with_meta("tight", b.tight)
                .with_meta("holds", b.holds);
            Outcome::verdict(report, b.holds)
        }
        VerifyTarget::AdjacentHubs { dp, dq } => {
            let (value, ok) = theorems::adjacent_hubs_radical(*dp, *dq)?;
            let report = Report::new("adjacent-hubs", &[]).with_meta("dp", *dp).with_meta("dq", *dq).with_meta("value", value).with_meta("at_least_two", ok);
            Outcome::verdict(report, ok)
        }
        VerifyTarget::GPositive { n_max } => {
            let r = theorems::verify_g_positive(*n_max)?;
            Outcome::verdict(r.to_report(), r.passed())
        }
        VerifyTarget::G234 { lo, hi } => {
            let r = theorems::verify_g234_positive(*lo, *hi)?;
            Outcome::verdict(r.to_report(), r.passed())
        }
        VerifyTarget::T1 { n } => {
            let r = theorems::t1_root_bracket(*n)?;
            let passed = r.root_matches_radius() && (*n < 8 || (r.lo_ok && r.hi_ok));
            Outcome::verdict(r.to_report(), passed)
        }
        VerifyTarget::CaseSplit { n } => {
            let r = theorems::verify_unicyclic_case_split(*n)?;
            Outcome::verdict(r.to_report(), r.passed())
        }
        VerifyTarget::Match { n, target } => {
            let hits = theorems::match_char_poly(*n, &PolyTarget::Proof(*target), tol.unwrap_or(DEFAULT_MATCH_TOL))?;
            Outcome::ok(theorems::match_report(*n, target.name(), &hits)?)
        }
        VerifyTarget::Devices => {
            let values = theorems::device_values()?;
            let mut report = Report::new("devices", &["name", "scheme", "claimed", "computed", "status"]);
            for d in &values {
                let status = if d.ok { "ok" } else { "mismatch" };
                report.push_row(vec![
                    Field::from(d.name),
                    Field::from(d.scheme.name()),
                    Field::from(d.claimed),
                    Field::from(d.computed),
                    Field::from(status),
                ])?;
            }
            for s in theorems::search_devices()? {
                let status = if s.verified() { format!("found {}: {}", s.found.len(), s.found.join("; ")) } else { "unverifiable".to_string() };
                report.push_row(vec![
                    Field::from(s.name),
                    Field::from("search"),
                    Field::from(s.claim),
                    Field::from(s.found.len()),
                    Field::from(status),
                ])?;
            }
            Outcome::verdict(report, values.iter().all(|d| d.ok))
        }
        VerifyTarget::All => {
            let outcomes = run_suite();
            let passed = outcomes.iter().all(|o| o.passed());
            Outcome { report: suite_report(&outcomes), passed, text: Some(suite_text(&outcomes)) }
        }
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("--tol must be positive, got {tol}")));
    }
    match &cli.command {
        Command::Radius { scheme, source } => radius(*scheme, source, tol),
        Command::Spectrum { scheme, source } => spectrum(*scheme, source, tol),
        Command::Charpoly { scheme, source } => charpoly(*scheme, source),
        Command::Enumerate { class, n } => enumerate_cmd(*class, *n),
        Command::Tables { lo, hi } => Ok(Outcome::ok(theorems::radius_table(*lo, *hi)?)),
        Command::Verify { target } => verify(target, cli.tol),
        Command::Certificate { k, source } => {
            let g = source.resolve()?;
            let c = theorems::perron_certificate(&g.graph, *k)?;
            Ok(Outcome::verdict(c.to_report(), c.consistent))
        }
        Command::Index { kind, source } => {
            let g = source.resolve()?;
            let v = topological_index(&g.graph, *kind)?;
            let report = Report::new("index", &[]).with_meta("kind", kind.name()).with_meta("value", v.value);
            let text = format!("{}\n", text_field(&Field::from(v.value), report.precision));
            Ok(Outcome { report, passed: true, text: Some(text) })
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        Error::NoConvergence { .. } | Error::NoSignChange { .. } | Error::Report(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers.filter(|&w| w > 0) {
        // A pool configured earlier in the process wins; nothing to do then.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let outcome = dispatch(&cli).and_then(|o| {
        let bytes = match (&o.text, cli.format) {
            (Some(t), OutputFormat::Text) => t.clone().into_bytes(),
            _ => render(&o.report, cli.format)?,
        };
        write_output(&bytes, cli.output.as_deref())?;
        Ok(o.passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
