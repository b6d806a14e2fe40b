//! Sampled and exhaustive structural properties of AG radii.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::enumeration::{enumerate_trees, enumerate_unicyclic};
use crate::error::Result;
use crate::graph::Graph;
use crate::matrices::{build_weighted, WeightScheme};
use crate::spectra::{full_spectrum, spectral_radius, DEFAULT_TOL};

use super::{Check, EQ_TOL};

pub const DEFAULT_SEED: u64 = 0x5eed_a6;

/// Every tree of order 2 to `n_max` and unicyclic graph of order 3 to `n_max`.
pub fn small_family(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(enumerate_trees(n)?);
        if n >= 3 {
            out.extend(enumerate_unicyclic(n)?);
        }
    }
    Ok(out)
}

/// AG radius at least the adjacency radius on every graph of
/// [`small_family`]`(n_max)`.
pub fn check_monotonicity(n_max: usize) -> Result<Check> {
    let graphs = small_family(n_max)?;
    let gaps: Vec<f64> = graphs
        .par_iter()
        .map(|g| {
            let a = spectral_radius(&build_weighted(g, WeightScheme::Adjacency, None)?, DEFAULT_TOL)?.radius;
            let h = spectral_radius(&build_weighted(g, WeightScheme::ArithmeticGeometric, None)?, DEFAULT_TOL)?.radius;
            Ok(h - a)
        })
        .collect::<Result<_>>()?;
    let worst = gaps.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(Check::new(
        "AG radius dominates adjacency radius",
        worst >= -EQ_TOL,
        format!("{} graphs, smallest gap {worst:.3e}", graphs.len()),
    ))
}

/// Random graph on `n` vertices with edge probability ½, with every isolated
/// vertex then joined to a random other vertex.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for (i, j) in Graph::empty(n)?.non_edges() {
        if rng.gen_bool(0.5) {
            g.add_edge(i, j)?;
        }
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            let u = (v + rng.gen_range(1..n)) % n;
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Radius of a principal submatrix of the AG matrix never exceeds the radius
/// of the whole matrix, over `samples` random (graph, vertex subset) pairs.
pub fn check_principal_submatrix(samples: usize, seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..samples {
        let n = rng.gen_range(3..=12);
        let g = random_graph(&mut rng, n)?;
        let m = build_weighted(&g, WeightScheme::ArithmeticGeometric, None)?;
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(&mut rng);
        idx.truncate(rng.gen_range(1..=n));
        idx.sort_unstable();
        let whole = spectral_radius(&m, DEFAULT_TOL)?.radius;
        let part = spectral_radius(&m.principal_submatrix(&idx), DEFAULT_TOL)?.radius;
        worst = worst.max(part - whole);
    }
    Ok(Check::new(
        "principal submatrix radius bounded by whole",
        worst <= EQ_TOL,
        format!("{samples} samples, largest excess {worst:.3e}"),
    ))
}

/// Largest Jacobi eigenvalue equals the power-iteration radius on `samples`
/// graphs drawn from [`small_family`]`(8)`.
pub fn check_spectrum_consistency(samples: usize, seed: u64) -> Result<Check> {
    let graphs = small_family(8)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let g = graphs.choose(&mut rng).expect("family is non-empty");
        let m = build_weighted(g, WeightScheme::ArithmeticGeometric, None)?;
        let top = full_spectrum(&m, 1e-13)?[0];
        worst = worst.max((top - spectral_radius(&m, DEFAULT_TOL)?.radius).abs());
    }
    Ok(Check::new("spectrum maximum equals radius", worst <= EQ_TOL, format!("{samples} samples, max gap {worst:.3e}")))
}
