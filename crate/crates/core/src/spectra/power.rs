use crate::error::{Error, Result};
use crate::matrices::SymmetricMatrix;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 200_000;

/// Largest eigenvalue with a unit eigenvector certified by its residual.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub radius: f64,
    pub vector: Vec<f64>,
    /// `‖Mv − radius·v‖₂`.
    pub residual: f64,
    pub iterations: usize,
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

/// Largest (algebraic) eigenvalue of `m` by power iteration on
/// `m + ‖m‖∞·I`, whose spectrum is nonnegative so the top eigenvalue of `m`
/// dominates. Returns once `‖Mv − ρv‖₂ ≤ tol·max(1, ‖M‖_F)`.
pub fn spectral_radius(m: &SymmetricMatrix, tol: f64) -> Result<SpectralResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    m.check_symmetric()?;
    let n = m.dim();
    if n == 0 {
        return Err(Error::InvalidOrder { n, reason: "spectral radius of an empty matrix" });
    }
    let shift = m.inf_norm();
    let threshold = tol * m.frobenius_norm().max(1.0);

    // All-ones overlaps the Perron vector of any nonnegative matrix; the
    // perturbation breaks orthogonality for signed inputs.
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 1e-2 * ((i * 7919) % 13) as f64 / 13.0).collect();
    normalize(&mut x);

    let mut residual = f64::INFINITY;
    for it in 0..=MAX_ITERATIONS {
        let y = m.mul_vec(&x);
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = y.iter().zip(&x).map(|(a, b)| (a - rho * b).powi(2)).sum::<f64>().sqrt();
        if residual <= threshold {
            if x.iter().sum::<f64>() < 0.0 {
                x.iter_mut().for_each(|v| *v = -*v);
            }
            return Ok(SpectralResult { radius: rho, vector: x, residual, iterations: it });
        }
        let mut next: Vec<f64> = y.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        if normalize(&mut next) == 0.0 {
            break;
        }
        x = next;
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, residual })
}
