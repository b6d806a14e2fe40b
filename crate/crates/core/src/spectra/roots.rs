use crate::error::{Error, Result};

const SCAN_STEPS: usize = 4096;

/// Horner evaluation of an ascending coefficient list.
pub fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Largest real root of the polynomial `coeffs` (ascending) in `[lo, hi]`.
/// See [`largest_root_by`].
pub fn largest_root(coeffs: &[f64], lo: f64, hi: f64, tol: f64) -> Result<f64> {
    largest_root_by(|x| poly_eval(coeffs, x), lo, hi, tol)
}

/// Scans `[lo, hi]` downwards from `hi` in 4096 equal steps and bisects the
/// first sign change to width `tol`. Roots of even multiplicity that never
/// change sign between grid points are not detected.
pub fn largest_root_by<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("need lo < hi and tol > 0, got [{lo}, {hi}], tol {tol}")));
    }
    let step = (hi - lo) / SCAN_STEPS as f64;
    let mut b = hi;
    let mut fb = f(b);
    if fb == 0.0 {
        return Ok(b);
    }
    for k in (0..SCAN_STEPS).rev() {
        let a = lo + k as f64 * step;
        let fa = f(a);
        if fa == 0.0 {
            return Ok(a);
        }
        if fa.signum() != fb.signum() {
            return Ok(bisect(&f, a, fa, b, tol));
        }
        b = a;
        fb = fa;
    }
    Err(Error::NoSignChange { lo, hi })
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, fa: f64, mut b: f64, tol: f64) -> f64 {
    let sa = fa.signum();
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic() {
        let r = largest_root(&[-1.0, 0.0, 1.0], 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 1.0).abs() < 1e-13);
        let r = largest_root(&[-1.0, 0.0, 1.0], -3.0, 3.0, 1e-14).unwrap();
        assert!((r - 1.0).abs() < 1e-13);
    }

    #[test]
    fn picks_the_largest_of_several() {
        // (x − 1)(x − 2)(x − 3)
        let r = largest_root(&[-6.0, 11.0, -6.0, 1.0], 0.0, 10.0, 1e-13).unwrap();
        assert!((r - 3.0).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert!(matches!(largest_root(&[1.0, 0.0, 1.0], -2.0, 2.0, 1e-12), Err(Error::NoSignChange { .. })));
        assert!(largest_root(&[1.0], 2.0, 1.0, 1e-12).is_err());
        assert!(largest_root(&[1.0], 1.0, 2.0, 0.0).is_err());
    }
}
