use crate::error::{Error, Result};

/// Adjacency characteristic polynomial of the path `P_n` at `lambda`, from
/// the Chebyshev closed form. With `λ = 2cosh θ` (or `2cos θ` inside
/// `(−2, 2)`) the value is `sinh((n+1)θ)/sinh θ` (resp. `sin`), signed by
/// `sgn(λ)^n`; at `|λ| = 2` it is the limit `(n+1)(λ/2)^n`.
pub fn path_charpoly_closed(lambda: f64, n: usize) -> f64 {
    let m = (n + 1) as f64;
    let a = lambda.abs();
    if a == 2.0 {
        m * (lambda / 2.0).powi(n as i32)
    } else if a > 2.0 {
        let theta = (a / 2.0).acosh();
        let sign = if lambda < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        sign * (m * theta).sinh() / theta.sinh()
    } else {
        let theta = (lambda / 2.0).acos();
        (m * theta).sin() / theta.sin()
    }
}

/// Same polynomial by `Φ_k = λΦ_{k−1} − Φ_{k−2}`, `Φ_0 = 1`, `Φ_1 = λ`.
pub fn path_charpoly_recurrence(lambda: f64, n: usize) -> f64 {
    let (mut prev, mut cur) = (1.0, lambda);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        (prev, cur) = (cur, lambda * cur - prev);
    }
    cur
}

/// Adjacency spectral radius of the double star with `p` and `q` leaves on
/// its two centres, `p ≥ q ≥ 1`.
pub fn double_star_radius(p: usize, q: usize) -> Result<f64> {
    if q < 1 || p < q {
        return Err(Error::InvalidParameter(format!("double star needs p >= q >= 1, got ({p}, {q})")));
    }
    let s = (p + q + 1) as f64;
    let disc = s * s - 4.0 * (p * q) as f64;
    Ok(((s + disc.sqrt()) / 2.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!((path_charpoly_closed(3.0, 2) - 8.0).abs() < 1e-12);
        for n in 1..=10 {
            assert!((path_charpoly_closed(2.0, n) - (n + 1) as f64).abs() < 1e-12);
            assert!((path_charpoly_recurrence(2.0, n) - (n + 1) as f64).abs() < 1e-12);
        }
        assert_eq!(path_charpoly_recurrence(0.7, 0), 1.0);
    }

    #[test]
    fn closed_form_agrees_with_recurrence_off_grid() {
        for n in 1..=15 {
            for k in -60..=60 {
                let lam = k as f64 * 0.07 + 0.003;
                let a = path_charpoly_closed(lam, n);
                let b = path_charpoly_recurrence(lam, n);
                assert!((a - b).abs() <= 1e-8 * (1.0 + b.abs()), "n={n} λ={lam}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn double_star_values() {
        assert!((double_star_radius(1, 1).unwrap() - ((3.0 + 5f64.sqrt()) / 2.0).sqrt()).abs() < 1e-15);
        assert!((double_star_radius(1, 1).unwrap() - 1.6180).abs() < 5e-5);
        assert!((double_star_radius(4, 4).unwrap() - 2.5616).abs() < 5e-5);
        assert!(double_star_radius(1, 2).is_err());
        assert!(double_star_radius(3, 0).is_err());
    }
}
