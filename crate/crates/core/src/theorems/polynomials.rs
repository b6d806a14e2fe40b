//! Closed-form polynomials in `(ρ, n)` used by the extremal arguments, each
//! evaluated exactly as its rational expression in `n` is written.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::spectra::path_charpoly_closed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProofPolynomial {
    /// Cubic factor of the star-plus-edge characteristic polynomial.
    T1,
    /// `ρ^{n−4}(ρ + 1)·t₁(ρ, n)`, characteristic polynomial of `S_n + e`.
    G1,
    G2,
    G3,
    G4,
    /// `det(ρI − AG(P_n))` through path polynomials.
    F,
    /// `2^{n−3}·sqrt(ρ² − 4)·f(ρ, n)` expanded in powers of `ρ ± sqrt(ρ² − 4)`.
    G,
}

impl ProofPolynomial {
    pub const ALL: [ProofPolynomial; 7] = [
        ProofPolynomial::T1,
        ProofPolynomial::G1,
        ProofPolynomial::G2,
        ProofPolynomial::G3,
        ProofPolynomial::G4,
        ProofPolynomial::F,
        ProofPolynomial::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProofPolynomial::T1 => "t1",
            ProofPolynomial::G1 => "g1",
            ProofPolynomial::G2 => "g2",
            ProofPolynomial::G3 => "g3",
            ProofPolynomial::G4 => "g4",
            ProofPolynomial::F => "f",
            ProofPolynomial::G => "g",
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            ProofPolynomial::G3 => 6,
            _ => 4,
        }
    }

    /// Whether the evaluator is a monic degree-`n` polynomial in `ρ`, i.e. a
    /// candidate characteristic polynomial of an order-`n` graph.
    pub fn is_characteristic(self) -> bool {
        !matches!(self, ProofPolynomial::T1 | ProofPolynomial::G)
    }

    pub fn eval(self, rho: f64, n: usize) -> Result<f64> {
        if n < self.min_order() {
            return Err(Error::InvalidOrder { n, reason: "order too small for this polynomial" });
        }
        let nf = n as f64;
        let v = match self {
            ProofPolynomial::T1 => t1(rho, nf),
            ProofPolynomial::G1 => rho.powi(n as i32 - 4) * (rho + 1.0) * t1(rho, nf),
            ProofPolynomial::G2 => {
                let bracket = 4.0 * (nf - 2.0) * rho.powi(4)
                    - (6.0 * nf.powi(3) - 31.0 * nf * nf + 115.0 * nf - 136.0) / 6.0 * rho * rho
                    - (5.0 * nf * nf + 5.0 * nf) / 6.0 * rho
                    + 2.0 * nf * nf / 3.0
                    + 19.0 * (nf - 4.0) * (nf - 1.0).powi(2) / 8.0;
                rho.powi(n as i32 - 4) / (4.0 * (nf - 2.0)) * bracket
            }
            ProofPolynomial::G3 => {
                let c = (nf - 5.0) * (nf - 1.0).powi(2);
                let bracket = 8.0 * (nf - 2.0) * rho.powi(6)
                    - (2.0 * nf.powi(3) - 11.0 * nf * nf + 39.0 * nf - 44.0) * rho.powi(4)
                    - 2.0 * nf * nf * rho.powi(3)
                    + (13.0 * nf * nf / 4.0 + 9.0 * (nf - 2.0) + 17.0 / 4.0 * c) * rho * rho
                    + 9.0 / 4.0 * nf * nf * rho
                    - 9.0 / 4.0 * c;
                rho.powi(n as i32 - 6) / (8.0 * (nf - 2.0)) * bracket
            }
            ProofPolynomial::G4 => {
                let bracket = 8.0 * (nf - 2.0) * rho.powi(4)
                    - (2.0 * nf.powi(3) - 10.0 * nf * nf + 34.0 * nf - 40.0) * rho * rho
                    + 4.0 * (nf - 4.0) * (nf - 1.0).powi(2);
                rho.powi(n as i32 - 4) / (8.0 * (nf - 2.0)) * bracket
            }
            ProofPolynomial::F => {
                rho * rho * path_charpoly_closed(rho, n - 2) - 9.0 / 4.0 * rho * path_charpoly_closed(rho, n - 3)
                    + (9.0f64 / 8.0).powi(2) * path_charpoly_closed(rho, n - 4)
            }
            ProofPolynomial::G => {
                if rho < 2.0 {
                    return Err(Error::InvalidParameter(format!("g is defined for rho >= 2, got {rho}")));
                }
                let s = (rho * rho - 4.0).sqrt();
                let diff = |k: i32| (rho + s).powi(k) - (rho - s).powi(k);
                let k = n as i32;
                (rho / 2.0).powi(2) * diff(k - 1) - 9.0 * rho / 8.0 * diff(k - 2) + (9.0f64 / 8.0).powi(2) * diff(k - 3)
            }
        };
        Ok(v)
    }
}

impl fmt::Display for ProofPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProofPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProofPolynomial::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown polynomial `{s}`")))
    }
}

fn t1(rho: f64, n: f64) -> f64 {
    rho.powi(3) - rho * rho - (n.powi(3) - 2.0 * n * n + 2.0 * n + 1.0) / (4.0 * (n - 1.0)) * rho
        + (n - 3.0) * n * n / (4.0 * (n - 1.0))
}

/// Ascending coefficients of `t₁(·, n)`.
pub fn t1_coeffs(n: usize) -> Vec<f64> {
    let n = n as f64;
    vec![
        (n - 3.0) * n * n / (4.0 * (n - 1.0)),
        -(n.powi(3) - 2.0 * n * n + 2.0 * n + 1.0) / (4.0 * (n - 1.0)),
        -1.0,
        1.0,
    ]
}

/// `det(ρI − AG(P_n))` by the three-term continuant of the tridiagonal
/// matrix; the end edges of `P_n`, `n ≥ 3`, weigh `3√2/4`, the rest 1.
pub fn path_ag_continuant(rho: f64, n: usize) -> f64 {
    let w2 = |k: usize| if n >= 3 && (k == 1 || k == n - 1) { 9.0 / 8.0 } else { 1.0 };
    let (mut prev, mut cur) = (1.0, rho);
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        (prev, cur) = (cur, rho * cur - w2(k - 1) * prev);
    }
    cur
}

/// Closed forms of `t₁((n−1)/2, n)` and `t₁(n/2, n)`.
pub fn t1_bracket_values(n: usize) -> (f64, f64) {
    let n = n as f64;
    (
        (-n.powi(3) + 2.0 * n * n - 9.0 * n + 4.0) / (8.0 * (n - 1.0)),
        (n.powi(3) - 6.0 * n * n - n) / (8.0 * (n - 1.0)),
    )
}

/// The three sufficient conditions for positivity of `g₂`, `g₃`, `g₄`, each
/// the conjunction of its sufficient inequalities.
pub fn sufficient_inequalities(rho: f64, n: usize) -> [bool; 3] {
    let n = n as f64;
    let first = (4.0 * n - 9.0) * rho.powi(4) > (6.0 * n.powi(3) - 31.0 * n * n + 115.0 * n - 136.0) / 6.0 * rho * rho
        && rho.powi(4) > (5.0 * n * n + 5.0 * n) / 6.0 * rho;
    let second = (8.0 * n - 18.0) * rho.powi(6) > (2.0 * n.powi(3) - 11.0 * n * n + 39.0 * n - 44.0) * rho.powi(4)
        && 9.0 * (n - 2.0) * rho * rho + 9.0 / 4.0 * n * n * rho > 9.0 / 4.0 * (n - 5.0) * (n - 1.0).powi(2)
        && rho.powi(6) > n * n * rho.powi(3);
    let third = 8.0 * (n - 2.0) * rho.powi(4) > (2.0 * n.powi(3) - 10.0 * n * n + 34.0 * n - 40.0) * rho * rho;
    [first, second, third]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_at_two() {
        for n in 4..=20 {
            let want = (49.0 * n as f64 + 77.0) / 64.0;
            assert!((ProofPolynomial::F.eval(2.0, n).unwrap() - want).abs() < 1e-9);
            assert!((path_ag_continuant(2.0, n) - want).abs() < 1e-9);
        }
        assert!((ProofPolynomial::F.eval(2.0, 9).unwrap() - 8.09375).abs() < 1e-12);
    }

    #[test]
    fn g_is_scaled_f() {
        for n in 4..=20 {
            for rho in [2.1, 2.5, 3.7, 6.0] {
                let f = ProofPolynomial::F.eval(rho, n).unwrap();
                let g = ProofPolynomial::G.eval(rho, n).unwrap();
                let scaled = f * 2f64.powi(n as i32 - 3) * (rho * rho - 4.0).sqrt();
                assert!((g - scaled).abs() <= 1e-9 * g.abs().max(1.0));
            }
        }
        assert!(ProofPolynomial::G.eval(1.5, 6).is_err());
    }

    #[test]
    fn t1_values() {
        let (lo, hi) = t1_bracket_values(8);
        assert!((ProofPolynomial::T1.eval(3.5, 8).unwrap() - lo).abs() < 1e-12);
        assert!((ProofPolynomial::T1.eval(4.0, 8).unwrap() - hi).abs() < 1e-12);
        assert!(lo < 0.0 && hi > 0.0);
        assert!((ProofPolynomial::T1.eval(0.0, 8).unwrap() - 5.0 * 64.0 / 28.0).abs() < 1e-12);
        let c = t1_coeffs(8);
        assert!((crate::spectra::poly_eval(&c, 3.3) - ProofPolynomial::T1.eval(3.3, 8).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn sufficient_inequality_example() {
        assert!(sufficient_inequalities(6.5, 14)[2]);
        assert!(ProofPolynomial::G4.eval(6.5, 14).unwrap() > 0.0);
        assert!(ProofPolynomial::G2.eval(3.5, 8).unwrap() > 0.0);
    }

    #[test]
    fn parsing_and_ranges() {
        assert_eq!("G3".parse::<ProofPolynomial>().unwrap(), ProofPolynomial::G3);
        assert!("h".parse::<ProofPolynomial>().is_err());
        assert!(ProofPolynomial::G3.eval(2.0, 5).is_err());
        assert!(ProofPolynomial::G3.eval(2.0, 6).is_ok());
    }
}
