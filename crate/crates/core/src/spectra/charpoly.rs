use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::matrices::SymmetricMatrix;

/// Monic polynomial `det(λI − M)`. `coeffs[i]` multiplies `λ^i`; the last
/// coefficient is exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.last() != Some(&1.0) {
            return Err(Error::InvalidParameter("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        super::poly_eval(&self.coeffs, x)
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Long division by a monic `divisor` (ascending). Returns
    /// `(quotient, remainder)`, both ascending.
    pub fn divide(&self, divisor: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
        let d = divisor.len().checked_sub(1).filter(|_| divisor.last() == Some(&1.0)).ok_or_else(|| {
            Error::InvalidParameter("divisor must be a non-empty monic polynomial".into())
        })?;
        let mut rem = self.coeffs.clone();
        if d > self.degree() {
            return Ok((vec![0.0], rem));
        }
        let mut quot = vec![0.0; self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d];
            quot[k] = lead;
            for (i, &c) in divisor.iter().enumerate() {
                rem[k + i] -= lead * c;
            }
        }
        rem.truncate(d.max(1));
        Ok((quot, rem))
    }
}

/// Characteristic polynomial by the Faddeev–LeVerrier recursion
/// `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k)/k`, carried out in
/// double-double arithmetic. The entries of `M_k` grow like `ρ^k`, so plain
/// doubles lose the low-order coefficients already around order 13.
pub fn char_poly(m: &SymmetricMatrix) -> Result<CharPoly> {
    m.check_symmetric()?;
    let n = m.dim();
    if n > 64 {
        return Err(Error::InvalidOrder { n, reason: "characteristic polynomial supports at most 64 rows" });
    }
    let a: Vec<Vec<TwoFloat>> = m.to_rows().into_iter().map(|r| r.into_iter().map(TwoFloat::from).collect()).collect();
    let zero = TwoFloat::from(0.0);
    let mut coeffs = vec![zero; n + 1];
    coeffs[n] = TwoFloat::from(1.0);
    let mut mk = vec![vec![zero; n]; n];
    for k in 1..=n {
        let mut next = matmul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[n - k + 1];
        }
        let am = matmul(&a, &next);
        let trace = (0..n).fold(zero, |acc, i| acc + am[i][i]);
        coeffs[n - k] = -trace / k as f64;
        mk = next;
    }
    Ok(CharPoly { coeffs: coeffs.into_iter().map(f64::from).collect() })
}

fn matmul(a: &[Vec<TwoFloat>], b: &[Vec<TwoFloat>]) -> Vec<Vec<TwoFloat>> {
    let n = a.len();
    let mut c = vec![vec![TwoFloat::from(0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik != 0.0 {
                for j in 0..n {
                    c[i][j] += aik * b[k][j];
                }
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, make_star};
    use crate::matrices::{build_weighted, WeightScheme};
    use crate::spectra::full_spectrum;

    #[test]
    fn k2_and_triangle() {
        let k2 = build_weighted(&make_path(2).unwrap(), WeightScheme::Adjacency, None).unwrap();
        assert_eq!(char_poly(&k2).unwrap().coeffs(), &[-1.0, 0.0, 1.0]);
        // λ³ − 3λ − 2 = (λ − 2)(λ + 1)²
        let c3 = build_weighted(&make_cycle(3).unwrap(), WeightScheme::Adjacency, None).unwrap();
        let p = char_poly(&c3).unwrap();
        for (got, want) in p.coeffs().iter().zip([-2.0, -3.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn vanishes_on_spectrum() {
        for g in [make_star(7).unwrap(), make_path(9).unwrap(), make_cycle(8).unwrap().with_edge(0, 4).unwrap()] {
            let m = build_weighted(&g, WeightScheme::ArithmeticGeometric, None).unwrap();
            let p = char_poly(&m).unwrap();
            for lam in full_spectrum(&m, 1e-13).unwrap() {
                assert!(p.eval(lam).abs() <= 1e-6 * (1.0 + p.l1_norm()));
            }
        }
    }

    #[test]
    fn division() {
        // (λ² − 1) / (λ + 1) = λ − 1
        let p = CharPoly::from_coeffs(vec![-1.0, 0.0, 1.0]).unwrap();
        let (q, r) = p.divide(&[1.0, 1.0]).unwrap();
        assert_eq!(q, vec![-1.0, 1.0]);
        assert_eq!(r, vec![0.0]);
        assert!(p.divide(&[1.0, 2.0]).is_err());
        assert!(CharPoly::from_coeffs(vec![1.0, 2.0]).is_err());
    }
}
