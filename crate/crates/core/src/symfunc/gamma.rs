use serde::Serialize;

use super::{SymF, TPoly};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// `p(t) = sum_i g_i t^i (1 + t)^(n - 2i)` with symmetric-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymGamma {
    pub n: usize,
    pub gammas: Vec<SymF>,
}

impl SymGamma {
    pub fn reconstruct(&self, degree: usize) -> TPoly {
        self.gammas.iter().enumerate().fold(TPoly::zero(degree), |acc, (i, g)| {
            &acc + &TPoly::monomial(g.clone(), i).mul_poly(&IntPolynomial::one_plus_t_pow(self.n - 2 * i))
        })
    }

    /// Every `g_i` is a nonnegative integer combination of Schur functions.
    pub fn is_schur_positive(&self) -> Result<bool> {
        for g in &self.gammas {
            if !g.is_schur_positive()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Symmetric γ-expansion of a t-polynomial palindromic about `n/2`.
pub fn sym_gamma(p: &TPoly, n: usize) -> Result<SymGamma> {
    if !p.is_palindromic(n) {
        return Err(Error::domain(format!("t-polynomial is not palindromic about {n}/2")));
    }
    let mut rest = p.clone();
    let mut gammas = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = rest.coeff(i);
        let term = TPoly::monomial(g.clone(), i).mul_poly(&IntPolynomial::one_plus_t_pow(n - 2 * i));
        rest = &rest - &term;
        gammas.push(g);
    }
    debug_assert!(rest.is_zero());
    Ok(SymGamma { n, gammas })
}

pub fn is_schur_gamma_positive(p: &TPoly, n: usize) -> Result<bool> {
    sym_gamma(p, n)?.is_schur_positive()
}

/// Splits `p` as `plus + minus` with `plus` palindromic about `n/2` and `minus`
/// palindromic about `(n+1)/2` with zero constant term.
pub fn sym_palindromic_split(p: &TPoly, n: usize) -> Result<(TPoly, TPoly)> {
    if let Some(d) = p.t_degree() {
        if d > n + 1 {
            return Err(Error::domain(format!("t-degree {d} exceeds n + 1 = {}", n + 1)));
        }
    }
    if !p.coeff(n + 1).is_zero() {
        return Err(Error::domain(format!("coefficient of t^{} must vanish", n + 1)));
    }
    let mut plus = Vec::with_capacity(n + 1);
    let mut running = SymF::zero(p.degree());
    for j in 0..=n {
        running = &running + &(&p.coeff(j) - &p.coeff(n + 1 - j));
        plus.push(running.clone());
    }
    let plus = TPoly::from_coeffs(p.degree(), plus);
    let minus = p - &plus;
    debug_assert!(plus.is_palindromic(n) && minus.is_palindromic(n + 1));
    Ok((plus, minus))
}
