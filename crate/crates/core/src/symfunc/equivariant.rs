use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{named_series, Partition, SeriesName, SymF, TPoly, ZSeries};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;
use crate::simplicial::{act, fixed_subcomplex, Triangulation};

/// `prod_i (1 - t^{λ_i})`.
fn cycle_factor(lambda: &Partition) -> IntPolynomial {
    lambda
        .parts()
        .iter()
        .map(|&k| &IntPolynomial::one() - &IntPolynomial::monomial(BigInt::from(1), k))
        .fold(IntPolynomial::one(), |acc, f| &acc * &f)
}

/// `value(t) p_λ / z_λ`.
fn class_term(lambda: &Partition, value: &IntPolynomial) -> TPoly {
    let weight = BigRational::new(BigInt::from(1), lambda.z());
    TPoly::constant(SymF::p(lambda.clone()).scale(&weight)).mul_poly(value)
}

fn assemble(n: usize, terms: Vec<TPoly>) -> TPoly {
    terms.iter().fold(TPoly::zero(n), |acc, t| &acc + t)
}

/// Graded character of the face module of `Gamma_{n,r}` under the `S_n` action,
/// computed from the h-polynomials of the fixed subcomplexes of class representatives.
pub fn stembridge_h(n: usize, r: usize) -> Result<TPoly> {
    if n == 0 {
        return Err(Error::domain("stembridge_h needs n >= 1"));
    }
    let tri = Triangulation::gamma_nr(n, r)?;
    let complex = tri.complex();
    let terms = Partition::all(n)
        .into_par_iter()
        .map(|lambda| {
            let w = lambda.representative();
            let fixed = fixed_subcomplex(complex, &act(&w, complex)?)?;
            let dim = fixed.dim().ok_or_else(|| Error::domain("fixed subcomplex is void"))?;
            let h = fixed.h_polynomial()?;
            let value = (&h * &cycle_factor(&lambda))
                .div_one_minus_t_pow((dim + 1) as usize)
                .ok_or_else(|| Error::domain(format!("fixed-point series for {lambda} is not a polynomial")))?;
            Ok(class_term(&lambda, &value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(n, terms))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StapledonMethod {
    ClosedForm,
    PerClass,
}

/// Numerator `P` of `sum_k (rk+1)^l t^k = P(t) / (1-t)^(l+1)`.
fn ehrhart_numerator(r: usize, l: usize) -> Result<IntPolynomial> {
    let extra = 3;
    let terms = l + 1 + extra;
    let series = IntPolynomial::new((0..terms).map(|k| BigInt::from(r * k + 1).pow(l as u32)).collect());
    let full = &series * &IntPolynomial::from_i64s(&[1, -1]).pow(l as u32 + 1);
    if (l + 1..terms).any(|j| !full.coeff(j).is_zero()) {
        return Err(Error::domain(format!("Ehrhart numerator for r={r}, l={l} has degree above {l}")));
    }
    Ok(IntPolynomial::new((0..=l).map(|j| full.coeff(j)).collect()))
}

/// Equivariant h*-polynomial of the dilated cube `[0, r]^n` under coordinate permutation.
pub fn stapledon_phi(n: usize, r: usize, method: StapledonMethod) -> Result<TPoly> {
    if n == 0 || r == 0 {
        return Err(Error::domain("stapledon_phi needs n >= 1 and r >= 1"));
    }
    match method {
        StapledonMethod::ClosedForm => Ok(named_series(SeriesName::PhiNr, r, n)?.term(n).clone()),
        StapledonMethod::PerClass => {
            let terms = Partition::all(n)
                .into_par_iter()
                .map(|lambda| {
                    let l = lambda.len();
                    let p = ehrhart_numerator(r, l)?;
                    let value = (&p * &cycle_factor(&lambda))
                        .div_one_minus_t_pow(l)
                        .ok_or_else(|| Error::domain(format!("h* value for {lambda} is not a polynomial")))?;
                    Ok(class_term(&lambda, &value))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(assemble(n, terms))
        }
    }
}

/// Number of lattice points of `[0, m]^n` fixed by permuting coordinates with `w`.
pub fn lattice_fixed_points(w: &[usize], m: usize) -> u64 {
    let n = w.len();
    let mut x = vec![0usize; n];
    let mut count = 0;
    loop {
        if (0..n).all(|i| x[w[i] - 1] == x[i]) {
            count += 1;
        }
        let mut i = 0;
        while i < n && x[i] == m {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        x[i] += 1;
    }
}

/// Checks `sum_λ z_λ^{-1} k^{l(λ)} prod(1 - t^{λ_i}) p_λ z^{|λ|} = H(z)^k / H(tz)^k` to order `z^N`.
pub fn power_sum_identity_check(k: usize, truncation: usize) -> Result<bool> {
    let lhs = ZSeries::new(
        (0..=truncation)
            .map(|m| {
                let terms = Partition::all(m)
                    .iter()
                    .map(|lambda| {
                        let kl = IntPolynomial::constant(BigInt::from(k).pow(lambda.len() as u32));
                        class_term(lambda, &(&kl * &cycle_factor(lambda)))
                    })
                    .collect();
                assemble(m, terms)
            })
            .collect(),
    )?;
    let h = ZSeries::h(truncation);
    let rhs = &h.pow(k) * &h.t_scaled().inverse()?.pow(k);
    Ok(lhs == rhs)
}
