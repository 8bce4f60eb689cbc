use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::SymF;
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;
use crate::util::factorial;

/// Polynomial `sum_j f_j t^j` whose coefficients are symmetric functions of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    degree: usize,
    coeffs: Vec<SymF>,
}

impl TPoly {
    pub fn zero(degree: usize) -> Self {
        TPoly { degree, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(SymF::one())
    }

    pub fn constant(f: SymF) -> Self {
        Self::from_coeffs(f.degree(), vec![f])
    }

    /// `f t^k`.
    pub fn monomial(f: SymF, k: usize) -> Self {
        let degree = f.degree();
        let mut coeffs = vec![SymF::zero(degree); k];
        coeffs.push(f);
        Self::from_coeffs(degree, coeffs)
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<SymF>) -> Self {
        for c in &coeffs {
            assert!(c.is_zero() || c.degree() == degree, "mixed degrees in a t-polynomial");
        }
        let mut p = TPoly { degree, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(SymF::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Symmetric-function degree of every coefficient.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[SymF] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> SymF {
        self.coeffs.get(j).cloned().unwrap_or_else(|| SymF::zero(self.degree))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`, `None` for zero.
    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn shift(&self, k: usize) -> TPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![SymF::zero(self.degree); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { degree: self.degree, coeffs }
    }

    pub fn mul_poly(&self, p: &IntPolynomial) -> TPoly {
        let mut out = TPoly::zero(self.degree);
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = self.scale(&BigRational::from_integer(c.clone())).shift(k);
            out = &out + &scaled;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TPoly {
        Self::from_coeffs(self.degree, self.coeffs.iter().map(|f| f.scale(c)).collect())
    }

    pub fn omega(&self) -> TPoly {
        Self::from_coeffs(self.degree, self.coeffs.iter().map(SymF::omega).collect())
    }

    /// Exact quotient by `1 - t`, or `None` when the value at `t = 1` is nonzero.
    pub fn div_one_minus_t(&self) -> Option<TPoly> {
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut running = SymF::zero(self.degree);
        for c in &self.coeffs {
            running = &running + c;
            q.push(running.clone());
        }
        if !running.is_zero() {
            return None;
        }
        q.pop();
        Some(Self::from_coeffs(self.degree, q))
    }

    /// Coefficientwise palindromicity `f_j = f_{n-j}`.
    pub fn is_palindromic(&self, n: usize) -> bool {
        match self.t_degree() {
            None => true,
            Some(d) if d > n => false,
            Some(_) => (0..=n).all(|j| self.coeff(j) == self.coeff(n - j)),
        }
    }

    /// `ex*` applied to each coefficient.
    pub fn ex_star(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(SymF::ex_star).collect()
    }

    /// `n! ex*`, the graded dimension; fails if it is not integral.
    pub fn dimension_shadow(&self) -> Result<IntPolynomial> {
        let nf = BigRational::from_integer(factorial(self.degree));
        let coeffs = self
            .ex_star()
            .into_iter()
            .map(|c| {
                let v = c * &nf;
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::domain(format!("non-integral dimension {v}")))
                }
            })
            .collect::<Result<Vec<BigInt>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs(self.degree, (0..len).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &rhs.scale(&-BigRational::one())
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let degree = self.degree + rhs.degree;
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero(degree);
        }
        let mut coeffs = vec![SymF::zero(degree); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TPoly::from_coeffs(degree, coeffs)
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            t: &'a [SymF],
        }
        Repr { degree: self.degree, t: &self.coeffs }.serialize(s)
    }
}

/// Truncated series `sum_{m <= N} c_m z^m` with `c_m` a t-polynomial of degree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    terms: Vec<TPoly>,
}

impl ZSeries {
    pub fn new(terms: Vec<TPoly>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::domain("a series needs at least the z^0 term"));
        }
        for (m, c) in terms.iter().enumerate() {
            if c.degree() != m && !c.is_zero() {
                return Err(Error::domain(format!("z^{m} coefficient has degree {}", c.degree())));
            }
        }
        let terms = terms.into_iter().enumerate().map(|(m, c)| if c.is_zero() { TPoly::zero(m) } else { c }).collect();
        Ok(ZSeries { terms })
    }

    pub fn one(truncation: usize) -> Self {
        let mut terms = vec![TPoly::one()];
        terms.extend((1..=truncation).map(TPoly::zero));
        ZSeries { terms }
    }

    /// `H(x; z) = sum h_m z^m`.
    pub fn h(truncation: usize) -> Self {
        ZSeries { terms: (0..=truncation).map(|m| TPoly::constant(SymF::h(m))).collect() }
    }

    /// `E(x; z) = sum e_m z^m`.
    pub fn e(truncation: usize) -> Self {
        ZSeries { terms: (0..=truncation).map(|m| TPoly::constant(SymF::e(m))).collect() }
    }

    pub fn truncation(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[TPoly] {
        &self.terms
    }

    pub fn term(&self, m: usize) -> &TPoly {
        &self.terms[m]
    }

    /// Substitutes `z -> t z`: the `z^m` coefficient is multiplied by `t^m`.
    pub fn t_scaled(&self) -> ZSeries {
        ZSeries { terms: self.terms.iter().enumerate().map(|(m, c)| c.shift(m)).collect() }
    }

    /// Substitutes `z -> -z`.
    pub fn z_negated(&self) -> ZSeries {
        let minus = -BigRational::one();
        ZSeries {
            terms: self
                .terms
                .iter()
                .enumerate()
                .map(|(m, c)| if m % 2 == 0 { c.clone() } else { c.scale(&minus) })
                .collect(),
        }
    }

    /// Multiplies every coefficient by a polynomial in `t`.
    pub fn mul_poly(&self, p: &IntPolynomial) -> ZSeries {
        ZSeries { terms: self.terms.iter().map(|c| c.mul_poly(p)).collect() }
    }

    pub fn omega(&self) -> ZSeries {
        ZSeries { terms: self.terms.iter().map(TPoly::omega).collect() }
    }

    pub fn pow(&self, e: usize) -> ZSeries {
        let mut acc = ZSeries::one(self.truncation());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; the `z^0` coefficient must be `1`.
    pub fn inverse(&self) -> Result<ZSeries> {
        if self.terms[0] != TPoly::one() {
            return Err(Error::domain("series inverse needs constant term 1"));
        }
        let n = self.truncation();
        let mut inv: Vec<TPoly> = vec![TPoly::one()];
        for m in 1..=n {
            let mut acc = TPoly::zero(m);
            for k in 1..=m {
                acc = &acc + &(&self.terms[k] * &inv[m - k]);
            }
            inv.push(acc.scale(&-BigRational::one()));
        }
        Ok(ZSeries { terms: inv })
    }

    /// Divides every coefficient by `1 - t`, reporting the first `z^m` that is not divisible.
    pub fn div_one_minus_t(&self, context: &str) -> Result<ZSeries> {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(m, c)| {
                c.div_one_minus_t()
                    .map(|q| if q.is_zero() { TPoly::zero(m) } else { q })
                    .ok_or_else(|| Error::NotDivisible { z_power: m, context: context.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZSeries { terms })
    }
}

impl Add<&ZSeries> for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        let n = self.truncation().min(rhs.truncation());
        ZSeries { terms: (0..=n).map(|m| &self.terms[m] + &rhs.terms[m]).collect() }
    }
}

impl Sub<&ZSeries> for &ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: &ZSeries) -> ZSeries {
        let n = self.truncation().min(rhs.truncation());
        ZSeries { terms: (0..=n).map(|m| &self.terms[m] - &rhs.terms[m]).collect() }
    }
}

impl Mul<&ZSeries> for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        let n = self.truncation().min(rhs.truncation());
        let terms = (0..=n)
            .map(|m| (0..=m).fold(TPoly::zero(m), |acc, k| &acc + &(&self.terms[k] * &rhs.terms[m - k])))
            .collect();
        ZSeries { terms }
    }
}

impl Serialize for ZSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            truncation: usize,
            z: &'a [TPoly],
        }
        Repr { truncation: self.truncation(), z: &self.terms }.serialize(s)
    }
}
