//! Exact univariate polynomials in `t` with integer coefficients.
//!
//! [`IntPolynomial`] is the carrier for every enumerative polynomial in the
//! crate. Besides ring arithmetic it provides the shape predicates used
//! throughout (palindromicity, unimodality, alternating increase), the
//! gamma-expansion and palindromic decomposition, the `E_r` operator and a
//! Sturm-sequence real-rootedness test.

mod gamma;
mod sturm;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::util::binomial;

pub use gamma::{
    gamma_expansion, is_alternatingly_increasing, is_unimodal, palindromic_decomposition, GammaExpansion,
    PalindromicPair,
};
pub use sturm::{distinct_real_root_count, is_real_rooted};

/// Dense polynomial `c_0 + c_1 t + ... + c_d t^d` with arbitrary-precision
/// integer coefficients. Trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `(1 + t)^k`, built from binomial coefficients.
    pub fn one_plus_t_pow(k: usize) -> Self {
        Self::new((0..=k).map(|j| binomial(k, j)).collect())
    }

    /// `1 + t + ... + t^(k-1)`.
    pub fn geometric_sum(k: usize) -> Self {
        Self::new(vec![BigInt::one(); k])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Divide by `t^k`, failing if a dropped coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::domain(format!("polynomial is not divisible by t^{k}")));
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact quotient by `1 - t`, or `None` when `p(1) != 0`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        // p = (1 - t) q  =>  q_k = p_0 + ... + p_k
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut running = BigInt::zero();
        for c in &self.coeffs {
            running += c;
            q.push(running.clone());
        }
        if !running.is_zero() {
            return None;
        }
        q.pop();
        Some(Self::new(q))
    }

    /// Exact quotient by `(1 - t)^k`.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Option<Self> {
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.div_one_minus_t()?;
        }
        Some(acc)
    }

    /// Center `(a + b) / 2` where `a`, `b` are the lowest and highest
    /// exponents with nonzero coefficient.
    pub fn center(&self) -> Result<Ratio<i64>> {
        match (self.low_degree(), self.degree()) {
            (Some(a), Some(b)) => Ok(Ratio::new((a + b) as i64, 2)),
            _ => Err(Error::domain("center undefined for zero polynomial")),
        }
    }

    /// True iff the coefficient of `t^j` equals that of `t^(n-j)` for all `j`.
    pub fn is_palindromic(&self, n: usize) -> bool {
        match self.degree() {
            None => true,
            Some(d) if d > n => false,
            Some(_) => (0..=n).all(|j| self.coeff(j) == self.coeff(n - j)),
        }
    }

    /// The operator `E_r`: keeps `t^k` as `t^(k/r)` when `r | k`, drops it otherwise.
    pub fn e_r(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::domain("E_r requires r >= 1"));
        }
        Ok(Self::new(self.coeffs.iter().step_by(r).cloned().collect()))
    }

    /// First `terms + 1` coefficients of `self / (1 - t)^m`.
    pub fn geometric_expand(&self, m: usize, terms: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = (0..=terms).map(|k| self.coeff(k)).collect();
        for _ in 0..m {
            for k in 1..out.len() {
                let prev = out[k - 1].clone();
                out[k] += prev;
            }
        }
        out
    }

    /// Coefficients as decimal strings, ascending degree.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Semicolon-joined coefficients, ascending degree (`"1;8;4"`).
    pub fn to_csv_field(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.to_decimal_strings().join(";")
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{abs}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        *self = &*self - rhs;
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr { coeffs: self.to_decimal_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
