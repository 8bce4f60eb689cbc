use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Partition;
use crate::error::{Error, Result};
use crate::util::factorial;

/// Homogeneous symmetric function `sum_μ c_μ p_μ` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymF {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl SymF {
    pub fn zero(degree: usize) -> Self {
        SymF { degree, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The power sum `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        let degree = lambda.weight();
        SymF { degree, coeffs: BTreeMap::from([(lambda, BigRational::one())]) }
    }

    /// Builds `sum c_μ p_μ`, rejecting partitions of the wrong weight.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Result<Self> {
        let mut f = SymF::zero(degree);
        for (mu, c) in terms {
            if mu.weight() != degree {
                return Err(Error::domain(format!("p_{{{mu}}} does not have degree {degree}")));
            }
            f.add_term(mu, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `h_n = sum_{μ ⊢ n} p_μ / z_μ`.
    pub fn h(n: usize) -> Self {
        let terms = Partition::all(n).into_iter().map(|mu| {
            let c = BigRational::new(BigInt::one(), mu.z());
            (mu, c)
        });
        Self::from_terms(n, terms).expect("weights match")
    }

    /// `e_n = sum_{μ ⊢ n} (-1)^(n - ℓ(μ)) p_μ / z_μ`.
    pub fn e(n: usize) -> Self {
        let terms = Partition::all(n).into_iter().map(|mu| {
            let sign = if (n - mu.len()).is_multiple_of(2) { 1 } else { -1 };
            let c = BigRational::new(BigInt::from(sign), mu.z());
            (mu, c)
        });
        Self::from_terms(n, terms).expect("weights match")
    }

    /// The Schur function `s_λ = sum_μ χ^λ(μ) p_μ / z_μ`.
    pub fn schur(lambda: &Partition) -> Self {
        let n = lambda.weight();
        let terms = Partition::all(n).into_iter().map(|mu| {
            let c = BigRational::new(BigInt::from(character(lambda, &mu)), mu.z());
            (mu, c)
        });
        Self::from_terms(n, terms).expect("weights match")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> SymF {
        if c.is_zero() {
            return SymF::zero(self.degree);
        }
        SymF { degree: self.degree, coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// The involution `ω`: `p_μ -> (-1)^(|μ| - ℓ(μ)) p_μ`.
    pub fn omega(&self) -> SymF {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mu, c)| {
                let c = if (mu.weight() - mu.len()) % 2 == 0 { c.clone() } else { -c };
                (mu.clone(), c)
            })
            .collect();
        SymF { degree: self.degree, coeffs }
    }

    /// `ex*`: the coefficient of `p_{1^n}`.
    pub fn ex_star(&self) -> BigRational {
        self.coeff(&Partition::from_unsorted(vec![1; self.degree]))
    }

    /// Coefficients `<f, s_λ> = sum_μ c_μ χ^λ(μ)` over all `λ ⊢ n`; zeros are omitted.
    pub fn schur_expansion(&self) -> BTreeMap<Partition, BigRational> {
        let mut out = BTreeMap::new();
        for lambda in Partition::all(self.degree) {
            let c: BigRational = self.coeffs.iter().map(|(mu, c)| c * rat(character(&lambda, mu))).sum();
            if !c.is_zero() {
                out.insert(lambda, c);
            }
        }
        out
    }

    /// Nonnegative Schur coefficients. A non-integer coefficient is reported
    /// as an error since every function produced by this crate should be a
    /// character.
    pub fn is_schur_positive(&self) -> Result<bool> {
        let exp = self.schur_expansion();
        if let Some((lambda, c)) = exp.iter().find(|(_, c)| !c.is_integer()) {
            return Err(Error::domain(format!("non-integer Schur coefficient {c} at s_{{{lambda}}}")));
        }
        Ok(exp.values().all(|c| !c.is_negative()))
    }

    fn check_compatible(&self, other: &SymF) {
        assert!(
            self.degree == other.degree || self.is_zero() || other.is_zero(),
            "adding symmetric functions of degrees {} and {}",
            self.degree,
            other.degree
        );
    }
}

impl Add<&SymF> for &SymF {
    type Output = SymF;
    fn add(self, rhs: &SymF) -> SymF {
        self.check_compatible(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        let mut out = self.clone();
        for (mu, c) in &rhs.coeffs {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SymF> for &SymF {
    type Output = SymF;
    fn sub(self, rhs: &SymF) -> SymF {
        self + &(-rhs)
    }
}

impl Neg for &SymF {
    type Output = SymF;
    fn neg(self) -> SymF {
        SymF { degree: self.degree, coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl Mul<&SymF> for &SymF {
    type Output = SymF;
    fn mul(self, rhs: &SymF) -> SymF {
        let mut out = SymF::zero(self.degree + rhs.degree);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }
}

impl Serialize for SymF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            degree: usize,
            p: BTreeMap<String, String>,
        }
        Repr { degree: self.degree, p: self.coeffs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect() }
            .serialize(s)
    }
}

thread_local! {
    static CHARACTERS: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

/// Irreducible character `χ^λ(μ)` of `S_n` by the Murnaghan–Nakayama rule,
/// removing rim hooks of length `μ_1, μ_2, ...` on the beta-number abacus.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    if let Some(v) = CHARACTERS.with(|m| m.borrow().get(&(lambda.clone(), mu.clone())).copied()) {
        return v;
    }
    let value = match mu.parts().split_first() {
        None => 1,
        Some((&k, rest)) => {
            let rest = Partition::new(rest.to_vec()).expect("suffix of a partition");
            let l = lambda.len();
            let betas: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
            let mut total = 0i64;
            for (idx, &b) in betas.iter().enumerate() {
                if b < k || betas.contains(&(b - k)) {
                    continue;
                }
                let crossed = betas.iter().filter(|&&x| x > b - k && x < b).count();
                let mut moved = betas.clone();
                moved[idx] = b - k;
                moved.sort_unstable_by(|a, c| c.cmp(a));
                let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
                let smaller = Partition::from_unsorted(parts);
                let sign = if crossed % 2 == 0 { 1 } else { -1 };
                total += sign * character(&smaller, &rest);
            }
            total
        }
    };
    CHARACTERS.with(|m| m.borrow_mut().insert((lambda.clone(), mu.clone()), value));
    value
}

/// Number of standard Young tableaux of shape λ, by the hook length formula.
pub fn standard_tableaux(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&p| p > j).count();
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(lambda.weight()) / hooks
}
