use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::perm::no_two_consecutive;
use super::ColoredPermutation;
use crate::error::{Error, Result};

/// A signed permutation in one-line notation `w(1) ... w(n)`, `{|w(i)|} = [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    values: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::domain(format!("{values:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `i` is a descent iff `w(i) > 0` and `w(i) > w(i+1)`, or both are negative
    /// and `|w(i)| > |w(i+1)|`; here `w(n+1) = 0`.
    pub fn des_b_set(&self) -> Vec<usize> {
        let n = self.n();
        (1..=n)
            .filter(|&i| {
                let a = self.values[i - 1];
                let b = if i == n { 0 } else { self.values[i] };
                (a > 0 && a > b) || (a < 0 && b < 0 && a.abs() > b.abs())
            })
            .collect()
    }

    pub fn asc_b_set(&self) -> Vec<usize> {
        let des = self.des_b_set();
        (1..=self.n()).filter(|i| !des.contains(i)).collect()
    }

    /// Positive entries get color 0, negative entries color 1.
    pub fn to_colored(&self) -> ColoredPermutation {
        let sigma = self.values.iter().map(|v| v.unsigned_abs() as usize).collect();
        let eps = self.values.iter().map(|&v| usize::from(v < 0)).collect();
        ColoredPermutation::new(sigma, eps, 2).expect("valid by construction")
    }

    pub fn from_colored(w: &ColoredPermutation) -> Result<Self> {
        if w.r() != 2 {
            return Err(Error::domain("only r = 2 colored permutations are signed permutations"));
        }
        let values =
            w.sigma().iter().zip(w.eps()).map(|(&s, &e)| if e == 0 { s as i64 } else { -(s as i64) }).collect();
        Ok(SignedPermutation { values })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.values.iter().join(" "))
    }
}

/// All `2^n n!` signed permutations of `[n]`.
pub fn enumerate_signed(n: usize) -> impl Iterator<Item = SignedPermutation> {
    super::enumerate(n, 2).map(|w| SignedPermutation::from_colored(&w).expect("r = 2"))
}

/// Counts of signed permutations whose `Des_B` has no two consecutive elements,
/// split by whether `n` is a descent: `(plus, minus)` indexed by `|Des_B|`.
pub fn gamma_b(n: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut plus = vec![0u64; n / 2 + 1];
    let mut minus = vec![0u64; n.div_ceil(2) + 1];
    for w in enumerate_signed(n) {
        let des = w.des_b_set();
        if !no_two_consecutive(&des) {
            continue;
        }
        if des.last() == Some(&n) {
            minus[des.len()] += 1;
        } else {
            plus[des.len()] += 1;
        }
    }
    (plus.into_iter().map(BigInt::from).collect(), minus.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    fn as_i64(v: Vec<BigInt>) -> Vec<i64> {
        v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn des_b_examples() {
        assert_eq!(s(&[2, -1]).des_b_set(), vec![1]);
        assert_eq!(s(&[1]).des_b_set(), vec![1]);
        assert!(s(&[-1]).des_b_set().is_empty());
        assert!(s(&[-1, -2]).des_b_set().is_empty());
        assert_eq!(s(&[-2, -1]).des_b_set(), vec![1]);
        assert_eq!(s(&[-2, -1]).asc_b_set(), vec![2]);
    }

    #[test]
    fn gamma_b_small() {
        let (p, m) = gamma_b(2);
        assert_eq!(as_i64(p), vec![1, 3]);
        assert_eq!(as_i64(m), vec![0, 3]);
        let (_, m) = gamma_b(3);
        assert_eq!(as_i64(m), vec![0, 7, 11]);
    }

    #[test]
    fn colored_round_trip() {
        for w in enumerate_signed(3) {
            assert_eq!(SignedPermutation::from_colored(&w.to_colored()).unwrap(), w);
        }
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![0]).is_err());
    }
}
