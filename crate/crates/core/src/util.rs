//! Small shared helpers.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Number of elements of `Z_r wr S_n`, i.e. `r^n * n!`, saturating at `u128::MAX`.
pub fn group_order(n: usize, r: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=n {
        acc = acc.saturating_mul(i as u128).saturating_mul(r as u128);
    }
    acc
}

/// Default enumeration budget used by the front end.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Fails with [`Error::Budget`] when `Z_r wr S_n` has more than `budget` elements.
pub fn check_budget(n: usize, r: usize, budget: u128) -> Result<()> {
    let requested = group_order(n, r);
    if requested > budget {
        return Err(Error::Budget { requested, budget });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        let row: Vec<i64> = (0..=5).map(|k| binomial(5, k).try_into().unwrap()).collect();
        assert_eq!(row, vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(binomial(3, 4), BigInt::from(0));
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(3, 3), 162);
        assert_eq!(group_order(0, 5), 1);
        assert!(check_budget(8, 4, DEFAULT_BUDGET).is_err());
        assert!(check_budget(6, 3, DEFAULT_BUDGET).is_ok());
    }
}
