use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::util::factorial;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not weakly decreasing")));
        }
        parts.shrink_to_fit();
        Ok(Partition(parts))
    }

    /// Sorts the parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union of parts (the partition indexing `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// `z_λ = prod_i i^{a_i} a_i!`, the order of the centralizer of a permutation of cycle type λ.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mult = self.0[i..].iter().take_while(|&&p| p == part).count();
            acc *= BigInt::from(part).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        acc
    }

    /// `n! / z_λ`, the size of the conjugacy class.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.z()
    }

    /// Partitions of `n` in decreasing lexicographic order, starting with `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for first in (1..=n.min(max)).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Cycle type of a permutation in one-line notation on `[n]`.
    pub fn cycle_type(w: &[usize]) -> Partition {
        let mut seen = vec![false; w.len()];
        let mut parts = Vec::new();
        for i in 0..w.len() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = w[j] - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    /// A permutation of cycle type λ: consecutive blocks `s -> s+1 -> ... -> s`.
    pub fn representative(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.weight());
        let mut start = 1;
        for &k in &self.0 {
            for j in 0..k {
                w.push(if j + 1 == k { start } else { start + j + 1 });
            }
            start += k;
        }
        w
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::domain(format!("bad part {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
