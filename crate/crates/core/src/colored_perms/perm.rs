use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `(sigma, eps)` of `Z_r wr S_n`.
///
/// `sigma` holds the one-line notation with values in `1..=n`, `eps[k-1]` is
/// the color of position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredPermutation {
    sigma: Vec<usize>,
    eps: Vec<usize>,
    r: usize,
}

impl ColoredPermutation {
    pub fn new(sigma: Vec<usize>, eps: Vec<usize>, r: usize) -> Result<Self> {
        let n = sigma.len();
        if r == 0 {
            return Err(Error::domain("r must be positive"));
        }
        if eps.len() != n {
            return Err(Error::domain("sigma and eps have different lengths"));
        }
        let mut seen = vec![false; n + 1];
        for &v in &sigma {
            if v == 0 || v > n || seen[v] {
                return Err(Error::domain(format!("{sigma:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        if let Some(c) = eps.iter().find(|&&c| c >= r) {
            return Err(Error::domain(format!("color {c} out of range for r = {r}")));
        }
        Ok(ColoredPermutation { sigma, eps, r })
    }

    pub fn identity(n: usize, r: usize) -> Self {
        ColoredPermutation { sigma: (1..=n).collect(), eps: vec![0; n], r }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn eps(&self) -> &[usize] {
        &self.eps
    }

    /// Is `k` (1-based, `1 <= k <= n`) a descent? Uses `sigma(n+1) = n+1`, `eps_{n+1} = 0`.
    pub fn is_descent(&self, k: usize) -> bool {
        let n = self.n();
        let (s, e) = (self.sigma[k - 1], self.eps[k - 1]);
        let (s1, e1) = if k == n { (n + 1, 0) } else { (self.sigma[k], self.eps[k]) };
        e > e1 || (e == e1 && s > s1)
    }

    pub fn des_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&k| self.is_descent(k)).collect()
    }

    pub fn asc_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&k| !self.is_descent(k)).collect()
    }

    pub fn des(&self) -> usize {
        (1..=self.n()).filter(|&k| self.is_descent(k)).count()
    }

    pub fn exc(&self) -> usize {
        self.sigma
            .iter()
            .zip(&self.eps)
            .enumerate()
            .filter(|&(i, (&s, &e))| s > i + 1 || (s == i + 1 && e != 0))
            .count()
    }

    pub fn exc_a(&self) -> usize {
        self.sigma.iter().zip(&self.eps).enumerate().filter(|&(i, (&s, &e))| s > i + 1 && e == 0).count()
    }

    pub fn color_sum(&self) -> usize {
        self.eps.iter().sum()
    }

    pub fn fexc(&self) -> usize {
        self.r * self.exc_a() + self.color_sum()
    }

    /// No fixed point of zero color.
    pub fn is_derangement(&self) -> bool {
        self.sigma.iter().zip(&self.eps).enumerate().all(|(i, (&s, &e))| s != i + 1 || e != 0)
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sigma
            .iter()
            .zip(&self.eps)
            .map(|(s, e)| if *e == 0 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        write!(f, "({})", parts.join(" "))
    }
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).permutations(n)
}

/// Advances `eps` to the next color vector in lexicographic order; false after the last.
fn next_colors(eps: &mut [usize], r: usize) -> bool {
    for c in eps.iter_mut().rev() {
        if *c + 1 < r {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}

/// All `r^n n!` elements of `Z_r wr S_n`, lexicographic in `(sigma, eps)`.
pub fn enumerate(n: usize, r: usize) -> impl Iterator<Item = ColoredPermutation> {
    assert!(r >= 1, "r must be positive");
    permutations(n).flat_map(move |sigma| {
        let mut next = Some(ColoredPermutation { eps: vec![0; n], sigma, r });
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_colors(&mut succ.eps, r) {
                next = Some(succ);
            }
            Some(cur)
        })
    })
}

/// Parallel tally over `Z_r wr S_n`: `visit` adds into a slot vector of length `len`.
/// The split is over `sigma`, so the result does not depend on the thread count.
pub(crate) fn tally<F>(n: usize, r: usize, len: usize, visit: F) -> Vec<u64>
where
    F: Fn(&ColoredPermutation, &mut [u64]) + Sync,
{
    let sigmas: Vec<Vec<usize>> = permutations(n).collect();
    sigmas
        .into_par_iter()
        .map(|sigma| {
            let mut counts = vec![0u64; len];
            let mut w = ColoredPermutation { eps: vec![0; n], sigma, r };
            loop {
                visit(&w, &mut counts);
                if !next_colors(&mut w.eps, r) {
                    break;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; len],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// True iff the sorted set has no two consecutive integers.
pub(crate) fn no_two_consecutive(set: &[usize]) -> bool {
    set.windows(2).all(|w| w[1] > w[0] + 1)
}
