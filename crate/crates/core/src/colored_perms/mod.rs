//! Colored permutations `Z_r wr S_n`, their statistics, and the Eulerian,
//! derangement and binomial Eulerian polynomials built from them.
//!
//! Every polynomial here is obtained either by exhaustive enumeration or by
//! a binomial transform of enumerated polynomials. Enumeration is split over
//! the underlying permutation and run in parallel; tallies are exact.

mod perm;
mod signed;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;
use crate::util::binomial;

use perm::{no_two_consecutive, tally};

pub use perm::{enumerate, ColoredPermutation};
pub use signed::{enumerate_signed, gamma_b, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Des,
    Exc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerangementMethod {
    Direct,
    InclusionExclusion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum APlusMethod {
    /// `des` over elements whose first color is zero.
    PositiveFirstDes,
    /// `fexc / r` over elements whose color sum is divisible by `r`.
    FlagExc,
    /// `E_r((1 + t + ... + t^(r-1))^n A_n(t))`.
    Carlitz,
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::domain("r must be positive"));
    }
    Ok(())
}

fn from_counts(counts: Vec<u64>) -> IntPolynomial {
    IntPolynomial::from_u64s(&counts)
}

/// `A_{n,r}(t)`: the distribution of `des` or `exc` over `Z_r wr S_n`.
pub fn eulerian_poly(n: usize, r: usize, stat: Statistic) -> Result<IntPolynomial> {
    check_r(r)?;
    let counts = match stat {
        Statistic::Des => tally(n, r, n + 1, |w, c| c[w.des()] += 1),
        Statistic::Exc => tally(n, r, n + 1, |w, c| c[w.exc()] += 1),
    };
    Ok(from_counts(counts))
}

/// `d_{n,r}(t)`: `exc` over colored permutations with no fixed point of zero color.
pub fn derangement_poly(n: usize, r: usize, method: DerangementMethod) -> Result<IntPolynomial> {
    check_r(r)?;
    match method {
        DerangementMethod::Direct => Ok(from_counts(tally(n, r, n + 1, |w, c| {
            if w.is_derangement() {
                c[w.exc()] += 1;
            }
        }))),
        DerangementMethod::InclusionExclusion => {
            let mut acc = IntPolynomial::zero();
            for k in 0..=n {
                let term = eulerian_poly(k, r, Statistic::Exc)?.scale(&binomial(n, k));
                if (n - k).is_multiple_of(2) {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            Ok(acc)
        }
    }
}

/// Counts `xi^+_{n,r,i}` (indexed `0..=n/2`) and `xi^-_{n,r,i}` (indexed `0..=(n+1)/2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiCounts {
    pub plus: Vec<BigInt>,
    pub minus: Vec<BigInt>,
}

/// `xi^+_i` counts `w` with `Asc(w)` in `[2, n]`, of size `i`, no two consecutive, containing `n`;
/// `xi^-_i` counts `w` with `Asc(w)` in `[2, n-1]`, of size `i - 1`, no two consecutive.
pub fn xi_counts(n: usize, r: usize) -> Result<XiCounts> {
    check_r(r)?;
    if n == 0 {
        return Err(Error::domain("xi counts need n >= 1"));
    }
    let lp = n / 2 + 1;
    let lm = n.div_ceil(2) + 1;
    let counts = tally(n, r, lp + lm, |w, c| {
        let asc = w.asc_set();
        if asc.first() == Some(&1) || !no_two_consecutive(&asc) {
            return;
        }
        if asc.last() == Some(&n) {
            c[asc.len()] += 1;
        } else {
            c[lp + asc.len() + 1] += 1;
        }
    });
    let big = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect();
    Ok(XiCounts { plus: big(&counts[..lp]), minus: big(&counts[lp..]) })
}

fn assemble_d(xi: &XiCounts, n: usize) -> (IntPolynomial, IntPolynomial) {
    let plus =
        xi.plus.iter().enumerate().map(|(i, g)| IntPolynomial::one_plus_t_pow(n - 2 * i).shift(i).scale(g)).sum();
    let minus = xi
        .minus
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| IntPolynomial::one_plus_t_pow(n + 1 - 2 * i).shift(i).scale(g))
        .sum();
    (plus, minus)
}

/// `(d^+_{n,r}, d^-_{n,r})` from the `xi` counts, with `d^+_0 = 1` and `d^-_0 = 0`.
///
/// Requires `r >= 2`; the `r = 1` case is available through [`d_plus_minus_r1`].
pub fn d_plus_minus(n: usize, r: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    if r < 2 {
        return Err(Error::domain("d_plus_minus requires r >= 2; use d_plus_minus_r1 for r = 1"));
    }
    d_plus_minus_any(n, r)
}

fn d_plus_minus_any(n: usize, r: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    if n == 0 {
        return Ok((IntPolynomial::one(), IntPolynomial::zero()));
    }
    Ok(assemble_d(&xi_counts(n, r)?, n))
}

/// The `r = 1` split computed from the same `xi` counts, together with whether
/// `d^+ + d^-` reproduces the classical derangement polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1Split {
    pub plus: IntPolynomial,
    pub minus: IntPolynomial,
    pub sums_to_derangement: bool,
}

pub fn d_plus_minus_r1(n: usize) -> Result<R1Split> {
    let (plus, minus) = d_plus_minus_any(n, 1)?;
    let d = derangement_poly(n, 1, DerangementMethod::Direct)?;
    let sums_to_derangement = &plus + &minus == d;
    Ok(R1Split { plus, minus, sums_to_derangement })
}

/// `(A^+_{n,r}, A^-_{n,r}) = sum_k C(n,k) (d^+_{k,r}, d^-_{k,r})`.
///
/// For `r = 1` the minus part vanishes and the plus part is `A_n`.
pub fn a_plus_minus(n: usize, r: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    check_r(r)?;
    let mut plus = IntPolynomial::zero();
    let mut minus = IntPolynomial::zero();
    for k in 0..=n {
        let (dp, dm) = d_plus_minus_any(k, r)?;
        let c = binomial(n, k);
        plus += &dp.scale(&c);
        minus += &dm.scale(&c);
    }
    Ok((plus, minus))
}

fn binomial_transform(n: usize, parts: &[IntPolynomial]) -> IntPolynomial {
    parts.iter().enumerate().map(|(m, a)| a.shift(n - m).scale(&binomial(n, m))).sum()
}

/// `Ã_{n,r}(t) = sum_m C(n,m) t^(n-m) A_{m,r}(t)`.
pub fn binomial_eulerian(n: usize, r: usize) -> Result<IntPolynomial> {
    let parts = (0..=n).map(|m| eulerian_poly(m, r, Statistic::Des)).collect::<Result<Vec<_>>>()?;
    Ok(binomial_transform(n, &parts))
}

/// `(Ã^+_{n,r}, Ã^-_{n,r})`, the same transform applied to `A^+` and `A^-`.
pub fn binomial_eulerian_pm(n: usize, r: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    let mut plus = Vec::with_capacity(n + 1);
    let mut minus = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let (p, q) = a_plus_minus(m, r)?;
        plus.push(p);
        minus.push(q);
    }
    Ok((binomial_transform(n, &plus), binomial_transform(n, &minus)))
}

/// The classical form `1 + t sum_{m=1}^n C(n,m) A_m(t)` of `Ã_n`.
pub fn binomial_eulerian_classical(n: usize) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::zero();
    for m in 1..=n {
        acc += &eulerian_poly(m, 1, Statistic::Des)?.scale(&binomial(n, m));
    }
    Ok(&IntPolynomial::one() + &acc.shift(1))
}

/// Gamma-coefficients of `Ã^±_{n,r}`, from the `xi` counts and by direct enumeration.
///
/// `plus_*` has length `n/2 + 1`, `minus_*` has length `(n+1)/2 + 1` (entry 0 is zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTilde {
    pub plus_formula: Vec<BigInt>,
    pub minus_formula: Vec<BigInt>,
    pub plus_direct: Vec<BigInt>,
    pub minus_direct: Vec<BigInt>,
}

/// `gamma~^±_{n,r,i} = sum_k C(n,k) xi^±_{k,r,i}`, with `xi^+_{0,0} = 1`.
pub fn gamma_tilde_formula(n: usize, r: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    check_r(r)?;
    let mut plus = vec![BigInt::zero(); n / 2 + 1];
    let mut minus = vec![BigInt::zero(); n.div_ceil(2) + 1];
    plus[0] += BigInt::from(1);
    for k in 1..=n {
        let xi = xi_counts(k, r)?;
        let c = binomial(n, k);
        for (i, x) in xi.plus.iter().enumerate() {
            plus[i] += &c * x;
        }
        for (i, x) in xi.minus.iter().enumerate() {
            minus[i] += &c * x;
        }
    }
    Ok((plus, minus))
}

/// Direct counts over `Z_r wr S_{n+1}` of elements that start with a run
/// `w(1) > ... > w(m) = 1` of zero color, whose ascent set has no two
/// consecutive elements and
/// - for the plus list: has `i + 1` elements and contains `n + 1`;
/// - for the minus list: has `i` elements and lies in `[n]`.
pub fn gamma_tilde_direct(n: usize, r: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    check_r(r)?;
    let lp = n / 2 + 1;
    let lm = n.div_ceil(2) + 1;
    let big_n = n + 1;
    let counts = tally(big_n, r, lp + lm, |w, c| {
        let sigma = w.sigma();
        let m = sigma.iter().position(|&v| v == 1).expect("1 is a value") + 1;
        if w.eps()[..m].iter().any(|&e| e != 0) || sigma[..m].windows(2).any(|p| p[0] < p[1]) {
            return;
        }
        let asc = w.asc_set();
        if !no_two_consecutive(&asc) {
            return;
        }
        if asc.last() == Some(&big_n) {
            if let Some(i) = asc.len().checked_sub(1).filter(|&i| i < lp) {
                c[i] += 1;
            }
        } else if asc.len() < lm {
            c[lp + asc.len()] += 1;
        }
    });
    let big = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect();
    Ok((big(&counts[..lp]), big(&counts[lp..])))
}

pub fn gamma_tilde(n: usize, r: usize) -> Result<GammaTilde> {
    let (plus_formula, minus_formula) = gamma_tilde_formula(n, r)?;
    let (plus_direct, minus_direct) = gamma_tilde_direct(n, r)?;
    Ok(GammaTilde { plus_formula, minus_formula, plus_direct, minus_direct })
}

/// `A^+_{n,r}` by one of three independent descriptions.
pub fn a_plus_alt(n: usize, r: usize, method: APlusMethod) -> Result<IntPolynomial> {
    check_r(r)?;
    match method {
        APlusMethod::PositiveFirstDes => Ok(from_counts(tally(n, r, n + 1, |w, c| {
            if w.eps().first().is_none_or(|&e| e == 0) {
                c[w.des()] += 1;
            }
        }))),
        APlusMethod::FlagExc => Ok(from_counts(tally(n, r, n + 1, |w, c| {
            if w.color_sum() % r == 0 {
                c[w.fexc() / r] += 1;
            }
        }))),
        APlusMethod::Carlitz => {
            let an = eulerian_poly(n, 1, Statistic::Des)?;
            (&IntPolynomial::geometric_sum(r).pow(n as u32) * &an).e_r(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian_poly(2, 1, Statistic::Des).unwrap(), p(&[1, 1]));
        assert_eq!(eulerian_poly(2, 2, Statistic::Des).unwrap(), p(&[1, 6, 1]));
        assert_eq!(eulerian_poly(0, 3, Statistic::Exc).unwrap(), p(&[1]));
        assert_eq!(eulerian_poly(3, 1, Statistic::Exc).unwrap(), p(&[1, 4, 1]));
    }

    #[test]
    fn derangement_examples() {
        assert_eq!(derangement_poly(1, 2, DerangementMethod::Direct).unwrap(), p(&[0, 1]));
        assert_eq!(derangement_poly(2, 2, DerangementMethod::Direct).unwrap(), p(&[0, 4, 1]));
        assert_eq!(derangement_poly(2, 1, DerangementMethod::InclusionExclusion).unwrap(), p(&[0, 1]));
        assert_eq!(derangement_poly(0, 2, DerangementMethod::Direct).unwrap(), p(&[1]));
        assert_eq!(derangement_poly(1, 1, DerangementMethod::InclusionExclusion).unwrap(), IntPolynomial::zero());
    }

    #[test]
    fn xi_examples() {
        let xi = xi_counts(2, 2).unwrap();
        assert_eq!(ints(&xi.plus), vec![0, 3]);
        assert_eq!(ints(&xi.minus), vec![0, 1]);
        let xi = xi_counts(1, 1).unwrap();
        assert_eq!(ints(&xi.plus), vec![0]);
        // the lone element of S_1 ascends at 1, so it is not counted
        assert_eq!(ints(&xi.minus), vec![0, 0]);
    }

    #[test]
    fn d_split_examples() {
        assert_eq!(d_plus_minus(2, 2).unwrap(), (p(&[0, 3]), p(&[0, 1, 1])));
        assert_eq!(d_plus_minus(1, 2).unwrap(), (IntPolynomial::zero(), p(&[0, 1])));
        let (a, b) = d_plus_minus(3, 2).unwrap();
        assert_eq!(&a + &b, derangement_poly(3, 2, DerangementMethod::Direct).unwrap());
        assert!(d_plus_minus(2, 1).is_err());
        for n in 1..=5 {
            let s = d_plus_minus_r1(n).unwrap();
            assert!(s.sums_to_derangement, "n = {n}");
            assert!(s.minus.is_zero());
        }
    }

    #[test]
    fn a_split_examples() {
        assert_eq!(a_plus_minus(2, 2).unwrap(), (p(&[1, 3]), p(&[0, 3, 1])));
        assert_eq!(a_plus_minus(1, 2).unwrap(), (p(&[1]), p(&[0, 1])));
        assert_eq!(a_plus_minus(0, 3).unwrap(), (p(&[1]), IntPolynomial::zero()));
    }

    #[test]
    fn binomial_eulerian_examples() {
        assert_eq!(binomial_eulerian(3, 2).unwrap(), p(&[1, 26, 44, 8]));
        assert_eq!(binomial_eulerian_pm(5, 2).unwrap().0, p(&[1, 211, 1371, 1371, 211, 1]));
        assert_eq!(binomial_eulerian(1, 1).unwrap(), p(&[1, 1]));
        for n in 0..=5 {
            assert_eq!(binomial_eulerian(n, 1).unwrap(), binomial_eulerian_classical(n).unwrap());
        }
    }

    #[test]
    fn gamma_tilde_examples() {
        let g = gamma_tilde(2, 2).unwrap();
        assert_eq!(ints(&g.plus_formula), vec![1, 3]);
        assert_eq!(g.plus_formula, g.plus_direct);
        let g = gamma_tilde(4, 2).unwrap();
        assert_eq!(ints(&g.minus_formula), vec![0, 15, 98]);
        assert_eq!(g.minus_formula, g.minus_direct);
        let g = gamma_tilde(5, 2).unwrap();
        assert_eq!(ints(&g.plus_direct), vec![1, 206, 743]);
        assert_eq!(g.plus_formula, g.plus_direct);
    }

    #[test]
    fn a_plus_alt_examples() {
        assert_eq!(a_plus_alt(2, 2, APlusMethod::PositiveFirstDes).unwrap(), p(&[1, 3]));
        assert_eq!(a_plus_alt(2, 2, APlusMethod::Carlitz).unwrap(), p(&[1, 3]));
        assert_eq!(a_plus_alt(1, 3, APlusMethod::FlagExc).unwrap(), p(&[1]));
        for n in 1..=4 {
            for r in 1..=3 {
                let expected = a_plus_minus(n, r).unwrap().0;
                for m in [APlusMethod::PositiveFirstDes, APlusMethod::FlagExc, APlusMethod::Carlitz] {
                    assert_eq!(a_plus_alt(n, r, m).unwrap(), expected, "n={n} r={r} {m:?}");
                }
            }
        }
    }
}
