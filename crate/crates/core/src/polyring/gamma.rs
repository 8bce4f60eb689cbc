use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Coefficients `gamma_0, ..., gamma_{floor(n/2)}` with
/// `p(t) = sum_i gamma_i t^i (1 + t)^(n - 2i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpansion {
    pub n: usize,
    pub gammas: Vec<BigInt>,
}

impl GammaExpansion {
    pub fn reconstruct(&self) -> IntPolynomial {
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| IntPolynomial::one_plus_t_pow(self.n - 2 * i).shift(i).scale(g))
            .sum()
    }

    pub fn is_gamma_positive(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    pub fn gammas_i64(&self) -> Option<Vec<i64>> {
        self.gammas.iter().map(|g| i64::try_from(g).ok()).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct GammaRepr {
    n: usize,
    gammas: Vec<String>,
}

impl Serialize for GammaExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GammaRepr { n: self.n, gammas: self.gammas.iter().map(|g| g.to_string()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GammaExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GammaRepr::deserialize(d)?;
        let gammas = repr
            .gammas
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if gammas.len() != repr.n / 2 + 1 {
            return Err(serde::de::Error::custom("gamma list length must be floor(n/2) + 1"));
        }
        Ok(GammaExpansion { n: repr.n, gammas })
    }
}

/// Gamma-expansion of a polynomial palindromic about `n/2`.
///
/// The returned coefficients may be negative; positivity is a separate
/// question answered by [`GammaExpansion::is_gamma_positive`].
pub fn gamma_expansion(p: &IntPolynomial, n: usize) -> Result<GammaExpansion> {
    if !p.is_palindromic(n) {
        return Err(Error::domain(format!("{p} is not palindromic with center {n}/2")));
    }
    let mut residual = p.clone();
    let mut gammas = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = residual.coeff(i);
        if !g.is_zero() {
            residual -= &IntPolynomial::one_plus_t_pow(n - 2 * i).shift(i).scale(&g);
        }
        gammas.push(g);
    }
    debug_assert!(residual.is_zero());
    Ok(GammaExpansion { n, gammas })
}

/// The unique `p = plus + minus` with `plus` palindromic about `n/2` and
/// `minus` palindromic about `(n+1)/2` with zero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromicPair {
    pub n: usize,
    pub plus: IntPolynomial,
    pub minus: IntPolynomial,
}

/// Splits `p` into its palindromic parts with centers `n/2` and `(n+1)/2`.
///
/// Writing `N(t) = t^(n+1) p(1/t) - p(t)`, the center-`n/2` part is
/// `N(t) / (t - 1)`, whose coefficients are the partial sums
/// `plus_j = sum_{i <= j} (p_i - p_{n+1-i})`.
pub fn palindromic_decomposition(p: &IntPolynomial, n: usize) -> Result<PalindromicPair> {
    let deg = p.degree().unwrap_or(0);
    if deg > n + 1 {
        return Err(Error::domain(format!("degree {deg} exceeds n + 1 = {} in palindromic decomposition", n + 1)));
    }
    if !p.coeff(n + 1).is_zero() {
        return Err(Error::domain(format!(
            "coefficient of t^{} is nonzero, so the center-(n+1)/2 part would have a nonzero constant term",
            n + 1
        )));
    }
    let mut plus = Vec::with_capacity(n + 1);
    let mut running = BigInt::zero();
    for j in 0..=n {
        running += p.coeff(j) - p.coeff(n + 1 - j);
        plus.push(running.clone());
    }
    let plus = IntPolynomial::new(plus);
    let minus = p - &plus;
    debug_assert!(plus.is_palindromic(n) && minus.is_palindromic(n + 1));
    Ok(PalindromicPair { n, plus, minus })
}

fn require_nonnegative(p: &IntPolynomial) -> Result<()> {
    if p.has_nonnegative_coeffs() {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} has a negative coefficient")))
    }
}

/// `a_0 <= a_1 <= ... <= a_k >= a_{k+1} >= ...` over the stored coefficients.
pub fn is_unimodal(p: &IntPolynomial) -> Result<bool> {
    require_nonnegative(p)?;
    let c = p.coeffs();
    let mut k = 0;
    while k + 1 < c.len() && c[k] <= c[k + 1] {
        k += 1;
    }
    Ok(c[k.min(c.len())..].windows(2).all(|w| w[0] >= w[1]))
}

/// `a_0 <= a_n <= a_1 <= a_{n-1} <= ... <= a_{floor((n+1)/2)}` and `a_k = 0` for `k > n`.
pub fn is_alternatingly_increasing(p: &IntPolynomial, n: usize) -> Result<bool> {
    require_nonnegative(p)?;
    if p.degree().is_some_and(|d| d > n) {
        return Ok(false);
    }
    let mut order = Vec::with_capacity(n + 1);
    let (mut lo, mut hi) = (0usize, n);
    while order.len() < n + 1 {
        order.push(lo);
        if order.len() < n + 1 {
            order.push(hi);
        }
        lo += 1;
        hi = hi.saturating_sub(1);
    }
    Ok(order.windows(2).all(|w| p.coeff(w[0]) <= p.coeff(w[1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn gammas(p: &IntPolynomial, n: usize) -> Vec<i64> {
        gamma_expansion(p, n).unwrap().gammas_i64().unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gammas(&p(&[1, 4, 1]), 2), vec![1, 2]);
        assert_eq!(gammas(&p(&[1, 65, 185, 65, 1]), 4), vec![1, 61, 57]);
        assert_eq!(gammas(&p(&[0, 7, 25, 7]), 4), vec![0, 7, 11]);
        assert!(gamma_expansion(&p(&[1, 26, 44, 8]), 3).is_err());
    }

    #[test]
    fn negative_gamma_is_reported_not_rejected() {
        // (1+t)^2 - t: palindromic but gamma_1 = -1
        let g = gamma_expansion(&p(&[1, 1, 1]), 2).unwrap();
        assert_eq!(g.gammas_i64().unwrap(), vec![1, -1]);
        assert!(!g.is_gamma_positive());
    }

    #[test]
    fn decomposition_examples() {
        let d = palindromic_decomposition(&p(&[1, 8, 4]), 2).unwrap();
        assert_eq!((d.plus, d.minus), (p(&[1, 5, 1]), p(&[0, 3, 3])));
        let d = palindromic_decomposition(&p(&[1, 1]), 1).unwrap();
        assert_eq!((d.plus, d.minus), (p(&[1, 1]), IntPolynomial::zero()));
        let d = palindromic_decomposition(&p(&[1, 26, 44, 8]), 3).unwrap();
        assert_eq!((d.plus, d.minus), (p(&[1, 19, 19, 1]), p(&[0, 7, 25, 7])));
    }

    #[test]
    fn decomposition_rejects_out_of_range_degree() {
        assert!(palindromic_decomposition(&p(&[1, 1, 1, 1]), 1).is_err());
        assert!(palindromic_decomposition(&p(&[1, 1, 1]), 1).is_err());
    }

    #[test]
    fn unimodal_and_alternating_examples() {
        assert!(is_unimodal(&p(&[1, 8, 4])).unwrap());
        assert!(is_unimodal(&p(&[1, 1, 2, 1])).unwrap());
        assert!(!is_unimodal(&p(&[1, 2, 1, 2])).unwrap());
        assert!(!is_unimodal(&p(&[1, 0, 1])).unwrap());
        assert!(is_unimodal(&IntPolynomial::zero()).unwrap());
        assert!(is_alternatingly_increasing(&p(&[1, 2]), 1).unwrap());
        assert!(is_alternatingly_increasing(&p(&[1, 26, 44, 8]), 3).unwrap());
        assert!(!is_alternatingly_increasing(&p(&[2, 1]), 1).unwrap());
        assert!(is_unimodal(&p(&[1, -1])).is_err());
        assert!(is_alternatingly_increasing(&p(&[1, -1]), 1).is_err());
    }

    fn gamma_strategy() -> impl Strategy<Value = GammaExpansion> {
        (0usize..8).prop_flat_map(|n| {
            proptest::collection::vec(-50i64..50, n / 2 + 1)
                .prop_map(move |g| GammaExpansion { n, gammas: g.into_iter().map(BigInt::from).collect() })
        })
    }

    proptest! {
        #[test]
        fn gamma_round_trip(g in gamma_strategy()) {
            let poly = g.reconstruct();
            prop_assert_eq!(gamma_expansion(&poly, g.n).unwrap(), g);
        }

        #[test]
        fn gamma_positive_implies_unimodal(g in gamma_strategy()) {
            let g = GammaExpansion { n: g.n, gammas: g.gammas.iter().map(|x| x.abs()).collect() };
            prop_assert!(is_unimodal(&g.reconstruct()).unwrap());
        }

        #[test]
        fn right_gamma_positive_implies_alternating(
            a in gamma_strategy(),
            b in proptest::collection::vec(0i64..50, 5),
        ) {
            let n = a.n;
            let plus = GammaExpansion { n, gammas: a.gammas.iter().map(|x| x.abs()).collect() };
            // minus part: gamma-positive about (n+1)/2 with gamma_0 = 0
            let mut mg: Vec<BigInt> = b.into_iter().take(n.div_ceil(2) + 1).map(BigInt::from).collect();
            mg.resize(n.div_ceil(2) + 1, BigInt::zero());
            mg[0] = BigInt::zero();
            let minus = GammaExpansion { n: n + 1, gammas: mg };
            let total = &plus.reconstruct() + &minus.reconstruct();
            let pair = palindromic_decomposition(&total, n).unwrap();
            prop_assert_eq!(&pair.plus, &plus.reconstruct());
            prop_assert_eq!(&pair.minus, &minus.reconstruct());
            prop_assert!(is_alternatingly_increasing(&total, n).unwrap());
        }

        #[test]
        fn e_r_is_linear(
            a in proptest::collection::vec(-20i64..20, 0..10),
            b in proptest::collection::vec(-20i64..20, 0..10),
            r in 1usize..5,
        ) {
            let (pa, pb) = (IntPolynomial::from_i64s(&a), IntPolynomial::from_i64s(&b));
            prop_assert_eq!((&pa + &pb).e_r(r).unwrap(), &pa.e_r(r).unwrap() + &pb.e_r(r).unwrap());
        }

        #[test]
        fn json_round_trip(a in proptest::collection::vec(-1000i64..1000, 0..8)) {
            let poly = IntPolynomial::from_i64s(&a);
            let s = serde_json::to_string(&poly).unwrap();
            prop_assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), poly);
        }
    }

    #[test]
    fn json_schema() {
        assert_eq!(serde_json::to_string(&p(&[1, 8, 4])).unwrap(), r#"{"coeffs":["1","8","4"]}"#);
        let g = gamma_expansion(&p(&[1, 65, 185, 65, 1]), 4).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":4,"gammas":["1","61","57"]}"#);
        assert_eq!(serde_json::from_str::<GammaExpansion>(r#"{"n":4,"gammas":["1","61","57"]}"#).unwrap(), g);
    }

    #[test]
    fn worpitzky_identity() {
        // A_n / (1-t)^(n+1) = sum_k (k+1)^n t^k, with A_n from the standard recurrence
        let mut eulerian = vec![IntPolynomial::one()];
        for n in 1..=6usize {
            // A_n(t) = (1 + (n-1) t) A_{n-1}(t) + t(1-t) A'_{n-1}(t)
            let prev = &eulerian[n - 1];
            let deriv = IntPolynomial::new(
                prev.coeffs().iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect(),
            );
            let next = &(&p(&[1, n as i64 - 1]) * prev) + &(&p(&[0, 1, -1]) * &deriv);
            eulerian.push(next);
        }
        for (n, a) in eulerian.iter().enumerate().skip(1) {
            let series = a.geometric_expand(n + 1, 8);
            for (k, c) in series.iter().enumerate() {
                assert_eq!(*c, BigInt::from(k + 1).pow(n as u32), "n={n} k={k}");
            }
        }
    }
}
