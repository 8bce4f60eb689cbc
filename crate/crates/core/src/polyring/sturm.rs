use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPolynomial;

type RatPoly = Vec<BigRational>;

fn to_rat(p: &IntPolynomial) -> RatPoly {
    p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &RatPoly) -> RatPoly {
    let mut d: RatPoly =
        p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect();
    trim(&mut d);
    d
}

/// Remainder of `a` modulo the nonzero `b`.
fn rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let lead = b.last().expect("division by zero polynomial");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        trim(&mut r);
    }
    r
}

fn gcd_degree(a: &RatPoly, b: &RatPoly) -> usize {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

/// Number of distinct real roots, from the Sturm sequence evaluated at `-inf` and `+inf`.
pub fn distinct_real_root_count(p: &IntPolynomial) -> usize {
    let p0 = to_rat(p);
    if p0.len() <= 1 {
        return 0;
    }
    let mut seq = vec![p0.clone(), derivative(&p0)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r: RatPoly = rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    let sign = |c: &BigRational| if c.is_positive() { 1i8 } else { -1 };
    let at_pos_inf = seq.iter().map(|q| sign(q.last().unwrap()));
    let at_neg_inf = seq.iter().map(|q| {
        let s = sign(q.last().unwrap());
        if (q.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    });
    sign_changes(at_neg_inf) - sign_changes(at_pos_inf)
}

/// True iff every complex root of `p` is real. Constants count as real-rooted.
///
/// The number of distinct complex roots is `deg p - deg gcd(p, p')`; the
/// polynomial is real-rooted exactly when Sturm's count of distinct real
/// roots reaches that number.
pub fn is_real_rooted(p: &IntPolynomial) -> bool {
    let rat = to_rat(p);
    if rat.len() <= 1 {
        return true;
    }
    let distinct = (rat.len() - 1) - gcd_degree(&rat, &derivative(&rat));
    distinct_real_root_count(p) == distinct
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert!(is_real_rooted(&p(&[1, 8, 4])));
        assert!(!is_real_rooted(&p(&[1, 1, 1])));
        assert!(is_real_rooted(&p(&[0, 1])));
        assert!(is_real_rooted(&p(&[5])));
    }

    #[test]
    fn repeated_roots() {
        // (1+t)^3 t^2
        let q = &IntPolynomial::one_plus_t_pow(3) * &p(&[0, 0, 1]);
        assert!(is_real_rooted(&q));
        assert_eq!(distinct_real_root_count(&q), 2);
        // (1+t^2)^2 has no real roots
        let q = p(&[1, 0, 1]).pow(2);
        assert!(!is_real_rooted(&q));
        assert_eq!(distinct_real_root_count(&q), 0);
    }

    #[test]
    fn root_counts_match_products_of_linear_factors() {
        let roots = [-3i64, -1, 2, 5];
        let q = roots.iter().fold(IntPolynomial::one(), |acc, &a| &acc * &p(&[-a, 1]));
        assert_eq!(distinct_real_root_count(&q), 4);
        let with_complex = &q * &p(&[2, 2, 1]);
        assert_eq!(distinct_real_root_count(&with_complex), 4);
        assert!(!is_real_rooted(&with_complex));
    }
}
