//! Acceptance criteria, one line per criterion. Runs without the libtest harness.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

use colored_eulerian::colored_perms::{
    a_plus_alt, a_plus_minus, binomial_eulerian, binomial_eulerian_classical, binomial_eulerian_pm, d_plus_minus,
    d_plus_minus_r1, derangement_poly, eulerian_poly, gamma_b, gamma_tilde, APlusMethod, DerangementMethod, Statistic,
};
use colored_eulerian::polyring::{gamma_expansion, is_real_rooted, IntPolynomial};
use colored_eulerian::simplicial::Triangulation;
use colored_eulerian::symfunc::{
    lattice_fixed_points, named_series, stapledon_phi, stembridge_h, Partition, SeriesName, StapledonMethod, SymF,
    TPoly,
};
use colored_eulerian::verify::{self, Bounds, Suite};

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn big(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: impl std::fmt::Display, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn lib<T>(r: colored_eulerian::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn reference_tables() -> Outcome {
    let whole: [&[i64]; 5] =
        [&[1, 2], &[1, 8, 4], &[1, 26, 44, 8], &[1, 80, 328, 208, 16], &[1, 242, 2072, 3072, 912, 32]];
    let plus: [&[i64]; 5] = [&[1, 1], &[1, 5, 1], &[1, 19, 19, 1], &[1, 65, 185, 65, 1], &[1, 211, 1371, 1371, 211, 1]];
    let minus: [&[i64]; 5] =
        [&[0, 1], &[0, 3, 3], &[0, 7, 25, 7], &[0, 15, 143, 143, 15], &[0, 31, 701, 1701, 701, 31]];
    let gamma_plus: [&[i64]; 5] = [&[1], &[1, 3], &[1, 16], &[1, 61, 57], &[1, 206, 743]];
    let gamma_minus: [&[i64]; 5] = [&[0, 1], &[0, 3], &[0, 7, 11], &[0, 15, 98], &[0, 31, 577, 361]];
    for n in 1..=5 {
        let i = n - 1;
        expect(format!("B~_{n}"), lib(binomial_eulerian(n, 2))?, poly(whole[i]))?;
        let (p, m) = lib(binomial_eulerian_pm(n, 2))?;
        expect(format!("B~+_{n}"), p.clone(), poly(plus[i]))?;
        expect(format!("B~-_{n}"), m.clone(), poly(minus[i]))?;
        expect(format!("gamma B~+_{n}"), lib(gamma_expansion(&p, n))?.gammas, big(gamma_plus[i]))?;
        expect(format!("gamma B~-_{n}"), lib(gamma_expansion(&m, n + 1))?.gammas, big(gamma_minus[i]))?;
    }
    Ok(())
}

/// `A_{n,r}` from `sum_k (rk+1)^n t^k = A_{n,r}(t) / (1-t)^(n+1)`.
fn eulerian_oracle(n: usize, r: usize) -> IntPolynomial {
    let series: Vec<BigInt> = (0..=n).map(|k| BigInt::from(r * k + 1).pow(n as u32)).collect();
    let coeffs = (0..=n)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let c = colored_eulerian::util::binomial(n + 1, i) * sign;
                    c * &series[j - i]
                })
                .sum::<BigInt>()
        })
        .collect();
    IntPolynomial::new(coeffs)
}

fn equidistribution_and_transforms() -> Outcome {
    for n in 1..=5 {
        for r in 1..=3 {
            let des = lib(eulerian_poly(n, r, Statistic::Des))?;
            expect(format!("des=exc n={n} r={r}"), lib(eulerian_poly(n, r, Statistic::Exc))?, des.clone())?;
            expect(format!("A oracle n={n} r={r}"), des.clone(), eulerian_oracle(n, r))?;
            let mut sum = IntPolynomial::zero();
            for k in 0..=n {
                sum += &lib(derangement_poly(k, r, DerangementMethod::Direct))?
                    .scale(&colored_eulerian::util::binomial(n, k));
            }
            expect(format!("A = sum C(n,k) d_k n={n} r={r}"), sum, des)?;
            let g = lib(gamma_tilde(n, r))?;
            let (p, m) = lib(binomial_eulerian_pm(n, r))?;
            expect(format!("gamma~+ n={n} r={r}"), g.plus_formula.clone(), lib(gamma_expansion(&p, n))?.gammas)?;
            expect(format!("gamma~- n={n} r={r}"), g.minus_formula.clone(), lib(gamma_expansion(&m, n + 1))?.gammas)?;
            expect(
                format!("gamma~ direct n={n} r={r}"),
                (g.plus_direct, g.minus_direct),
                (g.plus_formula, g.minus_formula),
            )?;
        }
        expect(format!("A~ r=1 n={n}"), lib(binomial_eulerian(n, 1))?, lib(binomial_eulerian_classical(n))?)?;
    }
    Ok(())
}

fn geometry_bridges() -> Outcome {
    for n in 1..=4 {
        for r in 1..=3 {
            let t = lib(Triangulation::gamma_nr(n, r))?;
            let h = lib(t.complex().h_polynomial())?;
            let a_plus = lib(a_plus_minus(n, r))?.0;
            expect(format!("h(Gamma) n={n} r={r}"), h.clone(), a_plus)?;
            expect(format!("Carlitz n={n} r={r}"), lib(a_plus_alt(n, r, APlusMethod::Carlitz))?, h.clone())?;
            expect(format!("first color zero n={n} r={r}"), lib(a_plus_alt(n, r, APlusMethod::PositiveFirstDes))?, h)?;
            let d_plus = if r == 1 { lib(d_plus_minus_r1(n))?.plus } else { lib(d_plus_minus(n, r))?.0 };
            expect(format!("local h n={n} r={r}"), lib(t.local_h())?, d_plus)?;
            let tilde_plus = lib(binomial_eulerian_pm(n, r))?.0;
            expect(format!("h(Delta) n={n} r={r}"), lib(lib(t.delta_of())?.h_polynomial())?, tilde_plus.clone())?;
            expect(format!("h(Delta) by restrictions n={n} r={r}"), lib(t.delta_h_by_restrictions())?, tilde_plus)?;
        }
    }
    Ok(())
}

fn flag_spheres() -> Outcome {
    for n in 1..=4 {
        for r in 1..=3 {
            let d = lib(lib(Triangulation::gamma_nr(n, r))?.delta_of())?;
            expect(format!("flag n={n} r={r}"), d.is_flag(), true)?;
            expect(format!("ridges n={n} r={r}"), d.ridges_in_two_facets(), true)?;
        }
    }
    Ok(())
}

fn equivariant_series() -> Outcome {
    let report = lib(verify::run(Suite::Equivariant, Bounds { max_n: 5, max_r: 3, truncation: 5 }))?;
    let first =
        report.failures().next().map(|c| format!("{} {}: {}", c.id, c.params, c.witness.clone().unwrap_or_default()));
    first.map_or(Ok(()), Err)
}

fn stembridge() -> Outcome {
    for r in 1..=3 {
        let c = lib(named_series(SeriesName::CGamma, r, 4))?;
        for n in 1..=4 {
            expect(format!("stembridge n={n} r={r}"), lib(stembridge_h(n, r))?, c.term(n).clone())?;
        }
    }
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let h2 = SymF::from_terms(
        2,
        [(Partition::new(vec![1, 1]).unwrap(), half.clone()), (Partition::new(vec![2]).unwrap(), half)],
    )
    .map_err(|e| e.to_string())?;
    let by_hand = TPoly::from_coeffs(2, vec![h2.clone(), h2]);
    expect("stembridge n=2 r=1", lib(stembridge_h(2, 1))?, by_hand)
}

fn stapledon() -> Outcome {
    for n in 1..=4 {
        for r in 1..=3 {
            expect(
                format!("stapledon n={n} r={r}"),
                lib(stapledon_phi(n, r, StapledonMethod::PerClass))?,
                lib(stapledon_phi(n, r, StapledonMethod::ClosedForm))?,
            )?;
        }
    }
    for n in 1..=3 {
        for w in (1..=n).permutations(n) {
            let c = Partition::cycle_type(&w).len() as u32;
            for r in 1..=3 {
                for k in 0..=3 {
                    expect(
                        format!("lattice w={w:?} r={r} k={k}"),
                        lattice_fixed_points(&w, r * k),
                        ((r * k + 1) as u64).pow(c),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn signed_des_b() -> Outcome {
    for n in 1..=6 {
        let g = lib(gamma_tilde(n, 2))?;
        let (p, m) = gamma_b(n);
        expect(format!("gamma_B+ n={n}"), p, g.plus_formula)?;
        expect(format!("gamma_B- n={n}"), m, g.minus_formula)?;
    }
    Ok(())
}

fn real_rooted() -> Outcome {
    for n in 1..=6 {
        for r in 1..=3 {
            let a = lib(eulerian_poly(n, r, Statistic::Des))?;
            let (p, m) = lib(binomial_eulerian_pm(n, r))?;
            let m = lib(m.unshift(1))?;
            for (name, q) in [("A", a), ("A~+", p), ("A~-/t", m)] {
                expect(format!("{name} real-rooted n={n} r={r}"), is_real_rooted(&q), true)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("reference tables for r=2 and their gamma-vectors", 10, reference_tables),
        ("statistic equidistribution and transform identities", 30, equidistribution_and_transforms),
        ("geometry and enumeration bridges", 60, geometry_bridges),
        ("flag spheres", 60, flag_spheres),
        ("equivariant series suite", 120, equivariant_series),
        ("Stembridge fixed-subcomplex oracle", 60, stembridge),
        ("Stapledon per-class oracle and lattice counts", 30, stapledon),
        ("signed Des_B gamma counts", 30, signed_des_b),
        ("real-rootedness via Sturm sequences", 60, real_rooted),
    ];
    let mut all_pass = true;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let pass = outcome.is_ok() && !over;
        all_pass &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} ({:.2}s, limit {limit}s)", i + 1, elapsed.as_secs_f64());
        if let Err(msg) = outcome {
            println!("    {msg}");
        } else if over {
            println!("    exceeded the time limit");
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
