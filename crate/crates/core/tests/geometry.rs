use colored_eulerian::colored_perms::{a_plus_minus, binomial_eulerian_pm, d_plus_minus};
use colored_eulerian::polyring::IntPolynomial;
use colored_eulerian::simplicial::{act, fixed_subcomplex, Triangulation};

#[test]
fn gamma_nr_h_is_a_plus() {
    for n in 1..=4 {
        for r in 1..=3 {
            let t = Triangulation::gamma_nr(n, r).unwrap();
            let h = t.complex().h_polynomial().unwrap();
            assert_eq!(h, a_plus_minus(n, r).unwrap().0, "n={n} r={r}");
            assert_eq!(t.h_by_local_h().unwrap(), h, "n={n} r={r}");
        }
    }
}

#[test]
fn gamma_nr_local_h_is_d_plus() {
    for n in 1..=4 {
        for r in 2..=3 {
            let t = Triangulation::gamma_nr(n, r).unwrap();
            let l = t.local_h().unwrap();
            assert_eq!(l, d_plus_minus(n, r).unwrap().0, "n={n} r={r}");
            assert!(l.is_palindromic(n) && l.has_nonnegative_coeffs());
        }
    }
}

#[test]
fn delta_of_gamma_nr_is_a_flag_sphere_with_h_tilde_plus() {
    for n in 1..=4 {
        for r in 1..=3 {
            let t = Triangulation::gamma_nr(n, r).unwrap();
            let d = t.delta_of().unwrap();
            let expected = binomial_eulerian_pm(n, r).unwrap().0;
            assert_eq!(d.h_polynomial().unwrap(), expected, "n={n} r={r}");
            assert_eq!(t.delta_h_by_restrictions().unwrap(), expected, "n={n} r={r}");
            assert!(t.complex().is_flag(), "n={n} r={r}");
            assert!(d.is_flag(), "n={n} r={r}");
            assert!(d.ridges_in_two_facets(), "n={n} r={r}");
            let sphere_euler = if n % 2 == 1 { 2 } else { 0 };
            assert_eq!(d.euler_characteristic(), sphere_euler, "n={n} r={r}");
        }
    }
}

#[test]
fn barycentric_h_and_local_h() {
    // Eulerian and derangement polynomials of S_n
    let eulerian = [vec![1], vec![1, 1], vec![1, 4, 1], vec![1, 11, 11, 1]];
    let derangement = [vec![0], vec![0, 1], vec![0, 1, 1], vec![0, 1, 7, 1]];
    for n in 1..=4 {
        let t = Triangulation::barycentric(n);
        assert_eq!(t.complex().h_polynomial().unwrap(), IntPolynomial::from_i64s(&eulerian[n - 1]));
        assert_eq!(t.local_h().unwrap(), IntPolynomial::from_i64s(&derangement[n - 1]));
    }
}

#[test]
fn restriction_matches_carrier_subcomplex() {
    for n in 1..=3 {
        for r in 1..=3 {
            let t = Triangulation::gamma_nr(n, r).unwrap();
            for mask in 0u32..(1 << n) {
                let face: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let structural = t.restriction(&face).unwrap();
                assert_eq!(structural, t.restriction_by_carrier(&face).unwrap(), "n={n} r={r} F={face:?}");
                let smaller = Triangulation::gamma_nr(face.len(), r).unwrap();
                assert_eq!(structural.f_vector(), smaller.complex().f_vector());
            }
        }
    }
}

fn cycle_count(w: &[usize]) -> usize {
    let mut seen = vec![false; w.len()];
    let mut c = 0;
    for i in 0..w.len() {
        if !seen[i] {
            c += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = w[j] - 1;
            }
        }
    }
    c
}

#[test]
fn fixed_subcomplexes_of_gamma_nr() {
    use itertools::Itertools;
    for n in 1..=4 {
        for r in 1..=3 {
            let t = Triangulation::gamma_nr(n, r).unwrap();
            for w in (1..=n).permutations(n) {
                let a = act(&w, t.complex()).unwrap();
                let fixed = fixed_subcomplex(t.complex(), &a).unwrap();
                let model = Triangulation::gamma_nr(cycle_count(&w), r).unwrap();
                assert_eq!(fixed.f_vector(), model.complex().f_vector(), "w={w:?} r={r}");
            }
        }
    }
}

#[test]
fn extended_action_on_delta_is_not_proper() {
    for n in 2..=3 {
        let d = Triangulation::gamma_nr(n, 2).unwrap().delta_of().unwrap();
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(0, 1);
        let a = act(&w, &d).unwrap();
        assert!(fixed_subcomplex(&d, &a).is_err());
    }
}
