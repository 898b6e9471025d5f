mod common;

use std::collections::BTreeMap;

use common::*;
use gwa_kit::*;
use proptest::prelude::*;
use rand::Rng;

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 0..5)
        .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_identity(p in small_poly(), d in small_poly()) {
        prop_assume!(!d.is_zero());
        let (quo, rem) = p.div_rem(&d);
        prop_assert_eq!(&(&quo * &d) + &rem, p);
        prop_assert!(rem.is_zero() || rem.degree() < d.degree());
    }

    #[test]
    fn gcd_and_lcm(p in small_poly(), q in small_poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let g = p.gcd(&q).unwrap();
        prop_assert!(g.divides(&p) && g.divides(&q) && g.is_monic());
        let l = p.lcm(&q);
        prop_assert!(p.divides(&l) && q.divides(&l));
        prop_assert_eq!(&g * &l, (&p * &q).monic());
    }

    #[test]
    fn sigma_is_a_ring_automorphism(p in small_poly(), q in small_poly(), k in -3i64..=3, add in any::<bool>()) {
        let base = if add { BaseFlavor::Additive } else { BaseFlavor::multiplicative(Rational::from_integer(3)).unwrap() };
        let s = |x: &Poly| apply_sigma(x, k, &base);
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
        prop_assert_eq!(apply_sigma(&s(&p), -k, &base), p);
    }

    #[test]
    fn gwa_multiplication_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let additive_flavor = r.gen_bool(0.5);
        let a = random_gwa(&mut r, additive_flavor, 3, 2);
        let (u, v, w) = (random_element(&mut r, &a, 3), random_element(&mut r, &a, 3), random_element(&mut r, &a, 3));
        prop_assert_eq!(gwa_mul(&a, &gwa_mul(&a, &u, &v), &w), gwa_mul(&a, &u, &gwa_mul(&a, &v, &w)));
        prop_assert_eq!(gwa_mul(&a, &GwaElement::one(), &u), u.clone());
    }

    #[test]
    fn normalize_gathers_each_orbit(seed in any::<u64>()) {
        let mut r = rng(seed);
        let additive_flavor = r.gen_bool(0.5);
        let a = random_gwa(&mut r, additive_flavor, 4, 3);
        let n = normalize(&a).unwrap();
        prop_assert!(is_simple(&n.canonical));
        let expected: BTreeMap<Rational, u32> = orbit_decomposition(&a)
            .orbits
            .iter()
            .map(|o| (o.representative.clone(), o.total_multiplicity()))
            .collect();
        let got: BTreeMap<Rational, u32> = n.canonical.f().roots().iter().cloned().collect();
        prop_assert_eq!(got, expected);
        prop_assert_eq!(replay_trace(&a, &n.trace).unwrap(), n.canonical);
    }

    #[test]
    fn legal_moves_preserve_orbit_totals(seed in any::<u64>()) {
        let mut r = rng(seed);
        let additive_flavor = r.gen_bool(0.5);
        let a = random_gwa(&mut r, additive_flavor, 4, 2);
        let totals = |g: &Gwa| -> Vec<u32> {
            let mut t: Vec<u32> = orbit_decomposition(g).orbits.iter().map(|o| o.total_multiplicity()).collect();
            t.sort();
            t
        };
        for m in legal_moves(&a) {
            let out = apply_move(&a, &m).unwrap();
            let next = a.with_f(out.new_f).unwrap();
            prop_assert_eq!(totals(&next), totals(&a));
            prop_assert_eq!(out.trace_ideal.is_some(), m.part == MovePart::Collapse);
        }
    }

    #[test]
    fn profiles_are_complete_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let additive_flavor = r.gen_bool(0.5);
        let a = random_simple_gwa(&mut r, additive_flavor, 2, 3);
        let p = random_projective(&mut r, &a, -2, 2);
        let q = random_projective(&mut r, &a, -2, 2);
        prop_assert!(is_projective_sc(&a, &p));
        prop_assert_eq!(profile_iso(&a, &p, &q).unwrap(), sc_iso(&p, &q));
        prop_assert!(profile_iso(&a, &p, &p).unwrap());
    }

    #[test]
    fn surjection_dichotomy(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_simple_gwa(&mut r, true, 2, 3);
        let p = random_projective(&mut r, &a, -2, 2);
        for (alpha, n_alpha) in a.f().roots() {
            for n in -3..=3 {
                for j in 1..=*n_alpha {
                    let minus = surjects(&a, &p, Sign::Minus, alpha, j, n).unwrap();
                    let plus = surjects(&a, &p, Sign::Plus, alpha, n_alpha - j + 1, n).unwrap();
                    prop_assert!(minus != plus);
                }
            }
        }
    }

    #[test]
    fn b_ring_is_commutative_and_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let additive_flavor = r.gen_bool(0.5);
        let a = random_simple_gwa(&mut r, additive_flavor, 3, 3);
        let rank = a.f().roots().len();
        let element = |r: &mut rand_chacha::ChaCha8Rng| {
            BElement::from_terms((0..r.gen_range(1..=3)).map(|_| {
                let ix: Vec<BIndex> = (0..r.gen_range(0..4)).map(|_| (r.gen_range(1..=rank), r.gen_range(-2..=2))).collect();
                (GammaDegree::from_indices(rank, &ix), LaurentPoly::from(random_poly(r, 1)))
            }))
        };
        let (u, v, w) = (element(&mut r), element(&mut r), element(&mut r));
        let m = |x: &BElement, y: &BElement| b_mul(&a, x, y).unwrap();
        prop_assert_eq!(m(&u, &v), m(&v, &u));
        prop_assert_eq!(m(&m(&u, &v), &w), m(&u, &m(&v, &w)));
        prop_assert_eq!(m(&BElement::one(rank), &u), u.clone());
    }
}

/// Dense Gaussian elimination over the rationals, independent of the
/// sparse elimination used by the library.
fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let factor = &row[c] / &pivot_row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &(&factor * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn chain_dimensions_match_dense_elimination() {
    let a = additive(&[("0", 2)]);
    for m in 1..=5usize {
        let cert = noeth_chain_check(&a, m, DEFAULT_MAX_ORACLE_DIM).unwrap();
        let dim = 1usize << m;
        // b_S * (b_t + s_t) in the basis of squarefree monomials.
        let product = |s: usize, t: usize| {
            let mut v = vec![Rational::zero(); dim];
            let bit = 1 << t;
            if s & bit == 0 {
                v[s | bit] += &Rational::one();
            } else {
                v[s & !bit] += &cert.gammas[t];
            }
            v[s] += &cert.roots[t];
            v
        };
        let mut rows = Vec::new();
        for n in 0..m {
            let mut target = vec![Rational::zero(); dim];
            target[1 << n] = Rational::one();
            target[0] = cert.roots[n].clone();
            let before = dense_rank(&rows);
            let mut with_target = rows.clone();
            with_target.push(target);
            assert_eq!(dense_rank(&with_target) > before, cert.strict[n], "m = {m}, n = {n}");
            rows.extend((0..dim).map(|s| product(s, n)));
            assert_eq!(dense_rank(&rows), cert.ideal_dims[n + 1]);
        }
    }
}

#[test]
fn involution_factors_multiply_to_h() {
    let a = additive(&[("0", 2), ("1/2", 1)]);
    let own = StructureConstants::of_algebra();
    let j_set: Vec<BIndex> = vec![(1, 0), (1, 2), (2, -1)];
    let roots: Vec<Rational> = a.f().roots().iter().map(|(r, _)| r.clone()).collect();
    let mut p = own.clone();
    for _ in 0..2 {
        for &(i, j) in &j_set {
            p = involute(&a, &p, &roots[i - 1], j).unwrap();
        }
    }
    assert_eq!(p, own);
    let collected = j_set
        .iter()
        .fold(Poly::one(), |acc, &(i, j)| &acc * &involution_factor(&a, &roots[i - 1], j).unwrap());
    let h = h_product(&a, &GammaDegree::from_indices(2, &j_set)).unwrap();
    assert_eq!(collected, h.monic());
}
