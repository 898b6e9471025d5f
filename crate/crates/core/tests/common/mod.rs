//! Seeded generators and independent oracles shared by the integration
//! tests and the acceptance harness.
#![allow(dead_code)]

use gwa_kit::{
    from_profile, gwa_validate, BaseFlavor, FactorProfile, FactoredPoly, Gwa, GwaElement, LaurentPoly, Poly,
    ProfileEntry, Rational, Sign, StructureConstants,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

const ADDITIVE_POOL: &[&str] = &["0", "1", "2", "3", "-1", "-2", "5", "1/2", "3/2", "-1/2", "1/3", "7/3"];
const MULTIPLICATIVE_POOL: &[&str] = &["1", "2", "4", "8", "1/2", "3", "6", "-1", "-2", "5/3", "3/2", "-3"];
const XI_POOL: &[&str] = &["2", "3", "1/2", "-2"];

pub fn random_base(rng: &mut ChaCha8Rng, additive: bool) -> BaseFlavor {
    if additive {
        BaseFlavor::Additive
    } else {
        BaseFlavor::multiplicative(q(XI_POOL.choose(rng).unwrap())).unwrap()
    }
}

/// Distinct roots with multiplicities in 1..=max_mult.
pub fn random_roots(
    rng: &mut ChaCha8Rng,
    additive: bool,
    max_roots: usize,
    max_mult: u32,
) -> Vec<(Rational, u32)> {
    let pool = if additive { ADDITIVE_POOL } else { MULTIPLICATIVE_POOL };
    let count = rng.gen_range(1..=max_roots);
    let mut picks: Vec<&str> = pool.to_vec();
    picks.shuffle(rng);
    picks[..count].iter().map(|s| (q(s), rng.gen_range(1..=max_mult))).collect()
}

pub fn random_gwa(rng: &mut ChaCha8Rng, additive: bool, max_roots: usize, max_mult: u32) -> Gwa {
    let base = random_base(rng, additive);
    let roots = random_roots(rng, additive, max_roots, max_mult);
    gwa_validate(base, FactoredPoly::new(roots).unwrap(), false).unwrap()
}

/// Retries until the result is simple.
pub fn random_simple_gwa(rng: &mut ChaCha8Rng, additive: bool, max_roots: usize, max_mult: u32) -> Gwa {
    loop {
        let base = random_base(rng, additive);
        let roots = random_roots(rng, additive, max_roots, max_mult);
        if let Ok(a) = gwa_validate(base, FactoredPoly::new(roots).unwrap(), true) {
            return a;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=deg).map(|_| Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect())
}

/// A random element with degrees in `-max_deg..=max_deg`; over `k[z, z^-1]`
/// coefficients may carry negative powers of `z`.
pub fn random_element(rng: &mut ChaCha8Rng, a: &Gwa, max_deg: i64) -> GwaElement {
    let terms = rng.gen_range(1..=3);
    GwaElement::from_terms((0..terms).map(|_| {
        let d = rng.gen_range(-max_deg..=max_deg);
        let offset = if a.base().is_additive() { 0 } else { rng.gen_range(-1..=1) };
        (d, LaurentPoly::new(offset, random_poly(rng, 2)))
    }))
}

/// Global dimension by scanning all pairs of roots directly:
/// "infinite" for a repeated root, "2" for two distinct roots on one orbit,
/// "1" otherwise.
pub fn pairwise_gldim(base: &BaseFlavor, roots: &[(Rational, u32)]) -> &'static str {
    if roots.iter().any(|(_, m)| *m > 1) {
        return "infinite";
    }
    for (s, (a, _)) in roots.iter().enumerate() {
        for (b, _) in &roots[s + 1..] {
            if on_one_orbit(base, a, b) {
                return "2";
            }
        }
    }
    "1"
}

fn on_one_orbit(base: &BaseFlavor, a: &Rational, b: &Rational) -> bool {
    match base.xi() {
        None => (a - b).is_integer(),
        Some(xi) => {
            let ratio = b / a;
            let mut up = Rational::one();
            let mut down = Rational::one();
            // Roots come from a small pool, so exponents stay below 64.
            for _ in 0..64 {
                if up == ratio || down == ratio {
                    return true;
                }
                up = &up * xi;
                down = &down / xi;
            }
            false
        }
    }
}

/// A random projective over a simple `a`: random signs on `[from, to]`.
pub fn random_projective(rng: &mut ChaCha8Rng, a: &Gwa, from: i64, to: i64) -> StructureConstants {
    from_profile(a, &random_profile(rng, a, from, to)).unwrap()
}

pub fn random_profile(rng: &mut ChaCha8Rng, a: &Gwa, from: i64, to: i64) -> FactorProfile {
    let mut entries = Vec::new();
    for n in from..=to {
        for (alpha, _) in a.f().roots() {
            let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            entries.push(ProfileEntry { alpha: alpha.clone(), n, sign });
        }
    }
    FactorProfile { from, to, entries }
}

pub fn additive(roots: &[(&str, u32)]) -> Gwa {
    gwa_validate(
        BaseFlavor::Additive,
        FactoredPoly::new(roots.iter().map(|&(r, m)| (q(r), m)).collect()).unwrap(),
        false,
    )
    .unwrap()
}

pub fn multiplicative(xi: &str, roots: &[(&str, u32)]) -> Gwa {
    gwa_validate(
        BaseFlavor::multiplicative(q(xi)).unwrap(),
        FactoredPoly::new(roots.iter().map(|&(r, m)| (q(r), m)).collect()).unwrap(),
        false,
    )
    .unwrap()
}

pub fn factored(roots: &[(&str, u32)]) -> FactoredPoly {
    FactoredPoly::new(roots.iter().map(|&(r, m)| (q(r), m)).collect()).unwrap()
}

/// `sigma^k((z - alpha)^n)` written out directly from the two flavors'
/// formulas, up to its leading scalar.
pub fn orbit_factor(base: &BaseFlavor, alpha: &Rational, n: u32, k: i64) -> Poly {
    let point = match base.xi() {
        None => alpha - &int(k),
        Some(xi) => &xi.pow(-k) * alpha,
    };
    Poly::linear(&point).pow(n)
}

/// Whether `p` is a polynomial multiple of `q`.
pub fn divides(q: &Poly, p: &Poly) -> bool {
    q.divides(p)
}

/// Distinct roots of a polynomial that splits over the rationals, found by
/// trying the candidates.
pub fn split_roots<'a>(p: &Poly, candidates: impl IntoIterator<Item = &'a Rational>) -> Vec<Rational> {
    candidates.into_iter().filter(|c| p.eval(c).is_zero()).cloned().collect()
}
