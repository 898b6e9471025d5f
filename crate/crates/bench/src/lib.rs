//! Fixtures for the `gwa-kit` benchmarks in `benches/`.

use gwa_kit::{gwa_validate, BaseFlavor, FactoredPoly, Gwa, GwaElement, LaurentPoly, Poly, Rational};

fn factored(roots: &[(i64, u32)]) -> FactoredPoly {
    FactoredPoly::new(roots.iter().map(|&(r, m)| (Rational::from_integer(r), m)).collect())
        .expect("distinct roots with positive multiplicities")
}

/// `k[z]` with `sigma(z) = z + 1` and `f` given by integer roots.
pub fn additive(roots: &[(i64, u32)]) -> Gwa {
    gwa_validate(BaseFlavor::Additive, factored(roots), false).expect("valid algebra")
}

/// `k[z, z^-1]` with `sigma(z) = xi z` and `f` given by nonzero integer roots.
pub fn multiplicative(xi: i64, roots: &[(i64, u32)]) -> Gwa {
    let base = BaseFlavor::multiplicative(Rational::from_integer(xi)).expect("valid xi");
    gwa_validate(base, factored(roots), false).expect("valid algebra")
}

/// `sum_{d = -n..=n} (z^2 + d z + 1) w_d`, with `w_d = x^d` or `y^-d`.
pub fn dense_element(n: i64) -> GwaElement {
    GwaElement::from_terms((-n..=n).map(|d| (d, LaurentPoly::from(Poly::from_i64s(&[1, d, 1])))))
}
