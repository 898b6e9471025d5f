use super::{LaurentPoly, Poly, RatFun, Rational};
use crate::error::{Error, Result};

/// The automorphism `sigma` of the base ring: `z -> z + 1` on `k[z]`, or
/// `z -> xi z` on `k[z, z^-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseFlavor {
    Additive,
    Multiplicative { xi: Rational },
}

impl BaseFlavor {
    /// Rejects `xi` in `{0, 1, -1}`, the only rational roots of unity
    /// together with zero.
    pub fn multiplicative(xi: Rational) -> Result<Self> {
        if xi.is_zero() || xi.abs().is_one() {
            return Err(Error::InvalidXi(xi));
        }
        Ok(BaseFlavor::Multiplicative { xi })
    }

    pub fn is_additive(&self) -> bool {
        matches!(self, BaseFlavor::Additive)
    }

    pub fn xi(&self) -> Option<&Rational> {
        match self {
            BaseFlavor::Additive => None,
            BaseFlavor::Multiplicative { xi } => Some(xi),
        }
    }
}

/// Types carrying the action of `sigma^k`.
pub trait SigmaAction: Sized {
    fn sigma(&self, base: &BaseFlavor, k: i64) -> Self;
}

impl SigmaAction for Poly {
    fn sigma(&self, base: &BaseFlavor, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        match base {
            BaseFlavor::Additive => self.taylor_shift(&Rational::from_integer(k)),
            BaseFlavor::Multiplicative { xi } => self.scale_var(&xi.pow(k)),
        }
    }
}

impl SigmaAction for LaurentPoly {
    /// Over `k[z]` the offset must be nonnegative; a negative power of `z`
    /// has no image there and this panics.
    fn sigma(&self, base: &BaseFlavor, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        match base {
            BaseFlavor::Additive => {
                let p = self.to_poly().expect("negative power of z over k[z]");
                LaurentPoly::from_poly(p.sigma(base, k))
            }
            BaseFlavor::Multiplicative { xi } => {
                let s = xi.pow(k);
                let unit = s.pow(self.offset());
                LaurentPoly::new(self.offset(), self.core().scale_var(&s).scale(&unit))
            }
        }
    }
}

impl SigmaAction for RatFun {
    fn sigma(&self, base: &BaseFlavor, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        RatFun::new(self.num().sigma(base, k), self.den().sigma(base, k))
    }
}

/// `sigma^k(p)`.
pub fn apply_sigma<T: SigmaAction>(p: &T, k: i64, base: &BaseFlavor) -> T {
    p.sigma(base, k)
}

/// `sigma_k^k(lambda)` for the induced action on points: `lambda - k`, or
/// `xi^-k lambda`. The root of `sigma^k(z - lambda)` is this point.
pub fn sigma_point(lambda: &Rational, k: i64, base: &BaseFlavor) -> Result<Rational> {
    match base {
        BaseFlavor::Additive => Ok(lambda - Rational::from_integer(k)),
        BaseFlavor::Multiplicative { xi } => {
            if lambda.is_zero() {
                return Err(Error::InvalidRoot);
            }
            Ok(xi.pow(-k) * lambda)
        }
    }
}

/// `sigma^k((z - lambda)^m)` as a monic polynomial, i.e.
/// `(z - sigma_k^k(lambda))^m`.
pub fn shifted_factor(lambda: &Rational, m: u32, k: i64, base: &BaseFlavor) -> Poly {
    let point = sigma_point(lambda, k, base).expect("roots are nonzero in the multiplicative case");
    Poly::linear(&point).pow(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn sigma_examples() {
        let add = BaseFlavor::Additive;
        let mul = BaseFlavor::multiplicative(r(2)).unwrap();
        assert_eq!(apply_sigma(&Poly::linear(&r(3)), 1, &add), Poly::linear(&r(2)));
        let p = Poly::from_i64s(&[1, 2, 3]);
        assert_eq!(apply_sigma(&p, 0, &mul), p);
        assert_eq!(apply_sigma(&Poly::z(), -1, &mul), Poly::z().scale(&Rational::new(1, 2)));
    }

    #[test]
    fn point_examples() {
        let add = BaseFlavor::Additive;
        assert_eq!(sigma_point(&r(0), -1, &add).unwrap(), r(1));
        assert_eq!(sigma_point(&r(0), -3, &add).unwrap(), r(3));
        assert_eq!(sigma_point(&r(7), 0, &add).unwrap(), r(7));
        let mul = BaseFlavor::multiplicative(r(2)).unwrap();
        assert_eq!(sigma_point(&r(1), -3, &mul).unwrap(), r(8));
        assert_eq!(sigma_point(&r(0), 1, &mul), Err(Error::InvalidRoot));
    }

    #[test]
    fn xi_validation() {
        for bad in [0, 1, -1] {
            assert!(matches!(BaseFlavor::multiplicative(r(bad)), Err(Error::InvalidXi(_))));
        }
        assert!(BaseFlavor::multiplicative(Rational::new(-2, 3)).is_ok());
    }

    #[test]
    fn laurent_sigma_matches_poly_sigma() {
        let mul = BaseFlavor::multiplicative(Rational::new(3, 2)).unwrap();
        let p = Poly::from_i64s(&[0, 0, 5, -1]);
        let l = LaurentPoly::from_poly(p.clone());
        assert_eq!(l.sigma(&mul, 2).to_poly().unwrap(), p.sigma(&mul, 2));
        let inv = LaurentPoly::monomial(Rational::one(), -1);
        // sigma(z^-1) = xi^-1 z^-1
        assert_eq!(inv.sigma(&mul, 1), LaurentPoly::monomial(Rational::new(2, 3), -1));
    }
}
