use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Rational};

/// `z^offset * poly` with `poly(0) != 0` (or `poly = 0`, `offset = 0`).
///
/// Over `k[z]` the offset is always nonnegative; over `k[z, z^-1]` it may be
/// negative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    poly: Poly,
}

impl LaurentPoly {
    pub fn new(offset: i64, poly: Poly) -> Self {
        if poly.is_zero() {
            return LaurentPoly::zero();
        }
        let v = poly.valuation();
        LaurentPoly { offset: offset + v as i64, poly: if v == 0 { poly } else { poly.strip_z() } }
    }

    pub fn zero() -> Self {
        LaurentPoly { offset: 0, poly: Poly::zero() }
    }

    pub fn one() -> Self {
        LaurentPoly::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        LaurentPoly::new(0, p)
    }

    /// `c * z^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        LaurentPoly::new(e, Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.offset == 0 && self.poly.is_one()
    }

    /// Exponent of the lowest term.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// The unit-free part: `self = z^offset * core`.
    pub fn core(&self) -> &Poly {
        &self.poly
    }

    /// The ordinary polynomial when `offset >= 0`.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.offset < 0 {
            return None;
        }
        Some(&Poly::monomial(Rational::one(), self.offset as usize) * &self.poly)
    }

    /// Coefficient list from the lowest exponent `offset` upward.
    pub fn dense(&self) -> Vec<Rational> {
        self.poly.coeffs().to_vec()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPoly::new(self.offset, self.poly.scale(c))
    }

    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { offset: self.offset + e, poly: self.poly.clone() }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let lift = |l: &LaurentPoly| &Poly::monomial(Rational::one(), (l.offset - lo) as usize) * &l.poly;
        LaurentPoly::new(lo, &lift(self) + &lift(rhs))
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.offset + rhs.offset, &self.poly * &rhs.poly)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { offset: self.offset, poly: -&self.poly }
    }
}

impl From<Poly> for LaurentPoly {
    fn from(p: Poly) -> Self {
        LaurentPoly::from_poly(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_poly() {
            Some(p) => write!(f, "{p}"),
            None if self.poly.is_one() => write!(f, "z^{}", self.offset),
            None => write!(f, "z^{}*({})", self.offset, self.poly),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
