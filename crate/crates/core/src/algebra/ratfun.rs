use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{LaurentPoly, Poly, Rational};

/// A reduced fraction `num / den` in `Q(z)` with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Panics when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den).expect("denominator is nonzero");
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading().expect("nonzero").clone();
        let inv = lc.inv();
        RatFun { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        let e = l.offset();
        let zpow = Poly::monomial(Rational::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            RatFun::from_poly(&zpow * l.core())
        } else {
            RatFun::new(l.core().clone(), zpow)
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial value when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Self {
        RatFun::new(self.den.clone(), self.num.clone())
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.inv()
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes() {
        let z = Poly::z();
        let zm1 = Poly::linear(&Rational::one());
        let q = RatFun::new(&z * &zm1, zm1.scale(&Rational::from_integer(2)));
        assert_eq!(q.num(), &z.scale(&Rational::new(1, 2)));
        assert!(q.den().is_one());
        let sum = &q + &(-&q);
        assert!(sum.is_zero());
        let r = RatFun::new(Poly::one(), z.clone());
        assert!((&r * &RatFun::from_poly(z)).is_one());
        assert_eq!(
            RatFun::from_laurent(&LaurentPoly::monomial(Rational::one(), -2)),
            RatFun::new(Poly::one(), Poly::z().pow(2))
        );
    }
}
