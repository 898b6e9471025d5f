use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// A univariate polynomial in `z` over `Q`, coefficients stored in ascending
/// degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `z - root`.
    pub fn linear(root: &Rational) -> Self {
        Poly::from_coeffs(vec![-root, Rational::one()])
    }

    /// `prod (z - root)^mult`.
    pub fn from_roots<'a, I>(roots: I) -> Self
    where
        I: IntoIterator<Item = (&'a Rational, u32)>,
    {
        roots.into_iter().fold(Poly::one(), |acc, (r, m)| &acc * &Poly::linear(r).pow(m))
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    /// Divide by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = d.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (k, dk) in d.coeffs.iter().enumerate() {
                let t = &c * dk;
                rem[i + k] -= &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Whether `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// `p(z + a)`.
    pub fn taylor_shift(&self, a: &Rational) -> Self {
        if a.is_zero() || self.is_constant() {
            return self.clone();
        }
        // Horner in the shifted variable: acc <- acc * (z + a) + c
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, v) in acc.iter().enumerate() {
                next[i + 1] += v;
                next[i] += &(v * a);
            }
            next[0] += c;
            acc = next;
        }
        Poly::from_coeffs(acc)
    }

    /// `p(c z)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pw);
            pw *= c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Multiplicity of `root` as a root. Zero polynomial reports 0.
    pub fn root_multiplicity(&self, root: &Rational) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::linear(root);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            m += 1;
        }
        m
    }

    /// Largest `e` with `z^e | p`. Zero polynomial reports 0.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Drop the factor `z^valuation`.
    pub fn strip_z(&self) -> Self {
        Poly::from_coeffs(self.coeffs[self.valuation()..].to_vec())
    }

    /// Monic gcd, with `gcd(p, 0) = monic(p)`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::DegenerateInput("gcd(0, 0) is undefined".into()));
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Monic lcm. Zero if either argument is zero.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other).expect("nonzero operands");
        (self * &other.exact_div(&g).expect("gcd divides")).monic()
    }
}

/// Monic greatest common divisor.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    p.gcd(q)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(Poly::from_coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn gcd_examples() {
        let a = Poly::linear(&r(1));
        let b = Poly::linear(&r(3));
        assert_eq!(poly_gcd(&a, &b).unwrap(), Poly::one());

        let z2 = Poly::z().pow(2);
        let other = &z2 * &Poly::linear(&r(1));
        assert_eq!(poly_gcd(&z2, &other).unwrap(), z2);

        let p = Poly::from_i64s(&[2, 4]);
        assert_eq!(poly_gcd(&p, &p).unwrap(), p.monic());

        assert!(matches!(poly_gcd(&Poly::zero(), &Poly::zero()), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Poly::from_i64s(&[3, -1, 0, 5, 2]);
        let d = Poly::from_i64s(&[1, 0, 3]);
        let (q, rem) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &rem, a);
        assert!(rem.degree().unwrap() < 2);
    }

    #[test]
    fn shifts_and_roots() {
        // (z - 3)(z + 1) shifted by 1 has roots 2 and -2
        let p = &Poly::linear(&r(3)) * &Poly::linear(&r(-1));
        let s = p.taylor_shift(&r(1));
        assert_eq!(s, &Poly::linear(&r(2)) * &Poly::linear(&r(-2)));
        // (z - 4) with z -> 2z is 2z - 4
        assert_eq!(Poly::linear(&r(4)).scale_var(&r(2)), Poly::from_i64s(&[-4, 2]));
        let q = &Poly::linear(&r(2)).pow(3) * &Poly::z();
        assert_eq!(q.root_multiplicity(&r(2)), 3);
        assert_eq!(q.root_multiplicity(&r(5)), 0);
        assert_eq!(q.valuation(), 1);
    }

    #[test]
    fn lcm_and_display() {
        let a = &Poly::z() * &Poly::linear(&r(1));
        let b = &Poly::z() * &Poly::linear(&r(2));
        let l = a.lcm(&b);
        assert_eq!(l, Poly::from_roots([(&r(0), 1), (&r(1), 1), (&r(2), 1)]));
        assert_eq!(Poly::from_coeffs(vec![Rational::new(-3, 2), r(0), r(-1)]).to_string(), "-z^2 - 3/2");
        assert_eq!(Poly::from_i64s(&[1, 2, 1]).to_string(), "z^2 + 2*z + 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
