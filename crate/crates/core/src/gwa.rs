//! Generalized Weyl algebras `A = R(sigma, f)` of degree one, elements in
//! normal form, and the graded quotient ring `Q_gr(A) = k(z)[x, x^-1; sigma]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{BaseFlavor, FactoredPoly, LaurentPoly, Poly, RatFun, Rational, SigmaAction};
use crate::error::{Error, Result};
use crate::orbit;

/// A validated generalized Weyl algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gwa {
    base: BaseFlavor,
    f: FactoredPoly,
    f_poly: Poly,
}

/// Checks the standing hypotheses on `(base, f)` and, with `require_simple`,
/// that no two distinct roots are congruent.
pub fn gwa_validate(base: BaseFlavor, f: FactoredPoly, require_simple: bool) -> Result<Gwa> {
    if let BaseFlavor::Multiplicative { xi } = &base {
        BaseFlavor::multiplicative(xi.clone())?;
        if f.multiplicity(&Rational::zero()) > 0 {
            return Err(Error::ZeroRootMultiplicative);
        }
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if require_simple {
        let roots: Vec<&Rational> = f.distinct_roots().collect();
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if orbit::congruence(a, b, &base)?.is_some() {
                    return Err(Error::CongruentRoots(Box::new(((*a).clone(), (*b).clone()))));
                }
            }
        }
    }
    let f_poly = f.expand();
    Ok(Gwa { base, f, f_poly })
}

impl Gwa {
    pub fn base(&self) -> &BaseFlavor {
        &self.base
    }

    pub fn f(&self) -> &FactoredPoly {
        &self.f
    }

    /// The expanded defining polynomial.
    pub fn f_poly(&self) -> &Poly {
        &self.f_poly
    }

    /// `sigma^k(f)`.
    pub fn sigma_f(&self, k: i64) -> Poly {
        self.f_poly.sigma(&self.base, k)
    }

    /// Fails when a coefficient has a negative power of `z` over `k[z]`.
    pub fn check_element(&self, a: &GwaElement) -> Result<()> {
        if self.base.is_additive() && a.terms.values().any(|c| c.offset() < 0) {
            return Err(Error::NegativeExponent);
        }
        Ok(())
    }

    /// Same algebra with `f` replaced, revalidated without the simplicity
    /// requirement.
    pub fn with_f(&self, f: FactoredPoly) -> Result<Gwa> {
        gwa_validate(self.base.clone(), f, false)
    }

    /// The scalar `w_i w_j / w_{i+j}` in `R`, where `w_i = x^i` for `i >= 0`
    /// and `y^-i` otherwise.
    pub fn monomial_product(&self, i: i64, j: i64) -> Poly {
        let prod =
            |exps: &mut dyn Iterator<Item = i64>| exps.fold(Poly::one(), |acc, t| &acc * &self.sigma_f(t));
        if (i >= 0 && j >= 0) || (i <= 0 && j <= 0) {
            return Poly::one();
        }
        if i > 0 {
            // x^i y^m
            let m = -j;
            if i >= m {
                prod(&mut (0..m).map(|t| t + i - m))
            } else {
                prod(&mut (0..i))
            }
        } else {
            // y^m x^n
            let (m, n) = (-i, j);
            if m >= n {
                prod(&mut (1..=n).map(|t| -t - (m - n)))
            } else {
                prod(&mut (1..=m).map(|t| -t))
            }
        }
    }
}

/// An element `sum_i c_i w_i` of `A` in left normal form; `w_i = x^i` for
/// `i > 0`, `1` for `i = 0`, `y^-i` for `i < 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GwaElement {
    terms: BTreeMap<i64, LaurentPoly>,
}

impl GwaElement {
    pub fn zero() -> Self {
        GwaElement::default()
    }

    pub fn one() -> Self {
        GwaElement::term(0, LaurentPoly::one())
    }

    pub fn x() -> Self {
        GwaElement::term(1, LaurentPoly::one())
    }

    pub fn y() -> Self {
        GwaElement::term(-1, LaurentPoly::one())
    }

    /// `w_degree`, i.e. `x^d` or `y^-d`.
    pub fn w(degree: i64) -> Self {
        GwaElement::term(degree, LaurentPoly::one())
    }

    pub fn scalar(p: Poly) -> Self {
        GwaElement::term(0, LaurentPoly::from_poly(p))
    }

    pub fn term(degree: i64, coeff: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        GwaElement { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, LaurentPoly)>>(terms: I) -> Self {
        let mut out = GwaElement::zero();
        for (d, c) in terms {
            out.add_term(d, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<i64, LaurentPoly> {
        &self.terms
    }

    pub fn component(&self, degree: i64) -> LaurentPoly {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degree when the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.terms.len() {
            1 => self.terms.keys().next().copied(),
            _ => None,
        }
    }

    fn add_term(&mut self, degree: i64, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&degree) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&degree);
        } else {
            self.terms.insert(degree, sum);
        }
    }
}

/// Product in `A`, rewritten to left normal form with the defining
/// relations.
pub fn gwa_mul(a_alg: &Gwa, a: &GwaElement, b: &GwaElement) -> GwaElement {
    let base = a_alg.base();
    let mut out = GwaElement::zero();
    let mut scalars: BTreeMap<(i64, i64), LaurentPoly> = BTreeMap::new();
    for (&i, p) in &a.terms {
        for (&j, q) in &b.terms {
            let c =
                scalars.entry((i, j)).or_insert_with(|| LaurentPoly::from_poly(a_alg.monomial_product(i, j)));
            let coeff = &(p * &q.sigma(base, i)) * c;
            out.add_term(i + j, &coeff);
        }
    }
    out
}

impl Add<&GwaElement> for &GwaElement {
    type Output = GwaElement;
    fn add(self, rhs: &GwaElement) -> GwaElement {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c);
        }
        out
    }
}

impl Sub<&GwaElement> for &GwaElement {
    type Output = GwaElement;
    fn sub(self, rhs: &GwaElement) -> GwaElement {
        self + &(-rhs)
    }
}

impl Neg for &GwaElement {
    type Output = GwaElement;
    fn neg(self) -> GwaElement {
        GwaElement { terms: self.terms.iter().map(|(&d, c)| (d, -c)).collect() }
    }
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&d, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let w = match d {
                0 => String::new(),
                1 => "x".to_string(),
                -1 => "y".to_string(),
                d if d > 0 => format!("x^{d}"),
                d => format!("y^{}", -d),
            };
            match (c.is_one(), w.is_empty()) {
                (true, false) => write!(f, "{w}")?,
                (_, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GwaElement({self})")
    }
}

/// An element `sum_i r_i x^i` of `k(z)[x, x^-1; sigma]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QGrElement {
    terms: BTreeMap<i64, RatFun>,
}

impl QGrElement {
    pub fn zero() -> Self {
        QGrElement::default()
    }

    pub fn one() -> Self {
        QGrElement::term(0, RatFun::one())
    }

    /// `x^i` for any integer `i`.
    pub fn x_pow(i: i64) -> Self {
        QGrElement::term(i, RatFun::one())
    }

    pub fn scalar(r: RatFun) -> Self {
        QGrElement::term(0, r)
    }

    pub fn term(degree: i64, coeff: RatFun) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        QGrElement { terms }
    }

    pub fn terms(&self) -> &BTreeMap<i64, RatFun> {
        &self.terms
    }

    pub fn component(&self, degree: i64) -> RatFun {
        self.terms.get(&degree).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, degree: i64, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&degree) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&degree);
        } else {
            self.terms.insert(degree, sum);
        }
    }
}

/// Product in `Q_gr(A)`: `(p x^i)(q x^j) = p sigma^i(q) x^(i+j)`.
pub fn qgr_mul(a_alg: &Gwa, u: &QGrElement, v: &QGrElement) -> QGrElement {
    let base = a_alg.base();
    let mut out = QGrElement::zero();
    for (&i, p) in &u.terms {
        for (&j, q) in &v.terms {
            out.add_term(i + j, &(p * &q.sigma(base, i)));
        }
    }
    out
}

/// The ring embedding `A -> Q_gr(A)`, `x -> x`, `y -> sigma^-1(f) x^-1`.
pub fn embed_in_qgr(a_alg: &Gwa, a: &GwaElement) -> QGrElement {
    let mut out = QGrElement::zero();
    for (&d, c) in &a.terms {
        let mut coeff = RatFun::from_laurent(c);
        if d < 0 {
            let m = -d;
            let prod = (1..=m).fold(Poly::one(), |acc, t| &acc * &a_alg.sigma_f(-t));
            coeff = &coeff * &RatFun::from_poly(prod);
        }
        out.add_term(d, &coeff);
    }
    out
}

impl Add<&QGrElement> for &QGrElement {
    type Output = QGrElement;
    fn add(self, rhs: &QGrElement) -> QGrElement {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c);
        }
        out
    }
}

impl Sub<&QGrElement> for &QGrElement {
    type Output = QGrElement;
    fn sub(self, rhs: &QGrElement) -> QGrElement {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, &(-c));
        }
        out
    }
}

impl fmt::Display for QGrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&d, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*x^{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QGrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QGrElement({self})")
    }
}

/// JSON form of a GWA: `{"base": "additive", "f": [...]}` or
/// `{"base": "multiplicative", "xi": "2", "f": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GwaSpec {
    pub base: BaseKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Rational>,
    pub f: FactoredPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Additive,
    Multiplicative,
}

impl GwaSpec {
    pub fn flavor(&self) -> Result<BaseFlavor> {
        match (self.base, &self.xi) {
            (BaseKind::Additive, None) => Ok(BaseFlavor::Additive),
            (BaseKind::Additive, Some(_)) => {
                Err(Error::MalformedInput("xi is only meaningful for the multiplicative base".into()))
            }
            (BaseKind::Multiplicative, Some(xi)) => BaseFlavor::multiplicative(xi.clone()),
            (BaseKind::Multiplicative, None) => {
                Err(Error::MalformedInput("multiplicative base requires xi".into()))
            }
        }
    }

    pub fn build(&self, require_simple: bool) -> Result<Gwa> {
        gwa_validate(self.flavor()?, self.f.clone(), require_simple)
    }
}

impl From<&Gwa> for GwaSpec {
    fn from(a: &Gwa) -> Self {
        let (base, xi) = match a.base() {
            BaseFlavor::Additive => (BaseKind::Additive, None),
            BaseFlavor::Multiplicative { xi } => (BaseKind::Multiplicative, Some(xi.clone())),
        };
        GwaSpec { base, xi, f: a.f().clone() }
    }
}

impl Serialize for Gwa {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GwaSpec::from(self).serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    degree: i64,
    coefficient: Poly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    z_offset: Option<i64>,
}

fn laurent_repr(degree: i64, c: &LaurentPoly) -> TermRepr {
    match c.to_poly() {
        Some(p) => TermRepr { degree, coefficient: p, z_offset: None },
        None => TermRepr { degree, coefficient: c.core().clone(), z_offset: Some(c.offset()) },
    }
}

/// Serialized as `[{degree, coefficient, z_offset?}]`, where the
/// coefficient is `z^z_offset * poly(coefficient)`.
impl Serialize for GwaElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self.terms.iter().map(|(&d, c)| laurent_repr(d, c)).collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GwaElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        Ok(GwaElement::from_terms(
            reprs.into_iter().map(|t| (t.degree, LaurentPoly::new(t.z_offset.unwrap_or(0), t.coefficient))),
        ))
    }
}

#[derive(Serialize)]
struct QTermRepr<'a> {
    degree: i64,
    numerator: &'a Poly,
    denominator: &'a Poly,
}

impl Serialize for QGrElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<QTermRepr> = self
            .terms
            .iter()
            .map(|(&d, c)| QTermRepr { degree: d, numerator: c.num(), denominator: c.den() })
            .collect();
        reprs.serialize(serializer)
    }
}
