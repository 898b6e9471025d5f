//! Graded simple modules, the indecomposables `M^{+-j}`, their
//! presentations and graded dimensions.
//!
//! A presentation is a list of homogeneous generators `g_k` of a right ideal
//! `I` together with a shift `s`; the module is `(A / sum g_k A)<s>`, with
//! `M<s>_i = M_{i+s}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{sigma_point, LaurentPoly, Poly, Rational};
use crate::error::{Error, Result};
use crate::gwa::{gwa_mul, Gwa, GwaElement};
use crate::orbit::{congruence, orbit_decomposition, Orbit, OrbitClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimpleKind {
    /// `M_lambda = A / (z - lambda)A` for `lambda` off every degenerate orbit.
    Nondegenerate {
        lambda: Rational,
    },
    Minus {
        alpha: Rational,
    },
    Plus {
        alpha: Rational,
    },
    /// The `index`-th interval module on the congruent orbit of `alpha`,
    /// `1 <= index <= r` for an orbit with `r + 1` distinct roots.
    Interval {
        alpha: Rational,
        index: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleDescriptor {
    #[serde(flatten)]
    pub kind: SimpleKind,
    #[serde(default)]
    pub shift: i64,
}

/// `M_alpha^{-j}` or `M_alpha^{+j}`, shifted by `shift`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndecomposableDescriptor {
    pub sign: Sign,
    pub alpha: Rational,
    pub length: u32,
    #[serde(default)]
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<GwaElement>,
    pub shift: i64,
}

impl Presentation {
    /// Display form such as `A/((z - 1)A + xA + yA)<-1>`.
    pub fn text(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(generator_text).collect();
        let mut s = format!("A/({})", gens.join(" + "));
        if self.shift != 0 {
            s.push_str(&format!("<{}>", self.shift));
        }
        s
    }
}

fn generator_text(g: &GwaElement) -> String {
    let d = g.homogeneous_degree().expect("presentation generators are homogeneous");
    let c = g.component(d);
    let w = match d {
        0 => String::new(),
        1 => "x".into(),
        -1 => "y".into(),
        d if d > 0 => format!("x^{d}"),
        d => format!("y^{}", -d),
    };
    let coeff = c.to_string();
    if c.is_one() {
        format!("{w}A")
    } else if coeff.chars().all(|ch| ch.is_alphanumeric() || ch == '^') {
        format!("{coeff}{w}A")
    } else {
        format!("({coeff}){w}A")
    }
}

/// Anything with a defining presentation.
pub trait Presented {
    fn presentation(&self, a: &Gwa) -> Result<Presentation>;
}

fn scalar_gen(p: Poly) -> GwaElement {
    GwaElement::scalar(p)
}

fn point(a: &Gwa, alpha: &Rational, k: i64) -> Rational {
    sigma_point(alpha, k, a.base()).expect("roots are valid points")
}

fn orbit_with_representative(a: &Gwa, alpha: &Rational) -> Result<Orbit> {
    if a.f().multiplicity(alpha) == 0 {
        return Err(Error::NotARoot(alpha.clone()));
    }
    let orbit = orbit_decomposition(a).orbit_of(alpha).cloned().expect("every root lies on an orbit");
    if &orbit.representative != alpha {
        return Err(Error::MalformedInput(format!(
            "{alpha} is not the representative of its orbit (use {})",
            orbit.representative
        )));
    }
    Ok(orbit)
}

impl Presented for SimpleDescriptor {
    fn presentation(&self, a: &Gwa) -> Result<Presentation> {
        let (generators, shift) = match &self.kind {
            SimpleKind::Nondegenerate { lambda } => {
                for root in a.f().distinct_roots() {
                    if congruence(root, lambda, a.base())?.is_some() {
                        return Err(Error::MalformedInput(format!(
                            "{lambda} lies on the degenerate orbit of {root}"
                        )));
                    }
                }
                (vec![scalar_gen(Poly::linear(lambda))], 0)
            }
            SimpleKind::Minus { alpha } => {
                orbit_with_representative(a, alpha)?;
                (vec![scalar_gen(Poly::linear(alpha)), GwaElement::x()], 0)
            }
            SimpleKind::Plus { alpha } => {
                let orbit = orbit_with_representative(a, alpha)?;
                let top = orbit.members.last().expect("nonempty").offset;
                let beta = point(a, alpha, -top - 1);
                (vec![scalar_gen(Poly::linear(&beta)), GwaElement::y()], -top - 1)
            }
            SimpleKind::Interval { alpha, index } => {
                let orbit = orbit_with_representative(a, alpha)?;
                if orbit.classification != OrbitClass::Congruent
                    || *index == 0
                    || *index >= orbit.members.len()
                {
                    return Err(Error::MalformedInput(format!(
                        "interval index {index} out of range for the orbit of {alpha}"
                    )));
                }
                let lo = orbit.members[index - 1].offset;
                let hi = orbit.members[*index].offset;
                let beta = point(a, alpha, -hi);
                (vec![scalar_gen(Poly::linear(&beta)), GwaElement::x(), GwaElement::w(-(hi - lo))], -hi)
            }
        };
        Ok(Presentation { generators, shift: shift + self.shift })
    }
}

impl Presented for IndecomposableDescriptor {
    fn presentation(&self, a: &Gwa) -> Result<Presentation> {
        require_simple(a)?;
        let n = a.f().multiplicity(&self.alpha);
        if n == 0 {
            return Err(Error::NotARoot(self.alpha.clone()));
        }
        if self.length == 0 || self.length > n {
            return Err(Error::MalformedInput(format!(
                "length {} outside 1..={n} for root {}",
                self.length, self.alpha
            )));
        }
        let (generators, shift) = match self.sign {
            Sign::Minus => (vec![scalar_gen(Poly::linear(&self.alpha).pow(self.length)), GwaElement::x()], 0),
            Sign::Plus => {
                let beta = point(a, &self.alpha, -1);
                (vec![scalar_gen(Poly::linear(&beta).pow(self.length)), GwaElement::y()], -1)
            }
        };
        Ok(Presentation { generators, shift: shift + self.shift })
    }
}

pub(crate) fn require_simple(a: &Gwa) -> Result<()> {
    if crate::orbit::is_simple(a) {
        Ok(())
    } else {
        Err(Error::NotSimpleAlgebra)
    }
}

/// `dim_k (A / I)_e` for the right ideal `I` generated by homogeneous
/// `generators`; `None` when the component is infinite dimensional.
///
/// `I_e = sum_k g_k A_{e - deg g_k}` and `A_e = R w_e`, so `I_e = h R w_e`
/// with `h` the gcd of the leading scalars of `g_k w_{e - deg g_k}`.
pub fn quotient_dim(a: &Gwa, generators: &[GwaElement], e: i64) -> Option<u64> {
    let mut h: Option<Poly> = None;
    for g in generators {
        let d = g.homogeneous_degree().expect("homogeneous generator");
        let prod = gwa_mul(a, g, &GwaElement::w(e - d));
        let c = prod.component(e);
        if c.is_zero() {
            continue;
        }
        let p = scalar_core(a, &c);
        h = Some(match h {
            None => p.monic(),
            Some(prev) => prev.gcd(&p).expect("nonzero"),
        });
    }
    h.map(|p| p.degree().expect("nonzero") as u64)
}

/// The polynomial generating the same ideal of `R` as `c`: over
/// `k[z, z^-1]` powers of `z` are units and are dropped.
fn scalar_core(a: &Gwa, c: &LaurentPoly) -> Poly {
    if a.base().is_additive() {
        c.to_poly().expect("no negative powers over k[z]")
    } else {
        c.core().clone()
    }
}

/// Dimension of the degree-`i` component of the module described by `d`.
pub fn graded_dim<D: Presented>(a: &Gwa, d: &D, i: i64) -> Result<u64> {
    let p = d.presentation(a)?;
    quotient_dim(a, &p.generators, i + p.shift)
        .ok_or_else(|| Error::UnsupportedConfiguration("infinite-dimensional graded component".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportPoint {
    pub point: Rational,
    pub annihilator_exponent: u32,
}

/// The point `sigma_k^{-n}(alpha)` supporting `M_alpha^{+-}<n>`.
pub fn support_point(a: &Gwa, d: &SimpleDescriptor) -> Result<SupportPoint> {
    match &d.kind {
        SimpleKind::Minus { alpha } | SimpleKind::Plus { alpha } => {
            Ok(SupportPoint { point: sigma_point(alpha, -d.shift, a.base())?, annihilator_exponent: 1 })
        }
        _ => Err(Error::MalformedInput("support points are defined for minus and plus modules".into())),
    }
}

/// Support point of `M_alpha^{+-j}<n>`, annihilated by
/// `sigma^{-n}((z - alpha)^j)`.
pub fn indecomposable_support(a: &Gwa, d: &IndecomposableDescriptor) -> Result<SupportPoint> {
    d.presentation(a)?;
    Ok(SupportPoint { point: sigma_point(&d.alpha, -d.shift, a.base())?, annihilator_exponent: d.length })
}

/// Degrees where a module (before any extra shift) is nonzero:
/// `from..=to`, either end open when absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRange {
    pub from: Option<i64>,
    pub to: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleModule {
    pub name: String,
    pub descriptor: SimpleDescriptor,
    pub presentation: Presentation,
    pub support: DegreeRange,
}

impl SimpleModule {
    pub fn text(&self) -> String {
        format!("{} = {}", self.name, self.presentation.text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSimples {
    pub representative: Rational,
    pub classification: OrbitClass,
    pub modules: Vec<SimpleModule>,
}

/// The one-parameter family `M_lambda<n>`, `lambda` not congruent to any
/// listed representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NondegenerateFamily {
    pub presentation: String,
    pub excluded_orbits: Vec<Rational>,
    pub shifts: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleListing {
    pub orbits: Vec<OrbitSimples>,
    pub nondegenerate: NondegenerateFamily,
}

impl SimpleListing {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for o in &self.orbits {
            for m in &o.modules {
                out.push_str(&m.text());
                out.push('\n');
            }
        }
        out
    }
}

/// All graded simple modules up to shift, grouped by orbit.
pub fn classify_simples(a: &Gwa) -> SimpleListing {
    let decomposition = orbit_decomposition(a);
    let mut orbits = Vec::new();
    for orbit in &decomposition.orbits {
        let alpha = orbit.representative.clone();
        let mut modules = Vec::new();
        let mut push = |name: String, kind: SimpleKind, support: DegreeRange| {
            let descriptor = SimpleDescriptor { kind, shift: 0 };
            let presentation = descriptor.presentation(a).expect("listing descriptors are valid");
            modules.push(SimpleModule { name, descriptor, presentation, support });
        };
        push(
            format!("M_{alpha}^-"),
            SimpleKind::Minus { alpha: alpha.clone() },
            DegreeRange { from: None, to: Some(0) },
        );
        for k in 1..orbit.members.len() {
            let lo = orbit.members[k - 1].offset;
            let hi = orbit.members[k].offset;
            push(
                format!("M_{alpha}^({lo},{hi}]"),
                SimpleKind::Interval { alpha: alpha.clone(), index: k },
                DegreeRange { from: Some(lo + 1), to: Some(hi) },
            );
        }
        let top = orbit.members.last().expect("nonempty").offset;
        push(
            format!("M_{alpha}^+"),
            SimpleKind::Plus { alpha: alpha.clone() },
            DegreeRange { from: Some(top + 1), to: None },
        );
        orbits.push(OrbitSimples { representative: alpha, classification: orbit.classification, modules });
    }
    let nondegenerate = NondegenerateFamily {
        presentation: "A/((z - lambda)A)".into(),
        excluded_orbits: decomposition.orbits.iter().map(|o| o.representative.clone()).collect(),
        shifts: "all",
    };
    SimpleListing { orbits, nondegenerate }
}
