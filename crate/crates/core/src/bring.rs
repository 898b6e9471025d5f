//! The commutative ring `B = R[b_{i,j}] / (b_{i,j}^2 - h_j^{alpha_i})`,
//! graded by `Gamma`, the group of `r`-tuples of finite subsets of `Z`
//! under symmetric difference, where `h_j^{alpha_i} = sigma^-j((z - alpha_i)^n_i)`.
//!
//! Roots are indexed `i = 1..=r` in increasing order of value.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{apply_sigma, LaurentPoly, Poly, Rational};
use crate::error::{Error, Result};
use crate::gwa::Gwa;
use crate::simples::{require_simple, Sign};

/// Default cap on the dimension of the finite-dimensional oracle algebra.
pub const DEFAULT_MAX_ORACLE_DIM: u64 = 1 << 16;

/// Reads `GWA_KIT_MAX_ORACLE_DIM`, falling back to [`DEFAULT_MAX_ORACLE_DIM`].
pub fn oracle_dim_limit() -> u64 {
    std::env::var("GWA_KIT_MAX_ORACLE_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORACLE_DIM)
}

/// A generator index `(i, j)`: root `alpha_i` (1-based) and shift `j`.
pub type BIndex = (usize, i64);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GammaDegree {
    sets: Vec<BTreeSet<i64>>,
}

impl GammaDegree {
    pub fn identity(r: usize) -> Self {
        GammaDegree { sets: vec![BTreeSet::new(); r] }
    }

    pub fn from_sets(sets: Vec<BTreeSet<i64>>) -> Self {
        GammaDegree { sets }
    }

    /// `e_{i,j}`: the single element `j` in slot `i` (1-based).
    pub fn unit(r: usize, (i, j): BIndex) -> Self {
        let mut d = GammaDegree::identity(r);
        d.sets[i - 1].insert(j);
        d
    }

    pub fn from_indices(r: usize, indices: &[BIndex]) -> Self {
        indices.iter().fold(GammaDegree::identity(r), |acc, &ix| acc.sym_diff(&GammaDegree::unit(r, ix)))
    }

    pub fn sets(&self) -> &[BTreeSet<i64>] {
        &self.sets
    }

    pub fn rank(&self) -> usize {
        self.sets.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sets.iter().all(BTreeSet::is_empty)
    }

    pub fn indices(&self) -> impl Iterator<Item = BIndex> + '_ {
        self.sets.iter().enumerate().flat_map(|(t, s)| s.iter().map(move |&j| (t + 1, j)))
    }

    pub fn sym_diff(&self, other: &GammaDegree) -> GammaDegree {
        GammaDegree {
            sets: self
                .sets
                .iter()
                .zip(&other.sets)
                .map(|(a, b)| a.symmetric_difference(b).copied().collect())
                .collect(),
        }
    }

    pub fn intersection(&self, other: &GammaDegree) -> GammaDegree {
        GammaDegree {
            sets: self
                .sets
                .iter()
                .zip(&other.sets)
                .map(|(a, b)| a.intersection(b).copied().collect())
                .collect(),
        }
    }
}

impl fmt::Display for GammaDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.indices().map(|(i, j)| format!("b_{{{i},{j}}}")).collect();
        if names.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", names.join("*"))
        }
    }
}

impl Serialize for GammaDegree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sets.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GammaDegree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(GammaDegree { sets: Vec::<BTreeSet<i64>>::deserialize(deserializer)? })
    }
}

/// `h_j^{alpha_i}`, taken literally (not normalized to be monic).
pub fn h_factor(a: &Gwa, (i, j): BIndex) -> Result<Poly> {
    let (alpha, n) = root_at(a, i)?;
    Ok(apply_sigma(&Poly::linear(alpha).pow(n), -j, a.base()))
}

/// `h_J = prod over (i, j) in J of h_j^{alpha_i}`; `h_{empty} = 1`.
pub fn h_product(a: &Gwa, degree: &GammaDegree) -> Result<Poly> {
    degree.indices().try_fold(Poly::one(), |acc, ix| Ok(&acc * &h_factor(a, ix)?))
}

fn root_at(a: &Gwa, i: usize) -> Result<(&Rational, u32)> {
    a.f().roots().get(i.wrapping_sub(1)).map(|(alpha, n)| (alpha, *n)).ok_or_else(|| {
        Error::MalformedInput(format!("root index {i} out of range 1..={}", a.f().roots().len()))
    })
}

/// A finite sum of `coefficient * b_J`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BElement {
    terms: BTreeMap<GammaDegree, LaurentPoly>,
}

impl BElement {
    pub fn zero() -> Self {
        BElement::default()
    }

    pub fn one(r: usize) -> Self {
        BElement::term(GammaDegree::identity(r), LaurentPoly::one())
    }

    pub fn term(degree: GammaDegree, coeff: LaurentPoly) -> Self {
        BElement::from_terms([(degree, coeff)])
    }

    /// The generator `b_{i,j}`.
    pub fn generator(r: usize, ix: BIndex) -> Self {
        BElement::term(GammaDegree::unit(r, ix), LaurentPoly::one())
    }

    pub fn scalar(r: usize, p: Poly) -> Self {
        BElement::term(GammaDegree::identity(r), p.into())
    }

    pub fn from_terms<I: IntoIterator<Item = (GammaDegree, LaurentPoly)>>(terms: I) -> Self {
        let mut out = BElement::zero();
        for (d, c) in terms {
            out.add_term(d, &c);
        }
        out
    }

    fn add_term(&mut self, d: GammaDegree, c: &LaurentPoly) {
        let sum = match self.terms.get(&d) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<GammaDegree, LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn homogeneous_degree(&self) -> Option<&GammaDegree> {
        match self.terms.len() {
            1 => self.terms.keys().next(),
            _ => None,
        }
    }

    pub fn add(&self, other: &BElement) -> BElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &BElement) -> BElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), &-c);
        }
        out
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| match (d.is_identity(), c.is_one()) {
                (true, _) => format!("({c})"),
                (false, true) => d.to_string(),
                (false, false) => format!("({c})*{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BTermRepr {
    degree: GammaDegree,
    coeff: Poly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    z_offset: Option<i64>,
}

/// Serialized as `[{degree: [[j...] per root], coeff, z_offset?}]`.
impl Serialize for BElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<BTermRepr> = self
            .terms
            .iter()
            .map(|(d, c)| match c.to_poly() {
                Some(p) => BTermRepr { degree: d.clone(), coeff: p, z_offset: None },
                None => BTermRepr { degree: d.clone(), coeff: c.core().clone(), z_offset: Some(c.offset()) },
            })
            .collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<BTermRepr>::deserialize(deserializer)?;
        Ok(BElement::from_terms(
            reprs.into_iter().map(|t| (t.degree, LaurentPoly::new(t.z_offset.unwrap_or(0), t.coeff))),
        ))
    }
}

/// Checks that every degree has one slot per root and that coefficients
/// are polynomials over `k[z]`.
pub fn check_b_element(a: &Gwa, u: &BElement) -> Result<()> {
    let r = a.f().roots().len();
    for (d, c) in &u.terms {
        if d.rank() != r {
            return Err(Error::MalformedInput(format!(
                "degree has {} slots, expected one per root ({r})",
                d.rank()
            )));
        }
        if a.base().is_additive() && c.offset() < 0 {
            return Err(Error::NegativeExponent);
        }
    }
    Ok(())
}

/// Bilinear extension of `(I, p) * (J, q) = (I + J, p q h_{I cap J})`.
pub fn b_mul(a: &Gwa, u: &BElement, v: &BElement) -> Result<BElement> {
    check_b_element(a, u)?;
    check_b_element(a, v)?;
    let mut out = BElement::zero();
    for (i_deg, p) in &u.terms {
        for (j_deg, q) in &v.terms {
            let h: LaurentPoly = h_product(a, &i_deg.intersection(j_deg))?.into();
            out.add_term(i_deg.sym_diff(j_deg), &(&(p * q) * &h));
        }
    }
    Ok(out)
}

/// The fixed enumeration `x_1, x_2, ...` of generator indices: shifts
/// `j = 0, 1, -1, 2, -2, ...`, and for each shift the roots in order.
pub fn standard_indices(a: &Gwa, m: usize) -> Vec<BIndex> {
    let r = a.f().roots().len();
    let shifts = (0..).map(|k: i64| if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) });
    shifts.flat_map(|j| (1..=r).map(move |i| (i, j))).take(m).collect()
}

fn check_window(a: &Gwa, window: &[BIndex]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &(i, j) in window {
        root_at(a, i)?;
        if !seen.insert((i, j)) {
            return Err(Error::MalformedInput(format!("index ({i}, {j}) listed twice")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BRelation {
    pub generator: String,
    pub index: BIndex,
    /// Right-hand side of `b^2 = h`.
    pub square: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<BRelation>,
    /// Rank over `R`: the number of squarefree monomials.
    pub rank: String,
    pub text: String,
}

fn generator_name((i, j): BIndex) -> String {
    format!("b_{{{i},{j}}}")
}

/// The truncation `R[b_x : x in window] / (b_x^2 - h_x)`.
pub fn presentation(a: &Gwa, window: &[BIndex]) -> Result<BPresentation> {
    require_simple(a)?;
    check_window(a, window)?;
    let generators: Vec<String> = window.iter().map(|&ix| generator_name(ix)).collect();
    let relations = window
        .iter()
        .map(|&ix| Ok(BRelation { generator: generator_name(ix), index: ix, square: h_factor(a, ix)? }))
        .collect::<Result<Vec<_>>>()?;
    let text = if window.is_empty() {
        "R".to_string()
    } else {
        let rels: Vec<String> =
            relations.iter().map(|r| format!("{}^2 - ({})", r.generator, r.square)).collect();
        format!("R[{}]/({})", generators.join(", "), rels.join(", "))
    };
    let rank = num_traits::pow(num_bigint::BigUint::from(2u32), window.len()).to_string();
    Ok(BPresentation { generators, relations, rank, text })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BProps {
    pub is_domain: bool,
    pub truncation_rank: String,
    pub reduced_witness: bool,
}

/// Domain test (every multiplicity odd), rank `2^m` of the truncation on
/// the first `m` standard indices, and the squares `p^2 h_J` of homogeneous
/// elements `p b_J` over that truncation being nonzero.
pub fn b_props(a: &Gwa, m: usize) -> Result<BProps> {
    require_simple(a)?;
    let is_domain = a.f().roots().iter().all(|(_, n)| n % 2 == 1);
    let window = standard_indices(a, m);
    let r = a.f().roots().len();
    let sample = Poly::from_i64s(&[1, 1]);
    let mut reduced_witness = true;
    // Squares of p*b_J for J over (up to 1024) subsets of the window.
    let subsets = 1u64 << m.min(10);
    for mask in 0..subsets {
        let ix: Vec<BIndex> =
            window.iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).map(|(_, &x)| x).collect();
        let u = BElement::term(GammaDegree::from_indices(r, &ix), sample.clone().into());
        let sq = b_mul(a, &u, &u)?;
        reduced_witness &= sq.homogeneous_degree().is_some_and(GammaDegree::is_identity);
    }
    let truncation_rank = num_traits::pow(num_bigint::BigUint::from(2u32), m).to_string();
    Ok(BProps { is_domain, truncation_rank, reduced_witness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPrime {
    pub signs: Vec<Sign>,
    pub generators: Vec<BElement>,
    pub text: Vec<String>,
    /// The quotient map `b_x -> -+ s_x` is a well-defined `R`-algebra map
    /// onto `R` killing the generators, so the quotient is `R`, a domain.
    pub quotient_is_domain: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimalPrimes {
    Domain { message: String },
    Primes { window: Vec<BIndex>, primes: Vec<MinimalPrime> },
}

fn half_power(a: &Gwa, (i, j): BIndex) -> Result<Poly> {
    let (alpha, n) = root_at(a, i)?;
    Ok(apply_sigma(&Poly::linear(alpha).pow(n / 2), -j, a.base()))
}

/// Evaluates the quotient map `b_x -> value_x` on an element of the truncation.
fn evaluate(u: &BElement, values: &BTreeMap<BIndex, LaurentPoly>) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for (d, c) in u.terms() {
        let prod = d.indices().fold(c.clone(), |acc, ix| &acc * &values[&ix]);
        total = &total + &prod;
    }
    total
}

/// The `2^|window|` primes `(b_{i,j} -+ sigma^-j((z - alpha_i)^{n_i/2}))`
/// over a window of even-multiplicity indices.
pub fn minimal_primes(a: &Gwa, window: &[BIndex]) -> Result<MinimalPrimes> {
    require_simple(a)?;
    check_window(a, window)?;
    if a.f().roots().iter().all(|(_, n)| n % 2 == 1) {
        return Ok(MinimalPrimes::Domain {
            message: "B is a domain; (0) is the unique minimal prime".into(),
        });
    }
    for &(i, j) in window {
        let (alpha, n) = root_at(a, i)?;
        if n % 2 == 1 {
            return Err(Error::MalformedInput(format!(
                "index ({i}, {j}): root {alpha} has odd multiplicity {n}"
            )));
        }
    }
    if window.len() > 20 {
        return Err(Error::OracleTooLarge { dim: 1 << window.len().min(63), max: 1 << 20 });
    }
    let r = a.f().roots().len();
    let roots: Vec<Poly> = window.iter().map(|&ix| half_power(a, ix)).collect::<Result<_>>()?;
    let mut primes = Vec::new();
    for mask in 0..1u64 << window.len() {
        let signs: Vec<Sign> =
            (0..window.len()).map(|t| if mask >> t & 1 == 0 { Sign::Minus } else { Sign::Plus }).collect();
        let mut generators = Vec::new();
        let mut values = BTreeMap::new();
        let mut well_defined = true;
        let mut text = Vec::new();
        for ((&ix, s), sign) in window.iter().zip(&roots).zip(&signs) {
            text.push(format!("{} {} ({s})", generator_name(ix), sign.symbol()));
            let s = match sign {
                Sign::Minus => s.clone(),
                Sign::Plus => -s,
            };
            well_defined &= &s * &s == h_factor(a, ix)?;
            generators.push(BElement::generator(r, ix).sub(&BElement::scalar(r, s.clone())));
            values.insert(ix, LaurentPoly::from(s));
        }
        let kills = generators.iter().all(|g| evaluate(g, &values).is_zero());
        primes.push(MinimalPrime { signs, generators, text, quotient_is_domain: well_defined && kills });
    }
    Ok(MinimalPrimes::Primes { window: window.to_vec(), primes })
}

/// A finite-dimensional commutative algebra with basis the squarefree
/// monomials `b_S`, `S` a subset of `0..m` (as a bitmask), and relations
/// `b_t^2 = gamma_t`.
pub struct SquarefreeAlgebra {
    gammas: Vec<Rational>,
}

/// A sparse vector over the monomial basis.
pub type SparseVec = BTreeMap<u64, Rational>;

impl SquarefreeAlgebra {
    pub fn new(gammas: Vec<Rational>, max_dim: u64) -> Result<Self> {
        let m = gammas.len();
        let dim = if m >= 64 { u64::MAX } else { 1u64 << m };
        if dim > max_dim {
            return Err(Error::OracleTooLarge { dim, max: max_dim });
        }
        Ok(SquarefreeAlgebra { gammas })
    }

    pub fn dim(&self) -> u64 {
        1u64 << self.gammas.len()
    }

    /// `b_S * b_t`.
    fn times_generator(&self, s: u64, t: usize) -> (u64, Rational) {
        let bit = 1u64 << t;
        if s & bit == 0 {
            (s | bit, Rational::one())
        } else {
            (s & !bit, self.gammas[t].clone())
        }
    }

    /// `b_S * (b_t + c)`.
    pub fn monomial_times_linear(&self, s: u64, t: usize, c: &Rational) -> SparseVec {
        let mut v = SparseVec::new();
        let (s2, coeff) = self.times_generator(s, t);
        if !coeff.is_zero() {
            v.insert(s2, coeff);
        }
        if !c.is_zero() {
            let e = v.entry(s).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                v.remove(&s);
            }
        }
        v
    }
}

/// Row-echelon span of sparse vectors with exact elimination.
#[derive(Default)]
pub struct Span {
    /// pivot -> row with leading entry 1 at the pivot (the smallest key).
    rows: BTreeMap<u64, SparseVec>,
}

impl Span {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0u64;
        loop {
            let Some((&k, c)) = v.range(cursor..).next() else { return v };
            let c = c.clone();
            match self.rows.get(&k) {
                Some(row) => {
                    for (j, x) in row {
                        let e = v.entry(*j).or_insert_with(Rational::zero);
                        *e -= &(&c * x);
                        if e.is_zero() {
                            v.remove(j);
                        }
                    }
                }
                None => cursor = k + 1,
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else { return false };
        let inv = lead.inv();
        let row: SparseVec = v.iter().map(|(k, x)| (*k, x * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub m: usize,
    pub alpha: Rational,
    /// `gamma_j = h_j^{alpha_1}(1)` for `j = 0..m`.
    pub gammas: Vec<Rational>,
    /// The chosen square roots of the `gamma_j`.
    pub roots: Vec<Rational>,
    /// `strict[n]`: `b_{1,n} + sqrt(gamma_n)` is not in `I_n`.
    pub strict: Vec<bool>,
    /// Dimensions of the ideals `I_0, ..., I_m` in `B_m / (z - 1)`.
    pub ideal_dims: Vec<usize>,
    pub oracle_dim: u64,
}

impl ChainCertificate {
    pub fn is_strictly_ascending(&self) -> bool {
        self.strict.iter().all(|&s| s)
    }
}

/// Certifies `I_0 < I_1 < ... < I_m` with `I_n = (b_{1,j} + sqrt(gamma_j) : j < n)`
/// by exact linear algebra in the `2^m`-dimensional algebra
/// `R[b_{1,0}, ..., b_{1,m-1}] / (b^2 - h, z - 1)`.
pub fn noeth_chain_check(a: &Gwa, m: usize, max_dim: u64) -> Result<ChainCertificate> {
    require_simple(a)?;
    let (alpha, n1) = root_at(a, 1)?;
    let one = Rational::one();
    let mut gammas = Vec::with_capacity(m);
    let mut roots = Vec::with_capacity(m);
    for j in 0..m as i64 {
        let gamma = h_factor(a, (1, j))?.eval(&one);
        let root = if n1 % 2 == 0 {
            half_power(a, (1, j))?.eval(&one)
        } else {
            gamma.sqrt().ok_or_else(|| {
                Error::UnsupportedConfiguration(format!(
                    "gamma_{{1,{j}}} = {gamma} has no rational square root"
                ))
            })?
        };
        gammas.push(gamma);
        roots.push(root);
    }
    let algebra = SquarefreeAlgebra::new(gammas.clone(), max_dim)?;
    let mut span = Span::default();
    let mut strict = Vec::with_capacity(m);
    let mut ideal_dims = vec![0];
    for (t, root) in roots.iter().enumerate() {
        let mut target = SparseVec::new();
        target.insert(1u64 << t, Rational::one());
        if !root.is_zero() {
            target.insert(0, root.clone());
        }
        strict.push(!span.contains(&target));
        for s in 0..algebra.dim() {
            span.insert(algebra.monomial_times_linear(s, t, root));
        }
        ideal_dims.push(span.dim());
    }
    Ok(ChainCertificate {
        m,
        alpha: alpha.clone(),
        gammas,
        roots,
        strict,
        ideal_dims,
        oracle_dim: algebra.dim(),
    })
}
