//! Rank-one graded submodules `P = (+) R a_i x^i` of `Q_gr(A)` for a simple
//! GWA, handled through their structure constants `c_i = a_i / a_{i+1}`.
//!
//! A sequence is stored as a finite window `[lo, hi]` of explicit values
//! plus the tail law `c_i = 1` for `i > hi` and `c_i = sigma^i(f)` (monic)
//! for `i < lo`. Windows are always trimmed to minimal size, so two
//! sequences are equal exactly when their stored forms are.

use serde::{Deserialize, Serialize};

use crate::algebra::{shifted_factor, sigma_point, Poly, Rational};
use crate::error::{Error, Result};
use crate::gwa::Gwa;
use crate::simples::{require_simple, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstants {
    pub lo: i64,
    pub hi: i64,
    pub values: Vec<Poly>,
}

fn tail_value(a: &Gwa, lo: i64, i: i64) -> Poly {
    if i < lo {
        a.sigma_f(i).monic()
    } else {
        Poly::one()
    }
}

impl StructureConstants {
    /// The constants of `A` itself: `c_i = 1` for `i >= 0`, `sigma^i(f)` below.
    pub fn of_algebra() -> Self {
        StructureConstants { lo: 0, hi: -1, values: Vec::new() }
    }

    /// `c_i` under the tail law.
    pub fn c(&self, a: &Gwa, i: i64) -> Poly {
        if (self.lo..=self.hi).contains(&i) {
            self.values[(i - self.lo) as usize].clone()
        } else {
            tail_value(a, self.lo, i)
        }
    }

    pub fn is_window_empty(&self) -> bool {
        self.hi < self.lo
    }

    /// The values on `[from, to]`, which must contain the stored window.
    fn extended(&self, a: &Gwa, from: i64, to: i64) -> Vec<Poly> {
        (from..=to).map(|i| self.c(a, i)).collect()
    }

    /// Trims explicit entries that agree with the tail law.
    fn normalized(a: &Gwa, mut lo: i64, mut values: Vec<Poly>) -> Self {
        while values.last().is_some_and(Poly::is_one) {
            values.pop();
        }
        let skip =
            values.iter().enumerate().take_while(|(t, v)| **v == a.sigma_f(lo + *t as i64).monic()).count();
        values.drain(..skip);
        lo += skip as i64;
        StructureConstants { lo, hi: lo + values.len() as i64 - 1, values }
    }

    /// Index range covering both windows, with one extra slot on each side
    /// so that the boundary between the tails is inside.
    fn hull(&self, other: &StructureConstants) -> (i64, i64) {
        (self.lo.min(other.lo) - 1, self.hi.max(other.hi) + 1)
    }
}

/// Checks monicity and `c_i | sigma^i(f)` on the window and trims it.
pub fn validate_sc(a: &Gwa, lo: i64, hi: i64, values: Vec<Poly>) -> Result<StructureConstants> {
    require_simple(a)?;
    if hi < lo - 1 || (hi - lo + 1) as usize != values.len() {
        return Err(Error::InvalidWindow(format!(
            "window [{lo}, {hi}] does not match {} values",
            values.len()
        )));
    }
    for (t, c) in values.iter().enumerate() {
        let index = lo + t as i64;
        if !c.is_monic() {
            return Err(Error::NotMonic { index });
        }
        if !c.divides(&a.sigma_f(index)) {
            return Err(Error::NotDivisor { index });
        }
    }
    Ok(StructureConstants::normalized(a, lo, values))
}

/// Revalidates a value that may have come from outside the library.
pub fn check_sc(a: &Gwa, p: &StructureConstants) -> Result<StructureConstants> {
    validate_sc(a, p.lo, p.hi, p.values.clone())
}

pub fn sc_iso(p: &StructureConstants, q: &StructureConstants) -> bool {
    p == q
}

/// Constants of `P<n>`, where `P<n>_d = P_{d+n}`; realized as `x^-n P`,
/// so `c'_i = sigma^-n(c_{i+n})`.
pub fn shift_sc(a: &Gwa, p: &StructureConstants, n: i64) -> StructureConstants {
    let (from, to) = (p.lo - n - 1, p.hi - n + 1);
    let values = (from..=to).map(|i| apply_shift(a, &p.c(a, i + n), -n)).collect();
    StructureConstants::normalized(a, from, values)
}

fn apply_shift(a: &Gwa, c: &Poly, k: i64) -> Poly {
    crate::algebra::apply_sigma(c, k, a.base()).monic()
}

/// Multiplicity of the root of `sigma^i(z - alpha)` in `c_i`.
fn factor_exponent(a: &Gwa, p: &StructureConstants, alpha: &Rational, i: i64) -> u32 {
    let point = sigma_point(alpha, i, a.base()).expect("roots are nonzero");
    p.c(a, i).root_multiplicity(&point)
}

fn root_multiplicity_checked(a: &Gwa, alpha: &Rational) -> Result<u32> {
    match a.f().multiplicity(alpha) {
        0 => Err(Error::NotARoot(alpha.clone())),
        m => Ok(m),
    }
}

/// Every `c_n` is a product of full orbit factors `sigma^n((z - alpha)^n_alpha)`.
pub fn is_projective_sc(a: &Gwa, p: &StructureConstants) -> bool {
    (p.lo..=p.hi).all(|i| {
        a.f()
            .roots()
            .iter()
            .all(|(alpha, n)| matches!(factor_exponent(a, p, alpha, i), e if e == 0 || e == *n))
    })
}

fn require_projective(a: &Gwa, p: &StructureConstants) -> Result<()> {
    if is_projective_sc(a, p) {
        Ok(())
    } else {
        Err(Error::NotProjective)
    }
}

/// Whether `P` maps onto the length-`length` indecomposable `M_alpha^{sign length}<n>`.
pub fn surjects(
    a: &Gwa,
    p: &StructureConstants,
    sign: Sign,
    alpha: &Rational,
    length: u32,
    n: i64,
) -> Result<bool> {
    let n_alpha = root_multiplicity_checked(a, alpha)?;
    if length == 0 || length > n_alpha {
        return Err(Error::MalformedInput(format!("length must be in 1..={n_alpha} for root {alpha}")));
    }
    let e = factor_exponent(a, p, alpha, -n);
    Ok(match sign {
        Sign::Minus => e < n_alpha - length + 1,
        Sign::Plus => e >= length,
    })
}

/// The simple factor of a projective supported at `sigma_k^n(alpha)`:
/// `M_alpha^{sign}<-n>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileEntry {
    pub alpha: Rational,
    pub n: i64,
    pub sign: Sign,
}

/// Signs on `[from, to]`; below `from` every sign is plus, above `to`
/// every sign is minus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorProfile {
    pub from: i64,
    pub to: i64,
    pub entries: Vec<ProfileEntry>,
}

impl FactorProfile {
    pub fn sign(&self, alpha: &Rational, n: i64) -> Sign {
        if n < self.from {
            Sign::Plus
        } else if n > self.to {
            Sign::Minus
        } else {
            self.entries.iter().find(|e| &e.alpha == alpha && e.n == n).map(|e| e.sign).unwrap_or(Sign::Minus)
        }
    }
}

/// Profile of a projective over `window` (widened to cover the stored
/// constants), entries ordered by `n`, then by root.
pub fn factor_profile(a: &Gwa, p: &StructureConstants, window: Option<(i64, i64)>) -> Result<FactorProfile> {
    require_simple(a)?;
    require_projective(a, p)?;
    let (from, to) = match window {
        Some((from, to)) => (from.min(p.lo), to.max(p.hi)),
        None => (p.lo, p.hi),
    };
    let mut entries = Vec::new();
    for n in from..=to {
        for (alpha, _) in a.f().roots() {
            let sign = if factor_exponent(a, p, alpha, n) == 0 { Sign::Minus } else { Sign::Plus };
            entries.push(ProfileEntry { alpha: alpha.clone(), n, sign });
        }
    }
    Ok(FactorProfile { from, to, entries })
}

pub fn profile_iso(a: &Gwa, p: &StructureConstants, q: &StructureConstants) -> Result<bool> {
    let (from, to) = p.hull(q);
    Ok(factor_profile(a, p, Some((from, to)))? == factor_profile(a, q, Some((from, to)))?)
}

/// The projective with the prescribed simple factors:
/// `c_i = prod over plus entries at i of sigma^i((z - alpha)^n_alpha)`.
pub fn from_profile(a: &Gwa, profile: &FactorProfile) -> Result<StructureConstants> {
    require_simple(a)?;
    let FactorProfile { from, to, entries } = profile;
    if to < &(from - 1) {
        return Err(Error::InvalidWindow(format!("[{from}, {to}]")));
    }
    let width = (to - from + 1) as usize;
    let mut seen = vec![Vec::<&Rational>::new(); width];
    let mut values = vec![Poly::one(); width];
    for e in entries {
        let n_alpha = root_multiplicity_checked(a, &e.alpha)?;
        if e.n < *from || e.n > *to {
            return Err(Error::TailViolation(format!(
                "entry at n = {} lies outside [{from}, {to}], where the tails fix the sign",
                e.n
            )));
        }
        let t = (e.n - from) as usize;
        if seen[t].contains(&&e.alpha) {
            return Err(Error::MalformedInput(format!("two signs for ({}, {})", e.alpha, e.n)));
        }
        seen[t].push(&e.alpha);
        if e.sign == Sign::Plus {
            values[t] = &values[t] * &shifted_factor(&e.alpha, n_alpha, e.n, a.base());
        }
    }
    if let Some((t, _)) = seen.iter().enumerate().find(|(_, s)| s.len() != a.f().roots().len()) {
        return Err(Error::MalformedInput(format!(
            "profile must give one sign per root at n = {}",
            from + t as i64
        )));
    }
    Ok(StructureConstants::normalized(a, *from, values))
}

/// `p_i = prod_{j >= i} c_j` for `i` from `from` up to `hi + 1`, where the
/// product becomes 1.
pub fn canonical_rep(a: &Gwa, p: &StructureConstants, from: i64) -> Vec<(i64, Poly)> {
    let top = (p.hi + 1).max(from);
    let mut out = vec![(top, Poly::one())];
    for i in (from..top).rev() {
        let next = &p.c(a, i) * &out.last().expect("nonempty").1;
        out.push((i, next));
    }
    out.reverse();
    out
}

/// `theta_{P,Q} = lcm_i q_i / gcd(p_i, q_i)`; multiplication by `theta` is
/// the maximal embedding `P -> Q`. Outside the hull of the windows the
/// ratio is constant, so the lcm is taken over the hull.
pub fn max_embedding(a: &Gwa, p: &StructureConstants, q: &StructureConstants) -> Result<Poly> {
    require_simple(a)?;
    let (from, _) = p.hull(q);
    let to = p.hi.max(q.hi) + 1;
    let pr = canonical_rep(a, p, from);
    let qr = canonical_rep(a, q, from);
    let mut theta = Poly::one();
    for i in from..=to {
        let pi = lookup(&pr, i);
        let qi = lookup(&qr, i);
        let ratio = qi.exact_div(&pi.gcd(&qi)?).expect("gcd divides");
        theta = theta.lcm(&ratio);
    }
    Ok(theta)
}

fn lookup(rep: &[(i64, Poly)], i: i64) -> Poly {
    rep.iter().find(|(j, _)| *j == i).map(|(_, p)| p.clone()).unwrap_or_else(Poly::one)
}

/// `sigma^-j((z - alpha)^n_alpha)`, the factor toggled by `iota_j^alpha`.
pub fn involution_factor(a: &Gwa, alpha: &Rational, j: i64) -> Result<Poly> {
    let n_alpha = root_multiplicity_checked(a, alpha)?;
    Ok(shifted_factor(alpha, n_alpha, -j, a.base()))
}

/// `iota_j^alpha`: toggles the factor `sigma^-j((z - alpha)^n_alpha)` in
/// `c_-j`, swapping `M_alpha^-<j>` and `M_alpha^+<j>` among the simple
/// factors.
pub fn involute(a: &Gwa, p: &StructureConstants, alpha: &Rational, j: i64) -> Result<StructureConstants> {
    require_simple(a)?;
    require_projective(a, p)?;
    let factor = involution_factor(a, alpha, j)?;
    let idx = -j;
    let from = p.lo.min(idx);
    let to = p.hi.max(idx);
    let mut values = p.extended(a, from, to);
    let slot = &mut values[(idx - from) as usize];
    *slot = match slot.exact_div(&factor) {
        Some(rest) => rest,
        None => &*slot * &factor,
    };
    Ok(StructureConstants::normalized(a, from, values))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageEntry {
    pub alpha: Rational,
    /// Shift of the simple module `M_alpha^{+-}<n>`.
    pub n: i64,
    pub minus: bool,
    pub plus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub entries: Vec<CoverageEntry>,
    pub covers_window: bool,
    /// Whether `M_alpha^-<n>` is reached for all large `n`.
    pub minus_tail_covered: bool,
    /// Whether `M_alpha^+<n>` is reached for all very negative `n`.
    pub plus_tail_covered: bool,
}

/// Which simple modules `M_alpha^{+-}<n>`, `n` in `[from, to]`, are images
/// of some family member; with `iota_closure`, of some `iota_J`-translate
/// of a projective member.
pub fn coverage(
    a: &Gwa,
    family: &[StructureConstants],
    from: i64,
    to: i64,
    iota_closure: bool,
) -> Result<CoverageReport> {
    require_simple(a)?;
    if to < from {
        return Err(Error::InvalidWindow(format!("[{from}, {to}]")));
    }
    let mut entries = Vec::new();
    for n in from..=to {
        for (alpha, _) in a.f().roots() {
            let mut minus = false;
            let mut plus = false;
            for p in family {
                let mut candidates = vec![p.clone()];
                if iota_closure && is_projective_sc(a, p) {
                    candidates.push(involute(a, p, alpha, n)?);
                }
                for c in &candidates {
                    minus |= surjects(a, c, Sign::Minus, alpha, 1, n)?;
                    plus |= surjects(a, c, Sign::Plus, alpha, 1, n)?;
                }
            }
            entries.push(CoverageEntry { alpha: alpha.clone(), n, minus, plus });
        }
    }
    let covers_window = entries.iter().all(|e| e.minus && e.plus);
    let tails = iota_closure && family.iter().any(|p| is_projective_sc(a, p));
    Ok(CoverageReport { entries, covers_window, minus_tail_covered: tails, plus_tail_covered: tails })
}
