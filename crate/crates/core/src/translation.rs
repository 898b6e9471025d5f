//! Moving simple roots of `f` along their orbits: the elementary moves, the
//! Morita context behind them, and a normalizer that gathers every orbit
//! onto its representative.

use serde::Serialize;

use crate::algebra::{sigma_point, FactoredPoly, Poly, Rational, SigmaAction};
use crate::error::{Error, Result};
use crate::gwa::{qgr_mul, Gwa, GwaElement, QGrElement};
use crate::orbit::{orbit_decomposition, Orbit, OrbitMember};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MovePart {
    /// `beta -> sigma_k(beta)`, one step toward the representative. Legal
    /// when `beta` is lowest on its orbit or the gap below exceeds 1.
    ShiftDown,
    /// `beta -> sigma_k^-1(beta)`. Legal when `beta` is highest on its orbit
    /// or the gap above exceeds 1.
    ShiftUp,
    /// `beta` merges into the root directly below it (gap exactly 1).
    Collapse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivalenceLevel {
    /// Equivalence of graded module categories.
    Grmod,
    /// Equivalence only after quotienting by torsion.
    Qgrmod,
}

/// An elementary move on a root of multiplicity one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub part: MovePart,
    pub root: Rational,
    pub target: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveOutcome {
    pub new_f: FactoredPoly,
    pub equivalence_level: EquivalenceLevel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_ideal: Option<Vec<GwaElement>>,
}

fn neighbors(orbit: &Orbit, t: usize) -> (Option<&OrbitMember>, Option<&OrbitMember>) {
    let below = t.checked_sub(1).map(|i| &orbit.members[i]);
    (below, orbit.members.get(t + 1))
}

/// Every move applicable to `a`, grouped by orbit and ordered by offset.
pub fn legal_moves(a: &Gwa) -> Vec<Move> {
    let base = a.base();
    let mut moves = Vec::new();
    for orbit in orbit_decomposition(a).orbits {
        for (t, m) in orbit.members.iter().enumerate() {
            if m.multiplicity != 1 {
                continue;
            }
            let (below, above) = neighbors(&orbit, t);
            let down = sigma_point(&m.root, 1, base).expect("nonzero root");
            let up = sigma_point(&m.root, -1, base).expect("nonzero root");
            match below {
                None => moves.push(Move { part: MovePart::ShiftDown, root: m.root.clone(), target: down }),
                Some(b) if m.offset - b.offset > 1 => {
                    moves.push(Move { part: MovePart::ShiftDown, root: m.root.clone(), target: down })
                }
                Some(b) => moves.push(Move {
                    part: MovePart::Collapse,
                    root: m.root.clone(),
                    target: b.root.clone(),
                }),
            }
            if above.is_none_or(|u| u.offset - m.offset > 1) {
                moves.push(Move { part: MovePart::ShiftUp, root: m.root.clone(), target: up });
            }
        }
    }
    moves
}

/// Explains why `m` is not legal on `a`, if it is not.
fn check_move(a: &Gwa, m: &Move) -> Result<()> {
    let mult = a.f().multiplicity(&m.root);
    if mult == 0 {
        return Err(Error::NotARoot(m.root.clone()));
    }
    if mult != 1 {
        return Err(Error::IllegalMove(format!(
            "root {} has multiplicity {mult}; moves need a simple root",
            m.root
        )));
    }
    if legal_moves(a).contains(m) {
        return Ok(());
    }
    let reason = match m.part {
        MovePart::ShiftDown => "the root directly below is at distance 1 (collapse instead)",
        MovePart::ShiftUp => "the root directly above is at distance 1",
        MovePart::Collapse => "there is no root at distance exactly 1 below, or the target differs",
    };
    Err(Error::IllegalMove(format!("{:?} of {} to {}: {reason}", m.part, m.root, m.target)))
}

pub fn apply_move(a: &Gwa, m: &Move) -> Result<MoveOutcome> {
    check_move(a, m)?;
    let new_f = a.f().replace(&m.root, &m.target, 1);
    let (equivalence_level, trace_ideal) = match m.part {
        MovePart::ShiftDown | MovePart::ShiftUp => (EquivalenceLevel::Grmod, None),
        MovePart::Collapse => (
            EquivalenceLevel::Qgrmod,
            Some(vec![GwaElement::x(), GwaElement::y(), GwaElement::scalar(Poly::linear(&m.root))]),
        ),
    };
    Ok(MoveOutcome { new_f, equivalence_level, trace_ideal })
}

/// Relation checks for `X = x`, `Y = x^-1 sigma(h) g`, `Z = z` inside
/// `Q_gr(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub xy_is_f_prime: bool,
    pub yx_is_sigma_inv_f_prime: bool,
    pub yz_is_sigma_inv_z_y: bool,
    pub xz_is_sigma_z_x: bool,
}

impl GeneratorCheck {
    pub fn all(&self) -> bool {
        self.xy_is_f_prime && self.yx_is_sigma_inv_f_prime && self.yz_is_sigma_inv_z_y && self.xz_is_sigma_z_x
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaReport {
    pub beta: Rational,
    pub h: Poly,
    pub g: Poly,
    /// `sigma(h) g` up to its leading scalar, with `beta` replaced by
    /// `sigma_k(beta)`.
    pub f_prime: FactoredPoly,
    pub d: Poly,
    pub is_progenerator: bool,
    pub generator_check: GeneratorCheck,
}

/// The context between `A` and `A' = R(sigma, sigma(h) g)` for `h = z - beta`,
/// `g = f / h`, with `d = gcd(sigma^-1(g), h)`.
pub fn morita_context(a: &Gwa, beta: &Rational) -> Result<MoritaReport> {
    let mult = a.f().multiplicity(beta);
    if mult == 0 {
        return Err(Error::NotARoot(beta.clone()));
    }
    if mult != 1 {
        return Err(Error::NotSimpleRoot { root: beta.clone(), multiplicity: mult });
    }
    let base = a.base();
    let h = Poly::linear(beta);
    let g = a.f_poly().exact_div(&h).expect("beta is a root");
    let f_prime_lit = &h.sigma(base, 1) * &g;
    let d = g.sigma(base, -1).gcd(&h)?;
    let target = sigma_point(beta, 1, base)?;
    let f_prime = a.f().replace(beta, &target, 1);
    debug_assert_eq!(f_prime.expand(), f_prime_lit.monic());

    let x = QGrElement::x_pow(1);
    let y = qgr_mul(a, &QGrElement::x_pow(-1), &QGrElement::scalar(f_prime_lit.clone().into()));
    let z = QGrElement::scalar(Poly::z().into());
    let scalar = |p: Poly| QGrElement::scalar(p.into());
    let generator_check = GeneratorCheck {
        xy_is_f_prime: qgr_mul(a, &x, &y) == scalar(f_prime_lit.clone()),
        yx_is_sigma_inv_f_prime: qgr_mul(a, &y, &x) == scalar(f_prime_lit.sigma(base, -1)),
        yz_is_sigma_inv_z_y: qgr_mul(a, &y, &z) == qgr_mul(a, &scalar(Poly::z().sigma(base, -1)), &y),
        xz_is_sigma_z_x: qgr_mul(a, &x, &z) == qgr_mul(a, &scalar(Poly::z().sigma(base, 1)), &x),
    };
    Ok(MoritaReport { beta: beta.clone(), is_progenerator: d.is_one(), h, g, f_prime, d, generator_check })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    /// The step undoes `move`: the move is legal on the algebra reached
    /// after this step and leads back to the algebra before it.
    Inverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(flatten)]
    pub step: Move,
    pub level: EquivalenceLevel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_ideal: Option<Vec<GwaElement>>,
    pub direction: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub canonical: Gwa,
    pub trace: Vec<TraceStep>,
}

/// Applies one trace step with full re-validation and returns the next
/// algebra.
pub fn replay_step(a: &Gwa, step: &TraceStep) -> Result<Gwa> {
    match step.direction {
        Direction::Forward => {
            let out = apply_move(a, &step.step)?;
            a.with_f(out.new_f)
        }
        Direction::Inverse => {
            let m = &step.step;
            if m.part != MovePart::Collapse || a.f().multiplicity(&m.target) < 2 {
                return Err(Error::IllegalMove(format!("cannot split {} off {}", m.root, m.target)));
            }
            let next = a.with_f(a.f().replace(&m.target, &m.root, 1))?;
            let back = apply_move(&next, m)?;
            if &back.new_f != a.f() {
                return Err(Error::IllegalMove("inverse step does not return".into()));
            }
            Ok(next)
        }
    }
}

pub fn replay_trace(a: &Gwa, trace: &[TraceStep]) -> Result<Gwa> {
    trace.iter().try_fold(a.clone(), |cur, step| replay_step(&cur, step))
}

struct Normalizer {
    current: Gwa,
    trace: Vec<TraceStep>,
}

impl Normalizer {
    fn forward(&mut self, part: MovePart, root: Rational, target: Rational) -> Result<()> {
        self.push(TraceStep {
            step: Move { part, root, target },
            level: if part == MovePart::Collapse {
                EquivalenceLevel::Qgrmod
            } else {
                EquivalenceLevel::Grmod
            },
            trace_ideal: None,
            direction: Direction::Forward,
        })
    }

    fn push(&mut self, mut step: TraceStep) -> Result<()> {
        if step.step.part == MovePart::Collapse {
            step.trace_ideal = Some(vec![
                GwaElement::x(),
                GwaElement::y(),
                GwaElement::scalar(Poly::linear(&step.step.root)),
            ]);
        }
        self.current = replay_step(&self.current, &step)?;
        self.trace.push(step);
        Ok(())
    }

    fn point(&self, lambda: &Rational, k: i64) -> Rational {
        sigma_point(lambda, k, self.current.base()).expect("nonzero root")
    }

    fn orbit_of(&self, rep: &Rational) -> Orbit {
        orbit_decomposition(&self.current).orbit_of(rep).cloned().expect("representative stays a root")
    }

    /// Spreads every multiple root above the representative into simple
    /// roots by shifting the run above it upward and splitting.
    fn explode(&mut self, rep: &Rational) -> Result<()> {
        loop {
            let orbit = self.orbit_of(rep);
            let Some(t) = orbit.members.iter().rposition(|m| m.offset > 0 && m.multiplicity > 1) else {
                return Ok(());
            };
            let gamma = orbit.members[t].clone();
            let mut run_end = t;
            while run_end + 1 < orbit.members.len()
                && orbit.members[run_end + 1].offset == orbit.members[run_end].offset + 1
            {
                run_end += 1;
            }
            for m in orbit.members[t + 1..=run_end].iter().rev() {
                let up = self.point(&m.root, -1);
                self.forward(MovePart::ShiftUp, m.root.clone(), up)?;
            }
            let split = self.point(&gamma.root, -1);
            self.push(TraceStep {
                step: Move { part: MovePart::Collapse, root: split, target: gamma.root.clone() },
                level: EquivalenceLevel::Qgrmod,
                trace_ideal: None,
                direction: Direction::Inverse,
            })?;
        }
    }

    /// With every non-representative root simple, walks each one down and
    /// merges it into the representative.
    fn gather(&mut self, rep: &Rational) -> Result<()> {
        loop {
            let orbit = self.orbit_of(rep);
            let Some(next) = orbit.members.get(1).cloned() else {
                return Ok(());
            };
            let mut root = next.root;
            for _ in 1..next.offset {
                let down = self.point(&root, 1);
                self.forward(MovePart::ShiftDown, root.clone(), down.clone())?;
                root = down;
            }
            self.forward(MovePart::Collapse, root, rep.clone())?;
        }
    }
}

/// Gathers each orbit's roots onto its representative, recording every
/// elementary step. The result is simple, with one root per orbit carrying
/// the orbit's total multiplicity.
pub fn normalize(a: &Gwa) -> Result<Normalization> {
    let mut n = Normalizer { current: a.clone(), trace: Vec::new() };
    for orbit in orbit_decomposition(a).orbits {
        if orbit.members.len() < 2 {
            continue;
        }
        n.explode(&orbit.representative)?;
        n.gather(&orbit.representative)?;
    }
    Ok(Normalization { canonical: n.current, trace: n.trace })
}
