//! Human-readable renderings for `--output text`.

use std::fmt::Write;

use gwa_kit::{
    BProps, ChainCertificate, CoverageReport, Direction, EquivalenceLevel, FactorProfile, GlobalDimension,
    Gwa, MinimalPrimes, MoritaReport, MovePart, Normalization, Orbit, OrbitClass, SimpleListing,
    StructureConstants,
};

fn gldim(d: GlobalDimension) -> &'static str {
    match d {
        GlobalDimension::One => "1",
        GlobalDimension::Two => "2",
        GlobalDimension::Infinite => "infinite",
    }
}

pub fn analyze(a: &Gwa, orbits: &[Orbit], d: GlobalDimension, simple: bool) -> String {
    let mut out = format!("f = {}\n", a.f());
    for o in orbits {
        let class = match o.classification {
            OrbitClass::Congruent => "congruent",
            OrbitClass::NonCongruent => "non-congruent",
        };
        let members: Vec<String> = o
            .members
            .iter()
            .map(|m| format!("{} (mult {}, offset {})", m.root, m.multiplicity, m.offset))
            .collect();
        let _ = writeln!(out, "orbit of {} [{class}]: {}", o.representative, members.join(", "));
    }
    let _ = writeln!(out, "global dimension: {}", gldim(d));
    let _ = writeln!(out, "simple: {simple}");
    out
}

pub fn simples(listing: &SimpleListing) -> String {
    let mut out = listing.text();
    let family = &listing.nondegenerate;
    let excluded: Vec<String> = family.excluded_orbits.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "M_lambda = {} for lambda off the orbits of {{{}}}",
        family.presentation,
        excluded.join(", ")
    );
    out
}

fn part(p: MovePart) -> &'static str {
    match p {
        MovePart::ShiftDown => "shift_down",
        MovePart::ShiftUp => "shift_up",
        MovePart::Collapse => "collapse",
    }
}

pub fn normalization(n: &Normalization) -> String {
    let mut out = format!("canonical f = {}\n", n.canonical.f());
    for step in &n.trace {
        let level = match step.level {
            EquivalenceLevel::Grmod => "grmod",
            EquivalenceLevel::Qgrmod => "qgrmod",
        };
        let inverse = if step.direction == Direction::Inverse { "inverse " } else { "" };
        let _ = write!(
            out,
            "{inverse}{} {} -> {} [{level}]",
            part(step.step.part),
            step.step.root,
            step.step.target
        );
        if let Some(ideal) = &step.trace_ideal {
            let gens: Vec<String> = ideal.iter().map(ToString::to_string).collect();
            let _ = write!(out, " trace ideal ({})", gens.join(", "));
        }
        out.push('\n');
    }
    out
}

pub fn morita(m: &MoritaReport) -> String {
    format!(
        "h = {}\ng = {}\nf' = {}\nd = {}\nprogenerator: {}\ngenerator relations hold: {}\n",
        m.h,
        m.g,
        m.f_prime,
        m.d,
        m.is_progenerator,
        m.generator_check.all()
    )
}

pub fn constants(a: &Gwa, p: &StructureConstants) -> String {
    let mut out = format!("c_i = 1 for i > {}\n", p.hi);
    for i in (p.lo..=p.hi).rev() {
        let _ = writeln!(out, "c_{i} = {}", p.c(a, i));
    }
    let _ = writeln!(out, "c_i = sigma^i(f) for i < {}", p.lo);
    out
}

pub fn profile(p: &FactorProfile) -> String {
    let mut out = format!("+ below {}, - above {}\n", p.from, p.to);
    for e in &p.entries {
        let _ = writeln!(out, "n = {}, alpha = {}: {}", e.n, e.alpha, e.sign.symbol());
    }
    out
}

pub fn coverage(r: &CoverageReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        let _ = writeln!(out, "M_{}^-<{}>: {}  M_{}^+<{}>: {}", e.alpha, e.n, e.minus, e.alpha, e.n, e.plus);
    }
    let _ = writeln!(out, "covers window: {}", r.covers_window);
    let _ = writeln!(out, "minus tail covered: {}", r.minus_tail_covered);
    let _ = writeln!(out, "plus tail covered: {}", r.plus_tail_covered);
    out
}

pub fn minimal_primes(p: &MinimalPrimes) -> String {
    match p {
        MinimalPrimes::Domain { message } => format!("{message}\n"),
        MinimalPrimes::Primes { primes, .. } => {
            primes.iter().map(|q| format!("({})\n", q.text.join(", "))).collect()
        }
    }
}

pub fn chain(c: &ChainCertificate) -> String {
    let mut out = format!("m = {}, alpha = {}, oracle dimension {}\n", c.m, c.alpha, c.oracle_dim);
    for (j, (g, s)) in c.gammas.iter().zip(&c.strict).enumerate() {
        let _ = writeln!(out, "gamma_{j} = {g}, I_{j} < I_{}: {s}", j + 1);
    }
    let _ = writeln!(out, "ideal dimensions: {:?}", c.ideal_dims);
    let _ = writeln!(out, "strictly ascending: {}", c.is_strictly_ascending());
    out
}

pub fn props(p: &BProps) -> String {
    format!(
        "domain: {}\ntruncation rank: {}\nreduced witness: {}\n",
        p.is_domain, p.truncation_rank, p.reduced_witness
    )
}
