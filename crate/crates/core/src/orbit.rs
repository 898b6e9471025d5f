//! Decomposition of the roots of `f` into `sigma_k`-orbits.

use serde::Serialize;

use crate::algebra::{BaseFlavor, Rational};
use crate::error::{Error, Result};
use crate::gwa::Gwa;

/// The integer `n` with `beta = sigma_k^n(alpha)`, if there is one.
///
/// In the multiplicative case the search over `xi^m` stops once the height of
/// `xi^m` exceeds that of `beta / alpha`; heights of powers of `xi` grow
/// strictly with `|m|`, so this is exhaustive.
pub fn congruence(alpha: &Rational, beta: &Rational, base: &BaseFlavor) -> Result<Option<i64>> {
    match base {
        BaseFlavor::Additive => {
            let d = alpha - beta;
            Ok(d.to_i64())
        }
        BaseFlavor::Multiplicative { xi } => {
            if alpha.is_zero() || beta.is_zero() {
                return Err(Error::InvalidRoot);
            }
            // beta = xi^-n alpha
            let q = beta / alpha;
            let hq = q.height();
            let xi_inv = xi.inv();
            let mut up = Rational::one();
            let mut down = Rational::one();
            let mut k: i64 = 0;
            while up.height() <= hq {
                if up == q {
                    return Ok(Some(-k));
                }
                if down == q {
                    return Ok(Some(k));
                }
                up *= xi;
                down *= &xi_inv;
                k += 1;
            }
            Ok(None)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitClass {
    NonCongruent,
    Congruent,
}

/// A root on an orbit, located by `root = sigma_k^-offset(representative)`.
/// The signed index `-offset` is the labeling `i_k` with `0 > i_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitMember {
    pub root: Rational,
    pub multiplicity: u32,
    pub offset: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub representative: Rational,
    pub classification: OrbitClass,
    /// Sorted by offset; the first member is the representative.
    pub members: Vec<OrbitMember>,
}

impl Orbit {
    pub fn total_multiplicity(&self) -> u32 {
        self.members.iter().map(|m| m.multiplicity).sum()
    }

    pub fn member(&self, root: &Rational) -> Option<&OrbitMember> {
        self.members.iter().find(|m| &m.root == root)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    /// The orbit containing `root`, if `root` is a root of `f`.
    pub fn orbit_of(&self, root: &Rational) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.member(root).is_some())
    }
}

/// Partitions the roots of `f` into orbits, sorted by representative.
pub fn orbit_decomposition(a: &Gwa) -> OrbitDecomposition {
    let base = a.base();
    // (anchor, [(root, mult, n)]) with root = sigma_k^n(anchor)
    let mut groups: Vec<Vec<(Rational, u32, i64)>> = Vec::new();
    for (root, mult) in a.f().roots() {
        let found = groups.iter_mut().find_map(|g| {
            congruence(&g[0].0, root, base).expect("validated roots are nonzero").map(|n| (g, n))
        });
        match found {
            Some((g, n)) => g.push((root.clone(), *mult, n)),
            None => groups.push(vec![(root.clone(), *mult, 0)]),
        }
    }
    let mut orbits: Vec<Orbit> = groups
        .into_iter()
        .map(|g| {
            let top = g.iter().map(|(_, _, n)| *n).max().expect("nonempty");
            let mut members: Vec<OrbitMember> = g
                .into_iter()
                .map(|(root, multiplicity, n)| OrbitMember { root, multiplicity, offset: top - n })
                .collect();
            members.sort_by_key(|m| m.offset);
            let classification =
                if members.len() > 1 { OrbitClass::Congruent } else { OrbitClass::NonCongruent };
            Orbit { representative: members[0].root.clone(), classification, members }
        })
        .collect();
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    OrbitDecomposition { orbits }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    One,
    Two,
    Infinite,
}

impl Serialize for GlobalDimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            GlobalDimension::One => "1",
            GlobalDimension::Two => "2",
            GlobalDimension::Infinite => "infinite",
        })
    }
}

pub fn global_dimension(a: &Gwa) -> GlobalDimension {
    if a.f().roots().iter().any(|(_, m)| *m > 1) {
        GlobalDimension::Infinite
    } else if is_simple(a) {
        GlobalDimension::One
    } else {
        GlobalDimension::Two
    }
}

/// No two distinct roots of `f` are congruent.
pub fn is_simple(a: &Gwa) -> bool {
    orbit_decomposition(a).orbits.iter().all(|o| o.classification == OrbitClass::NonCongruent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FactoredPoly;
    use crate::gwa::gwa_validate;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn additive(roots: &[(Rational, u32)]) -> Gwa {
        gwa_validate(BaseFlavor::Additive, FactoredPoly::new(roots.to_vec()).unwrap(), false).unwrap()
    }

    #[test]
    fn congruence_examples() {
        let add = BaseFlavor::Additive;
        assert_eq!(congruence(&r(0), &r(3), &add).unwrap(), Some(-3));
        assert_eq!(congruence(&r(5), &r(5), &add).unwrap(), Some(0));
        assert_eq!(congruence(&r(0), &Rational::new(1, 2), &add).unwrap(), None);
        let mul = BaseFlavor::multiplicative(r(2)).unwrap();
        assert_eq!(congruence(&r(1), &r(8), &mul).unwrap(), Some(-3));
        assert_eq!(congruence(&r(8), &r(1), &mul).unwrap(), Some(3));
        assert_eq!(congruence(&r(1), &r(3), &mul).unwrap(), None);
        assert_eq!(congruence(&r(1), &r(-2), &mul).unwrap(), None);
        let neg = BaseFlavor::multiplicative(r(-2)).unwrap();
        assert_eq!(congruence(&r(1), &r(-2), &neg).unwrap(), Some(-1));
        assert_eq!(congruence(&r(0), &r(1), &mul), Err(Error::InvalidRoot));
    }

    #[test]
    fn decomposition_examples() {
        let a = additive(&[(r(0), 1), (r(1), 2), (r(3), 1)]);
        let d = orbit_decomposition(&a);
        assert_eq!(d.orbits.len(), 1);
        let o = &d.orbits[0];
        assert_eq!(o.representative, r(0));
        assert_eq!(o.classification, OrbitClass::Congruent);
        let offsets: Vec<i64> = o.members.iter().map(|m| m.offset).collect();
        assert_eq!(offsets, vec![0, 1, 3]);

        let b = additive(&[(r(0), 2), (Rational::new(1, 2), 1)]);
        let d = orbit_decomposition(&b);
        assert_eq!(d.orbits.len(), 2);
        assert!(d.orbits.iter().all(|o| o.classification == OrbitClass::NonCongruent));

        let c = additive(&[(r(5), 1)]);
        assert_eq!(orbit_decomposition(&c).orbits.len(), 1);
    }

    #[test]
    fn multiplicative_representative() {
        let mul = BaseFlavor::multiplicative(r(2)).unwrap();
        let f = FactoredPoly::new(vec![(r(1), 1), (r(2), 2), (r(4), 1)]).unwrap();
        let a = gwa_validate(mul, f, false).unwrap();
        let d = orbit_decomposition(&a);
        assert_eq!(d.orbits[0].representative, r(1));
        let offsets: Vec<i64> = d.orbits[0].members.iter().map(|m| m.offset).collect();
        assert_eq!(offsets, vec![0, 1, 2]);
    }

    #[test]
    fn trichotomy_examples() {
        assert_eq!(
            global_dimension(&additive(&[(r(0), 1), (r(1), 2), (r(3), 1)])),
            GlobalDimension::Infinite
        );
        assert_eq!(global_dimension(&additive(&[(r(0), 1), (r(3), 1)])), GlobalDimension::Two);
        assert_eq!(global_dimension(&additive(&[(r(0), 1), (Rational::new(1, 2), 1)])), GlobalDimension::One);
        assert!(is_simple(&additive(&[(r(0), 2)])));
        assert!(!is_simple(&additive(&[(r(0), 1), (r(1), 2), (r(3), 1)])));
    }
}
