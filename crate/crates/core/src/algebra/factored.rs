use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// A monic split polynomial `prod (z - root)^mult`, roots distinct and
/// sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredPoly {
    roots: Vec<(Rational, u32)>,
}

#[derive(Serialize, Deserialize)]
struct RootEntry {
    root: Rational,
    mult: u32,
}

impl FactoredPoly {
    /// Rejects repeated roots and zero multiplicities.
    pub fn new(roots: Vec<(Rational, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (r, m) in roots {
            if m == 0 {
                return Err(Error::ZeroMultiplicity(r));
            }
            if map.contains_key(&r) {
                return Err(Error::DuplicateRoot(r));
            }
            map.insert(r, m);
        }
        Ok(FactoredPoly { roots: map.into_iter().collect() })
    }

    /// Builds from a multiset, merging repeated roots and dropping zero
    /// multiplicities.
    pub fn from_multiset<I: IntoIterator<Item = (Rational, u32)>>(roots: I) -> Self {
        let mut map: BTreeMap<Rational, u32> = BTreeMap::new();
        for (r, m) in roots {
            if m > 0 {
                *map.entry(r).or_default() += m;
            }
        }
        FactoredPoly { roots: map.into_iter().collect() }
    }

    pub fn one() -> Self {
        FactoredPoly::default()
    }

    pub fn roots(&self) -> &[(Rational, u32)] {
        &self.roots
    }

    pub fn distinct_roots(&self) -> impl Iterator<Item = &Rational> {
        self.roots.iter().map(|(r, _)| r)
    }

    pub fn multiplicity(&self, root: &Rational) -> u32 {
        self.roots.binary_search_by(|(r, _)| r.cmp(root)).map(|i| self.roots[i].1).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn expand(&self) -> Poly {
        Poly::from_roots(self.roots.iter().map(|(r, m)| (r, *m)))
    }

    /// Recovers a factorization of `p` over the given candidate roots. Returns
    /// `None` if `p` is not monic or has factors outside the candidates.
    pub fn factor_over<'a, I>(p: &Poly, candidates: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a Rational>,
    {
        if !p.is_monic() {
            return None;
        }
        let mut rest = p.clone();
        let mut roots = Vec::new();
        for c in candidates {
            let m = rest.root_multiplicity(c);
            if m > 0 {
                rest = rest.exact_div(&Poly::linear(c).pow(m)).expect("root divides");
                roots.push((c.clone(), m));
            }
        }
        rest.is_one().then(|| FactoredPoly::from_multiset(roots))
    }

    /// Moves `count` copies of `from` onto `to`.
    pub fn replace(&self, from: &Rational, to: &Rational, count: u32) -> Self {
        let m = self.multiplicity(from);
        assert!(m >= count, "not enough copies of {from}");
        let mut roots: Vec<(Rational, u32)> = self
            .roots
            .iter()
            .map(|(r, k)| if r == from { (r.clone(), k - count) } else { (r.clone(), *k) })
            .collect();
        roots.push((to.clone(), count));
        FactoredPoly::from_multiset(roots)
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        for (i, (r, m)) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if r.is_zero() {
                write!(f, "z")?;
            } else if r.is_negative() {
                write!(f, "(z + {})", r.abs())?;
            } else {
                write!(f, "(z - {r})")?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredPoly({self})")
    }
}

impl Serialize for FactoredPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<RootEntry> =
            self.roots.iter().map(|(r, m)| RootEntry { root: r.clone(), mult: *m }).collect();
        entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactoredPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<RootEntry>::deserialize(deserializer)?;
        FactoredPoly::new(entries.into_iter().map(|e| (e.root, e.mult)).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn rejects_bad_multisets() {
        assert_eq!(FactoredPoly::new(vec![(r(1), 1), (r(1), 2)]), Err(Error::DuplicateRoot(r(1))));
        assert_eq!(FactoredPoly::new(vec![(r(2), 0)]), Err(Error::ZeroMultiplicity(r(2))));
    }

    #[test]
    fn expand_and_refactor() {
        let f = FactoredPoly::new(vec![(r(3), 1), (r(0), 1), (r(1), 2)]).unwrap();
        assert_eq!(f.roots()[0].0, r(0));
        let p = f.expand();
        assert_eq!(p.degree(), Some(4));
        let back = FactoredPoly::factor_over(&p, f.distinct_roots()).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_string(), "z*(z - 1)^2*(z - 3)");
        let g = f.replace(&r(3), &r(0), 1);
        assert_eq!(g.multiplicity(&r(0)), 2);
        assert_eq!(g.multiplicity(&r(3)), 0);
    }

    #[test]
    fn json_shape() {
        let f: FactoredPoly = serde_json::from_str(r#"[{"root":"1/2","mult":2}]"#).unwrap();
        assert_eq!(f.multiplicity(&Rational::new(1, 2)), 2);
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"[{"root":"1/2","mult":2}]"#);
    }
}
