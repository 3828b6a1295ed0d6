//! Finitely supported permutations of the row indices 1, 2, 3, ...

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("mapping is not a bijection on its support: {0}")]
    NotBijective(String),
    #[error("row indices are 1-based, got 0")]
    ZeroRow,
}

/// A bijection of the positive integers that moves only finitely many of
/// them. Stored as the explicit mapping on its support; everything else is
/// fixed. Fixed points are never stored, so equal permutations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FinitePermutation {
    map: BTreeMap<u32, u32>,
}

impl FinitePermutation {
    pub fn identity() -> Self {
        FinitePermutation::default()
    }

    /// Builds from an explicit mapping; entries fixing their key are dropped.
    pub fn from_mapping<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self, PermError> {
        let mut map = BTreeMap::new();
        for (k, v) in pairs {
            if k == 0 || v == 0 {
                return Err(PermError::ZeroRow);
            }
            if map.insert(k, v).is_some() {
                return Err(PermError::NotBijective(format!("{k} mapped twice")));
            }
        }
        map.retain(|k, v| k != v);
        // bijective on support: image set == domain set
        let domain: Vec<u32> = map.keys().copied().collect();
        let mut image: Vec<u32> = map.values().copied().collect();
        image.sort_unstable();
        if domain != image {
            return Err(PermError::NotBijective(
                "image of the support differs from the support".into(),
            ));
        }
        Ok(FinitePermutation { map })
    }

    /// The cycle (r_0 r_1 ... r_{l-1}).
    pub fn from_cycle(rows: &[u32]) -> Result<Self, PermError> {
        let mut pairs = Vec::new();
        for (i, &r) in rows.iter().enumerate() {
            pairs.push((r, rows[(i + 1) % rows.len()]));
        }
        FinitePermutation::from_mapping(pairs)
    }

    pub fn transposition(a: u32, b: u32) -> Self {
        if a == b {
            return FinitePermutation::identity();
        }
        FinitePermutation::from_mapping([(a, b), (b, a)]).expect("transposition is bijective")
    }

    pub fn apply(&self, row: u32) -> u32 {
        self.map.get(&row).copied().unwrap_or(row)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FinitePermutation) -> FinitePermutation {
        let mut map = BTreeMap::new();
        for &k in other.map.keys().chain(self.map.keys()) {
            let v = self.apply(other.apply(k));
            if v != k {
                map.insert(k, v);
            }
        }
        FinitePermutation { map }
    }

    pub fn inverse(&self) -> FinitePermutation {
        let map = self.map.iter().map(|(k, v)| (*v, *k)).collect();
        FinitePermutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.map.keys().copied()
    }
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        // cycle notation, smallest element of each cycle first
        let mut seen = std::collections::BTreeSet::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            write!(f, "(")?;
            let mut r = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{r}")?;
                seen.insert(r);
                r = self.apply(r);
                if r == start {
                    break;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
