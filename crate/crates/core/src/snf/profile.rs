use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Invariant factors grouped into `(value, multiplicity)` runs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorProfile<T> {
    entries: Vec<(T, usize)>,
}

impl<T: Clone + PartialEq> FactorProfile<T> {
    pub fn from_diagonal(diag: &[T]) -> Self {
        let mut entries: Vec<(T, usize)> = Vec::new();
        for d in diag {
            match entries.last_mut() {
                Some((v, k)) if v == d => *k += 1,
                _ => entries.push((d.clone(), 1)),
            }
        }
        FactorProfile { entries }
    }

    pub fn from_entries(entries: Vec<(T, usize)>) -> Self {
        let mut p = FactorProfile { entries: Vec::new() };
        for (v, k) in entries {
            if k == 0 {
                continue;
            }
            match p.entries.last_mut() {
                Some((w, m)) if *w == v => *m += k,
                _ => p.entries.push((v, k)),
            }
        }
        p
    }

    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    /// Total number of invariant factors.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, value: &T) -> usize {
        self.entries.iter().filter(|e| e.0 == *value).map(|e| e.1).sum()
    }

    pub fn diagonal(&self) -> Vec<T> {
        self.entries.iter().flat_map(|(v, k)| std::iter::repeat_n(v.clone(), *k)).collect()
    }
}

impl FactorProfile<BigInt> {
    pub fn from_i64(entries: &[(i64, usize)]) -> Self {
        Self::from_entries(entries.iter().map(|&(v, k)| (BigInt::from(v), k)).collect())
    }
}

impl<T: fmt::Display> fmt::Display for FactorProfile<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (v, k)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *k == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{k}")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for FactorProfile<BigInt> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("profile {s:?} is not parenthesized")))?;
        let mut entries = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, k) = match part.split_once('^') {
                Some((v, k)) => (v.trim(), k.trim()),
                None => (part, "1"),
            };
            let v: BigInt = v.parse().map_err(|_| Error::Parse(format!("bad factor {v:?}")))?;
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad multiplicity {k:?}")))?;
            entries.push((v, k));
        }
        Ok(FactorProfile::from_entries(entries))
    }
}

impl Serialize for FactorProfile<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FactorProfile<BigInt> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
