//! Ground sets, index subsets, multi-indices, and the enumeration and
//! counting helpers shared by every structure in the crate.
//!
//! All enumerations are lexicographic over the declared ground-set order so
//! that reports and witnesses are reproducible byte-for-byte.

use std::fmt;

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};

/// An ordered finite set of distinct string labels. Iteration order is the
/// declared order and is canonical for serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate label '{l}'")));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Labels "1", "2", ..., "n".
    pub fn numbered(n: usize) -> GroundSet {
        GroundSet {
            labels: (1..=n).map(|i| i.to_string()).collect(),
        }
    }

    /// Labels `prefix1`, ..., `prefixN`.
    pub fn prefixed(prefix: &str, n: usize) -> GroundSet {
        GroundSet {
            labels: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_disjoint_from(&self, other: &GroundSet) -> bool {
        self.labels.iter().all(|l| other.index_of(l).is_none())
    }

    /// The concatenation self ⊔ other; fails on a label collision.
    pub fn disjoint_union(&self, other: &GroundSet) -> Result<GroundSet> {
        if !self.is_disjoint_from(other) {
            return Err(Error::InvalidInput("ground sets share a label".to_string()));
        }
        GroundSet::new(self.labels.iter().chain(other.labels.iter()).cloned())
    }
}

/// A subset of a ground set, stored as strictly increasing element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    indices: Vec<usize>,
}

impl Subset {
    /// Builds a subset from indices, which are sorted; duplicates or
    /// out-of-range indices are rejected.
    pub fn new(mut indices: Vec<usize>, ground: &GroundSet) -> Result<Subset> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate index in subset".into()));
        }
        if indices.last().is_some_and(|&i| i >= ground.len()) {
            return Err(Error::InvalidInput("subset index out of range".into()));
        }
        Ok(Subset { indices })
    }

    pub fn from_labels(labels: &[&str], ground: &GroundSet) -> Result<Subset> {
        let indices = labels
            .iter()
            .map(|l| {
                ground
                    .index_of(l)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown label '{l}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subset::new(indices, ground)
    }

    pub fn empty() -> Subset {
        Subset {
            indices: Vec::new(),
        }
    }

    pub fn full(ground: &GroundSet) -> Subset {
        Subset {
            indices: (0..ground.len()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn labels<'g>(&self, ground: &'g GroundSet) -> Vec<&'g str> {
        self.indices.iter().map(|&i| ground.label(i)).collect()
    }

    pub(crate) fn mask(&self) -> u64 {
        let mut m = 0u64;
        for &i in &self.indices {
            debug_assert!(i < 64, "ground set too large for mask arithmetic");
            m |= 1u64 << i;
        }
        m
    }

    pub(crate) fn from_mask(mut m: u64) -> Subset {
        let mut indices = Vec::with_capacity(m.count_ones() as usize);
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            indices.push(i);
            m &= m - 1;
        }
        Subset { indices }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A point of the discrete simplex: a vector of nonnegative integers aligned
/// with a ground set, with its degree |α| = Σ α_e.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> MultiIndex {
        MultiIndex { entries }
    }

    pub fn zeros(n: usize) -> MultiIndex {
        MultiIndex {
            entries: vec![0; n],
        }
    }

    pub fn from_subset(s: &Subset, n: usize) -> MultiIndex {
        let mut entries = vec![0u32; n];
        for i in s.iter() {
            entries[i] = 1;
        }
        MultiIndex { entries }
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|&e| e as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }

    /// The support subset when all entries are 0/1.
    pub fn to_subset(&self) -> Option<Subset> {
        if !self.is_zero_one() {
            return None;
        }
        let indices = (0..self.entries.len())
            .filter(|&i| self.entries[i] == 1)
            .collect();
        Some(Subset { indices })
    }

    /// Coordinatewise α ≤ β.
    pub fn dominated_by(&self, other: &MultiIndex) -> bool {
        self.entries
            .iter()
            .zip(other.entries.iter())
            .all(|(a, b)| a <= b)
    }

    pub fn plus_unit(&self, i: usize) -> MultiIndex {
        let mut e = self.entries.clone();
        e[i] += 1;
        MultiIndex { entries: e }
    }

    pub fn minus_unit(&self, i: usize) -> Option<MultiIndex> {
        if self.entries[i] == 0 {
            return None;
        }
        let mut e = self.entries.clone();
        e[i] -= 1;
        Some(MultiIndex { entries: e })
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All k-subsets of the ground set in lexicographic order of index vectors.
pub fn enumerate_subsets(ground: &GroundSet, k: usize) -> Result<Vec<Subset>> {
    let n = ground.len();
    if k > n {
        return Err(Error::InvalidInput(format!(
            "subset size {k} exceeds ground set size {n}"
        )));
    }
    Ok(enumerate_index_subsets(n, k)
        .into_iter()
        .map(|indices| Subset { indices })
        .collect())
}

pub(crate) fn enumerate_index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=(n - remaining) {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        out.push(Vec::new());
    } else if k <= n {
        rec(n, k, 0, &mut cur, &mut out);
    }
    out
}

/// All points of the k-th discrete simplex Δ_E^k, ordered so that the degree
/// sits as early as possible: (k,0,…), …, (0,…,k). The 0/1 points appear in
/// the same relative order as `enumerate_subsets(E, k)`.
pub fn enumerate_multi_indices(ground: &GroundSet, k: usize) -> Vec<MultiIndex> {
    let n = ground.len();
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(MultiIndex::new(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(MultiIndex::new(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for v in (0..=left).rev() {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, k as u32, &mut cur, &mut out);
    out
}

/// α! = Π_e (α_e!).
pub fn multi_index_factorial(alpha: &MultiIndex) -> BigInt {
    let mut acc = BigInt::one();
    for &e in alpha.entries() {
        acc *= factorial(e as usize);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
