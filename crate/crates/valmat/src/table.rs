//! Internal subset-indexed valuation tables keyed by bitmask. Dense storage
//! for small ground sets, hash fallback above the dense limit.

use std::collections::HashMap;

use crate::value::ExtVal;

const DENSE_LIMIT: usize = 22;

pub(crate) struct MaskTable {
    dense: Option<Vec<ExtVal>>,
    sparse: HashMap<u64, ExtVal>,
}

impl MaskTable {
    pub fn new(n: usize) -> MaskTable {
        assert!(n < 64, "ground set too large for mask arithmetic");
        let dense = (n <= DENSE_LIMIT).then(|| vec![ExtVal::Inf; 1usize << n]);
        MaskTable {
            dense,
            sparse: HashMap::new(),
        }
    }

    pub fn get(&self, mask: u64) -> ExtVal {
        match &self.dense {
            Some(v) => v[mask as usize],
            None => self.sparse.get(&mask).copied().unwrap_or(ExtVal::Inf),
        }
    }

    pub fn set(&mut self, mask: u64, v: ExtVal) {
        match &mut self.dense {
            Some(t) => t[mask as usize] = v,
            None => {
                self.sparse.insert(mask, v);
            }
        }
    }

    pub fn update_min(&mut self, mask: u64, v: ExtVal) {
        match &mut self.dense {
            Some(t) => {
                let slot = &mut t[mask as usize];
                if v < *slot {
                    *slot = v;
                }
            }
            None => {
                let slot = self.sparse.entry(mask).or_insert(ExtVal::Inf);
                if v < *slot {
                    *slot = v;
                }
            }
        }
    }

    /// Finite entries in ascending mask order (deterministic).
    pub fn finite_entries(&self) -> Vec<(u64, ExtVal)> {
        match &self.dense {
            Some(t) => t
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_finite())
                .map(|(m, &v)| (m as u64, v))
                .collect(),
            None => {
                let mut out: Vec<(u64, ExtVal)> = self
                    .sparse
                    .iter()
                    .filter(|(_, v)| v.is_finite())
                    .map(|(&m, &v)| (m, v))
                    .collect();
                out.sort_unstable_by_key(|&(m, _)| m);
                out
            }
        }
    }
}

/// Visits every submask of `mask`, including `mask` itself and 0.
pub(crate) fn for_each_submask(mask: u64, mut f: impl FnMut(u64)) {
    let mut sub = mask;
    loop {
        f(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}
