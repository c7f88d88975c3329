//! Valuated bimatroids: minor valuation functions on equal-size row/column
//! subset pairs, checked through their associated rank-|E| valuated matroid
//! on E ⊔ F; tropical matrices with exact tropical determinants; Stiefel-type
//! bimatroids and matroids; and the rank-|E| free extension tying R_k to I_k.

use std::collections::BTreeMap;

use crate::assignment::min_cost_assignment;
use crate::error::{Error, Result};
use crate::ground::{enumerate_index_subsets, enumerate_subsets, GroundSet, Subset};
use crate::matroid::PlueckerVector;
use crate::report::{CheckReport, MinorPivot, Witness};
use crate::value::{ExtVal, Scalar};

/// A valuated bimatroid candidate: μ on pairs (I, J) of equal-size row and
/// column subsets. Absent pairs are infinite, except (∅, ∅) which defaults
/// to 0. Validity is decided by [`MinorMap::check_bimatroid`].
#[derive(Clone, Debug, PartialEq)]
pub struct MinorMap {
    rows: GroundSet,
    cols: GroundSet,
    values: BTreeMap<(Subset, Subset), ExtVal>,
}

impl MinorMap {
    pub fn new<I>(rows: GroundSet, cols: GroundSet, values: I) -> Result<MinorMap>
    where
        I: IntoIterator<Item = (Subset, Subset, ExtVal)>,
    {
        let mut map = BTreeMap::new();
        for (i, j, v) in values {
            if i.len() != j.len() {
                return Err(Error::InvalidInput(
                    "minor keyed by subsets of different sizes".into(),
                ));
            }
            if i.indices().last().is_some_and(|&x| x >= rows.len())
                || j.indices().last().is_some_and(|&x| x >= cols.len())
            {
                return Err(Error::InvalidInput("minor index out of range".into()));
            }
            let is_default = if i.is_empty() && j.is_empty() {
                v == ExtVal::int(0)
            } else {
                !v.is_finite()
            };
            if is_default {
                continue;
            }
            if map.insert((i, j), v).is_some() {
                return Err(Error::InvalidInput("duplicate minor key".into()));
            }
        }
        Ok(MinorMap {
            rows,
            cols,
            values: map,
        })
    }

    pub fn rows(&self) -> &GroundSet {
        &self.rows
    }

    pub fn cols(&self) -> &GroundSet {
        &self.cols
    }

    /// μ(I, J), with μ(∅, ∅) = 0 implicit and absent pairs infinite.
    pub fn value(&self, i: &Subset, j: &Subset) -> ExtVal {
        if let Some(&v) = self.values.get(&(i.clone(), j.clone())) {
            return v;
        }
        if i.is_empty() && j.is_empty() {
            ExtVal::int(0)
        } else {
            ExtVal::Inf
        }
    }

    /// Stored non-default entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&Subset, &Subset, ExtVal)> {
        self.values.iter().map(|((i, j), &v)| (i, j, v))
    }

    /// The valuated matroid Â on E ⊔ F of rank |E| with
    /// ν(S) = μ(E − S, S ∩ F).
    pub fn associated_matroid(&self) -> Result<PlueckerVector> {
        let ground = self.rows.disjoint_union(&self.cols)?;
        let ne = self.rows.len();
        let mut values = Vec::new();
        for indices in enumerate_index_subsets(ground.len(), ne) {
            let mut i_missing = Vec::new(); // E − S
            let mut j_part = Vec::new(); // S ∩ F
            let mut in_s = vec![false; ne];
            for &x in &indices {
                if x < ne {
                    in_s[x] = true;
                } else {
                    j_part.push(x - ne);
                }
            }
            for (e, &present) in in_s.iter().enumerate() {
                if !present {
                    i_missing.push(e);
                }
            }
            let i_sub = Subset::new(i_missing, &self.rows)?;
            let j_sub = Subset::new(j_part, &self.cols)?;
            let v = self.value(&i_sub, &j_sub);
            if v.is_finite() {
                values.push((Subset::new(indices, &ground)?, v));
            }
        }
        PlueckerVector::new(ground, ne, values)
    }

    /// Pass iff μ(∅,∅) = 0 and the associated matroid satisfies the valuated
    /// exchange axiom; exchange failures are translated back to minor pairs.
    pub fn check_bimatroid(&self) -> Result<CheckReport> {
        let origin = self.value(&Subset::empty(), &Subset::empty());
        if origin != ExtVal::int(0) {
            return Ok(CheckReport::fail(Witness::MinorNormalization {
                value: origin,
            }));
        }
        let assoc = self.associated_matroid()?;
        let report = assoc.check_valuated_exchange()?;
        match report.witness {
            None => Ok(CheckReport::pass()),
            Some(Witness::Exchange {
                s_set,
                t_set,
                pivot,
            }) => {
                let ne = self.rows.len();
                let translate = |s: &Subset| -> (Subset, Subset) {
                    let i_missing: Vec<usize> = (0..ne).filter(|e| !s.contains(*e)).collect();
                    let j_part: Vec<usize> =
                        s.iter().filter(|&x| x >= ne).map(|x| x - ne).collect();
                    (
                        Subset::new(i_missing, &self.rows).expect("row subset"),
                        Subset::new(j_part, &self.cols).expect("col subset"),
                    )
                };
                let pivot = if pivot < ne {
                    MinorPivot::Row(pivot)
                } else {
                    MinorPivot::Col(pivot - ne)
                };
                Ok(CheckReport::fail(Witness::MinorExchange {
                    first: translate(&s_set),
                    second: translate(&t_set),
                    pivot,
                }))
            }
            Some(w) => panic!("unexpected exchange witness {w:?}"),
        }
    }

    /// μᵀ(J, I) = μ(I, J) with rows and columns swapped.
    pub fn transpose(&self) -> MinorMap {
        let values = self
            .values
            .iter()
            .map(|((i, j), &v)| ((j.clone(), i.clone()), v))
            .collect();
        MinorMap {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            values,
        }
    }
}

/// A dense matrix over Γ ∪ {∞}; infinite entries are allowed anywhere.
#[derive(Clone, Debug, PartialEq)]
pub struct TropicalMatrix {
    rows: GroundSet,
    cols: GroundSet,
    entries: Vec<Vec<ExtVal>>,
}

impl TropicalMatrix {
    pub fn new(
        rows: GroundSet,
        cols: GroundSet,
        entries: Vec<Vec<ExtVal>>,
    ) -> Result<TropicalMatrix> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::InvalidInput("matrix shape mismatch".into()));
        }
        Ok(TropicalMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor with numbered row labels "r1…" and column
    /// labels "c1…".
    pub fn from_int_rows(entries: Vec<Vec<Option<i64>>>) -> Result<TropicalMatrix> {
        let nr = entries.len();
        let nc = entries.first().map_or(0, |r| r.len());
        let rows = GroundSet::prefixed("r", nr);
        let cols = GroundSet::prefixed("c", nc);
        let entries = entries
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.map_or(ExtVal::Inf, ExtVal::int))
                    .collect()
            })
            .collect();
        TropicalMatrix::new(rows, cols, entries)
    }

    pub fn rows(&self) -> &GroundSet {
        &self.rows
    }

    pub fn cols(&self) -> &GroundSet {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> ExtVal {
        self.entries[i][j]
    }

    /// min over bijections σ: I → J of Σ a_{i,σ(i)}, solved as an optimal
    /// assignment; the empty minor is 0 and an all-blocked minor is ∞.
    pub fn tropical_determinant(&self, i_set: &Subset, j_set: &Subset) -> Result<ExtVal> {
        if i_set.len() != j_set.len() {
            return Err(Error::InvalidInput(format!(
                "minor size mismatch: {} rows vs {} cols",
                i_set.len(),
                j_set.len()
            )));
        }
        if i_set
            .indices()
            .last()
            .is_some_and(|&x| x >= self.rows.len())
            || j_set
                .indices()
                .last()
                .is_some_and(|&x| x >= self.cols.len())
        {
            return Err(Error::InvalidInput("minor index out of range".into()));
        }
        let k = i_set.len();
        if k == 0 {
            return Ok(ExtVal::int(0));
        }
        let cells: Vec<Vec<ExtVal>> = i_set
            .iter()
            .map(|i| j_set.iter().map(|j| self.entries[i][j]).collect())
            .collect();
        let finite_min = cells.iter().flatten().filter_map(|v| v.finite()).min();
        let Some(shift) = finite_min else {
            return Ok(ExtVal::Inf);
        };
        // Shift to nonnegative costs; k · shift is added back afterwards.
        let any_float = cells
            .iter()
            .flatten()
            .any(|v| matches!(v, ExtVal::Finite(Scalar::Float(_))));
        if any_float {
            let sf = shift.as_f64();
            let cost: Vec<Vec<Option<f64>>> = cells
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| v.finite().map(|s| s.as_f64() - sf))
                        .collect()
                })
                .collect();
            match min_cost_assignment(&cost) {
                Some(total) => ExtVal::float(total + k as f64 * sf),
                None => Ok(ExtVal::Inf),
            }
        } else {
            let si = shift.as_int().expect("integer entries");
            let cost: Vec<Vec<Option<i64>>> = cells
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| {
                            v.finite()
                                .map(|s| s.as_int().expect("integer entries") - si)
                        })
                        .collect()
                })
                .collect();
            match min_cost_assignment(&cost) {
                Some(total) => Ok(ExtVal::int(total + k as i64 * si)),
                None => Ok(ExtVal::Inf),
            }
        }
    }

    /// The Stiefel-type bimatroid μ(I, J) = tropical determinant of the
    /// (I, J) minor, over all equal-size pairs.
    pub fn stiefel_bimatroid(&self) -> Result<MinorMap> {
        let kmax = self.rows.len().min(self.cols.len());
        let mut values = Vec::new();
        for k in 0..=kmax {
            for i_set in enumerate_subsets(&self.rows, k)? {
                for j_set in enumerate_subsets(&self.cols, k)? {
                    let v = self.tropical_determinant(&i_set, &j_set)?;
                    values.push((i_set.clone(), j_set, v));
                }
            }
        }
        MinorMap::new(self.rows.clone(), self.cols.clone(), values)
    }

    /// The normalized valuated matroid on the column set whose basis values
    /// are the maximal tropical minors. Requires at least one finite minor.
    pub fn stiefel_matroid(&self) -> Result<PlueckerVector> {
        let r = self.rows.len();
        if r > self.cols.len() {
            return Err(Error::InvalidInput(format!(
                "matrix has more rows ({r}) than columns ({})",
                self.cols.len()
            )));
        }
        let all_rows = Subset::full(&self.rows);
        let mut values = Vec::new();
        for j_set in enumerate_subsets(&self.cols, r)? {
            let v = self.tropical_determinant(&all_rows, &j_set)?;
            if v.is_finite() {
                values.push((j_set, v));
            }
        }
        if values.is_empty() {
            return Err(Error::Generation(
                "every maximal tropical minor is infinite".into(),
            ));
        }
        Ok(PlueckerVector::new(self.cols.clone(), r, values)?.normalize())
    }
}

/// The free rank-|E| extension of a normalized valuated matroid on F, read
/// as a bimatroid on E × F: μ(I, J) = ν̃(J) for |J| ≤ rank, ∞ above. By
/// construction R_k = I_k · C(|E|, k).
pub fn free_extension_bimatroid(p: &PlueckerVector, rows: &GroundSet) -> Result<MinorMap> {
    if !rows.is_disjoint_from(p.ground()) {
        return Err(Error::InvalidInput(
            "extension rows share a label with the ground set".into(),
        ));
    }
    if rows.len() < p.rank() {
        return Err(Error::InvalidInput(format!(
            "need at least rank {} new elements, got {}",
            p.rank(),
            rows.len()
        )));
    }
    match p.min_finite() {
        Some(m) if m.is_zero() => {}
        Some(_) => {
            return Err(Error::InvalidInput(
                "vector is not normalized; apply normalize first".into(),
            ))
        }
        None => {
            return Err(Error::InvalidInput(
                "not a valuated matroid candidate: every value is infinite".into(),
            ))
        }
    }
    let iv = p.independent_valuation();
    let kmax = rows.len().min(p.ground().len());
    let mut values = Vec::new();
    for k in 0..=kmax.min(p.rank()) {
        for j_set in enumerate_subsets(p.ground(), k)? {
            let v = iv.value(&j_set);
            if !v.is_finite() {
                continue;
            }
            for i_set in enumerate_subsets(rows, k)? {
                values.push((i_set, j_set.clone(), v));
            }
        }
    }
    MinorMap::new(rows.clone(), p.ground().clone(), values)
}
