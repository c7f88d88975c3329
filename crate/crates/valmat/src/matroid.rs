//! Valuated matroids given by basis valuations (Plücker vectors), the two
//! cryptomorphic axiom checkers, the independent-set extension, rank
//! restriction, and generic extensions to larger ground sets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ground::{enumerate_index_subsets, GroundSet, Subset};
use crate::report::{CheckReport, Witness};
use crate::table::{for_each_submask, MaskTable};
use crate::value::{ExtVal, Scalar};

/// A valuated matroid candidate: a map from r-subsets of the ground set to
/// Γ ∪ {∞}. Subsets absent from the map are infinite. Whether the valuated
/// exchange axiom holds is decided by [`PlueckerVector::check_valuated_exchange`],
/// not at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PlueckerVector {
    ground: GroundSet,
    rank: usize,
    values: BTreeMap<Subset, ExtVal>,
}

impl PlueckerVector {
    pub fn new<I>(ground: GroundSet, rank: usize, values: I) -> Result<PlueckerVector>
    where
        I: IntoIterator<Item = (Subset, ExtVal)>,
    {
        if rank > ground.len() {
            return Err(Error::InvalidInput(format!(
                "rank {rank} exceeds ground set size {}",
                ground.len()
            )));
        }
        let mut map = BTreeMap::new();
        for (s, v) in values {
            if s.len() != rank {
                return Err(Error::InvalidInput(format!(
                    "value keyed by a subset of size {} in a rank-{rank} vector",
                    s.len()
                )));
            }
            if s.indices().last().is_some_and(|&i| i >= ground.len()) {
                return Err(Error::InvalidInput("subset index out of range".into()));
            }
            if !v.is_finite() {
                continue; // absent means infinite
            }
            if map.insert(s, v).is_some() {
                return Err(Error::InvalidInput("duplicate subset key".into()));
            }
        }
        Ok(PlueckerVector {
            ground,
            rank,
            values: map,
        })
    }

    /// The trivial valuation: 0 on the given bases, ∞ elsewhere.
    pub fn trivial<I>(ground: GroundSet, rank: usize, bases: I) -> Result<PlueckerVector>
    where
        I: IntoIterator<Item = Subset>,
    {
        let values: Vec<(Subset, ExtVal)> =
            bases.into_iter().map(|b| (b, ExtVal::int(0))).collect();
        PlueckerVector::new(ground, rank, values)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, s: &Subset) -> ExtVal {
        self.values.get(s).copied().unwrap_or(ExtVal::Inf)
    }

    /// Finite-valued bases in lexicographic order.
    pub fn bases(&self) -> impl Iterator<Item = (&Subset, ExtVal)> {
        self.values.iter().map(|(s, &v)| (s, v))
    }

    pub fn num_bases(&self) -> usize {
        self.values.len()
    }

    pub fn min_finite(&self) -> Option<Scalar> {
        self.values.values().filter_map(|v| v.finite()).min()
    }

    fn basis_masks(&self) -> Vec<(u64, ExtVal)> {
        self.values.iter().map(|(s, &v)| (s.mask(), v)).collect()
    }

    fn value_table(&self) -> MaskTable {
        let mut t = MaskTable::new(self.ground.len());
        for (s, &v) in &self.values {
            t.set(s.mask(), v);
        }
        t
    }

    /// Exhaustive check of the valuated symmetric exchange axiom over all
    /// ordered basis pairs. Fails with the first (S, T, s) in lexicographic
    /// scan order admitting no valid exchange partner t.
    pub fn check_valuated_exchange(&self) -> Result<CheckReport> {
        if self.values.is_empty() {
            return Err(Error::InvalidInput(
                "not a valuated matroid candidate: every value is infinite".into(),
            ));
        }
        let table = self.value_table();
        let bases = self.basis_masks();
        // Pairs with an infinite side satisfy the inequality vacuously, so
        // only finite-finite pairs are scanned; the first violation is
        // unchanged.
        for &(sm, sv) in &bases {
            for &(tm, tv) in &bases {
                if sm == tm {
                    continue;
                }
                let lhs = sv + tv;
                let s_only = sm & !tm;
                let t_only = tm & !sm;
                let mut s_bits = s_only;
                while s_bits != 0 {
                    let s = s_bits.trailing_zeros() as u64;
                    s_bits &= s_bits - 1;
                    let mut found = false;
                    let mut t_bits = t_only;
                    while t_bits != 0 {
                        let t = t_bits.trailing_zeros() as u64;
                        t_bits &= t_bits - 1;
                        let s_new = (sm & !(1 << s)) | (1 << t);
                        let t_new = (tm & !(1 << t)) | (1 << s);
                        if lhs >= table.get(s_new) + table.get(t_new) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Ok(CheckReport::fail(Witness::Exchange {
                            s_set: Subset::from_mask(sm),
                            t_set: Subset::from_mask(tm),
                            pivot: s as usize,
                        }));
                    }
                }
            }
        }
        Ok(CheckReport::pass())
    }

    /// ν̃ over all subset masks of size ≤ r: the minimum basis value over
    /// supersets, computed by pushing each basis value to its submasks.
    pub(crate) fn extension_table(&self) -> MaskTable {
        let mut t = MaskTable::new(self.ground.len());
        for (s, &v) in &self.values {
            for_each_submask(s.mask(), |sub| t.update_min(sub, v));
        }
        t
    }

    /// Murota's extension of the basis valuation to independent sets:
    /// ν̃(S) = min{ν(B) : B ⊇ S}.
    pub fn independent_valuation(&self) -> IndepValuation {
        let table = self.extension_table();
        let entries = table
            .finite_entries()
            .into_iter()
            .map(|(m, v)| (Subset::from_mask(m), v));
        IndepValuation {
            ground: self.ground.clone(),
            rank: self.rank,
            table: entries.collect(),
        }
    }

    /// The rank-ρ valuated matroid whose values are ν̃ on ρ-subsets.
    pub fn restrict_rank(&self, rho: usize) -> Result<PlueckerVector> {
        if rho > self.rank {
            return Err(Error::InvalidInput(format!(
                "restriction rank {rho} exceeds rank {}",
                self.rank
            )));
        }
        let table = self.extension_table();
        let values = table
            .finite_entries()
            .into_iter()
            .filter(|&(m, _)| m.count_ones() as usize == rho)
            .map(|(m, v)| (Subset::from_mask(m), v));
        PlueckerVector::new(self.ground.clone(), rho, values)
    }

    /// Generic extension to Q ⊔ E: every new basis S̃ is valued ν̃(S̃ ∩ E).
    /// The new elements come first in the declared order.
    pub fn generic_extension(&self, new_elements: &GroundSet) -> Result<PlueckerVector> {
        let ground = new_elements.disjoint_union(&self.ground)?;
        let q_len = new_elements.len();
        let table = self.extension_table();
        let mut values = Vec::new();
        for indices in enumerate_index_subsets(ground.len(), self.rank) {
            let mut e_mask = 0u64;
            for &i in &indices {
                if i >= q_len {
                    e_mask |= 1u64 << (i - q_len);
                }
            }
            let v = table.get(e_mask);
            if v.is_finite() {
                values.push((Subset::new(indices, &ground)?, v));
            }
        }
        PlueckerVector::new(ground, self.rank, values)
    }

    /// Shifts every finite value so the minimum becomes 0. Adding a constant
    /// preserves the exchange axiom.
    pub fn normalize(&self) -> PlueckerVector {
        let Some(min) = self.min_finite() else {
            return self.clone();
        };
        if min.is_zero() {
            return self.clone();
        }
        let values = self
            .values
            .iter()
            .map(|(s, v)| {
                let shifted = match v {
                    ExtVal::Finite(x) => ExtVal::Finite(*x - min),
                    ExtVal::Inf => ExtVal::Inf,
                };
                (s.clone(), shifted)
            })
            .collect();
        PlueckerVector {
            ground: self.ground.clone(),
            rank: self.rank,
            values,
        }
    }
}

/// A candidate independent-set valuation ν̃ on subsets of size ≤ r; absent
/// entries are infinite. The four axioms are decided by
/// [`IndepValuation::check_independence_axioms`].
#[derive(Clone, Debug, PartialEq)]
pub struct IndepValuation {
    ground: GroundSet,
    rank: usize,
    table: BTreeMap<Subset, ExtVal>,
}

impl IndepValuation {
    pub fn new<I>(ground: GroundSet, rank: usize, entries: I) -> Result<IndepValuation>
    where
        I: IntoIterator<Item = (Subset, ExtVal)>,
    {
        let mut table = BTreeMap::new();
        for (s, v) in entries {
            if s.len() > rank {
                return Err(Error::InvalidInput(format!(
                    "table keyed by a subset of size {} in a rank-{rank} valuation",
                    s.len()
                )));
            }
            if s.indices().last().is_some_and(|&i| i >= ground.len()) {
                return Err(Error::InvalidInput("subset index out of range".into()));
            }
            if !v.is_finite() {
                continue;
            }
            if table.insert(s, v).is_some() {
                return Err(Error::InvalidInput("duplicate subset key".into()));
            }
        }
        Ok(IndepValuation {
            ground,
            rank,
            table,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, s: &Subset) -> ExtVal {
        self.table.get(s).copied().unwrap_or(ExtVal::Inf)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Subset, ExtVal)> {
        self.table.iter().map(|(s, &v)| (s, v))
    }

    /// The restriction of the table to size-r subsets, read back as a basis
    /// valuation.
    pub fn top_rank_vector(&self) -> Result<PlueckerVector> {
        let values = self
            .table
            .iter()
            .filter(|(s, _)| s.len() == self.rank)
            .map(|(s, &v)| (s.clone(), v));
        PlueckerVector::new(self.ground.clone(), self.rank, values)
    }

    /// Exhaustive verification of the four independent-set axioms; fails with
    /// the lowest violated axiom and its witness sets.
    pub fn check_independence_axioms(&self) -> Result<CheckReport> {
        let n = self.ground.len();
        let mut table = MaskTable::new(n);
        for (s, &v) in &self.table {
            table.set(s.mask(), v);
        }
        let finite: Vec<(u64, ExtVal)> = self.table.iter().map(|(s, &v)| (s.mask(), v)).collect();

        // (1) some r-subset is finite
        if !finite
            .iter()
            .any(|&(m, _)| m.count_ones() as usize == self.rank)
        {
            return Ok(CheckReport::fail(Witness::Indep {
                axiom: 1,
                sets: vec![],
            }));
        }

        // (2) monotone under inclusion; covers suffice
        for (t_set, &tv) in &self.table {
            let tm = t_set.mask();
            let mut bits = tm;
            while bits != 0 {
                let e = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                let sm = tm & !(1 << e);
                if table.get(sm) > tv {
                    return Ok(CheckReport::fail(Witness::Indep {
                        axiom: 2,
                        sets: vec![Subset::from_mask(sm), t_set.clone()],
                    }));
                }
            }
        }

        // (3) finite sets below rank extend by one element at equal value
        for &(sm, sv) in &finite {
            if sm.count_ones() as usize >= self.rank {
                continue;
            }
            let grows = (0..n).any(|e| {
                let bit = 1u64 << e;
                sm & bit == 0 && table.get(sm | bit) == sv
            });
            if !grows {
                return Ok(CheckReport::fail(Witness::Indep {
                    axiom: 3,
                    sets: vec![Subset::from_mask(sm)],
                }));
            }
        }

        // (4) exchange across sizes; infinite sides hold vacuously
        for &(sm, sv) in &finite {
            for &(tm, tv) in &finite {
                if (sm.count_ones() as usize) >= (tm.count_ones() as usize) {
                    continue;
                }
                let lhs = sv + tv;
                let mut ok = false;
                let mut bits = tm & !sm;
                while bits != 0 {
                    let t = bits.trailing_zeros() as u64;
                    bits &= bits - 1;
                    let rhs = table.get(sm | (1 << t)) + table.get(tm & !(1 << t));
                    if lhs >= rhs {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return Ok(CheckReport::fail(Witness::Indep {
                        axiom: 4,
                        sets: vec![Subset::from_mask(sm), Subset::from_mask(tm)],
                    }));
                }
            }
        }

        Ok(CheckReport::pass())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::enumerate_subsets;
    use crate::report::Verdict;

    fn ground(n: usize) -> GroundSet {
        GroundSet::numbered(n)
    }

    fn uniform_trivial(n: usize, r: usize) -> PlueckerVector {
        let g = ground(n);
        let bases = enumerate_subsets(&g, r).unwrap();
        PlueckerVector::trivial(g, r, bases).unwrap()
    }

    fn sub(indices: &[usize], g: &GroundSet) -> Subset {
        Subset::new(indices.to_vec(), g).unwrap()
    }

    #[test]
    fn uniform_trivial_passes_exchange() {
        let report = uniform_trivial(4, 2).check_valuated_exchange().unwrap();
        assert!(report.is_pass());
    }

    #[test]
    fn disjoint_pair_fails_exchange_with_witness() {
        let g = ground(4);
        let p = PlueckerVector::trivial(g.clone(), 2, vec![sub(&[0, 1], &g), sub(&[2, 3], &g)])
            .unwrap();
        let report = p.check_valuated_exchange().unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        match report.witness.unwrap() {
            Witness::Exchange {
                s_set,
                t_set,
                pivot,
            } => {
                assert_eq!(s_set, sub(&[0, 1], &g));
                assert_eq!(t_set, sub(&[2, 3], &g));
                assert_eq!(pivot, 0);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn penalized_off_pairs_still_fail() {
        // ν = 0 on {1,2} and {3,4}, 1 on the other four pairs: the exchange
        // inequality reads 0 >= 2 at (S={1,2}, T={3,4}, s=1).
        let g = ground(4);
        let values: Vec<(Subset, ExtVal)> = enumerate_subsets(&g, 2)
            .unwrap()
            .into_iter()
            .map(|s| {
                let v = if s == sub(&[0, 1], &g) || s == sub(&[2, 3], &g) {
                    ExtVal::int(0)
                } else {
                    ExtVal::int(1)
                };
                (s, v)
            })
            .collect();
        let p = PlueckerVector::new(g, 2, values).unwrap();
        assert_eq!(p.check_valuated_exchange().unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn additive_valuations_pass_exchange() {
        let g = ground(4);
        let w = [0i64, 1, 2, 3];
        let values: Vec<(Subset, ExtVal)> = enumerate_subsets(&g, 2)
            .unwrap()
            .into_iter()
            .map(|s| {
                let v: i64 = s.iter().map(|i| w[i]).sum();
                (s, ExtVal::int(v))
            })
            .collect();
        let p = PlueckerVector::new(g, 2, values).unwrap();
        assert!(p.check_valuated_exchange().unwrap().is_pass());
    }

    #[test]
    fn all_infinite_map_is_an_input_error() {
        let p = PlueckerVector::new(ground(3), 2, vec![]).unwrap();
        assert!(p.check_valuated_exchange().is_err());
    }

    #[test]
    fn independent_valuation_of_rank_one() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let p = PlueckerVector::new(
            g.clone(),
            1,
            vec![
                (sub(&[0], &g), ExtVal::int(1)),
                (sub(&[1], &g), ExtVal::int(0)),
            ],
        )
        .unwrap();
        let iv = p.independent_valuation();
        assert_eq!(iv.value(&Subset::empty()), ExtVal::int(0));
        assert_eq!(iv.value(&sub(&[0], &g)), ExtVal::int(1));
        assert_eq!(iv.value(&sub(&[1], &g)), ExtVal::int(0));
    }

    #[test]
    fn independent_valuation_three_bases() {
        let g = ground(3);
        let p = PlueckerVector::new(
            g.clone(),
            2,
            vec![
                (sub(&[0, 1], &g), ExtVal::int(5)),
                (sub(&[0, 2], &g), ExtVal::int(2)),
                (sub(&[1, 2], &g), ExtVal::int(7)),
            ],
        )
        .unwrap();
        let iv = p.independent_valuation();
        assert_eq!(iv.value(&Subset::empty()), ExtVal::int(2));
        assert_eq!(iv.value(&sub(&[0], &g)), ExtVal::int(2));
        assert_eq!(iv.value(&sub(&[1], &g)), ExtVal::int(5));
        assert_eq!(iv.value(&sub(&[2], &g)), ExtVal::int(2));
    }

    #[test]
    fn trivial_valuation_extension_marks_independence() {
        let p = uniform_trivial(4, 2);
        let iv = p.independent_valuation();
        for k in 0..=2 {
            for s in enumerate_subsets(p.ground(), k).unwrap() {
                assert_eq!(iv.value(&s), ExtVal::int(0));
            }
        }
    }

    #[test]
    fn independence_axioms_pass_for_extension() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let p = PlueckerVector::new(
            g.clone(),
            1,
            vec![
                (sub(&[0], &g), ExtVal::int(1)),
                (sub(&[1], &g), ExtVal::int(0)),
            ],
        )
        .unwrap();
        let iv = p.independent_valuation();
        assert!(iv.check_independence_axioms().unwrap().is_pass());
    }

    #[test]
    fn monotonicity_violation_detected() {
        let g = GroundSet::new(["a"]).unwrap();
        let iv = IndepValuation::new(
            g.clone(),
            1,
            vec![
                (Subset::empty(), ExtVal::int(1)),
                (sub(&[0], &g), ExtVal::int(0)),
            ],
        )
        .unwrap();
        let report = iv.check_independence_axioms().unwrap();
        match report.witness.unwrap() {
            Witness::Indep { axiom, sets } => {
                assert_eq!(axiom, 2);
                assert_eq!(sets, vec![Subset::empty(), sub(&[0], &g)]);
            }
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn missing_finite_top_rank_fails_axiom_one() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let iv = IndepValuation::new(
            g.clone(),
            2,
            vec![
                (Subset::empty(), ExtVal::int(0)),
                (sub(&[0], &g), ExtVal::int(0)),
            ],
        )
        .unwrap();
        let report = iv.check_independence_axioms().unwrap();
        match report.witness.unwrap() {
            Witness::Indep { axiom, .. } => assert_eq!(axiom, 1),
            w => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn restrict_rank_at_full_rank_is_identity() {
        let p = uniform_trivial(4, 2);
        assert_eq!(p.restrict_rank(2).unwrap(), p);
    }

    #[test]
    fn restrict_uniform_to_rank_one() {
        let p = uniform_trivial(3, 2);
        let q = p.restrict_rank(1).unwrap();
        assert_eq!(q, uniform_trivial(3, 1));
    }

    #[test]
    fn restrict_weighted_to_rank_one() {
        let g = ground(3);
        let p = PlueckerVector::new(
            g.clone(),
            2,
            vec![
                (sub(&[0, 1], &g), ExtVal::int(5)),
                (sub(&[0, 2], &g), ExtVal::int(2)),
                (sub(&[1, 2], &g), ExtVal::int(7)),
            ],
        )
        .unwrap();
        let q = p.restrict_rank(1).unwrap();
        assert_eq!(q.value(&sub(&[0], &g)), ExtVal::int(2));
        assert_eq!(q.value(&sub(&[1], &g)), ExtVal::int(5));
        assert_eq!(q.value(&sub(&[2], &g)), ExtVal::int(2));
        assert!(q.check_valuated_exchange().unwrap().is_pass());
    }

    #[test]
    fn restrict_out_of_range() {
        assert!(uniform_trivial(3, 2).restrict_rank(3).is_err());
    }

    #[test]
    fn generic_extension_of_uniform() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let p = uniform_trivialed(&g);
        let q = GroundSet::new(["x"]).unwrap();
        let ext = p.generic_extension(&q).unwrap();
        assert_eq!(ext.ground().labels(), &["x", "a", "b"]);
        assert_eq!(ext.rank(), 1);
        for s in enumerate_subsets(ext.ground(), 1).unwrap() {
            assert_eq!(ext.value(&s), ExtVal::int(0));
        }
        assert!(ext.check_valuated_exchange().unwrap().is_pass());
    }

    fn uniform_trivialed(g: &GroundSet) -> PlueckerVector {
        let bases = enumerate_subsets(g, 1).unwrap();
        PlueckerVector::trivial(g.clone(), 1, bases).unwrap()
    }

    #[test]
    fn generic_extension_with_empty_set_is_identity() {
        let p = uniform_trivial(3, 2);
        let ext = p
            .generic_extension(&GroundSet::new(Vec::<String>::new()).unwrap())
            .unwrap();
        assert_eq!(ext, p);
    }

    #[test]
    fn generic_extension_values_follow_the_extension_table() {
        let g = ground(3);
        let p = PlueckerVector::new(
            g.clone(),
            2,
            vec![
                (sub(&[0, 1], &g), ExtVal::int(5)),
                (sub(&[0, 2], &g), ExtVal::int(2)),
                (sub(&[1, 2], &g), ExtVal::int(7)),
            ],
        )
        .unwrap();
        let q = GroundSet::new(["x"]).unwrap();
        let ext = p.generic_extension(&q).unwrap();
        let eg = ext.ground().clone();
        // {x, 1} is valued ν̃({1}) = 2, etc.; old bases keep their values.
        assert_eq!(
            ext.value(&Subset::from_labels(&["x", "1"], &eg).unwrap()),
            ExtVal::int(2)
        );
        assert_eq!(
            ext.value(&Subset::from_labels(&["x", "2"], &eg).unwrap()),
            ExtVal::int(5)
        );
        assert_eq!(
            ext.value(&Subset::from_labels(&["x", "3"], &eg).unwrap()),
            ExtVal::int(2)
        );
        assert_eq!(
            ext.value(&Subset::from_labels(&["1", "2"], &eg).unwrap()),
            ExtVal::int(5)
        );
        assert_eq!(
            ext.value(&Subset::from_labels(&["1", "3"], &eg).unwrap()),
            ExtVal::int(2)
        );
        assert_eq!(
            ext.value(&Subset::from_labels(&["2", "3"], &eg).unwrap()),
            ExtVal::int(7)
        );
        assert!(ext.check_valuated_exchange().unwrap().is_pass());
    }

    #[test]
    fn generic_extension_rejects_label_collision() {
        let p = uniform_trivial(3, 2);
        let q = GroundSet::new(["2"]).unwrap();
        assert!(p.generic_extension(&q).is_err());
    }

    #[test]
    fn normalize_shifts_min_to_zero() {
        let g = ground(3);
        let p = PlueckerVector::new(
            g.clone(),
            2,
            vec![
                (sub(&[0, 1], &g), ExtVal::int(5)),
                (sub(&[0, 2], &g), ExtVal::int(2)),
                (sub(&[1, 2], &g), ExtVal::int(7)),
            ],
        )
        .unwrap();
        let n = p.normalize();
        assert_eq!(n.value(&sub(&[0, 1], &g)), ExtVal::int(3));
        assert_eq!(n.value(&sub(&[0, 2], &g)), ExtVal::int(0));
        assert_eq!(n.value(&sub(&[1, 2], &g)), ExtVal::int(5));
        // idempotent
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn normalize_handles_negative_values() {
        let g = ground(2);
        let p = PlueckerVector::new(g.clone(), 1, vec![(sub(&[0], &g), ExtVal::int(-1))]).unwrap();
        let n = p.normalize();
        assert_eq!(n.value(&sub(&[0], &g)), ExtVal::int(0));
        assert_eq!(n.value(&sub(&[1], &g)), ExtVal::Inf);
    }

    #[test]
    fn normalize_of_trivial_is_identity() {
        let p = uniform_trivial(4, 2);
        assert_eq!(p.normalize(), p);
    }

    #[test]
    fn cryptomorphism_round_trip() {
        let g = ground(3);
        let p = PlueckerVector::new(
            g.clone(),
            2,
            vec![
                (sub(&[0, 1], &g), ExtVal::int(5)),
                (sub(&[0, 2], &g), ExtVal::int(2)),
                (sub(&[1, 2], &g), ExtVal::int(7)),
            ],
        )
        .unwrap();
        assert!(p.check_valuated_exchange().unwrap().is_pass());
        let iv = p.independent_valuation();
        assert!(iv.check_independence_axioms().unwrap().is_pass());
        assert_eq!(iv.top_rank_vector().unwrap(), p);
    }

    #[test]
    fn rank_zero_matroid_is_supported() {
        let g = ground(2);
        let p = PlueckerVector::new(g, 0, vec![(Subset::empty(), ExtVal::int(0))]).unwrap();
        assert!(p.check_valuated_exchange().unwrap().is_pass());
        let iv = p.independent_valuation();
        assert_eq!(iv.value(&Subset::empty()), ExtVal::int(0));
    }
}
