//! M-convex functions on discrete simplices (valuated discrete polymatroids):
//! the exchange checker, the extension to lower degrees, cages, multisymmetric
//! lifts to valuated matroids, and generic extensions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ground::{enumerate_multi_indices, GroundSet, MultiIndex, Subset};
use crate::matroid::PlueckerVector;
use crate::report::{CheckReport, Witness};
use crate::value::ExtVal;

/// An M-convex function candidate: a map from the degree-r discrete simplex
/// to Γ ∪ {∞}; absent points are infinite. The exchange axiom is decided by
/// [`MConvexMap::check_m_convex`].
#[derive(Clone, Debug, PartialEq)]
pub struct MConvexMap {
    ground: GroundSet,
    rank: usize,
    values: BTreeMap<MultiIndex, ExtVal>,
}

impl MConvexMap {
    pub fn new<I>(ground: GroundSet, rank: usize, values: I) -> Result<MConvexMap>
    where
        I: IntoIterator<Item = (MultiIndex, ExtVal)>,
    {
        let mut map = BTreeMap::new();
        for (alpha, v) in values {
            if alpha.len() != ground.len() {
                return Err(Error::InvalidInput(
                    "multi-index length differs from ground set size".into(),
                ));
            }
            if alpha.degree() != rank {
                return Err(Error::InvalidInput(format!(
                    "value keyed by a degree-{} index in a rank-{rank} map",
                    alpha.degree()
                )));
            }
            if !v.is_finite() {
                continue;
            }
            if map.insert(alpha, v).is_some() {
                return Err(Error::InvalidInput("duplicate multi-index key".into()));
            }
        }
        Ok(MConvexMap {
            ground,
            rank,
            values: map,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, alpha: &MultiIndex) -> ExtVal {
        self.values.get(alpha).copied().unwrap_or(ExtVal::Inf)
    }

    /// Finite support in ascending lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = (&MultiIndex, ExtVal)> {
        self.values.iter().map(|(a, &v)| (a, v))
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    /// Exhaustive check of the M-convex exchange axiom over all ordered pairs
    /// of the simplex; pairs with an infinite side hold vacuously. Fails with
    /// the first (α, β, s) in scan order admitting no valid t.
    pub fn check_m_convex(&self) -> Result<CheckReport> {
        if self.values.is_empty() {
            return Err(Error::InvalidInput(
                "not an M-convex candidate: every value is infinite".into(),
            ));
        }
        let n = self.ground.len();
        // Scan in the enumeration order of the simplex (degree leftmost
        // first), i.e. descending lexicographic order of the entry vectors.
        let support: Vec<(&MultiIndex, ExtVal)> =
            self.values.iter().rev().map(|(a, &v)| (a, v)).collect();
        for &(alpha, av) in &support {
            for &(beta, bv) in &support {
                if alpha == beta {
                    continue;
                }
                let lhs = av + bv;
                for s in 0..n {
                    if alpha.entry(s) <= beta.entry(s) {
                        continue;
                    }
                    let mut found = false;
                    for t in 0..n {
                        if beta.entry(t) <= alpha.entry(t) {
                            continue;
                        }
                        let a_new = alpha.minus_unit(s).expect("alpha_s > 0").plus_unit(t);
                        let b_new = beta.minus_unit(t).expect("beta_t > 0").plus_unit(s);
                        if lhs >= self.value(&a_new) + self.value(&b_new) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Ok(CheckReport::fail(Witness::MConvex {
                            alpha: alpha.clone(),
                            beta: beta.clone(),
                            pivot: s,
                        }));
                    }
                }
            }
        }
        Ok(CheckReport::pass())
    }

    /// ν̃ on all α with |α| ≤ r: the minimum of ν over coordinatewise
    /// dominating points of the top simplex.
    pub fn poly_independent_valuation(&self) -> PolyIndepValuation {
        let mut table: BTreeMap<MultiIndex, ExtVal> = BTreeMap::new();
        for (beta, &v) in &self.values {
            for alpha in dominated_indices(beta) {
                let slot = table.entry(alpha).or_insert(ExtVal::Inf);
                if v < *slot {
                    *slot = v;
                }
            }
        }
        PolyIndepValuation {
            ground: self.ground.clone(),
            rank: self.rank,
            table,
        }
    }

    /// The coordinatewise maximum of the finite support.
    pub fn cage(&self) -> MultiIndex {
        let n = self.ground.len();
        let mut cage = vec![0u32; n];
        for alpha in self.values.keys() {
            for (c, &e) in cage.iter_mut().zip(alpha.entries()) {
                *c = (*c).max(e);
            }
        }
        MultiIndex::new(cage)
    }

    /// The canonical fiber map for the cage: element s with cage entry a_s
    /// produces labels s#1 … s#a_s.
    pub fn canonical_fiber_map(&self) -> Result<FiberMap> {
        let cage = self.cage();
        let mut labels = Vec::new();
        let mut assign = Vec::new();
        for (s, &a) in cage.entries().iter().enumerate() {
            for copy in 1..=a {
                labels.push(format!("{}#{copy}", self.ground.label(s)));
                assign.push(s);
            }
        }
        FiberMap::new(GroundSet::new(labels)?, self.ground.clone(), assign)
    }

    /// The multisymmetric lift M_π(ν): S′ ↦ ν(Σ_{s′∈S′} e_{π(s′)}), a rank-r
    /// basis valuation on the fiber ground set. Fiber sizes must match the
    /// cage exactly.
    pub fn multisymmetric_lift(&self, pi: &FiberMap) -> Result<PlueckerVector> {
        if pi.target != self.ground {
            return Err(Error::InvalidInput(
                "fiber map target differs from the function's ground set".into(),
            ));
        }
        let cage = self.cage();
        let mut fiber_sizes = vec![0u32; self.ground.len()];
        for &t in &pi.assign {
            fiber_sizes[t] += 1;
        }
        if fiber_sizes != cage.entries() {
            return Err(Error::InvalidInput(format!(
                "fiber sizes {fiber_sizes:?} do not match the cage {cage}"
            )));
        }
        let n_src = pi.source.len();
        if self.rank > n_src {
            return Err(Error::InvalidInput(
                "rank exceeds the lifted ground set size".into(),
            ));
        }
        let mut values = Vec::new();
        for indices in crate::ground::enumerate_index_subsets(n_src, self.rank) {
            let mut alpha = vec![0u32; self.ground.len()];
            for &i in &indices {
                alpha[pi.assign[i]] += 1;
            }
            let v = self.value(&MultiIndex::new(alpha));
            if v.is_finite() {
                values.push((Subset::new(indices, &pi.source)?, v));
            }
        }
        PlueckerVector::new(pi.source.clone(), self.rank, values)
    }

    /// Generic extension to Q ⊔ E: ν_P̃(α_Q, α) = ν̃_P(α). The new elements
    /// come first in the declared order.
    pub fn generic_extension(&self, new_elements: &GroundSet) -> Result<MConvexMap> {
        let ground = new_elements.disjoint_union(&self.ground)?;
        let q_len = new_elements.len();
        let iv = self.poly_independent_valuation();
        let mut values = Vec::new();
        for alpha in enumerate_multi_indices(&ground, self.rank) {
            let e_part = MultiIndex::new(alpha.entries()[q_len..].to_vec());
            let v = iv.value(&e_part);
            if v.is_finite() {
                values.push((alpha, v));
            }
        }
        MConvexMap::new(ground, self.rank, values)
    }
}

/// All α with α ≤ β coordinatewise.
fn dominated_indices(beta: &MultiIndex) -> Vec<MultiIndex> {
    let mut out = vec![Vec::with_capacity(beta.len())];
    for &b in beta.entries() {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in out {
            for v in 0..=b {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(MultiIndex::new).collect()
}

/// A candidate extension table on Δ^{≤ r}; absent entries are infinite.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyIndepValuation {
    ground: GroundSet,
    rank: usize,
    table: BTreeMap<MultiIndex, ExtVal>,
}

impl PolyIndepValuation {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, alpha: &MultiIndex) -> ExtVal {
        self.table.get(alpha).copied().unwrap_or(ExtVal::Inf)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, ExtVal)> {
        self.table.iter().map(|(a, &v)| (a, v))
    }

    /// Monotone under coordinatewise decrease: α ≤ β implies ν̃(α) ≤ ν̃(β).
    pub fn is_monotone(&self) -> bool {
        self.table.iter().all(|(beta, &bv)| {
            (0..beta.len()).all(|i| match beta.minus_unit(i) {
                Some(alpha) => self.value(&alpha) <= bv,
                None => true,
            })
        })
    }
}

/// A map π: E′ → E with declared fibers, used to pull an M-convex function
/// back to a set with cage-sized fibers.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberMap {
    source: GroundSet,
    target: GroundSet,
    assign: Vec<usize>,
}

impl FiberMap {
    pub fn new(source: GroundSet, target: GroundSet, assign: Vec<usize>) -> Result<FiberMap> {
        if assign.len() != source.len() {
            return Err(Error::InvalidInput(
                "assignment length differs from source size".into(),
            ));
        }
        if assign.iter().any(|&t| t >= target.len()) {
            return Err(Error::InvalidInput("fiber target out of range".into()));
        }
        Ok(FiberMap {
            source,
            target,
            assign,
        })
    }

    pub fn source(&self) -> &GroundSet {
        &self.source
    }

    pub fn target(&self) -> &GroundSet {
        &self.target
    }

    pub fn image_of(&self, source_index: usize) -> usize {
        self.assign[source_index]
    }
}

/// ν(α) = Σ_e c_e α_e + Σ_e h_e(α_e) with h_e the prefix sums of nondecreasing
/// increments: a certified-valid generator of M-convex instances.
pub fn separable_mconvex(
    ground: GroundSet,
    rank: usize,
    linear: &[i64],
    convex_increments: &[Vec<i64>],
) -> Result<MConvexMap> {
    let n = ground.len();
    if linear.len() != n || convex_increments.len() != n {
        return Err(Error::InvalidInput(
            "coefficient lists must match the ground set size".into(),
        ));
    }
    for inc in convex_increments {
        if inc.len() < rank {
            return Err(Error::InvalidInput(format!(
                "need at least {rank} increments per element, got {}",
                inc.len()
            )));
        }
        if inc.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(
                "increments must be nondecreasing".into(),
            ));
        }
    }
    let prefix: Vec<Vec<i64>> = convex_increments
        .iter()
        .map(|inc| {
            let mut acc = 0i64;
            let mut p = vec![0i64];
            for &d in inc.iter().take(rank) {
                acc += d;
                p.push(acc);
            }
            p
        })
        .collect();
    let values = enumerate_multi_indices(&ground, rank)
        .into_iter()
        .map(|alpha| {
            let v: i64 = alpha
                .entries()
                .iter()
                .enumerate()
                .map(|(e, &a)| linear[e] * a as i64 + prefix[e][a as usize])
                .sum();
            (alpha, ExtVal::int(v))
        });
    let values: Vec<_> = values.collect();
    MConvexMap::new(ground, rank, values)
}
