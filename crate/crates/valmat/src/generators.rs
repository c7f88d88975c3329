//! Instance corpus: classical non-representable matroids with the trivial
//! valuation, random Stiefel-type realizable Plücker vectors, valuated direct
//! sums, and reproducible seeded randomness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::bimatroid::TropicalMatrix;
use crate::error::{Error, Result};
use crate::ground::{enumerate_subsets, GroundSet, Subset};
use crate::matroid::PlueckerVector;
use crate::value::{ExtVal, QScalar};

/// A reproducible randomness source: the same (seed, stream) yields identical
/// draws across runs and platforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngSpec {
    pub seed: u64,
    pub stream: u64,
}

impl RngSpec {
    pub fn new(seed: u64, stream: u64) -> RngSpec {
        RngSpec { seed, stream }
    }

    pub fn rng(&self) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Built-in classical fixtures plus uniform matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalName {
    Fano,
    Vamos,
    NonPappus,
    Uniform { n: usize, r: usize },
}

impl ClassicalName {
    /// Parses "fano", "vamos", "nonpappus", or "uniform(n,r)".
    pub fn parse(name: &str) -> Result<ClassicalName> {
        match name {
            "fano" => Ok(ClassicalName::Fano),
            "vamos" => Ok(ClassicalName::Vamos),
            "nonpappus" => Ok(ClassicalName::NonPappus),
            _ => {
                if let Some(args) = name
                    .strip_prefix("uniform(")
                    .and_then(|s| s.strip_suffix(')'))
                {
                    let parts: Vec<&str> = args.split(',').collect();
                    if parts.len() == 2 {
                        let n = parts[0].trim().parse().map_err(|_| bad_name(name))?;
                        let r = parts[1].trim().parse().map_err(|_| bad_name(name))?;
                        return Ok(ClassicalName::Uniform { n, r });
                    }
                }
                Err(bad_name(name))
            }
        }
    }
}

fn bad_name(name: &str) -> Error {
    Error::InvalidInput(format!(
        "unknown matroid '{name}'; expected fano, vamos, nonpappus, or uniform(n,r)"
    ))
}

// Lines of the Fano plane on points 1..7.
const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [0, 3, 4],
    [0, 5, 6],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 5],
];

// Circuit-hyperplanes of the Vámos matroid: pair unions P1P2, P1P3, P1P4,
// P2P3, P2P4 over the pairs {1,2}, {3,4}, {5,6}, {7,8}; P3P4 stays a basis.
const VAMOS_CIRCUITS: [[usize; 4]; 5] = [
    [0, 1, 2, 3],
    [0, 1, 4, 5],
    [0, 1, 6, 7],
    [2, 3, 4, 5],
    [2, 3, 6, 7],
];

// The eight 3-point lines of the non-Pappus configuration on points 1..9;
// the ninth line {7,8,9} is deliberately independent.
const NON_PAPPUS_LINES: [[usize; 3]; 8] = [
    [0, 1, 2],
    [3, 4, 5],
    [0, 4, 6],
    [1, 3, 6],
    [0, 5, 7],
    [2, 3, 7],
    [1, 5, 8],
    [2, 4, 8],
];

/// The named matroid with the trivial valuation: 0 on bases, ∞ elsewhere.
pub fn classical_matroid(name: ClassicalName) -> Result<PlueckerVector> {
    match name {
        ClassicalName::Fano => paving_matroid(7, 3, &FANO_LINES),
        ClassicalName::Vamos => paving_matroid(8, 4, &VAMOS_CIRCUITS),
        ClassicalName::NonPappus => paving_matroid(9, 3, &NON_PAPPUS_LINES),
        ClassicalName::Uniform { n, r } => {
            let ground = GroundSet::numbered(n);
            let bases = enumerate_subsets(&ground, r)?;
            PlueckerVector::trivial(ground, r, bases)
        }
    }
}

/// Rank-r matroid on 1..n whose nonbases are exactly the listed r-sets.
fn paving_matroid<const K: usize>(
    n: usize,
    r: usize,
    nonbases: &[[usize; K]],
) -> Result<PlueckerVector> {
    let ground = GroundSet::numbered(n);
    let excluded: Vec<Subset> = nonbases
        .iter()
        .map(|ix| Subset::new(ix.to_vec(), &ground))
        .collect::<Result<_>>()?;
    let bases = enumerate_subsets(&ground, r)?
        .into_iter()
        .filter(|s| !excluded.contains(s));
    PlueckerVector::trivial(ground, r, bases)
}

/// A random matrix over Γ ∪ {∞} with uniform integer entries in
/// [lo, hi] and independent ∞ entries at the given density. Rows are labeled
/// "r1…", columns "c1…". The draw order is row-major and fixed.
pub fn random_tropical_matrix(
    n_rows: usize,
    n_cols: usize,
    lo: i64,
    hi: i64,
    density: f64,
    rng: &mut ChaCha12Rng,
) -> Result<TropicalMatrix> {
    if lo > hi {
        return Err(Error::InvalidInput("empty value range".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidInput("density must lie in [0, 1]".into()));
    }
    let entries = (0..n_rows)
        .map(|_| {
            (0..n_cols)
                .map(|_| {
                    if rng.gen::<f64>() < density {
                        ExtVal::Inf
                    } else {
                        ExtVal::int(rng.gen_range(lo..=hi))
                    }
                })
                .collect()
        })
        .collect();
    TropicalMatrix::new(
        GroundSet::prefixed("r", n_rows),
        GroundSet::prefixed("c", n_cols),
        entries,
    )
}

const STIEFEL_RETRIES: usize = 32;

/// A random realizable Plücker vector: the normalized maximal tropical
/// minors of a random r×n matrix. Redraws (boundedly) when every maximal
/// minor is infinite.
pub fn random_stiefel_matroid(
    n: usize,
    r: usize,
    lo: i64,
    hi: i64,
    density: f64,
    spec: RngSpec,
) -> Result<PlueckerVector> {
    if r > n {
        return Err(Error::InvalidInput(format!(
            "rank {r} exceeds ground set size {n}"
        )));
    }
    let mut rng = spec.rng();
    for _ in 0..STIEFEL_RETRIES {
        let a = random_tropical_matrix(r, n, lo, hi, density, &mut rng)?;
        match a.stiefel_matroid() {
            Ok(p) => return Ok(p),
            Err(Error::Generation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Generation(format!(
        "no finite basis after {STIEFEL_RETRIES} draws (n={n}, r={r}, density={density})"
    )))
}

/// The valuated direct sum: rank r1+r2 on E1 ⊔ E2 with
/// ν(S) = ν1(S ∩ E1) + ν2(S ∩ E2) on the forced split, ∞ elsewhere.
pub fn direct_sum(p1: &PlueckerVector, p2: &PlueckerVector) -> Result<PlueckerVector> {
    let ground = p1.ground().disjoint_union(p2.ground())?;
    let shift = p1.ground().len();
    let rank = p1.rank() + p2.rank();
    let mut values = Vec::with_capacity(p1.num_bases() * p2.num_bases());
    for (b1, v1) in p1.bases() {
        for (b2, v2) in p2.bases() {
            let indices: Vec<usize> = b1.iter().chain(b2.iter().map(|i| i + shift)).collect();
            values.push((Subset::new(indices, &ground)?, v1 + v2));
        }
    }
    PlueckerVector::new(ground, rank, values)
}

/// A uniform exact rational p/s with 1 ≤ p < s ≤ 1000.
pub fn random_q(spec: RngSpec) -> QScalar {
    random_q_from(&mut spec.rng())
}

/// Same draw from a live generator, for callers interleaving other draws.
pub fn random_q_from(rng: &mut ChaCha12Rng) -> QScalar {
    let s = rng.gen_range(2..=1000i64);
    let p = rng.gen_range(1..s);
    QScalar::exact(p, s).expect("0 < p/s < 1")
}
