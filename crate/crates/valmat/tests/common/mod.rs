#![allow(dead_code)]

//! Shared brute-force oracles, independent of the library code paths they
//! cross-check.

use num::bigint::BigInt;
use num::rational::BigRational;

use valmat::bimatroid::TropicalMatrix;
use valmat::ground::{enumerate_subsets, Subset};
use valmat::matroid::PlueckerVector;
use valmat::value::ExtVal;

/// Counts independent k-sets by direct containment checks against the basis
/// list, for k = 0..=r.
pub fn brute_independent_counts(p: &PlueckerVector) -> Vec<u64> {
    let bases: Vec<&Subset> = p.bases().map(|(s, _)| s).collect();
    (0..=p.rank())
        .map(|k| {
            enumerate_subsets(p.ground(), k)
                .unwrap()
                .into_iter()
                .filter(|s| bases.iter().any(|b| s.iter().all(|i| b.contains(i))))
                .count() as u64
        })
        .collect()
}

/// min over all permutations of the (I, J) minor entry sums, by explicit
/// enumeration; the oracle for the assignment-based tropical determinant.
pub fn brute_tropical_determinant(a: &TropicalMatrix, i_set: &Subset, j_set: &Subset) -> ExtVal {
    let rows: Vec<usize> = i_set.iter().collect();
    let cols: Vec<usize> = j_set.iter().collect();
    assert_eq!(rows.len(), cols.len());
    let k = rows.len();
    if k == 0 {
        return ExtVal::int(0);
    }
    let mut best = ExtVal::Inf;
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut total = ExtVal::int(0);
        for (pos, &pi) in perm.iter().enumerate() {
            total = total + a.entry(rows[pos], cols[pi]);
        }
        best = best.min(total);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
