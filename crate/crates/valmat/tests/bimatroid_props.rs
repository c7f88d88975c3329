//! Property suites for valuated bimatroids: the assignment solver against
//! the permutation oracle, Stiefel bimatroids passing the axiom checker,
//! transpose identities, and the R_k = I_k · C(|E|, k) free-extension law.

mod common;

use num::rational::BigRational;

use common::{brute_tropical_determinant, rat};
use valmat::bimatroid::free_extension_bimatroid;
use valmat::generators::{random_stiefel_matroid, random_tropical_matrix, RngSpec};
use valmat::ground::{binomial, enumerate_subsets, GroundSet, Subset};
use valmat::sequences::{ik_matroid, rk_bimatroid};
use valmat::value::QScalar;

#[test]
fn assignment_matches_permutation_oracle() {
    let mut rng = RngSpec::new(7, 0).rng();
    for trial in 0..120 {
        let k = 1 + trial % 6;
        let a = random_tropical_matrix(k, k, 0, 9, 0.2, &mut rng).unwrap();
        let full_r = Subset::full(a.rows());
        let full_c = Subset::full(a.cols());
        assert_eq!(
            a.tropical_determinant(&full_r, &full_c).unwrap(),
            brute_tropical_determinant(&a, &full_r, &full_c),
            "solver disagrees with brute force on {a:?}"
        );
    }
}

#[test]
fn assignment_matches_oracle_on_rectangular_minors() {
    let mut rng = RngSpec::new(8, 0).rng();
    for _ in 0..40 {
        let a = random_tropical_matrix(5, 6, -4, 4, 0.3, &mut rng).unwrap();
        for k in 0..=4 {
            for i_set in enumerate_subsets(a.rows(), k).unwrap().into_iter().take(3) {
                for j_set in enumerate_subsets(a.cols(), k).unwrap().into_iter().take(3) {
                    assert_eq!(
                        a.tropical_determinant(&i_set, &j_set).unwrap(),
                        brute_tropical_determinant(&a, &i_set, &j_set)
                    );
                }
            }
        }
    }
}

#[test]
fn stiefel_bimatroids_pass_the_checker() {
    let mut rng = RngSpec::new(9, 0).rng();
    for trial in 0..10 {
        let ne = 1 + trial % 4;
        let nf = 1 + (trial / 2) % 4;
        let a = random_tropical_matrix(ne, nf, 0, 9, 0.25, &mut rng).unwrap();
        let mu = a.stiefel_bimatroid().unwrap();
        assert!(
            mu.check_bimatroid().unwrap().is_pass(),
            "stiefel bimatroid fails for {a:?}"
        );
    }
}

#[test]
fn transpose_swaps_all_keyed_values() {
    let mut rng = RngSpec::new(10, 0).rng();
    let a = random_tropical_matrix(3, 4, 0, 9, 0.3, &mut rng).unwrap();
    let mu = a.stiefel_bimatroid().unwrap();
    let t = mu.transpose();
    for (i, j, v) in mu.entries() {
        assert_eq!(t.value(j, i), v);
    }
    assert_eq!(t.transpose(), mu);
    assert!(t.check_bimatroid().unwrap().is_pass());
}

#[test]
fn free_extension_scaling_law() {
    // R_k of the free rank-|E| extension equals I_k · C(|E|, k), exactly.
    for stream in 0..8 {
        let n = 3 + (stream as usize) % 3;
        let r = 1 + (stream as usize) % 3.min(n);
        let p = random_stiefel_matroid(n, r.min(n), 0, 9, 0.2, RngSpec::new(31, stream)).unwrap();
        for extra in 0..2usize {
            let rows = GroundSet::prefixed("x", p.rank() + extra);
            let mu = free_extension_bimatroid(&p, &rows).unwrap();
            assert!(mu.check_bimatroid().unwrap().is_pass());
            for q in [QScalar::one(), QScalar::exact(1, 2).unwrap()] {
                let rk = rk_bimatroid(&mu, &q).unwrap();
                let ik = ik_matroid(&p, &q).unwrap();
                let rk_terms = rk.exact_terms().unwrap();
                let ik_terms = ik.exact_terms().unwrap();
                for (k, rk_val) in rk_terms.iter().enumerate() {
                    let expected = if k < ik_terms.len() {
                        &ik_terms[k] * BigRational::from(binomial(rows.len(), k))
                    } else {
                        rat(0, 1)
                    };
                    assert_eq!(*rk_val, expected, "k = {k}, stream = {stream}");
                }
            }
        }
    }
}

#[test]
fn associated_matroid_of_transpose_swaps_sides() {
    // Value-level duality: ν_{Âᵀ}(S) enumerates the same minors as ν_Â with
    // rows and columns exchanged.
    let mut rng = RngSpec::new(12, 0).rng();
    let a = random_tropical_matrix(2, 3, 0, 5, 0.2, &mut rng).unwrap();
    let mu = a.stiefel_bimatroid().unwrap();
    let t = mu.transpose();
    let assoc_t = t.associated_matroid().unwrap();
    assert_eq!(assoc_t.rank(), mu.cols().len());
    assert!(assoc_t.check_valuated_exchange().unwrap().is_pass());
    for (i, j, v) in mu.entries() {
        // in Âᵀ the basis (F − J) ⊔ I carries μᵀ(J, I) = μ(I, J)
        let nf = mu.cols().len();
        let mut indices: Vec<usize> = (0..nf).filter(|x| !j.contains(*x)).collect();
        indices.extend(i.iter().map(|x| x + nf));
        let s = Subset::new(indices, assoc_t.ground()).unwrap();
        assert_eq!(assoc_t.value(&s), v);
    }
}
