//! Executable small-scale Lorentzian-polynomial machinery: generating
//! polynomials of valuated matroids and M-convex functions, exact partial
//! derivatives, Hessian signature tests via exact rational inertia (or
//! eigenvalues under a tolerance in relaxed mode), bivariate specialization,
//! and the bivariate ultra-log-concavity verdict.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ground::{
    binomial, enumerate_multi_indices, multi_index_factorial, GroundSet, MultiIndex, Subset,
};
use crate::matroid::PlueckerVector;
use crate::polymatroid::MConvexMap;
use crate::report::{CheckReport, Witness};
use crate::value::{Coeff, QScalar};

/// A multihomogeneous polynomial of fixed degree with exact nonnegative
/// rational coefficients; zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiHomPoly {
    vars: GroundSet,
    degree: usize,
    coeffs: BTreeMap<MultiIndex, BigRational>,
}

impl MultiHomPoly {
    pub fn new<I>(vars: GroundSet, degree: usize, coeffs: I) -> Result<MultiHomPoly>
    where
        I: IntoIterator<Item = (MultiIndex, BigRational)>,
    {
        let mut map = BTreeMap::new();
        for (alpha, c) in coeffs {
            if alpha.len() != vars.len() {
                return Err(Error::InvalidInput(
                    "multi-index length differs from variable count".into(),
                ));
            }
            if alpha.degree() != degree {
                return Err(Error::InvalidInput(format!(
                    "coefficient keyed by a degree-{} monomial in a degree-{degree} polynomial",
                    alpha.degree()
                )));
            }
            if c.is_negative() {
                return Err(Error::InvalidInput("negative coefficient".into()));
            }
            if c.is_zero() {
                continue;
            }
            if map.insert(alpha, c).is_some() {
                return Err(Error::InvalidInput("duplicate monomial".into()));
            }
        }
        Ok(MultiHomPoly {
            vars,
            degree,
            coeffs: map,
        })
    }

    pub fn vars(&self) -> &GroundSet {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> BigRational {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The exact iterated partial derivative ∂^α; the degree drops by |α|.
    pub fn partial_derivative(&self, alpha: &MultiIndex) -> Result<MultiHomPoly> {
        if alpha.len() != self.vars.len() {
            return Err(Error::InvalidInput(
                "derivative multi-index length differs from variable count".into(),
            ));
        }
        let order = alpha.degree();
        if order > self.degree {
            return Err(Error::InvalidInput(format!(
                "derivative order {order} exceeds degree {}",
                self.degree
            )));
        }
        let mut coeffs = Vec::new();
        for (gamma, c) in &self.coeffs {
            if !alpha.dominated_by(gamma) {
                continue;
            }
            // ∂^α w^γ = γ!/(γ−α)! · w^{γ−α}
            let mut factor = BigInt::one();
            let mut rest = Vec::with_capacity(gamma.len());
            for (g, a) in gamma.entries().iter().zip(alpha.entries()) {
                for i in 0..*a {
                    factor *= BigInt::from(g - i);
                }
                rest.push(g - a);
            }
            coeffs.push((MultiIndex::new(rest), c * BigRational::from(factor)));
        }
        MultiHomPoly::new(self.vars.clone(), self.degree - order, coeffs)
    }

    /// The Hessian of a degree-2 polynomial, exact and symmetric.
    pub fn hessian(&self) -> Result<SymMatrix> {
        if self.degree != 2 {
            return Err(Error::InvalidInput(format!(
                "hessian needs a degree-2 polynomial, got degree {}",
                self.degree
            )));
        }
        let n = self.vars.len();
        let mut entries = vec![BigRational::zero(); n * n];
        for (alpha, c) in &self.coeffs {
            let support: Vec<usize> = (0..n).filter(|&i| alpha.entry(i) > 0).collect();
            match support.as_slice() {
                [i] => entries[i * n + i] = c * BigRational::from(BigInt::from(2)),
                [i, j] => {
                    entries[i * n + j] = c.clone();
                    entries[j * n + i] = c.clone();
                }
                _ => unreachable!("degree-2 monomials touch at most two variables"),
            }
        }
        SymMatrix::new(n, entries)
    }

    /// True iff every stored coefficient is positive and, for degree ≥ 2,
    /// every derivative ∂^α with α ∈ Δ^{d−2} has a Hessian of Lorentzian
    /// signature. Degrees 0 and 1 reduce to positivity of the support.
    pub fn is_strictly_lorentzian(&self, tol: &SignatureTol) -> Result<bool> {
        if self.coeffs.is_empty() {
            return Ok(false);
        }
        // Construction drops zeros and rejects negatives, so the stored
        // support is positive; degrees 0 and 1 are settled here.
        if self.degree < 2 {
            return Ok(true);
        }
        for alpha in enumerate_multi_indices(&self.vars, self.degree - 2) {
            let second = self.partial_derivative(&alpha)?;
            let h = second.hessian()?;
            if !has_lorentzian_signature(&h, tol) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Heuristic probe for membership in the closure of the strict cone:
    /// tests f + ε·(all degree-d monomials) under the relaxed signature test
    /// for a decreasing ε schedule. `true` means every tested perturbation
    /// was strict (evidence of closure membership); `false` is inconclusive.
    /// Neither outcome is a verdict.
    pub fn boundary_consistent(&self, tol: f64) -> Result<bool> {
        let full = enumerate_multi_indices(&self.vars, self.degree);
        let mut eps = BigRational::one();
        let ten = BigRational::from(BigInt::from(10));
        for _ in 0..6 {
            eps /= &ten;
            let coeffs: Vec<(MultiIndex, BigRational)> = full
                .iter()
                .map(|alpha| (alpha.clone(), self.coeff(alpha) + &eps))
                .collect();
            let perturbed = MultiHomPoly::new(self.vars.clone(), self.degree, coeffs)?;
            if !perturbed.is_strictly_lorentzian(&SignatureTol::Relaxed(tol))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients a_0..a_d of g(x, y) after substituting x for the
    /// variables in `xgroup` and y for those in `ygroup`, as coefficients of
    /// x^{d−k} y^k. The two groups must partition the variable set.
    pub fn specialize_bivariate(
        &self,
        xgroup: &Subset,
        ygroup: &Subset,
    ) -> Result<Vec<BigRational>> {
        let n = self.vars.len();
        let mut seen = vec![0u8; n];
        for i in xgroup.iter() {
            seen[i] += 1;
        }
        for i in ygroup.iter() {
            seen[i] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(Error::InvalidInput(
                "xgroup and ygroup must partition the variable set".into(),
            ));
        }
        let mut out = vec![BigRational::zero(); self.degree + 1];
        for (alpha, c) in &self.coeffs {
            let y_deg: usize = ygroup.iter().map(|i| alpha.entry(i) as usize).sum();
            out[y_deg] += c;
        }
        Ok(out)
    }
}

/// A square symmetric matrix of exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl SymMatrix {
    pub fn new(dim: usize, entries: Vec<BigRational>) -> Result<SymMatrix> {
        if entries.len() != dim * dim {
            return Err(Error::InvalidInput("matrix shape mismatch".into()));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::InvalidInput("matrix is not symmetric".into()));
                }
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<SymMatrix> {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigRational::from(BigInt::from(v))))
            .collect();
        SymMatrix::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    /// The signature (positive, negative, zero) by exact symmetric
    /// elimination; Sylvester's law of inertia keeps it invariant.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let n = self.dim;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut active: Vec<usize> = (0..n).collect();
        let mut pos = 0;
        let mut neg = 0;
        let mut zero = 0;
        while !active.is_empty() {
            // Prefer a nonzero diagonal pivot.
            if let Some(&k) = active.iter().find(|&&k| !a[k][k].is_zero()) {
                if a[k][k].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                let pivot = a[k][k].clone();
                active.retain(|&x| x != k);
                for &i in &active {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    let factor = &a[i][k] / &pivot;
                    for &j in &active {
                        let delta = &factor * &a[k][j];
                        a[i][j] -= delta;
                    }
                }
                continue;
            }
            // All active diagonal entries vanish; a nonzero off-diagonal
            // block [[0, b], [b, 0]] contributes one +1 and one −1.
            let mut off = None;
            'scan: for (pi, &i) in active.iter().enumerate() {
                for &j in active.iter().skip(pi + 1) {
                    if !a[i][j].is_zero() {
                        off = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((k, l)) = off else {
                zero += active.len();
                break;
            };
            pos += 1;
            neg += 1;
            let b = a[k][l].clone();
            active.retain(|&x| x != k && x != l);
            // Schur complement against the 2×2 block with zero diagonal:
            // a_ij ← a_ij − (a_ik·a_jl + a_il·a_jk) / b.
            for (pi, &i) in active.iter().enumerate() {
                for &j in active.iter().skip(pi) {
                    let delta = (&a[i][k] * &a[j][l] + &a[i][l] * &a[j][k]) / &b;
                    let updated = &a[i][j] - &delta;
                    a[i][j] = updated.clone();
                    a[j][i] = updated;
                }
            }
        }
        (pos, neg, zero)
    }

    fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| {
            self.entry(i, j).to_f64().expect("entry fits in f64")
        })
    }
}

/// Zero test policy for the signature check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SignatureTol {
    Exact,
    Relaxed(f64),
}

/// True iff the matrix has exactly one positive and dim−1 negative
/// eigenvalues, none zero. Exact mode decides by rational inertia; relaxed
/// mode by eigenvalues within the tolerance.
pub fn has_lorentzian_signature(h: &SymMatrix, tol: &SignatureTol) -> bool {
    if h.dim == 0 {
        return false;
    }
    match tol {
        SignatureTol::Exact => h.inertia() == (1, h.dim - 1, 0),
        SignatureTol::Relaxed(eps) => {
            let eig = h.to_f64().symmetric_eigen().eigenvalues;
            let pos = eig.iter().filter(|&&x| x > *eps).count();
            let neg = eig.iter().filter(|&&x| x < -*eps).count();
            pos == 1 && neg == h.dim - 1
        }
    }
}

/// f_M(w) = Σ_B q^{ν(B)} Π_{s∈B} w_s, a multilinear degree-r polynomial.
/// Exact mode only.
pub fn generating_poly_matroid(p: &PlueckerVector, q: &QScalar) -> Result<MultiHomPoly> {
    if !q.is_exact() {
        return Err(Error::Mode(
            "generating polynomials require exact mode".into(),
        ));
    }
    let n = p.ground().len();
    let mut coeffs = Vec::new();
    for (s, v) in p.bases() {
        match q.pow(v)? {
            Coeff::Exact(c) => coeffs.push((MultiIndex::from_subset(s, n), c)),
            Coeff::Approx(_) => unreachable!("exact mode"),
        }
    }
    MultiHomPoly::new(p.ground().clone(), p.rank(), coeffs)
}

/// f_P(w) = Σ_α q^{ν(α)}/α! · w^α. Exact mode only.
pub fn generating_poly_mconvex(f: &MConvexMap, q: &QScalar) -> Result<MultiHomPoly> {
    if !q.is_exact() {
        return Err(Error::Mode(
            "generating polynomials require exact mode".into(),
        ));
    }
    let mut coeffs = Vec::new();
    for (alpha, v) in f.support() {
        match q.pow(v)? {
            Coeff::Exact(c) => {
                let w = BigRational::from(multi_index_factorial(alpha));
                coeffs.push((alpha.clone(), c / w));
            }
            Coeff::Approx(_) => unreachable!("exact mode"),
        }
    }
    MultiHomPoly::new(f.ground().clone(), f.rank(), coeffs)
}

/// Ultra-log-concavity of a bivariate coefficient sequence a_0..a_d: the
/// normalized inequalities must hold for 1 ≤ k ≤ d−1 and the support must be
/// an interval (an internal zero is reported distinctly).
pub fn ulc_of_bivariate(coeffs: &[BigRational], d: usize) -> Result<CheckReport> {
    if coeffs.len() != d + 1 {
        return Err(Error::InvalidInput(format!(
            "expected {} coefficients, got {}",
            d + 1,
            coeffs.len()
        )));
    }
    if coeffs.iter().any(|c| c.is_negative()) {
        return Err(Error::InvalidInput("negative coefficient".into()));
    }
    let first = coeffs.iter().position(|c| !c.is_zero());
    let last = coeffs.iter().rposition(|c| !c.is_zero());
    if let (Some(first), Some(last)) = (first, last) {
        if let Some(gap) = (first..=last).find(|&k| coeffs[k].is_zero()) {
            return Ok(CheckReport::fail(Witness::SupportGap { index: gap }));
        }
    }
    for k in 1..d {
        let ck = BigRational::from(binomial(d, k));
        let ck1 = BigRational::from(binomial(d, k + 1));
        let ck0 = BigRational::from(binomial(d, k - 1));
        let nk = &coeffs[k] / &ck;
        let lhs = &nk * &nk;
        let rhs = (&coeffs[k + 1] / &ck1) * (&coeffs[k - 1] / &ck0);
        if lhs < rhs {
            return Ok(CheckReport::fail(Witness::Sequence {
                k,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }));
        }
    }
    Ok(CheckReport::pass())
}
