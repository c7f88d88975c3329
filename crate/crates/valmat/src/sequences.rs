//! The weighted counting sequences I_k (matroids and polymatroids) and R_k
//! (bimatroids), with exact verdicts for the strengthened log-concavity
//! inequality k·I_k² ≥ (k+1)·I_{k+1}·I_{k−1} and for ultra-log-concavity.
//!
//! Exact mode compares big rationals, so a verdict is never an artifact of
//! rounding; relaxed mode compares floats under the configured relative
//! tolerance.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};

use crate::bimatroid::MinorMap;
use crate::error::{Error, Result};
use crate::ground::{binomial, multi_index_factorial};
use crate::matroid::PlueckerVector;
use crate::polymatroid::MConvexMap;
use crate::report::{CheckReport, Witness};
use crate::value::{Coeff, Mode, QScalar};

/// Which structure a sequence was computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    IkMatroid,
    IkPolymatroid,
    RkBimatroid,
}

impl SeqKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeqKind::IkMatroid => "ik_matroid",
            SeqKind::IkPolymatroid => "ik_polymatroid",
            SeqKind::RkBimatroid => "rk_bimatroid",
        }
    }
}

/// Enough metadata to re-derive a sequence: the kind, a structure synopsis,
/// q, and the default binomial scale N for ultra-log-concavity.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceContext {
    pub kind: SeqKind,
    pub structure: String,
    pub q: String,
    pub default_n: usize,
}

/// Sequence terms: exact nonnegative rationals, or floats with the relaxed
/// tolerance that produced them.
#[derive(Clone, Debug, PartialEq)]
pub enum Terms {
    Exact(Vec<BigRational>),
    Approx { terms: Vec<f64>, tol: f64 },
}

impl Terms {
    pub fn len(&self) -> usize {
        match self {
            Terms::Exact(t) => t.len(),
            Terms::Approx { terms, .. } => terms.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PositiveSequence {
    pub terms: Terms,
    pub context: SequenceContext,
}

impl PositiveSequence {
    pub fn exact(terms: Vec<BigRational>, context: SequenceContext) -> Result<PositiveSequence> {
        if terms.iter().any(|t| t.is_negative()) {
            return Err(Error::InvalidInput("sequence term is negative".into()));
        }
        Ok(PositiveSequence {
            terms: Terms::Exact(terms),
            context,
        })
    }

    pub fn approx(terms: Vec<f64>, tol: f64, context: SequenceContext) -> Result<PositiveSequence> {
        if terms.iter().any(|t| *t < 0.0 || !t.is_finite()) {
            return Err(Error::InvalidInput("sequence term is negative".into()));
        }
        Ok(PositiveSequence {
            terms: Terms::Approx { terms, tol },
            context,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exact_terms(&self) -> Option<&[BigRational]> {
        match &self.terms {
            Terms::Exact(t) => Some(t),
            Terms::Approx { .. } => None,
        }
    }

    /// Terms lowered to f64, for display.
    pub fn float_terms(&self) -> Vec<f64> {
        match &self.terms {
            Terms::Exact(t) => t.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect(),
            Terms::Approx { terms, .. } => terms.clone(),
        }
    }
}

fn accumulate(sum: &mut Coeff, inc: Coeff) {
    match (sum, inc) {
        (Coeff::Exact(s), Coeff::Exact(i)) => *s += i,
        (Coeff::Approx(s), Coeff::Approx(i)) => *s += i,
        _ => unreachable!("mode is fixed per sequence"),
    }
}

fn blank_terms(len: usize, q: &QScalar) -> Vec<Coeff> {
    let zero = match q.mode() {
        Mode::Exact => Coeff::Exact(BigRational::zero()),
        Mode::Relaxed { .. } => Coeff::Approx(0.0),
    };
    vec![zero; len]
}

fn finish(terms: Vec<Coeff>, q: &QScalar, context: SequenceContext) -> Result<PositiveSequence> {
    match q.mode() {
        Mode::Exact => {
            let terms = terms
                .into_iter()
                .map(|c| match c {
                    Coeff::Exact(r) => r,
                    Coeff::Approx(_) => unreachable!(),
                })
                .collect();
            PositiveSequence::exact(terms, context)
        }
        Mode::Relaxed { tol } => {
            let terms = terms
                .into_iter()
                .map(|c| match c {
                    Coeff::Approx(f) => f,
                    Coeff::Exact(_) => unreachable!(),
                })
                .collect();
            PositiveSequence::approx(terms, tol, context)
        }
    }
}

/// I_k(M) = Σ_{|S| = k} q^{ν̃(S)} for 0 ≤ k ≤ r. The caller is responsible
/// for having certified the exchange axiom.
pub fn ik_matroid(p: &PlueckerVector, q: &QScalar) -> Result<PositiveSequence> {
    if p.num_bases() == 0 {
        return Err(Error::InvalidInput(
            "not a valuated matroid candidate: every value is infinite".into(),
        ));
    }
    let mut terms = blank_terms(p.rank() + 1, q);
    let table = p.independent_valuation();
    for (s, v) in table.entries() {
        accumulate(&mut terms[s.len()], q.pow(v)?);
    }
    let context = SequenceContext {
        kind: SeqKind::IkMatroid,
        structure: format!("matroid(n={}, r={})", p.ground().len(), p.rank()),
        q: q.to_string(),
        default_n: p.ground().len(),
    };
    finish(terms, q, context)
}

/// I_k(P) = Σ_{α ∈ Δ^k} q^{ν̃(α)} / α! for 0 ≤ k ≤ r.
pub fn ik_polymatroid(f: &MConvexMap, q: &QScalar) -> Result<PositiveSequence> {
    if f.support_len() == 0 {
        return Err(Error::InvalidInput(
            "not an M-convex candidate: every value is infinite".into(),
        ));
    }
    let mut terms = blank_terms(f.rank() + 1, q);
    let table = f.poly_independent_valuation();
    for (alpha, v) in table.entries() {
        let weight = multi_index_factorial(alpha);
        let inc = match q.pow(v)? {
            Coeff::Exact(r) => Coeff::Exact(r / BigRational::from(weight)),
            Coeff::Approx(x) => Coeff::Approx(x / weight.to_f64().expect("factorial fits in f64")),
        };
        accumulate(&mut terms[alpha.degree()], inc);
    }
    // rank may exceed |E| on a simplex, so the default binomial scale must
    // cover the top index
    let context = SequenceContext {
        kind: SeqKind::IkPolymatroid,
        structure: format!("m_convex(n={}, r={})", f.ground().len(), f.rank()),
        q: q.to_string(),
        default_n: f.ground().len().max(f.rank()),
    };
    finish(terms, q, context)
}

/// R_k(A) = Σ_{|I| = |J| = k} q^{μ(I, J)} for 0 ≤ k ≤ min(|E|, |F|);
/// R_0 = q^{μ(∅,∅)} = 1 for a valuated bimatroid.
pub fn rk_bimatroid(mu: &MinorMap, q: &QScalar) -> Result<PositiveSequence> {
    let kmax = mu.rows().len().min(mu.cols().len());
    let mut terms = blank_terms(kmax + 1, q);
    accumulate(
        &mut terms[0],
        q.pow(mu.value(
            &crate::ground::Subset::empty(),
            &crate::ground::Subset::empty(),
        ))?,
    );
    for (i, _j, v) in mu.entries() {
        if i.is_empty() {
            continue; // the origin was counted above
        }
        accumulate(&mut terms[i.len()], q.pow(v)?);
    }
    let context = SequenceContext {
        kind: SeqKind::RkBimatroid,
        structure: format!("bimatroid({}x{})", mu.rows().len(), mu.cols().len()),
        q: q.to_string(),
        default_n: kmax,
    };
    finish(terms, q, context)
}

/// k·I_k² ≥ (k+1)·I_{k+1}·I_{k−1} for all 1 ≤ k < r; sequences shorter than
/// three terms pass trivially.
pub fn check_strengthened_lc(seq: &PositiveSequence) -> CheckReport {
    match &seq.terms {
        Terms::Exact(t) => {
            for k in 1..t.len().saturating_sub(1) {
                let kk = BigRational::from(BigInt::from(k));
                let k1 = BigRational::from(BigInt::from(k + 1));
                let lhs = &kk * &t[k] * &t[k];
                let rhs = &k1 * &t[k + 1] * &t[k - 1];
                if lhs < rhs {
                    return CheckReport::fail(Witness::Sequence {
                        k,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
            CheckReport::pass()
        }
        Terms::Approx { terms: t, tol } => {
            for k in 1..t.len().saturating_sub(1) {
                let lhs = k as f64 * t[k] * t[k];
                let rhs = (k + 1) as f64 * t[k + 1] * t[k - 1];
                if relaxed_violates(lhs, rhs, *tol) {
                    return CheckReport::fail(Witness::Sequence {
                        k,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
            CheckReport::pass()
        }
    }
}

/// (I_k / C(N,k))² ≥ (I_{k+1} / C(N,k+1)) · (I_{k−1} / C(N,k−1)) for all
/// 1 ≤ k ≤ len−2. N must be at least len−1.
pub fn check_ulc(seq: &PositiveSequence, n: usize) -> Result<CheckReport> {
    if n + 1 < seq.len() {
        return Err(Error::InvalidInput(format!(
            "N = {n} is smaller than the top index {}",
            seq.len().saturating_sub(1)
        )));
    }
    match &seq.terms {
        Terms::Exact(t) => {
            for k in 1..t.len().saturating_sub(1) {
                let ck = BigRational::from(binomial(n, k));
                let ck1 = BigRational::from(binomial(n, k + 1));
                let ck0 = BigRational::from(binomial(n, k - 1));
                let nk = &t[k] / &ck;
                let lhs = &nk * &nk;
                let rhs = (&t[k + 1] / &ck1) * (&t[k - 1] / &ck0);
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
        Terms::Approx { terms: t, tol } => {
            for k in 1..t.len().saturating_sub(1) {
                let ck = binomial(n, k).to_f64().expect("binomial fits in f64");
                let ck1 = binomial(n, k + 1).to_f64().expect("binomial fits in f64");
                let ck0 = binomial(n, k - 1).to_f64().expect("binomial fits in f64");
                let lhs = (t[k] / ck) * (t[k] / ck);
                let rhs = (t[k + 1] / ck1) * (t[k - 1] / ck0);
                if relaxed_violates(lhs, rhs, *tol) {
                    return Ok(CheckReport::fail(Witness::Sequence {
                        k,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }));
                }
            }
            Ok(CheckReport::pass())
        }
    }
}

/// A relaxed-mode violation must clear the tolerance band, mirroring a
/// verifier that only reports counterexamples with fixed numerical certainty.
fn relaxed_violates(lhs: f64, rhs: f64, tol: f64) -> bool {
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    lhs < rhs - tol * scale
}
