//! Pass/fail verdicts with re-checkable counterexample witnesses.

use crate::ground::{MultiIndex, Subset};
use crate::value::ExtVal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// The outcome of an axiom or inequality check. A `Fail` always carries a
/// witness that re-evaluates to a genuine violation.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass() -> CheckReport {
        CheckReport {
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> CheckReport {
        CheckReport {
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Which side of a bimatroid a pivot element lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorPivot {
    Row(usize),
    Col(usize),
}

/// Structured counterexamples, always the first violation in the scan order
/// of the producing check.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Basis pair (S, T) and pivot s ∈ S−T with no valid exchange partner.
    Exchange {
        s_set: Subset,
        t_set: Subset,
        pivot: usize,
    },
    /// Violated independent-set axiom (1–4) with the offending sets.
    Indep { axiom: u8, sets: Vec<Subset> },
    /// Simplex pair (α, β) and pivot s with α_s > β_s but no valid t.
    MConvex {
        alpha: MultiIndex,
        beta: MultiIndex,
        pivot: usize,
    },
    /// μ(∅,∅) differs from 0.
    MinorNormalization { value: ExtVal },
    /// Exchange failure translated back to minor pairs (I,J), (I',J').
    MinorExchange {
        first: (Subset, Subset),
        second: (Subset, Subset),
        pivot: MinorPivot,
    },
    /// Sequence inequality violated at index k; both sides rendered exactly.
    Sequence { k: usize, lhs: String, rhs: String },
    /// Bivariate coefficient support has an internal zero at this index.
    SupportGap { index: usize },
}
