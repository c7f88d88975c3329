//! The randomized ultra-log-concavity search: generate a valuated matroid,
//! certify it, compute I_k with a fresh random q, and test ULC at N = |E|.
//! Trials are keyed by index and seeded independently (streams 2t and 2t+1),
//! so the report is byte-identical for any worker count.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use valmat::error::{Error, Result};
use valmat::generators::{
    classical_matroid, direct_sum, random_q_from, random_stiefel_matroid, ClassicalName, RngSpec,
};
use valmat::matroid::PlueckerVector;
use valmat::report::Verdict;
use valmat::sequences::{check_ulc, ik_matroid};
use valmat::value::QScalar;

use crate::io::{document_to_json, witness_to_json, Document, WitnessScope};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mix {
    Stiefel,
    ClassicalSums,
    Both,
}

impl Mix {
    pub fn parse(s: &str) -> Result<Mix> {
        match s {
            "stiefel" => Ok(Mix::Stiefel),
            "classical-sums" => Ok(Mix::ClassicalSums),
            "both" => Ok(Mix::Both),
            other => Err(Error::InvalidInput(format!(
                "unknown mix '{other}'; expected stiefel, classical-sums, or both"
            ))),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Mix::Stiefel => "stiefel",
            Mix::ClassicalSums => "classical-sums",
            Mix::Both => "both",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub trials: u64,
    pub n_max: usize,
    pub r_max: usize,
    pub density: f64,
    pub seed: u64,
    pub jobs: usize,
    pub mix: Mix,
}

const VALUE_LO: i64 = 0;
const VALUE_HI: i64 = 9;
const CLASSICAL: [ClassicalName; 3] = [
    ClassicalName::Fano,
    ClassicalName::Vamos,
    ClassicalName::NonPappus,
];

fn classical_size(name: ClassicalName) -> usize {
    match name {
        ClassicalName::Fano => 7,
        ClassicalName::Vamos => 8,
        ClassicalName::NonPappus => 9,
        ClassicalName::Uniform { n, .. } => n,
    }
}

#[derive(Clone, Debug)]
struct TrialOutcome {
    index: u64,
    desc: String,
    q: QScalar,
    terms: Vec<String>,
    ulc_pass: bool,
    violation: Option<Value>,
}

fn generate_instance(
    params: &SearchParams,
    trial: u64,
    ctrl: &mut rand_chacha::ChaCha12Rng,
) -> Result<(PlueckerVector, String)> {
    use rand::Rng;
    let want_classical = match params.mix {
        Mix::Stiefel => false,
        Mix::ClassicalSums => true,
        Mix::Both => trial % 2 == 1,
    };
    let matrix_spec = RngSpec::new(params.seed, 2 * trial);
    if want_classical {
        // A classical fixture needs room for at least one random element.
        let fits: Vec<ClassicalName> = CLASSICAL
            .iter()
            .copied()
            .filter(|&c| classical_size(c) < params.n_max)
            .collect();
        if !fits.is_empty() {
            let pick = fits[ctrl.gen_range(0..fits.len())];
            let base = classical_matroid(pick)?;
            let room = params.n_max - classical_size(pick);
            let n2 = ctrl.gen_range(1..=room);
            let r2 = ctrl.gen_range(1..=params.r_max.min(n2));
            let part =
                random_stiefel_matroid(n2, r2, VALUE_LO, VALUE_HI, params.density, matrix_spec)?;
            let sum = direct_sum(&base, &part)?;
            let desc = format!("{pick:?}+stiefel(n={n2},r={r2})").to_lowercase();
            return Ok((sum, desc));
        }
    }
    let n = ctrl.gen_range(2..=params.n_max.max(2));
    let r = ctrl.gen_range(1..=params.r_max.min(n).max(1));
    let p = random_stiefel_matroid(n, r, VALUE_LO, VALUE_HI, params.density, matrix_spec)?;
    Ok((p, format!("stiefel(n={n},r={r})")))
}

fn run_trial(params: &SearchParams, trial: u64) -> Result<TrialOutcome> {
    let mut ctrl = RngSpec::new(params.seed, 2 * trial + 1).rng();
    let (p, desc) = generate_instance(params, trial, &mut ctrl)?;

    // Certification gate: nothing enters the experiment unchecked. The
    // generators only produce valid instances, so a failure here is a bug.
    let cert = p.check_valuated_exchange()?;
    if cert.verdict != Verdict::Pass {
        return Err(Error::Generation(format!(
            "trial {trial}: generated instance failed certification: {cert:?}"
        )));
    }

    let q = random_q_from(&mut ctrl);
    let seq = ik_matroid(&p, &q)?;
    let n = p.ground().len();
    let report = check_ulc(&seq, n)?;
    let terms: Vec<String> = seq
        .exact_terms()
        .expect("search runs in exact mode")
        .iter()
        .map(|r| r.to_string())
        .collect();
    let violation = report.witness.as_ref().map(|w| {
        json!({
            "trial": trial,
            "instance": document_to_json(&Document::Matroid(p.clone())),
            "q": q.to_string(),
            "n": n,
            "ik": terms.clone(),
            "witness": witness_to_json(w, &WitnessScope::none()),
        })
    });
    Ok(TrialOutcome {
        index: trial,
        desc,
        q,
        terms,
        ulc_pass: report.is_pass(),
        violation,
    })
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub params: SearchParams,
    pub violations: Vec<Value>,
    pub digest: String,
    pub wall_ms: u128,
}

impl SearchReport {
    pub fn to_json(&self) -> Value {
        json!({
            "format_version": 1,
            "type": "report",
            "kind": "ulc_search",
            "trials": self.params.trials,
            "params": {
                "n_max": self.params.n_max,
                "r_max": self.params.r_max,
                "density": self.params.density,
                "mix": self.params.mix.as_str(),
                "value_range": [VALUE_LO, VALUE_HI],
                "q_policy": "uniform p/s, 1 <= p < s <= 1000, per trial",
                "generators": ["stiefel", "classical-direct-sums"],
            },
            "seed": self.params.seed,
            "jobs": self.params.jobs,
            "violations": self.violations,
            "digest": self.digest,
            "wall_ms": self.wall_ms as u64,
        })
    }

    pub fn found_counterexample(&self) -> bool {
        !self.violations.is_empty()
    }
}

pub fn run_search(params: &SearchParams) -> Result<SearchReport> {
    if params.n_max < 2 || params.r_max < 1 {
        return Err(Error::InvalidInput("search needs n >= 2 and r >= 1".into()));
    }
    if !(0.0..1.0).contains(&params.density) {
        return Err(Error::InvalidInput("density must lie in [0, 1)".into()));
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.jobs.max(1))
        .build()
        .map_err(|e| Error::Generation(format!("worker pool: {e}")))?;
    let outcomes: Result<Vec<TrialOutcome>> = pool.install(|| {
        (0..params.trials)
            .into_par_iter()
            .map(|t| run_trial(params, t))
            .collect()
    });
    let mut outcomes = outcomes?;
    outcomes.sort_by_key(|o| o.index);

    let mut hasher = Sha256::new();
    let mut violations = Vec::new();
    for o in &outcomes {
        let line = format!(
            "trial={};{};q={};ik={};ulc={}\n",
            o.index,
            o.desc,
            o.q,
            o.terms.join(","),
            if o.ulc_pass { "pass" } else { "fail" }
        );
        hasher.update(line.as_bytes());
        if let Some(v) = &o.violation {
            violations.push(v.clone());
        }
    }
    let digest = hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect::<String>();

    Ok(SearchReport {
        params: params.clone(),
        violations,
        digest,
        wall_ms: started.elapsed().as_millis(),
    })
}
