//! Command implementations. Every command prints a JSON report to stdout and
//! returns a process exit code: 0 pass, 1 structural check failure, 2 input
//! or usage error, 3 conjecture counterexample found.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use valmat::bimatroid::free_extension_bimatroid;
use valmat::error::{Error, Result};
use valmat::generators::{classical_matroid, random_stiefel_matroid, ClassicalName, RngSpec};
use valmat::ground::GroundSet;
use valmat::lorentzian::{generating_poly_matroid, generating_poly_mconvex, SignatureTol};
use valmat::report::CheckReport;
use valmat::sequences::{
    check_strengthened_lc, check_ulc, ik_matroid, ik_polymatroid, rk_bimatroid, PositiveSequence,
    SeqKind,
};
use valmat::value::{Mode, QScalar};

use crate::io::{
    parse_document, parse_rational, serialize_document, witness_to_json, Document, WitnessScope,
};
use crate::search::{run_search, Mix, SearchParams};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

fn read_document(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn write_or_print(doc: &Document, output: Option<&PathBuf>) -> Result<()> {
    let text = serialize_document(doc);
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_structure(doc: &Document) -> Result<(CheckReport, Value)> {
    match doc {
        Document::Matroid(p) => {
            let report = p.check_valuated_exchange()?;
            let witness = report
                .witness
                .as_ref()
                .map(|w| witness_to_json(w, &WitnessScope::matroid(p.ground())))
                .unwrap_or(Value::Null);
            Ok((report, witness))
        }
        Document::MConvex(f) => {
            let report = f.check_m_convex()?;
            let witness = report
                .witness
                .as_ref()
                .map(|w| witness_to_json(w, &WitnessScope::matroid(f.ground())))
                .unwrap_or(Value::Null);
            Ok((report, witness))
        }
        Document::Bimatroid(mu) => {
            let report = mu.check_bimatroid()?;
            let witness = report
                .witness
                .as_ref()
                .map(|w| witness_to_json(w, &WitnessScope::bimatroid(mu.rows(), mu.cols())))
                .unwrap_or(Value::Null);
            Ok((report, witness))
        }
        other => Err(Error::InvalidInput(format!(
            "no axiom checker for '{}' documents",
            other.type_name()
        ))),
    }
}

pub fn cmd_check(file: &Path, structure: &str) -> Result<i32> {
    let doc = read_document(file)?;
    let matches_request = match (structure, &doc) {
        ("auto", _) => true,
        ("matroid", Document::Matroid(_)) => true,
        ("mconvex", Document::MConvex(_)) => true,
        ("bimatroid", Document::Bimatroid(_)) => true,
        ("matroid" | "mconvex" | "bimatroid", _) => false,
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown structure '{structure}'; expected auto, matroid, mconvex, or bimatroid"
            )))
        }
    };
    if !matches_request {
        return Err(Error::InvalidInput(format!(
            "document has type '{}', not '{structure}'",
            doc.type_name()
        )));
    }
    let (report, witness) = check_structure(&doc)?;
    emit(&json!({
        "format_version": 1,
        "type": "report",
        "kind": "check",
        "structure": doc.type_name(),
        "verdict": if report.is_pass() { "pass" } else { "fail" },
        "witness": witness,
    }));
    Ok(if report.is_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

pub struct SeqArgs {
    pub kind: String,
    pub q: String,
    pub check: String,
    pub big_n: Option<usize>,
    pub relaxed: bool,
    pub tol: f64,
}

pub fn cmd_seq(file: &Path, args: &SeqArgs) -> Result<i32> {
    let q_rat = parse_rational(&args.q)?;
    let mode = if args.relaxed {
        Mode::Relaxed { tol: args.tol }
    } else {
        Mode::Exact
    };
    let q = QScalar::new(q_rat, mode)?;
    let doc = read_document(file)?;

    // a sequence only means anything over a certified structure
    let (cert, cert_witness) = check_structure(&doc)?;
    if !cert.is_pass() {
        emit(&json!({
            "format_version": 1,
            "type": "report",
            "kind": "sequence",
            "verdict": "invalid_structure",
            "witness": cert_witness,
        }));
        return Ok(EXIT_FAIL);
    }

    let seq: PositiveSequence = match (args.kind.as_str(), &doc) {
        ("ik", Document::Matroid(p)) => ik_matroid(p, &q)?,
        ("ik", Document::MConvex(f)) => ik_polymatroid(f, &q)?,
        ("rk", Document::Bimatroid(mu)) => rk_bimatroid(mu, &q)?,
        ("ik" | "rk", other) => {
            return Err(Error::InvalidInput(format!(
                "--kind {} does not apply to '{}' documents",
                args.kind,
                other.type_name()
            )))
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown kind '{}'; expected ik or rk",
                args.kind
            )))
        }
    };

    let (report, check_name, used_n) = match args.check.as_str() {
        "lc" => (check_strengthened_lc(&seq), "strengthened_lc", None),
        "ulc" => {
            let n = args.big_n.unwrap_or(seq.context.default_n);
            (check_ulc(&seq, n)?, "ulc", Some(n))
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown check '{other}'; expected lc or ulc"
            )))
        }
    };

    // Theorems cover strengthened LC of I_k and ULC of R_k; ULC of I_k is an
    // open conjecture, so a failure there is a reportable finding, not a bug.
    let conjecture_probe = args.check == "ulc"
        && matches!(
            seq.context.kind,
            SeqKind::IkMatroid | SeqKind::IkPolymatroid
        );
    let classification = if conjecture_probe {
        "conjecture"
    } else {
        "theorem"
    };

    let witness = report
        .witness
        .as_ref()
        .map(|w| witness_to_json(w, &WitnessScope::none()))
        .unwrap_or(Value::Null);
    let mut out = json!({
        "format_version": 1,
        "type": "report",
        "kind": "sequence",
        "sequence": crate::io::document_to_json(&Document::Sequence(seq.clone())),
        "check": check_name,
        "classification": classification,
        "verdict": if report.is_pass() { "pass" } else { "fail" },
        "witness": witness,
    });
    if let Some(n) = used_n {
        out["n"] = json!(n as u64);
    }
    emit(&out);

    Ok(if report.is_pass() {
        EXIT_PASS
    } else if conjecture_probe {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_FAIL
    })
}

pub struct ExtendArgs {
    pub new_elements: Vec<String>,
    pub count: Option<usize>,
    pub mode: String,
    pub verify: bool,
    pub output: Option<PathBuf>,
}

pub fn cmd_extend(file: &Path, args: &ExtendArgs) -> Result<i32> {
    let doc = read_document(file)?;
    let existing: Vec<&GroundSet> = match &doc {
        Document::Matroid(p) => vec![p.ground()],
        Document::MConvex(f) => vec![f.ground()],
        other => {
            return Err(Error::InvalidInput(format!(
                "cannot extend '{}' documents",
                other.type_name()
            )))
        }
    };
    let labels: Vec<String> = if !args.new_elements.is_empty() {
        args.new_elements.clone()
    } else if let Some(count) = args.count {
        let generated: Vec<String> = (1..=count).map(|i| format!("q{i}")).collect();
        if generated
            .iter()
            .any(|l| existing.iter().any(|g| g.index_of(l).is_some()))
        {
            return Err(Error::InvalidInput(
                "auto-generated labels collide; pass --new-elements explicitly".into(),
            ));
        }
        generated
    } else {
        return Err(Error::InvalidInput("need --new-elements or --count".into()));
    };
    let new_ground = GroundSet::new(labels)?;

    let (out_doc, verified) = match (args.mode.as_str(), &doc) {
        ("matroid", Document::Matroid(p)) => {
            let ext = p.generic_extension(&new_ground)?;
            let ok = !args.verify || ext.check_valuated_exchange()?.is_pass();
            (Document::Matroid(ext), ok)
        }
        ("polymatroid", Document::MConvex(f)) => {
            let ext = f.generic_extension(&new_ground)?;
            let ok = !args.verify || ext.check_m_convex()?.is_pass();
            (Document::MConvex(ext), ok)
        }
        ("bimatroid-free", Document::Matroid(p)) => {
            let mu = free_extension_bimatroid(p, &new_ground)?;
            let ok = !args.verify || mu.check_bimatroid()?.is_pass();
            (Document::Bimatroid(mu), ok)
        }
        ("matroid" | "polymatroid" | "bimatroid-free", other) => {
            return Err(Error::InvalidInput(format!(
                "--mode {} does not apply to '{}' documents",
                args.mode,
                other.type_name()
            )))
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown mode '{}'; expected matroid, polymatroid, or bimatroid-free",
                args.mode
            )))
        }
    };
    write_or_print(&out_doc, args.output.as_ref())?;
    Ok(if verified { EXIT_PASS } else { EXIT_FAIL })
}

pub struct GenArgs {
    pub name: String,
    pub n: usize,
    pub r: usize,
    pub density: f64,
    pub seed: u64,
    pub output: Option<PathBuf>,
}

pub fn cmd_gen(args: &GenArgs) -> Result<i32> {
    let p = if args.name == "stiefel" {
        random_stiefel_matroid(
            args.n,
            args.r,
            0,
            9,
            args.density,
            RngSpec::new(args.seed, 0),
        )?
    } else {
        classical_matroid(ClassicalName::parse(&args.name)?)?
    };
    write_or_print(&Document::Matroid(p), args.output.as_ref())?;
    Ok(EXIT_PASS)
}

pub fn cmd_lift(file: &Path, output: Option<&PathBuf>) -> Result<i32> {
    let doc = read_document(file)?;
    let Document::MConvex(f) = doc else {
        return Err(Error::InvalidInput(
            "lift expects an m_convex document".into(),
        ));
    };
    let pi = f.canonical_fiber_map()?;
    let lift = f.multisymmetric_lift(&pi)?;
    write_or_print(&Document::Matroid(lift), output)?;
    Ok(EXIT_PASS)
}

pub struct LorentzianArgs {
    pub q: String,
    pub relaxed: bool,
    pub tol: f64,
    pub boundary: bool,
}

pub fn cmd_lorentzian(file: &Path, args: &LorentzianArgs) -> Result<i32> {
    let doc = read_document(file)?;
    let q = QScalar::new(parse_rational(&args.q)?, Mode::Exact)?;
    let poly = match &doc {
        Document::Polynomial(p) => p.clone(),
        Document::Matroid(p) => generating_poly_matroid(p, &q)?,
        Document::MConvex(f) => generating_poly_mconvex(f, &q)?,
        other => {
            return Err(Error::InvalidInput(format!(
                "cannot test '{}' documents for the Lorentzian property",
                other.type_name()
            )))
        }
    };
    let tol = if args.relaxed {
        SignatureTol::Relaxed(args.tol)
    } else {
        SignatureTol::Exact
    };
    let verdict = poly.is_strictly_lorentzian(&tol)?;
    let mut out = json!({
        "format_version": 1,
        "type": "report",
        "kind": "lorentzian",
        "degree": poly.degree() as u64,
        "vars": poly.vars().len(),
        "strictly_lorentzian": verdict,
    });
    if args.boundary {
        // heuristic closure probe, informational only
        out["boundary_consistent"] = json!(poly.boundary_consistent(args.tol)?);
    }
    emit(&out);
    Ok(if verdict { EXIT_PASS } else { EXIT_FAIL })
}

pub struct SearchArgs {
    pub trials: u64,
    pub n_max: usize,
    pub r_max: usize,
    pub density: f64,
    pub seed: u64,
    pub jobs: usize,
    pub mix: String,
    pub report: Option<PathBuf>,
}

pub fn cmd_search_ulc(args: &SearchArgs) -> Result<i32> {
    let params = SearchParams {
        trials: args.trials,
        n_max: args.n_max,
        r_max: args.r_max,
        density: args.density,
        seed: args.seed,
        jobs: args.jobs,
        mix: Mix::parse(&args.mix)?,
    };
    let report = run_search(&params)?;
    let value = report.to_json();
    match &args.report {
        Some(path) => {
            let mut text = serde_json::to_string_pretty(&value).expect("serializable");
            text.push('\n');
            fs::write(path, text).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
            })?;
        }
        None => emit(&value),
    }
    Ok(if report.found_counterexample() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_PASS
    })
}
