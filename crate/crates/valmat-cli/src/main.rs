use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use valmat_cli::commands::{
    self, ExtendArgs, GenArgs, LorentzianArgs, SearchArgs, SeqArgs, EXIT_INPUT,
};

/// Valuated matroids, M-convex functions, and valuated bimatroids: axiom
/// checks, extensions, lifts, exact log-concavity verdicts, and a seeded
/// parallel ultra-log-concavity search.
#[derive(Parser)]
#[command(name = "valmat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checker for a structure document.
    Check {
        file: PathBuf,
        /// auto, matroid, mconvex, or bimatroid
        #[arg(long, default_value = "auto")]
        structure: String,
    },
    /// Compute I_k or R_k and verify log-concavity.
    Seq {
        file: PathBuf,
        /// ik (matroid or m_convex input) or rk (bimatroid input)
        #[arg(long)]
        kind: String,
        /// exact rational in (0, 1], e.g. 1, 1/2, or 0.75
        #[arg(long, default_value = "1")]
        q: String,
        /// lc (strengthened log-concavity) or ulc
        #[arg(long, default_value = "lc")]
        check: String,
        /// binomial scale N for --check ulc; defaults to the structure size
        #[arg(long = "N", value_name = "N")]
        big_n: Option<usize>,
        /// float arithmetic with a relative tolerance instead of exact rationals
        #[arg(long)]
        relaxed: bool,
        /// relative tolerance for --relaxed
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Extend a structure by new "free" elements.
    Extend {
        file: PathBuf,
        /// comma-separated labels for the new elements
        #[arg(long, value_delimiter = ',')]
        new_elements: Vec<String>,
        /// generate this many labels q1..qN instead
        #[arg(long)]
        count: Option<usize>,
        /// matroid, polymatroid, or bimatroid-free
        #[arg(long, default_value = "matroid")]
        mode: String,
        /// re-certify the result with its axiom checker
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a built-in or random fixture document.
    Gen {
        /// fano, vamos, nonpappus, uniform(n,r), or stiefel
        name: String,
        /// ground set size for stiefel
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// rank for stiefel
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// infinite-entry density for stiefel
        #[arg(long, default_value_t = 0.25)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Multisymmetric lift of an M-convex function to a valuated matroid.
    Lift {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Strict-Lorentzian test of a polynomial (or a generating polynomial).
    Lorentzian {
        file: PathBuf,
        /// q for generating polynomials built from structure documents
        #[arg(long, default_value = "1")]
        q: String,
        /// eigenvalue test with a tolerance instead of exact inertia
        #[arg(long)]
        relaxed: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// also report the heuristic closure probe
        #[arg(long)]
        boundary: bool,
    },
    /// Randomized ultra-log-concavity search with a machine-readable report.
    SearchUlc {
        #[arg(long)]
        trials: u64,
        /// largest ground set size
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// largest rank
        #[arg(long, default_value_t = 5)]
        r: usize,
        /// infinite-entry density of the random matrices
        #[arg(long, default_value_t = 0.25)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// worker threads; defaults to $VML_JOBS, then the CPU count
        #[arg(long)]
        jobs: Option<usize>,
        /// stiefel, classical-sums, or both
        #[arg(long, default_value = "both")]
        mix: String,
        /// write the report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn default_jobs() -> usize {
    if let Ok(v) = std::env::var("VML_JOBS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(cli: Cli) -> valmat::Result<i32> {
    match cli.command {
        Command::Check { file, structure } => commands::cmd_check(&file, &structure),
        Command::Seq {
            file,
            kind,
            q,
            check,
            big_n,
            relaxed,
            tol,
        } => commands::cmd_seq(
            &file,
            &SeqArgs {
                kind,
                q,
                check,
                big_n,
                relaxed,
                tol,
            },
        ),
        Command::Extend {
            file,
            new_elements,
            count,
            mode,
            verify,
            output,
        } => commands::cmd_extend(
            &file,
            &ExtendArgs {
                new_elements,
                count,
                mode,
                verify,
                output,
            },
        ),
        Command::Gen {
            name,
            n,
            r,
            density,
            seed,
            output,
        } => commands::cmd_gen(&GenArgs {
            name,
            n,
            r,
            density,
            seed,
            output,
        }),
        Command::Lift { file, output } => commands::cmd_lift(&file, output.as_ref()),
        Command::Lorentzian {
            file,
            q,
            relaxed,
            tol,
            boundary,
        } => commands::cmd_lorentzian(
            &file,
            &LorentzianArgs {
                q,
                relaxed,
                tol,
                boundary,
            },
        ),
        Command::SearchUlc {
            trials,
            n,
            r,
            density,
            seed,
            jobs,
            mix,
            report,
        } => commands::cmd_search_ulc(&SearchArgs {
            trials,
            n_max: n,
            r_max: r,
            density,
            seed,
            jobs: jobs.unwrap_or_else(default_jobs),
            mix,
            report,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
