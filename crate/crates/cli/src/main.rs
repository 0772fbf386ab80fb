//! `effdom`: efficient domination solver and verification harness.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 usage error, 3 no e.d. /
//! not a class member, 4 counterexample found.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use effdom::ed::SquareDiagnostics;
use effdom::verify::{self, CheckLimits, DEFAULT_BUDGET};
use effdom::{
    class_membership, parse_dimacs, solve, write_dimacs, Corpus, GraphClass, GraphFile, SolveMode,
    SolveOptions, SolverPath, Theorem, TrialConfig, UserWeights, VerificationReport,
};

/// Environment variable holding the default verification budget.
const BUDGET_VAR: &str = "EFFDOM_VERIFY_BUDGET";

#[derive(Parser)]
#[command(
    name = "effdom",
    version,
    about = "Efficient domination via MWIS on the graph square"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum-weight efficient dominating set.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = WeightSource::FromFile)]
        weights: WeightSource,
        #[arg(long, default_value = "auto")]
        force_path: ForcePath,
        #[arg(long)]
        json: bool,
    },
    /// Test membership in a forbidden-subgraph class.
    CheckClass {
        file: PathBuf,
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        json: bool,
    },
    /// Print the square of a graph.
    Square { file: PathBuf },
    /// Run a verification campaign.
    VerifyTheorems {
        /// chordal-square (T1), hole-free-square (T2), antiholes-avoid-ed (T3),
        /// c4-two-dominators (C4-dom), perfect-house-free (T4),
        /// perfect-bull-free (T5), perfect-p6-free (CONJ), or all.
        #[arg(long, default_value = "all")]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Defaults to min(7, nmax).
        #[arg(long)]
        nmin: Option<usize>,
        #[arg(long, default_value_t = 0.05)]
        pmin: f64,
        #[arg(long, default_value_t = 0.6)]
        pmax: f64,
        /// Graphs drawn per trial while looking for one in the class.
        #[arg(long, default_value_t = 64)]
        attempts: u32,
        /// Enumerate all graphs up to this order instead of sampling.
        #[arg(long, conflicts_with_all = ["trials", "nmax", "nmin"])]
        exhaustive: Option<usize>,
        /// Largest n for hole and antihole searches [env: EFFDOM_VERIFY_BUDGET, default 30].
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random graph.
    Gen {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Edge probability (er) or clique fill (chordal).
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightSource {
    FromFile,
    Unit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Er,
    Chordal,
}

#[derive(Clone, Copy)]
struct ForcePath(SolveMode);

impl std::str::FromStr for ForcePath {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(ForcePath(SolveMode::Auto));
        }
        s.parse::<SolverPath>()
            .map(|p| ForcePath(SolveMode::Force(p)))
            .map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy)]
struct TheoremArg(Option<Theorem>);

impl std::str::FromStr for TheoremArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(TheoremArg(None));
        }
        s.parse()
            .map(|t| TheoremArg(Some(t)))
            .map_err(|e: verify::VerifyError| e.to_string())
    }
}

enum Failure {
    Io(String),
    Usage(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Io(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

fn load(path: &Path) -> Result<GraphFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let mut file =
        parse_dimacs(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    file.source = Some(path.to_path_buf());
    Ok(file)
}

fn join_one_based(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn unknown(b: Option<bool>) -> &'static str {
    b.map_or("skipped", yes)
}

#[derive(Serialize)]
struct SolveOutput {
    exists: bool,
    set: Vec<usize>,
    weight: Option<u64>,
    path: SolverPath,
    diagnostics: Option<SquareDiagnostics>,
}

fn run_solve(
    file: &Path,
    weights: WeightSource,
    mode: SolveMode,
    json: bool,
) -> Result<ExitCode, Failure> {
    let f = load(file)?;
    let n = f.graph.n();
    let user = match (weights, f.weights) {
        (WeightSource::FromFile, Some(w)) => w,
        _ => UserWeights::uniform(n, 1),
    };
    let opts = SolveOptions {
        mode,
        diagnostics_budget: budget_from_env()?,
    };
    let sol = solve(&f.graph, Some(&user), &opts).map_err(|e| Failure::Io(e.to_string()))?;
    if json {
        let out = SolveOutput {
            exists: sol.exists,
            set: sol.set.one_based(),
            weight: sol.user_weight,
            path: sol.path,
            diagnostics: sol.diagnostics,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        println!("exists: {}", yes(sol.exists));
        if sol.exists {
            println!("set: {}", join_one_based(&sol.set));
            println!("weight: {}", sol.user_weight.unwrap_or(0));
        }
        println!("path: {}", sol.path);
        if let Some(d) = sol.diagnostics {
            println!(
                "square: chordal {}, hole-free {}, odd-antihole-free {}",
                yes(d.chordal),
                unknown(d.hole_free),
                unknown(d.odd_antihole_free)
            );
        }
    }
    Ok(ExitCode::from(if sol.exists { 0 } else { 3 }))
}

fn run_check_class(file: &Path, class: GraphClass, json: bool) -> Result<ExitCode, Failure> {
    let f = load(file)?;
    let report = class_membership(&f.graph, class);
    if json {
        #[derive(Serialize)]
        struct Violation {
            pattern: String,
            vertices: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Out {
            class: GraphClass,
            member: bool,
            violations: Vec<Violation>,
        }
        let out = Out {
            class,
            member: report.member,
            violations: report
                .violations
                .iter()
                .map(|w| Violation {
                    pattern: w.pattern.to_string(),
                    vertices: w.vertices.iter().map(|v| v + 1).collect(),
                })
                .collect(),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        println!(
            "{}: {}",
            class,
            if report.member {
                "member"
            } else {
                "non-member"
            }
        );
        for w in &report.violations {
            println!("{w}");
        }
    }
    Ok(ExitCode::from(if report.member { 0 } else { 3 }))
}

fn run_square(file: &Path) -> Result<ExitCode, Failure> {
    let f = load(file)?;
    print!("{}", write_dimacs(&f.graph.square(), f.weights.as_ref()));
    Ok(ExitCode::SUCCESS)
}

fn budget_from_env() -> Result<usize, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR}={v:?} is not a vertex count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

#[derive(Serialize)]
struct CampaignOutput<'a> {
    seed: u64,
    reports: &'a [VerificationReport],
}

fn run_verify(
    theorem: Option<Theorem>,
    seed: u64,
    corpus: Corpus,
    budget: Option<usize>,
    json: bool,
) -> Result<ExitCode, Failure> {
    let budget = match budget {
        Some(b) => b,
        None => budget_from_env()?,
    };
    let theorems: Vec<Theorem> = theorem.map_or_else(|| Theorem::ALL.to_vec(), |t| vec![t]);
    let mut reports = Vec::new();
    for t in theorems {
        let config = TrialConfig {
            theorem: t,
            corpus,
            seed,
            limits: CheckLimits {
                budget,
                ..CheckLimits::default()
            },
        };
        let report = verify::run_campaign(&config).map_err(|e| Failure::Usage(e.to_string()))?;
        eprintln!("{}: {:.2?}", t, report.elapsed);
        reports.push(report);
    }
    if json {
        let out = CampaignOutput {
            seed,
            reports: &reports,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{}", r.to_text());
        }
    }
    let clean = reports.iter().all(VerificationReport::is_clean);
    Ok(ExitCode::from(if clean { 0 } else { 4 }))
}

fn run_gen(model: Model, n: usize, p: f64, seed: u64) -> Result<ExitCode, Failure> {
    let g = match model {
        Model::Er => verify::gen_random_graph(n, p, seed),
        Model::Chordal => verify::gen_random_chordal(n, p, seed),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    print!("{}", write_dimacs(&g, None));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            file,
            weights,
            force_path,
            json,
        } => run_solve(&file, weights, force_path.0, json),
        Command::CheckClass { file, class, json } => run_check_class(&file, class, json),
        Command::Square { file } => run_square(&file),
        Command::VerifyTheorems {
            theorem,
            seed,
            trials,
            nmax,
            nmin,
            pmin,
            pmax,
            attempts,
            exhaustive,
            budget,
            json,
        } => {
            let corpus = match exhaustive {
                Some(n_max) => Corpus::Exhaustive { n_max },
                None => Corpus::Random {
                    count: trials,
                    n_min: nmin.unwrap_or(nmax.min(7)),
                    n_max: nmax,
                    p_min: pmin,
                    p_max: pmax,
                    attempts,
                },
            };
            run_verify(theorem.0, seed, corpus, budget, json)
        }
        Command::Gen { model, n, p, seed } => run_gen(model, n, p, seed),
    };
    result.unwrap_or_else(Failure::report)
}
