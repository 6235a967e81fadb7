//! Command-line front end for the interlacing-families library.
//!
//! JSON results go to stdout (or `--out`), a short human-readable report to stderr.
//! Exit codes: 0 success, 1 certificate violated, 2 parse error, 3 precondition
//! failure, 4 enumeration budget exceeded.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use interlace::graphs::{is_ramanujan_bipartite, parse_edge_list, two_lift, Graph};
use interlace::mixedchar::{
    mixed_char, mixed_char_exact, mixed_char_root_bound, mixed_identity_check, DiscreteRandomVector,
    PsdList,
};
use interlace::realroot::{is_real_rooted_with_tol, real_roots, SymMatrix};
use interlace::select::{
    restricted_invertibility_select, signing_select, weaver_partition, SelectConfig, VectorSystem,
};
use interlace::{Arithmetic, Error, DEFAULT_BUDGET};
use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

impl From<Mode> for Arithmetic {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => Arithmetic::Exact,
            Mode::Float => Arithmetic::Float,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "interlace", version, about = "Interlacing-family certificates at desk scale")]
struct Cli {
    /// Arithmetic for identity checks and conditional expectations.
    #[arg(long, value_enum, default_value = "float", global = true)]
    mode: Mode,
    /// Slack for certificate comparisons.
    #[arg(long, default_value_t = 1e-7, global = true)]
    tol: f64,
    /// Enumeration budget (leaf evaluations per greedy level).
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Restricted invertibility: pick k columns of an isotropic system.
    Ri {
        /// Vector system JSON `{"dim":n,"vectors":[[..],..]}`, or `-` for stdin.
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Two-way partition of an isotropic system.
    Weaver {
        /// Vector system JSON, or `-` for stdin.
        file: String,
        /// Upper bound on the squared norms; defaults to the largest one.
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Successive Ramanujan 2-lifts of a bipartite Ramanujan graph.
    Lift {
        /// Edge list, one `u v [w]` per line, or `-` for stdin.
        file: String,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Mixed characteristic polynomial of a list of PSD matrices.
    Mixedchar {
        /// JSON list of matrices `{"n":d,"entries":[[..],..]}`, or `-` for stdin.
        file: String,
    },
    /// Randomized check of the mixed characteristic identity.
    Check {
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

struct RunConfig {
    mode: Arithmetic,
    tol: f64,
    budget: u64,
    seed: u64,
}

enum Failure {
    Parse(String),
    Precondition(String),
    Budget(String),
    Violated(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violated(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Budget(m) | Failure::Violated(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(msg),
            Error::Parse(_) | Error::Empty(_) => Failure::Parse(msg),
            Error::Invariant(_) => Failure::Violated(msg),
            _ => Failure::Precondition(msg),
        }
    }
}

/// A computed result: JSON payload, human summary, and whether the certificate held.
struct Outcome {
    json: Value,
    report: String,
    ok: bool,
}

fn read_input(file: &str) -> Result<String, Failure> {
    if file == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(file).map_err(|e| Failure::Parse(format!("{file}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))
}

fn select_config(cfg: &RunConfig) -> SelectConfig {
    SelectConfig {
        budget: cfg.budget,
        mode: cfg.mode,
        ..SelectConfig::default()
    }
}

fn cmd_ri(file: &str, k: usize, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let v: VectorSystem = parse_json(&read_input(file)?)?;
    let r = restricted_invertibility_select(&v, k, &select_config(cfg))?;
    let c = &r.certificate;
    let ok = c.achieved >= r.bound - cfg.tol && c.achieved >= c.pledged - cfg.tol;
    let report = format!(
        "restricted invertibility: n={} m={} k={k}\n  subset   {:?}\n  achieved {:.10}\n  pledged  {:.10}\n  bound    {:.10}\n  {}",
        v.dim(),
        v.len(),
        r.subset,
        c.achieved,
        c.pledged,
        r.bound,
        verdict(ok)
    );
    let json = json!({
        "command": "ri",
        "n": v.dim(),
        "m": v.len(),
        "k": k,
        "subset": r.subset,
        "achieved": c.achieved,
        "pledged": c.pledged,
        "bound": r.bound,
        "holds": ok,
        "certificate": c,
    });
    Ok(Outcome { json, report, ok })
}

fn cmd_weaver(file: &str, alpha: Option<f64>, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let v: VectorSystem = parse_json(&read_input(file)?)?;
    let alpha = alpha.unwrap_or_else(|| v.max_norm_sq());
    let w = weaver_partition(&v, alpha, &select_config(cfg))?;
    let c = &w.certificate;
    let ok = w.norms.0.max(w.norms.1) <= w.bound + cfg.tol && c.achieved <= c.pledged + cfg.tol;
    let report = format!(
        "weaver partition: d={} m={} alpha={alpha}\n  S1 {:?}  norm {:.10}\n  S2 {:?}  norm {:.10}\n  bound {:.10}\n  {}",
        v.dim(),
        v.len(),
        w.s1,
        w.norms.0,
        w.s2,
        w.norms.1,
        w.bound,
        verdict(ok)
    );
    let json = json!({
        "command": "weaver",
        "d": v.dim(),
        "m": v.len(),
        "alpha": alpha,
        "s1": w.s1,
        "s2": w.s2,
        "norms": [w.norms.0, w.norms.1],
        "bound": w.bound,
        "holds": ok,
        "certificate": c,
    });
    Ok(Outcome { json, report, ok })
}

fn cmd_lift(file: &str, iterations: usize, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let mut g: Graph = parse_edge_list(&read_input(file)?)?;
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if d < 2 {
        return Err(Failure::Precondition(format!("degree must be at least 2, got {d}")));
    }
    if !is_ramanujan_bipartite(&g)? {
        return Err(Failure::Precondition("input graph is not bipartite Ramanujan".into()));
    }
    let threshold = 2.0 * ((d - 1) as f64).sqrt();
    let mut steps = Vec::new();
    let mut report = format!("2-lifts of a {d}-regular graph on {} vertices, threshold {threshold:.10}", g.n());
    let mut ok = true;
    for step in 1..=iterations {
        let s = signing_select(&g, &select_config(cfg))?;
        let lift = two_lift(&g, &s.signing)?;
        let ramanujan = lift.is_connected() && is_ramanujan_bipartite(&lift)?;
        let step_ok = ramanujan && s.lambda_max <= threshold + cfg.tol && s.certificate.is_sound();
        ok &= step_ok;
        report.push_str(&format!(
            "\n  step {step}: {} vertices, lambda_max(A_s) {:.10}, matching root {:.10}, {}",
            lift.n(),
            s.lambda_max,
            s.matching_root,
            verdict(step_ok)
        ));
        steps.push(json!({
            "step": step,
            "n": lift.n(),
            "signing": s.signing,
            "lambda_max_signed": s.lambda_max,
            "matching_root": s.matching_root,
            "threshold": threshold,
            "ramanujan": ramanujan,
            "graph": lift,
        }));
        if !step_ok {
            break;
        }
        g = lift;
    }
    let json = json!({ "command": "lift", "degree": d, "threshold": threshold, "holds": ok, "steps": steps });
    Ok(Outcome { json, report, ok })
}

fn cmd_mixedchar(file: &str, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let mats: Vec<SymMatrix> = parse_json(&read_input(file)?)?;
    let list = PsdList::new(mats)?;
    let (poly, exact) = match cfg.mode {
        Arithmetic::Exact => {
            let p = mixed_char_exact(&list)?;
            let strs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            (p.to_f64(), Some(strs))
        }
        Arithmetic::Float => (mixed_char(&list)?, None),
    };
    let real_rooted = is_real_rooted_with_tol(&poly, cfg.tol)?;
    let roots = if real_rooted { real_roots(&poly)?.into_vec() } else { Vec::new() };
    let bound = mixed_char_root_bound(&list).ok();
    let largest = roots.first().copied();
    let mut ok = real_rooted;
    if let (Some(b), Some(l)) = (bound, largest) {
        ok &= l <= b + cfg.tol;
    }
    let mut report = format!(
        "mixed characteristic polynomial of {} matrices in dimension {}\n  {poly}\n  real-rooted {real_rooted}",
        list.len(),
        list.dim()
    );
    if let Some(l) = largest {
        report.push_str(&format!("\n  largest root {l:.10}"));
    }
    if let Some(b) = bound {
        report.push_str(&format!("\n  bound (1+sqrt(eps))^2 = {b:.10}"));
    }
    report.push_str(&format!("\n  {}", verdict(ok)));
    let json = json!({
        "command": "mixedchar",
        "mode": cfg.mode,
        "coefficients": poly,
        "exact_coefficients": exact,
        "display": poly.to_string(),
        "real_rooted": real_rooted,
        "roots": roots,
        "largest_root": largest,
        "bound": bound,
        "holds": ok,
    });
    Ok(Outcome { json, report, ok })
}

fn random_system(rng: &mut ChaCha8Rng) -> Vec<DiscreteRandomVector> {
    let m = rng.random_range(1..=5);
    let d = rng.random_range(1..=5);
    let vector = |rng: &mut ChaCha8Rng| DVector::from_fn(d, |_, _| rng.random_range(-2.0..2.0));
    (0..m)
        .map(|_| {
            let p = rng.random_range(0.1..0.9);
            let a = vector(rng);
            let b = vector(rng);
            DiscreteRandomVector::two_point(p, a, b).expect("valid two-point distribution")
        })
        .collect()
}

fn cmd_check(count: usize, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for i in 0..count {
        let rs = random_system(&mut rng);
        let identity = mixed_identity_check(&rs, cfg.mode, cfg.budget)?;
        let covs = PsdList::new(rs.iter().map(DiscreteRandomVector::covariance).collect())?;
        let rooted = is_real_rooted_with_tol(&mixed_char(&covs)?, cfg.tol)?;
        if !(identity && rooted) {
            failures.push(i);
        }
    }
    let ok = failures.is_empty();
    let report = format!(
        "mixed characteristic identity on {count} random systems (seed {}): {} failed, {}",
        cfg.seed,
        failures.len(),
        verdict(ok)
    );
    let json = json!({
        "command": "check",
        "seed": cfg.seed,
        "mode": cfg.mode,
        "count": count,
        "failed": failures,
        "holds": ok,
    });
    Ok(Outcome { json, report, ok })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "certificate holds"
    } else {
        "CERTIFICATE VIOLATED"
    }
}

fn emit(json: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(json).expect("JSON values serialize") + "\n";
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Precondition(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(Failure::Parse(format!("--tol must be positive, got {}", cli.tol)));
    }
    if cli.budget == 0 {
        return Err(Failure::Parse("--budget must be at least 1".into()));
    }
    let cfg = RunConfig {
        mode: cli.mode.into(),
        tol: cli.tol,
        budget: cli.budget,
        seed: cli.seed,
    };
    let outcome = match &cli.command {
        Command::Ri { file, k } => cmd_ri(file, *k, &cfg)?,
        Command::Weaver { file, alpha } => cmd_weaver(file, *alpha, &cfg)?,
        Command::Lift { file, iterations } => cmd_lift(file, *iterations, &cfg)?,
        Command::Mixedchar { file } => cmd_mixedchar(file, &cfg)?,
        Command::Check { count } => cmd_check(*count, &cfg)?,
    };
    eprintln!("{}", outcome.report);
    emit(&outcome.json, cli.out.as_deref())?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
