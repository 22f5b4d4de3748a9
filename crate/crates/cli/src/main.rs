//! `lucasdet` - build structured matrices from second-order recurrences,
//! take exact determinants and characteristic polynomials, and verify the
//! identity catalog.
//!
//! Exit codes: 0 everything verified, 1 at least one identity refuted,
//! 2 usage error, 3 internal error (an exact-arithmetic invariant broke).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lucasdet_core::identities::{catalog, lookup};
use lucasdet_core::verify::{
    check_trees, conjecture_sweep, run, IdSelection, Mode, VerifyError, VerifyPlan, VerifyReport,
};
use lucasdet_core::{
    build_abs_diff, build_hankel, build_q_jk_matrix, build_q_matrix, build_shifted, gen_prefix,
    DenseMatrix, Integer, MultiPoly, RecurrenceParams, Ring, RingElement, Var,
};

#[derive(Parser)]
#[command(
    name = "lucasdet",
    version,
    about = "Exact determinants and identity verification for second-order recurrent sequences"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the identity catalog.
    Catalog {
        /// Emit the catalog as JSON.
        #[arg(long)]
        json: bool,
        /// Show a single entry in detail.
        #[arg(long)]
        id: Option<String>,
    },
    /// Build one matrix family and print its exact determinant.
    Det(DetArgs),
    /// Characteristic polynomial of the Hankel matrix [w_{j+k}] with B = -1.
    Charpoly(CharpolyArgs),
    /// Verify catalog identities symbolically and/or numerically.
    Verify(VerifyArgs),
    /// Sweep the conjectures and remark baselines.
    Conjectures(ConjectureArgs),
    /// Verify the tree-distance identities on seeded random trees.
    Tree(TreeArgs),
}

#[derive(Args)]
struct DetArgs {
    /// Matrix family: absdiff, shifted, hankel0, hankel1, qmat, qjk.
    #[arg(long)]
    kind: String,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    n: usize,
    /// Also print the matrix (first line n, then tab-separated rows).
    #[arg(long)]
    dump: bool,
}

#[derive(Args)]
struct CharpolyArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    w0: String,
    #[arg(long, allow_hyphen_values = true)]
    w1: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity ids (repeatable or comma-separated).
    #[arg(long = "id", value_delimiter = ',')]
    ids: Vec<String>,
    /// Verify every catalog entry.
    #[arg(long)]
    all: bool,
    /// symbolic, numeric, or both.
    #[arg(long, default_value = "both")]
    mode: String,
    /// Explicit n values as start:end[:step] or a single integer.
    #[arg(long)]
    n: Option<String>,
    /// Largest n for default ranges.
    #[arg(long = "max-n", default_value_t = 20)]
    max_n: usize,
    /// Numeric samples per (id, n).
    #[arg(long, default_value_t = 10)]
    samples: usize,
    /// Random trees per n for tree-based identities.
    #[arg(long, default_value_t = 10)]
    trees: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: available parallelism; env LUCASDET_JOBS).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the full report as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long = "max-n", default_value_t = 20)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct TreeArgs {
    /// Random trees per size.
    #[arg(long, default_value_t = 50)]
    trees: usize,
    #[arg(long = "max-n", default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// q value for the q-identities: an integer or the token `q` for
    /// symbolic. Default: symbolic up to n = 6, then q in {2, 3, 5}.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    // die quietly when a downstream pager closes the pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match Cli::parse().cmd {
        Cmd::Catalog { json, id } => cmd_catalog(json, id),
        Cmd::Det(args) => cmd_det(&args),
        Cmd::Charpoly(args) => cmd_charpoly(&args),
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Conjectures(args) => cmd_conjectures(&args),
        Cmd::Tree(args) => cmd_tree(&args),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Dense exact matrices at desk scale only.
const MAX_CLI_DIM: usize = 4096;

fn check_dim(n: usize) -> Result<(), ExitCode> {
    if n == 0 {
        return Err(usage_error("--n must be at least 1"));
    }
    if n > MAX_CLI_DIM {
        return Err(usage_error(&format!("--n must be at most {MAX_CLI_DIM}")));
    }
    Ok(())
}

fn cmd_catalog(json: bool, id: Option<String>) -> ExitCode {
    if let Some(id) = id {
        let Some(entry) = lookup(&id) else {
            return usage_error(&format!("unknown identity id: {id}"));
        };
        println!("id:      {}", entry.id);
        println!("kind:    {}", format!("{:?}", entry.kind).to_lowercase());
        let params: Vec<String> = entry
            .params
            .iter()
            .map(|p| format!("{} ({:?})", p.name, p.constraint))
            .collect();
        println!("params:  [{}]", params.join(", "));
        println!("range:   {}", entry.n_range.render());
        println!("anchor:  {}", entry.anchor);
        return ExitCode::SUCCESS;
    }
    if json {
        println!("{}", lucasdet_core::identities::catalog_json());
        return ExitCode::SUCCESS;
    }
    for entry in catalog() {
        let params: Vec<&str> = entry.params.iter().map(|p| p.name).collect();
        println!(
            "{:<24} {:<12} {:<18} params=[{}]  {}",
            entry.id,
            format!("{:?}", entry.kind).to_lowercase(),
            entry.n_range.render(),
            params.join(","),
            entry.anchor
        );
    }
    ExitCode::SUCCESS
}

/// A CLI parameter: an integer, or the literal name of its indeterminate.
enum Param {
    Int(i64),
    Sym(Var),
}

fn parse_param(slot: &str, raw: &str) -> Result<Param, String> {
    if raw == slot {
        let var = Var::from_name(slot).ok_or_else(|| format!("{slot} has no indeterminate"))?;
        return Ok(Param::Sym(var));
    }
    raw.parse::<i64>()
        .map(Param::Int)
        .map_err(|_| format!("--{slot} must be an integer or the token `{slot}`, got `{raw}`"))
}

fn build_and_print<R: Ring>(kind: &str, n: usize, get: impl Fn(&str) -> R, dump: bool) -> ExitCode {
    let matrix: Result<DenseMatrix<R>, _> = match kind {
        "absdiff" | "shifted" | "hankel0" | "hankel1" => {
            let params = RecurrenceParams::new(get("A"), get("B"), get("w0"), get("w1"));
            let last = match kind {
                "absdiff" => n - 1,
                "shifted" => n,
                "hankel0" => 2 * n - 2,
                _ => 2 * n,
            };
            gen_prefix(&params, last)
                .map_err(|e| e.to_string())
                .and_then(|prefix| {
                    let built = match kind {
                        "absdiff" => build_abs_diff(&prefix, n),
                        "shifted" => build_shifted(&prefix, n),
                        "hankel0" => build_hankel(&prefix, n, 0),
                        _ => build_hankel(&prefix, n, 1),
                    };
                    built.map_err(|e| e.to_string())
                })
        }
        "qmat" => build_q_matrix(&get("q"), &get("t"), n).map_err(|e| e.to_string()),
        "qjk" => build_q_jk_matrix(&get("q"), n).map_err(|e| e.to_string()),
        _ => unreachable!("kind validated"),
    };
    let matrix = match matrix {
        Ok(m) => m,
        Err(e) => return usage_error(&e),
    };
    if dump {
        print!("{}", matrix.dump());
    }
    match matrix.det() {
        Ok(d) => {
            println!("{d}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("internal error: {e}");
            ExitCode::from(3)
        }
    }
}

fn cmd_det(args: &DetArgs) -> ExitCode {
    let needed: &[(&'static str, &Option<String>)] = match args.kind.as_str() {
        "absdiff" | "shifted" | "hankel0" | "hankel1" => &[
            ("A", &args.a),
            ("B", &args.b),
            ("w0", &args.w0),
            ("w1", &args.w1),
        ],
        "qmat" => &[("q", &args.q), ("t", &args.t)],
        "qjk" => &[("q", &args.q)],
        other => {
            return usage_error(&format!(
                "unknown kind `{other}` (expected absdiff, shifted, hankel0, hankel1, qmat, qjk)"
            ))
        }
    };
    if let Err(e) = check_dim(args.n) {
        return e;
    }
    let mut params = BTreeMap::new();
    let mut symbolic = false;
    for (name, raw) in needed {
        let Some(raw) = raw else {
            return usage_error(&format!("--{name} is required for kind {}", args.kind));
        };
        match parse_param(name, raw) {
            Ok(p) => {
                symbolic |= matches!(p, Param::Sym(_));
                params.insert(*name, p);
            }
            Err(e) => return usage_error(&e),
        }
    }
    let kind = args.kind.as_str();
    if symbolic {
        build_and_print::<MultiPoly>(
            kind,
            args.n,
            |name| match params.get(name).expect("validated") {
                Param::Int(v) => MultiPoly::from_i64(*v),
                Param::Sym(v) => MultiPoly::var(*v),
            },
            args.dump,
        )
    } else {
        build_and_print::<Integer>(
            kind,
            args.n,
            |name| match params.get(name).expect("validated") {
                Param::Int(v) => Integer::from(*v),
                Param::Sym(_) => unreachable!("symbolic routed separately"),
            },
            args.dump,
        )
    }
}

fn cmd_charpoly(args: &CharpolyArgs) -> ExitCode {
    if let Err(e) = check_dim(args.n) {
        return e;
    }
    let mut params = BTreeMap::new();
    let mut symbolic = false;
    for (name, raw) in [("A", &args.a), ("w0", &args.w0), ("w1", &args.w1)] {
        match parse_param(name, raw) {
            Ok(p) => {
                symbolic |= matches!(p, Param::Sym(_));
                params.insert(name, p);
            }
            Err(e) => return usage_error(&e),
        }
    }
    let n = args.n;
    if symbolic {
        let get = |name: &str| -> MultiPoly {
            match params.get(name).expect("validated") {
                Param::Int(v) => MultiPoly::from_i64(*v),
                Param::Sym(v) => MultiPoly::var(*v),
            }
        };
        let rp = RecurrenceParams::new(get("A"), MultiPoly::from_i64(-1), get("w0"), get("w1"));
        charpoly_of(rp, n)
    } else {
        let get = |name: &str| -> Integer {
            match params.get(name).expect("validated") {
                Param::Int(v) => Integer::from(*v),
                Param::Sym(_) => unreachable!(),
            }
        };
        let rp = RecurrenceParams::new(get("A"), Integer::from(-1), get("w0"), get("w1"));
        charpoly_of(rp, n)
    }
}

fn charpoly_of<R: lucasdet_core::PolyLift>(rp: RecurrenceParams<R>, n: usize) -> ExitCode {
    let prefix = match gen_prefix(&rp, 2 * n - 2) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let m = match build_hankel(&prefix, n, 0) {
        Ok(m) => m,
        Err(e) => return usage_error(&e.to_string()),
    };
    match m.char_poly() {
        Ok(cp) => {
            println!("{cp}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("internal error: {e}");
            ExitCode::from(3)
        }
    }
}

fn parse_modes(raw: &str) -> Result<Vec<Mode>, String> {
    match raw {
        "symbolic" => Ok(vec![Mode::Symbolic]),
        "numeric" => Ok(vec![Mode::Numeric]),
        "both" => Ok(vec![Mode::Numeric, Mode::Symbolic]),
        other => Err(format!(
            "--mode must be symbolic, numeric or both, got `{other}`"
        )),
    }
}

/// `start:end[:step]` or a single integer.
fn parse_range(raw: &str) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = raw.split(':').collect();
    let parse =
        |s: &str| -> Result<usize, String> { s.parse().map_err(|_| format!("bad n value `{s}`")) };
    match parts.as_slice() {
        [single] => Ok(vec![parse(single)?]),
        [start, end] => {
            let (s, e) = (parse(start)?, parse(end)?);
            Ok((s..=e).collect())
        }
        [start, end, step] => {
            let (s, e, st) = (parse(start)?, parse(end)?, parse(step)?);
            if st == 0 {
                return Err("step must be positive".to_string());
            }
            Ok((s..=e).step_by(st).collect())
        }
        _ => Err(format!("bad range `{raw}` (expected start:end[:step])")),
    }
}

fn jobs_from(args_jobs: Option<usize>) -> Option<usize> {
    args_jobs.or_else(|| {
        std::env::var("LUCASDET_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
}

fn emit_report(report: &VerifyReport, json: &Option<PathBuf>) -> ExitCode {
    print!("{}", report.render_text());
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    }
    if report.any_refuted() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn finish(result: Result<VerifyReport, VerifyError>, json: &Option<PathBuf>) -> ExitCode {
    match result {
        Ok(report) => emit_report(&report, json),
        Err(e @ (VerifyError::UnknownId(_) | VerifyError::ResourceGuard(_))) => {
            usage_error(&e.to_string())
        }
        Err(e) => {
            eprintln!("internal error: {e}");
            ExitCode::from(3)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    if args.all == !args.ids.is_empty() {
        return usage_error("pass either --all or at least one --id");
    }
    let modes = match parse_modes(&args.mode) {
        Ok(m) => m,
        Err(e) => return usage_error(&e),
    };
    let ns = match &args.n {
        Some(raw) => match parse_range(raw) {
            Ok(ns) => Some(ns),
            Err(e) => return usage_error(&e),
        },
        None => None,
    };
    let plan = VerifyPlan {
        ids: if args.all {
            IdSelection::All
        } else {
            IdSelection::Ids(args.ids.clone())
        },
        modes,
        ns,
        samples: args.samples,
        tree_samples: args.trees,
        max_n: args.max_n,
        param_range: (-9, 9),
        seed: args.seed,
        jobs: jobs_from(args.jobs),
    };
    finish(run(&plan), &args.json)
}

fn cmd_conjectures(args: &ConjectureArgs) -> ExitCode {
    finish(
        conjecture_sweep(args.max_n, args.seed, jobs_from(args.jobs)),
        &args.json,
    )
}

fn cmd_tree(args: &TreeArgs) -> ExitCode {
    let q = match &args.q {
        None => None,
        Some(raw) if raw == "q" => Some(RingElement::Poly(MultiPoly::var(Var::Q))),
        Some(raw) => match raw.parse::<i64>() {
            Ok(v) => Some(RingElement::Int(Integer::from(v))),
            Err(_) => return usage_error(&format!("--q must be an integer or `q`, got `{raw}`")),
        },
    };
    finish(
        check_trees(args.trees, args.max_n, args.seed, q),
        &args.json,
    )
}
