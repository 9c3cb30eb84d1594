use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kzfp::cartier::{cm_numeric, cm_symbolic};
use kzfp::decomposition::{check_box, decompose_l};
use kzfp::kz::{check_support_disjointness, verify_kz, z_names, FpVector};
use kzfp::solutions::{homogenized_k, lambda_names, solution_k, FpSolutions, Limits};
use kzfp::{Error, PrimeContext};
use serde::Serialize;
use serde_json::{json, Value};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kzfp",
    version,
    about = "Polynomial KZ solutions over F_p and Cartier-Manin matrices"
)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "KZFP_JOBS")]
    jobs: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, env = "KZFP_OUT")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CurveArgs {
    /// Genus.
    #[arg(long, env = "KZFP_G")]
    g: u32,
    /// Odd prime with p ≥ 2g+1.
    #[arg(long, env = "KZFP_P")]
    p: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Build I^m, J^m, K^m and verify them.
    Solve {
        #[command(flatten)]
        curve: CurveArgs,
        /// Ceiling on the estimated number of terms of the master polynomial.
        #[arg(long, env = "KZFP_MAX_TERMS", default_value_t = 100_000)]
        max_terms: u128,
    },
    /// Cartier-Manin matrix, numeric at a point or symbolic in λ.
    Cartier {
        #[command(flatten)]
        curve: CurveArgs,
        /// Comma-separated λ_3, ..., λ_{2g+1}.
        #[arg(
            long,
            env = "KZFP_LAMBDA",
            value_delimiter = ',',
            conflicts_with = "symbolic"
        )]
        lambda: Option<Vec<u64>>,
        #[arg(long, env = "KZFP_SYMBOLIC")]
        symbolic: bool,
    },
    /// Sweep the box k_i < BOX and check the mod-p decomposition of L.
    VerifyDecomposition {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long = "box", env = "KZFP_BOX")]
        bound: u64,
        /// Largest depth a of the K blocks.
        #[arg(long, env = "KZFP_DEPTH", default_value_t = 1)]
        depth: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::Internal(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn vector_json(v: &FpVector, names: &[String]) -> Value {
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    json!(v.to_strings(&names))
}

fn solve(ctx: &PrimeContext, limits: &Limits) -> Result<(Value, bool), Failure> {
    let sols = FpSolutions::new(ctx, limits)?;
    let z = z_names(ctx);
    let l = lambda_names(ctx);
    let mut pass = true;
    let mut entries = Vec::new();
    for m in 0..ctx.g() {
        let i = sols.solution_i(m)?;
        let j = sols.solution_j(m)?;
        let k = solution_k(ctx, m)?;
        let vi = verify_kz(&i, ctx)?;
        let vj = verify_kz(&j, ctx)?;
        let shifted = sols.solution_j_shifted(m)? == j;
        let rescaled = homogenized_k(ctx, m)? == j;
        pass &= vi.passed() && vj.passed() && shifted && rescaled;
        log::info!("m={m}: I {} J {}", vi.passed(), vj.passed());
        entries.push(json!({
            "m": m,
            "I": vector_json(&i, &z),
            "J": vector_json(&j, &z),
            "K": vector_json(&k, &l),
            "verify_I": to_json(&vi),
            "verify_J": to_json(&vj),
            "shifted_extraction_matches": shifted,
            "rescaling_matches": rescaled,
        }));
    }
    let support = check_support_disjointness(ctx)?;
    pass &= support.pass;
    let report = json!({
        "g": ctx.g(),
        "p": ctx.p(),
        "solutions": entries,
        "support_disjointness": to_json(&support),
        "pass": pass,
    });
    Ok((report, pass))
}

fn cartier(
    ctx: &PrimeContext,
    lambda: Option<Vec<u64>>,
    symbolic: bool,
) -> Result<(Value, bool), Failure> {
    let report = match (lambda, symbolic) {
        (_, true) => json!({
            "g": ctx.g(),
            "p": ctx.p(),
            "mode": "symbolic",
            "variables": lambda_names(ctx),
            "matrix": cm_symbolic(ctx)?.to_strings(ctx),
        }),
        (Some(lambda), false) => {
            let numeric = cm_numeric(ctx, &lambda)?;
            json!({
                "g": ctx.g(),
                "p": ctx.p(),
                "mode": "numeric",
                "lambda": lambda,
                "matrix": numeric.matrix.entries,
                "singular": numeric.singular,
            })
        }
        (None, false) => {
            return Err(Failure {
                code: EXIT_USAGE,
                message: "either --lambda or --symbolic is required".into(),
            })
        }
    };
    Ok((report, true))
}

fn verify_decomposition(
    ctx: &PrimeContext,
    bound: u64,
    depth: usize,
) -> Result<(Value, bool), Failure> {
    // Fails fast on an unsound truncation before the sweep starts.
    let decomposition = decompose_l(ctx, depth, bound)?;
    let sweep = check_box(ctx, bound)?;
    let pass = sweep.passed() && decomposition.passed();
    log::info!(
        "{} tuples, {} admissible, {} failures",
        sweep.tuples_checked,
        sweep.admissible_count,
        sweep.failures.len() + decomposition.failures.len()
    );
    let report = json!({
        "g": ctx.g(),
        "p": ctx.p(),
        "box": bound,
        "sweep": to_json(&sweep),
        "decomposition": to_json(&decomposition),
        "pass": pass,
    });
    Ok((report, pass))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            })?;
    }
    let (report, pass) = match cli.command {
        Command::Solve { curve, max_terms } => {
            let ctx = PrimeContext::new(curve.g, curve.p)?;
            solve(&ctx, &Limits { max_terms })?
        }
        Command::Cartier {
            curve,
            lambda,
            symbolic,
        } => {
            let ctx = PrimeContext::new(curve.g, curve.p)?;
            cartier(&ctx, lambda, symbolic)?
        }
        Command::VerifyDecomposition {
            curve,
            bound,
            depth,
        } => {
            let ctx = PrimeContext::new(curve.g, curve.p)?;
            verify_decomposition(&ctx, bound, depth)?
        }
    };
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    match cli.out {
        Some(path) => std::fs::write(&path, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", path.display()),
        })?,
        None => print!("{text}"),
    }
    Ok(pass)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
