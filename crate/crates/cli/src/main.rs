//! Command-line front end. Every subcommand prints either plain text or,
//! with `--json`, a machine-readable object; all big integers appear as
//! decimal strings. Exit codes: 0 success, 1 usage error, 2 unsupported
//! case, 3 internal-consistency failure.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use bncalc::json as bjson;
use bncalc::selftest::{checks, extra_invariants, Budget};
use bncalc::{
    betti_polynomial, compare_convolution_to_tensor, dual_partition, euler_characteristic,
    lr_coefficient, lr_expand_product, perverse_decomposition, CurveContext, Error, KClass,
    Locus, Partition,
};

#[derive(Parser)]
#[command(
    name = "bncalc",
    about = "Exact calculus of Brill-Noether classes on a Jacobian",
    version
)]
struct Cli {
    /// Genus of the curve (required by everything except `lr` and `selftest`)
    #[arg(short = 'g', long, global = true)]
    genus: Option<u32>,

    /// Use the symplectic (hyperelliptic) flavor
    #[arg(long, global = true)]
    hyperelliptic: bool,

    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Degree cap for enumeration budgets in `selftest`
    #[arg(long, global = true)]
    bound: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient or full product expansion
    Lr {
        alpha: Partition,
        beta: Partition,
        gamma: Option<Partition>,
    },
    /// Convolution of two classes in the ring
    Conv { alpha: Partition, beta: Partition },
    /// Betti polynomial of a class
    Betti { gamma: Partition },
    /// Perverse/constant decomposition of a class
    Decomp { alpha: Partition },
    /// Dual partition under the duality involution
    Dual { alpha: Partition },
    /// Euler characteristic of a class
    Euler { alpha: Partition },
    /// Intersection-cohomology Betti polynomial of a locus:
    /// `theta`, `w <d>`, or `w-minus-w <r>`
    Ih { locus: String, param: Option<u32> },
    /// Compare convolution against the tensor product of representations
    RepCompare { alpha: Partition, beta: Partition },
    /// Run the invariant suite
    Selftest {
        /// Trimmed ranges, finishes in seconds
        #[arg(long)]
        quick: bool,
        /// Full documented ranges (the default)
        #[arg(long)]
        full: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidPartition(_)
        | Error::NotNormalForm(_, _)
        | Error::OutOfRange(_)
        | Error::Json(_) => 1,
        Error::Unsupported(_) | Error::OracleOutOfRange { .. } => 2,
        Error::InternalConsistency(_) | Error::NotPalindromic | Error::ContextMismatch => 3,
    }
}

fn require_context(cli: &Cli) -> Result<CurveContext, Error> {
    match cli.genus {
        Some(g) => CurveContext::new(g, cli.hyperelliptic),
        None => Err(Error::OutOfRange(
            "this command needs --genus".into(),
        )),
    }
}

fn emit(json_mode: bool, value: Value, text: String) {
    if json_mode {
        println!("{}", value);
    } else {
        println!("{}", text);
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Lr { alpha, beta, gamma } => match gamma {
            Some(gamma) => {
                let m = lr_coefficient(alpha, beta, gamma);
                emit(cli.json, json!({ "coefficient": m }), m.to_string());
            }
            None => {
                let expansion = lr_expand_product(alpha, beta);
                let mut entries: Vec<(&Partition, u64)> =
                    expansion.iter().map(|(k, &m)| (k, m)).collect();
                entries.sort_by(|(a, _), (b, _)| b.parts().cmp(a.parts()));
                let text = entries
                    .iter()
                    .map(|(k, m)| format!("{}:{}", k.bracket(), m))
                    .collect::<Vec<_>>()
                    .join(" ");
                let arr: Vec<Value> = expansion
                    .iter()
                    .map(|(k, m)| json!({ "partition": bjson::partition_to_json(k), "mult": m }))
                    .collect();
                emit(cli.json, Value::Array(arr), text);
            }
        },
        Command::Conv { alpha, beta } => {
            let ctx = require_context(cli)?;
            let product = KClass::of(alpha, ctx).convolve(&KClass::of(beta, ctx))?;
            emit(cli.json, bjson::kclass_to_json(&product), product.to_string());
        }
        Command::Betti { gamma } => {
            let ctx = require_context(cli)?;
            let h = betti_polynomial(gamma, &ctx);
            emit(cli.json, bjson::laurent_to_json(&h), h.to_string());
        }
        Command::Decomp { alpha } => {
            let ctx = require_context(cli)?;
            let report = perverse_decomposition(alpha, &ctx)?;
            let text = format!(
                "h = {}\nP = {}\nh_perverse = {}\neuler = {}",
                report.h, report.p_constant, report.h_perverse, report.euler
            );
            emit(cli.json, bjson::betti_report_to_json(&report), text);
        }
        Command::Dual { alpha } => {
            let ctx = require_context(cli)?;
            let beta = dual_partition(alpha, &ctx)?;
            emit(cli.json, bjson::partition_to_json(&beta), beta.to_string());
        }
        Command::Euler { alpha } => {
            let ctx = require_context(cli)?;
            let chi = euler_characteristic(alpha, &ctx);
            emit(cli.json, json!({ "euler": chi.to_string() }), chi.to_string());
        }
        Command::Ih { locus, param } => {
            let ctx = require_context(cli)?;
            let locus = match (locus.as_str(), param) {
                ("theta", _) => Locus::Theta,
                ("w", Some(d)) => Locus::W { d: *d },
                ("w-minus-w", Some(r)) => Locus::WMinusW { r: *r },
                ("w", None) | ("w-minus-w", None) => {
                    return Err(Error::OutOfRange(format!(
                        "locus {} needs an integer parameter",
                        locus
                    )))
                }
                _ => {
                    return Err(Error::OutOfRange(format!(
                        "unknown locus {:?}; use theta, w <d>, or w-minus-w <r>",
                        locus
                    )))
                }
            };
            let ih = bncalc::ih_betti(locus, &ctx)?;
            emit(cli.json, bjson::laurent_to_json(&ih), ih.to_string());
        }
        Command::RepCompare { alpha, beta } => {
            let ctx = require_context(cli)?;
            let report = compare_convolution_to_tensor(alpha, beta, &ctx)?;
            let text = format!(
                "left  = {}\nright = {}\nequal = {}\ndimension = {}",
                report.left,
                report.right,
                report.equal(),
                report.dimension()
            );
            emit(cli.json, bjson::comparison_to_json(&report), text);
        }
        Command::Selftest { quick, full } => {
            let budget = Budget {
                quick: *quick && !*full,
                bound: cli.bound,
            };
            let mut results: Vec<Value> = Vec::new();
            let mut failed = false;
            for check in checks() {
                match (check.run)(&budget) {
                    Ok(()) => {
                        if !cli.json {
                            println!("{} {}: ok", check.id, check.title);
                        }
                        results.push(json!({ "id": check.id, "ok": true }));
                    }
                    Err(msg) => {
                        failed = true;
                        if !cli.json {
                            println!("{} {}: FAIL: {}", check.id, check.title, msg);
                        }
                        results.push(json!({ "id": check.id, "ok": false, "detail": msg }));
                        break;
                    }
                }
            }
            if !failed {
                match extra_invariants(&budget) {
                    Ok(()) => {
                        if !cli.json {
                            println!("extra invariants: ok");
                        }
                        results.push(json!({ "id": "extra", "ok": true }));
                    }
                    Err(msg) => {
                        failed = true;
                        if !cli.json {
                            println!("extra invariants: FAIL: {}", msg);
                        }
                        results.push(json!({ "id": "extra", "ok": false, "detail": msg }));
                    }
                }
            }
            if cli.json {
                println!("{}", Value::Array(results));
            }
            if failed {
                return Err(Error::InternalConsistency(
                    "selftest found a counterexample".into(),
                ));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{}", e);
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}
