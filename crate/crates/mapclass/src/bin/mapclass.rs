//! Command-line front door. All substance lives in the library; this binary
//! parses arguments, wires the environment configuration, and prints JSON.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 internal inconsistency
//! (a state the mathematics proves impossible; reaching it means a bug).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mapclass::error::Error;
use mapclass::screen::{exactness_from_env, ScreenConfig};
use mapclass::verify::{all_pass, braid_battery, hyper_battery, report_json, sp_battery, sphere_battery};
use mapclass::{
    dims, lk_representation, sp_order_bfs, sp_order_formula, Context, HyperOracle, SphereRep, Word,
};

/// Default ceiling for dense matrix dumps.
const DENSE_CEILING: usize = 200;

#[derive(Parser)]
#[command(name = "mapclass", version, about = "Exact word-problem oracles for braid groups and mapping class groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word to a matrix and dump it as JSON.
    Eval(EvalArgs),
    /// Decide whether a word represents the identity.
    Trivial(TrivialArgs),
    /// Run a named check battery and report pass/fail per check.
    Verify(VerifyArgs),
    /// Dimension arithmetic for the hyperelliptic embeddings.
    Dims(DimsArgs),
    /// Order of Sp(2g, 3) by formula and/or breadth-first closure.
    SpOrder(SpOrderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Braid,
    Sphere,
    Hyper,
    Sp,
}

#[derive(Args)]
struct EvalArgs {
    /// Group family: braid (Lawrence–Krammer) or sphere (dense induced).
    #[arg(long, value_enum)]
    group: Group,
    /// Strings (braid) or punctures (sphere).
    #[arg(long)]
    n: usize,
    /// Whitespace-separated signed generator indices, e.g. "1 2 -1".
    #[arg(long, default_value = "")]
    word: String,
    /// Acknowledge dense materialization of an induced representation.
    #[arg(long)]
    dense: bool,
    /// Ceiling for dense dumps.
    #[arg(long, default_value_t = DENSE_CEILING)]
    max_dim: usize,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct TrivialArgs {
    /// Group family: sphere or hyper.
    #[arg(long, value_enum)]
    group: Group,
    /// Punctures (sphere).
    #[arg(long)]
    n: Option<usize>,
    /// Genus (hyper).
    #[arg(long)]
    genus: Option<usize>,
    #[arg(long)]
    word: String,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    group: Group,
    /// Strings/punctures for braid and sphere batteries.
    #[arg(long)]
    n: Option<usize>,
    /// Genus for hyper and sp batteries.
    #[arg(long)]
    genus: Option<usize>,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct DimsArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderMethod {
    Formula,
    Bfs,
    Both,
}

#[derive(Args)]
struct SpOrderArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long, value_enum, default_value_t = OrderMethod::Both)]
    method: OrderMethod,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors exit 1; --help/--version print normally and exit 0
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Error::Inconsistency(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Trivial(args) => cmd_trivial(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Dims(args) => cmd_dims(args),
        Command::SpOrder(args) => cmd_sp_order(args),
    }
}

fn emit(out: &Option<std::path::PathBuf>, value: &Value) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("JSON serialization");
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::Parse(format!("cannot create {}: {e}", path.display())))?;
            writeln!(f, "{text}").map_err(|e| Error::Parse(e.to_string()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, Error> {
    let value = match args.group {
        Group::Braid => {
            if args.n < 2 {
                return Err(Error::Parse("braid groups need --n of at least 2".into()));
            }
            let dim = args.n * (args.n - 1) / 2;
            if dim > args.max_dim {
                return Err(Error::Refused(format!(
                    "dimension {dim} exceeds the dump ceiling {}",
                    args.max_dim
                )));
            }
            let ctx = Context::Braid { strings: args.n };
            let w = Word::parse(ctx, &args.word)?;
            lk_representation(args.n)?.eval(&w)?.to_json()
        }
        Group::Sphere => {
            if !args.dense {
                return Err(Error::Refused(
                    "sphere evaluation materializes a dense matrix; pass --dense to confirm".into(),
                ));
            }
            let ctx = Context::Sphere { punctures: args.n };
            let w = Word::parse(ctx, &args.word)?;
            let rep = SphereRep::build(args.n, &ScreenConfig::from_env()?)?;
            rep.dense(&w, args.max_dim)?.to_json()
        }
        _ => {
            return Err(Error::Parse(
                "eval supports --group braid and --group sphere".into(),
            ))
        }
    };
    emit(&args.out, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_trivial(args: TrivialArgs) -> Result<ExitCode, Error> {
    let screen = ScreenConfig::from_env()?;
    let value = match args.group {
        Group::Sphere => {
            let n = args
                .n
                .ok_or_else(|| Error::Parse("--group sphere needs --n".into()))?;
            let w = Word::parse(Context::Sphere { punctures: n }, &args.word)?;
            let rep = SphereRep::build(n, &screen)?;
            rep.trivial(&w, exactness_from_env())?.to_json()
        }
        Group::Hyper => {
            let g = args
                .genus
                .ok_or_else(|| Error::Parse("--group hyper needs --genus".into()))?;
            let w = Word::parse(Context::Chain { genus: g }, &args.word)?;
            let oracle = HyperOracle::build(g, &screen)?;
            // genus 2 is the exact tier; above it exact confirmation costs
            // real time and is opt-in via MAPCLASS_EXACT=1
            let confirm = if g >= 3 {
                let on = std::env::var_os(mapclass::screen::EXACT_ENV).is_some()
                    && exactness_from_env();
                if !on {
                    eprintln!(
                        "warning: genus {g} runs under modular screening only; \
                         set {}=1 for exact confirmation",
                        mapclass::screen::EXACT_ENV
                    );
                }
                on
            } else {
                exactness_from_env()
            };
            oracle.trivial(&w, confirm)?.to_json()
        }
        _ => {
            return Err(Error::Parse(
                "trivial supports --group sphere and --group hyper".into(),
            ))
        }
    };
    emit(&args.out, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let screen = ScreenConfig::from_env()?;
    let (label, checks) = match args.group {
        Group::Braid => {
            let n = args
                .n
                .ok_or_else(|| Error::Parse("--group braid needs --n".into()))?;
            if n < 2 {
                return Err(Error::Parse("braid groups need --n of at least 2".into()));
            }
            (format!("braid({n})"), braid_battery(n))
        }
        Group::Sphere => {
            let n = args
                .n
                .ok_or_else(|| Error::Parse("--group sphere needs --n".into()))?;
            (format!("sphere({n})"), sphere_battery(n, &screen))
        }
        Group::Hyper => {
            let g = args
                .genus
                .ok_or_else(|| Error::Parse("--group hyper needs --genus".into()))?;
            let confirm = g < 3 || exactness_from_env();
            (format!("hyper({g})"), hyper_battery(g, &screen, confirm))
        }
        Group::Sp => {
            let g = args
                .genus
                .ok_or_else(|| Error::Parse("--group sp needs --genus".into()))?;
            if g < 1 {
                return Err(Error::Parse("--genus must be at least 1".into()));
            }
            (format!("sp(2*{g},3)"), sp_battery(g))
        }
    };
    let report = report_json(&label, &checks);
    emit(&args.out, &report)?;
    if all_pass(&checks) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_dims(args: DimsArgs) -> Result<ExitCode, Error> {
    if args.genus < 1 {
        return Err(Error::Parse("--genus must be at least 1".into()));
    }
    emit(&args.out, &dims(args.genus).to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sp_order(args: SpOrderArgs) -> Result<ExitCode, Error> {
    if args.genus < 1 {
        return Err(Error::Parse("--genus must be at least 1".into()));
    }
    let formula = sp_order_formula(args.genus).to_string();
    let mut value = json!({"genus": args.genus, "formula": formula});
    if matches!(args.method, OrderMethod::Bfs | OrderMethod::Both) {
        match sp_order_bfs(args.genus) {
            Ok((order, has_minus)) => {
                value["bfs"] = json!({"order": order, "contains_minus_identity": has_minus});
                value["agree"] = json!(order.to_string() == formula);
            }
            Err(Error::Refused(msg)) => {
                value["bfs"] = Value::Null;
                value["bfs_refused"] = json!(msg);
            }
            Err(e) => return Err(e),
        }
    }
    emit(&args.out, &value)?;
    Ok(ExitCode::SUCCESS)
}
