//! Command-line front end: fusion products, hopping graphs, verification
//! suites, and lattice partition functions, with deterministic JSON/CSV/DOT
//! output.
//!
//! Exit codes: `0` success, `1` verification failure, `2` usage error
//! (including labels that do not fit the requested sector).

use std::path::{Path, PathBuf};

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::fusion::{self, csym, FusionTable};
use crate::phase::CrystalGraph;
use crate::suites::{run_suite, SUITE_NAMES};
use crate::weights::{LevelBasis, PartitionLabel};
use crate::{Error, MPoly};

#[derive(Parser, Debug)]
#[command(
    name = "verlinde",
    version,
    about = "Exact fusion rings, crystal hopping graphs, and vertex-model \
             verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fusion products on a level sector: the full table, or one product
    /// when both --lhs and --rhs are given.
    Fusion(FusionArgs),
    /// The coloured hopping graph of a level sector, as DOT or JSON.
    CrystalGraph(GraphArgs),
    /// Run one named verification suite and emit a JSON report.
    Verify(VerifyArgs),
    /// Lattice partition function between two sector labels, together with
    /// its expansion into Schur polynomials with fusion coefficients.
    PartitionFunction(PartitionFunctionArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZMode {
    /// Keep the twist variable formal.
    Formal,
    /// Specialise the twist to zero (open/Grassmannian limit).
    #[value(name = "0")]
    Zero,
    /// Specialise the twist to one (fusion ring values).
    #[value(name = "1")]
    One,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args, Debug)]
struct FusionArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Left factor, e.g. "2,1" (use "0" for the empty partition).
    #[arg(long)]
    lhs: Option<String>,
    /// Right factor.
    #[arg(long)]
    rhs: Option<String>,
    /// Twist specialisation for the reported coefficients.
    #[arg(long, value_enum, default_value = "1")]
    z: ZMode,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the desk-scale parameter guards.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Which identity family to verify.
    #[arg(value_parser = PossibleValuesParser::new(SUITE_NAMES))]
    suite: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Bound on tensor charge totals / weight indices where applicable.
    #[arg(long, default_value_t = 4)]
    cmax: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct PartitionFunctionArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Incoming boundary label.
    #[arg(long)]
    lhs: String,
    /// Outgoing boundary label.
    #[arg(long)]
    rhs: String,
    /// Twist specialisation; the partition function is defined at 1 only.
    #[arg(long, value_enum, default_value = "1")]
    z: ZMode,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

/// Parse arguments from the process environment and run; returns the exit
/// code.  Usage errors detected by the argument parser itself (unknown
/// flags, unknown suite names) exit with code 2 before this returns.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CheckFailed(_) => 1,
                _ => 2,
            }
        }
    }
}

fn execute(cmd: &Command) -> Result<i32, Error> {
    match cmd {
        Command::Fusion(args) => cmd_fusion(args),
        Command::CrystalGraph(args) => cmd_crystal_graph(args),
        Command::Verify(args) => cmd_verify(args),
        Command::PartitionFunction(args) => cmd_partition_function(args),
    }
}

fn enforce_guards(n: usize, k: u32, cmax: u32, force: bool) -> Result<(), Error> {
    if n < 3 {
        return Err(Error::Unsupported(
            "the model needs at least three sites (--n 3 or larger)".into(),
        ));
    }
    if !force && (n > 6 || k > 5 || cmax > 8) {
        return Err(Error::Unsupported(format!(
            "n={n}, k={k}, cmax={cmax} exceeds the desk-scale guard \
             (n <= 6, k <= 5, cmax <= 8); pass --force to override"
        )));
    }
    Ok(())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_label(s: &str) -> Result<PartitionLabel, Error> {
    s.parse()
}

fn render_zpoly(c: &crate::ZPoly, z: ZMode) -> Option<serde_json::Value> {
    match z {
        ZMode::Formal => Some(json!(c.to_string())),
        ZMode::Zero => {
            let v = c.coeff(0);
            (v != 0).then(|| json!(v))
        }
        ZMode::One => Some(json!(c.eval(1))),
    }
}

fn cmd_fusion(args: &FusionArgs) -> Result<i32, Error> {
    enforce_guards(args.n, args.k, 0, args.force)?;
    if args.format == Format::Dot {
        return Err(Error::Unsupported(
            "fusion output supports json or csv, not dot".into(),
        ));
    }
    let pairs: Vec<(PartitionLabel, PartitionLabel)> = match (&args.lhs, &args.rhs) {
        (Some(l), Some(r)) => vec![(parse_label(l)?, parse_label(r)?)],
        (None, None) => {
            let labels = LevelBasis::new(args.n, args.k).labels();
            let mut pairs = Vec::new();
            for (i, l) in labels.iter().enumerate() {
                for r in &labels[i..] {
                    pairs.push((l.clone(), r.clone()));
                }
            }
            pairs
        }
        _ => {
            return Err(Error::Unsupported(
                "--lhs and --rhs must be given together (or both omitted for \
                 the full table)"
                    .into(),
            ));
        }
    };

    // The default full table at z = 1 uses the canonical table exports.
    if args.z == ZMode::One && args.lhs.is_none() {
        let table = FusionTable::build(args.n, args.k)?;
        let text = match args.format {
            Format::Json => table.to_json()?,
            Format::Csv => table.to_csv(),
            Format::Dot => unreachable!(),
        };
        emit(&text, args.out.as_deref())?;
        return Ok(0);
    }

    let mut products = Vec::new();
    for (lhs, rhs) in &pairs {
        let formal = fusion::fuse_formal(lhs, rhs, args.n, args.k)?;
        for (nu, c) in &formal {
            if let Some(coefficient) = render_zpoly(c, args.z) {
                products.push(json!({
                    "lhs": lhs.to_string(),
                    "rhs": rhs.to_string(),
                    "result": nu.to_string(),
                    "coefficient": coefficient,
                }));
            }
        }
    }
    let text = match args.format {
        Format::Json => {
            let doc = json!({
                "n": args.n,
                "k": args.k,
                "z": match args.z {
                    ZMode::Formal => "formal",
                    ZMode::Zero => "0",
                    ZMode::One => "1",
                },
                "products": products,
            });
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("lhs,rhs,result,coefficient\n");
            for p in &products {
                let coeff = &p["coefficient"];
                let rendered = match coeff {
                    serde_json::Value::String(t) => format!("\"{t}\""),
                    other => other.to_string(),
                };
                s.push_str(&format!(
                    "\"{}\",\"{}\",\"{}\",{}\n",
                    p["lhs"].as_str().unwrap(),
                    p["rhs"].as_str().unwrap(),
                    p["result"].as_str().unwrap(),
                    rendered
                ));
            }
            s
        }
        Format::Dot => unreachable!(),
    };
    emit(&text, args.out.as_deref())?;
    Ok(0)
}

fn cmd_crystal_graph(args: &GraphArgs) -> Result<i32, Error> {
    enforce_guards(args.n, args.k, 0, args.force)?;
    let graph = CrystalGraph::new(args.n, args.k);
    let text = match args.format {
        Format::Dot => graph.to_dot(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&graph.to_json())?;
            s.push('\n');
            s
        }
        Format::Csv => {
            return Err(Error::Unsupported(
                "crystal-graph output supports dot or json, not csv".into(),
            ));
        }
    };
    emit(&text, args.out.as_deref())?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, Error> {
    enforce_guards(args.n, args.k, args.cmax, args.force)?;
    if args.format != Format::Json {
        return Err(Error::Unsupported("verify reports are json only".into()));
    }
    let report = run_suite(&args.suite, args.n, args.k, args.cmax)?;
    emit(&report.to_json()?, args.out.as_deref())?;
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_partition_function(args: &PartitionFunctionArgs) -> Result<i32, Error> {
    enforce_guards(args.n, args.k, 0, args.force)?;
    if args.z != ZMode::One {
        return Err(Error::Unsupported(
            "the partition function is reported at z = 1 only".into(),
        ));
    }
    if args.format != Format::Json {
        return Err(Error::Unsupported("partition-function output is json only".into()));
    }
    let mu = parse_label(&args.lhs)?;
    let nu = parse_label(&args.rhs)?;
    let z = fusion::partition_function(&mu, &nu, args.n, args.k)?;

    // Expand into Schur polynomials with fusion coefficients and verify the
    // expansion reproduces the polynomial before reporting it.
    let l = args.n - 1;
    let labels = LevelBasis::new(args.n, args.k).labels();
    let mut expansion = Vec::new();
    let mut recombined = MPoly::zero(l);
    for lam in &labels {
        let c = fusion::fuse(lam, &mu, args.n, args.k)?
            .get(&nu.to_level(args.n, args.k)?)
            .copied()
            .unwrap_or(0);
        if c == 0 {
            continue;
        }
        let stripped = lam.strip_full_columns(args.n);
        let s = csym::commutative_schur(&stripped, l);
        recombined = &recombined + &s.mul_monomial(&vec![0; l], c as i64);
        expansion.push(json!({
            "label": lam.to_string(),
            "schur": stripped.to_string(),
            "coefficient": c,
        }));
    }
    if recombined != z {
        return Err(Error::CheckFailed(format!(
            "Schur expansion does not reproduce the partition function for \
             {mu} -> {nu} at n={}, k={}",
            args.n, args.k
        )));
    }

    let doc = json!({
        "n": args.n,
        "k": args.k,
        "mu": mu.to_string(),
        "nu": nu.to_string(),
        "polynomial": z.to_string_with(&|i| format!("u{}", i + 1)),
        "expansion": expansion,
    });
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    emit(&text, args.out.as_deref())?;
    Ok(0)
}
