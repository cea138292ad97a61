//! Command-line front end: dimension tables, bases, normal forms,
//! homomorphism images, and the verification suite.
//!
//! Output is deterministic for a fixed configuration and seed. Exit codes:
//! 0 success, 1 verification failure, 2 invalid arguments.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use repalg::abelian::HAlgebraContext;
use repalg::filtration::{eta_k, is_in_d};
use repalg::parse::{parse_aut, parse_word};
use repalg::qlinalg::Rat;
use repalg::rep_algebra::AlgebraContext;
use repalg::report;
use repalg::words::build_aut_word;

#[derive(Parser)]
#[command(name = "repalg", version, about = "Truncated representation algebras of free groups")]
struct Cli {
    /// Matrix size of the target special linear group (m ≥ 2)
    #[arg(long, global = true, default_value_t = 2)]
    m: u8,
    /// Rank of the free group (n ≥ 1)
    #[arg(long, global = true, default_value_t = 3)]
    n: u16,
    /// Truncation cap on total degree (1 ≤ cap ≤ 6)
    #[arg(long, global = true, default_value_t = 3)]
    cap: u32,
    /// Seed for the randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format (csv is available for the dimension tables)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Monomial basis T_k of the free graded piece
    Tk,
    /// Alternate basis T_k' (variables with (i,j) ≠ (1,1), formal s_mm)
    TkPrime,
    /// Degree-2 basis Y of the free-abelian graded piece
    Y,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Free,
    Abelian,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension table of the graded pieces up to degree k
    Dims {
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// List a graded basis with labels
    Basis {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Normal form of s_ij(w) for a word literal
    NormalForm {
        /// Word literal, e.g. "x1 x2^-1" or "[x1,x2]"
        #[arg(long)]
        word: String,
        /// Entry "i,j", e.g. "1,2"
        #[arg(long)]
        entry: String,
    },
    /// Image of an automorphism word under the level-k homomorphism
    Eta {
        /// Automorphism word, e.g. "K12 K123^-1"
        #[arg(long)]
        aut: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Crossed-homomorphism value of an automorphism word
    Theta {
        #[arg(long)]
        aut: String,
        #[arg(long, value_enum, default_value_t = Target::Free)]
        target: Target,
    },
    /// Run verification suites and print a pass/fail table
    Verify {
        /// "all" or the name of a single check
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Dimension data of the free-abelian quotient
    AbelianDims,
}

struct CliError {
    code: u8,
    msg: String,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        msg: msg.into(),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("REPALG_LOG")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if cli.m < 2 {
        return Err(invalid("m must be at least 2"));
    }
    if cli.n < 1 {
        return Err(invalid("n must be at least 1"));
    }
    if !(1..=6).contains(&cli.cap) {
        return Err(invalid("cap must be between 1 and 6"));
    }
    if cli.format == Format::Csv && !matches!(cli.cmd, Cmd::Dims { .. } | Cmd::AbelianDims) {
        return Err(invalid("csv output is only available for dimension tables"));
    }
    log::info!("m={} n={} cap={} seed={}", cli.m, cli.n, cli.cap, cli.seed);
    match &cli.cmd {
        Cmd::Dims { k } => cmd_dims(cli, *k),
        Cmd::Basis { which, k } => cmd_basis(cli, *which, *k),
        Cmd::NormalForm { word, entry } => cmd_normal_form(cli, word, entry),
        Cmd::Eta { aut, k } => cmd_eta(cli, aut, *k),
        Cmd::Theta { aut, target } => cmd_theta(cli, aut, *target),
        Cmd::Verify { suite } => cmd_verify(cli, suite),
        Cmd::AbelianDims => cmd_abelian_dims(cli),
    }
}

fn cmd_dims(cli: &Cli, k_max: u32) -> Result<(), CliError> {
    if k_max < 1 {
        return Err(invalid("k must be at least 1"));
    }
    let rows: Vec<(u32, u128)> = (1..=k_max)
        .map(|k| (k, AlgebraContext::dim_formula(cli.m, cli.n, k)))
        .collect();
    match cli.format {
        Format::Text => {
            for (k, dim) in &rows {
                println!("m={} n={} k={k}: dim {dim}", cli.m, cli.n);
            }
        }
        Format::Csv => {
            println!("m,n,k,dim");
            for (k, dim) in &rows {
                println!("{},{},{k},{dim}", cli.m, cli.n);
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(k, dim)| json!({"m": cli.m, "n": cli.n, "k": k, "dim": dim.to_string()}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
    }
    Ok(())
}

fn cmd_basis(cli: &Cli, which: Which, k: u32) -> Result<(), CliError> {
    let labels: Vec<String> = match which {
        Which::Tk | Which::TkPrime => {
            if !(1..=cli.cap).contains(&k) {
                return Err(invalid("k must be between 1 and cap"));
            }
            let ctx = AlgebraContext::new(cli.m, cli.n, cli.cap);
            match which {
                Which::Tk => ctx.basis_tk(k).iter().map(|m| m.to_string()).collect(),
                _ => ctx.basis_tk_prime(k).iter().map(|m| m.to_string()).collect(),
            }
        }
        Which::Y => {
            if k != 2 {
                return Err(invalid("the Y basis exists in degree 2 only"));
            }
            let hctx = HAlgebraContext::new(cli.m, cli.n);
            hctx.basis_y().iter().map(|e| e.to_string()).collect()
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&labels).unwrap()),
        _ => {
            for l in &labels {
                println!("{l}");
            }
            println!("total: {}", labels.len());
        }
    }
    Ok(())
}

fn parse_entry(entry: &str, m: u8) -> Result<(u8, u8), CliError> {
    let parts: Vec<&str> = entry.split(',').collect();
    let [i, j] = parts.as_slice() else {
        return Err(invalid("entry must be \"i,j\""));
    };
    let i: u8 = i.trim().parse().map_err(|_| invalid("bad entry index"))?;
    let j: u8 = j.trim().parse().map_err(|_| invalid("bad entry index"))?;
    if !(1..=m).contains(&i) || !(1..=m).contains(&j) {
        return Err(invalid(format!("entry indices must lie in 1..={m}")));
    }
    Ok((i, j))
}

fn cmd_normal_form(cli: &Cli, word: &str, entry: &str) -> Result<(), CliError> {
    let w = parse_word(word).map_err(|e| invalid(format!("word literal: {e}")))?;
    if w.max_index() > cli.n {
        return Err(invalid(format!("word uses a generator above x{}", cli.n)));
    }
    let (i, j) = parse_entry(entry, cli.m)?;
    let ctx = AlgebraContext::new(cli.m, cli.n, cli.cap);
    let f = ctx.s_entry(&w, i, j);
    match cli.format {
        Format::Json => {
            let out = json!({
                "word": w.to_string(),
                "entry": [i, j],
                "min_degree": f.min_degree(),
                "polynomial": f.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => println!("s({i},{j};{w}) = {f}"),
    }
    Ok(())
}

fn build_aut(cli: &Cli, aut: &str) -> Result<repalg::words::AutPair, CliError> {
    let syms = parse_aut(aut).map_err(|e| invalid(format!("aut-spec: {e}")))?;
    build_aut_word(&syms, cli.n).map_err(|e| invalid(format!("aut-spec: {e:?}")))
}

/// Named columns: one line per degree-1 generator with its image polynomial.
fn print_columns(
    cli: &Cli,
    aut: &str,
    name: &str,
    inputs: &[String],
    values: &[String],
) -> Result<(), CliError> {
    match cli.format {
        Format::Json => {
            let cols: Vec<_> = inputs
                .iter()
                .zip(values)
                .map(|(i, v)| json!({"input": i, "value": v}))
                .collect();
            let out = json!({"aut": aut, "map": name, "columns": cols});
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => {
            for (i, v) in inputs.iter().zip(values) {
                println!("{name}({i}) = {v}");
            }
        }
    }
    Ok(())
}

/// Render a coordinate column as a signed combination of basis labels.
fn column_label(coords: &[Rat], labels: &[String]) -> String {
    use num::{One, Signed, Zero};
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let (sign, mag) = if c.is_negative() {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if out.is_empty() {
            if sign == "-" {
                out.push_str("-");
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        if !mag.is_one() {
            let _ = write!(out, "{mag} ");
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn cmd_eta(cli: &Cli, aut: &str, k: u32) -> Result<(), CliError> {
    if k < 1 || k + 1 > cli.cap {
        return Err(invalid("eta needs 1 ≤ k and k+1 ≤ cap"));
    }
    let a = build_aut(cli, aut)?;
    let ctx = AlgebraContext::new(cli.m, cli.n, cli.cap);
    if !is_in_d(&ctx, &a, k) {
        return Err(invalid(format!(
            "the automorphism does not act trivially modulo degree {}",
            k + 1
        )));
    }
    let eta = eta_k(&ctx, &a, k);
    let inputs: Vec<String> = ctx.variables().iter().map(|v| v.to_string()).collect();
    let labels: Vec<String> = ctx.basis_tk(k + 1).iter().map(|m| m.to_string()).collect();
    let values: Vec<String> = (0..inputs.len())
        .map(|col| column_label(&eta.matrix.column(col), &labels))
        .collect();
    print_columns(cli, aut, &format!("eta_{k}"), &inputs, &values)
}

fn cmd_theta(cli: &Cli, aut: &str, target: Target) -> Result<(), CliError> {
    let a = build_aut(cli, aut)?;
    match target {
        Target::Free => {
            let ctx = AlgebraContext::new(cli.m, cli.n, 2);
            let th = repalg::crossed::theta(&ctx, &a);
            let inputs: Vec<String> = ctx.variables().iter().map(|v| v.to_string()).collect();
            let labels: Vec<String> = ctx.basis_tk(2).iter().map(|m| m.to_string()).collect();
            let values: Vec<String> = (0..inputs.len())
                .map(|col| column_label(&th.matrix.column(col), &labels))
                .collect();
            print_columns(cli, aut, "theta", &inputs, &values)
        }
        Target::Abelian => {
            let hctx = HAlgebraContext::new(cli.m, cli.n);
            let th = repalg::abelian::theta_h(&hctx, &a);
            let inputs: Vec<String> = hctx
                .gr1h_basis()
                .iter()
                .map(|v| v.to_string())
                .collect();
            let labels: Vec<String> = hctx.basis_y().iter().map(|e| e.to_string()).collect();
            let values: Vec<String> = (0..inputs.len())
                .map(|col| column_label(&th.matrix.column(col), &labels))
                .collect();
            print_columns(cli, aut, "theta_H", &inputs, &values)
        }
    }
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<(), CliError> {
    let checks: Vec<report::Check> = if suite == "all" {
        report::run_all(cli.seed)
    } else {
        match report::suites().into_iter().find(|(name, _)| *name == suite) {
            Some((_, f)) => vec![f(cli.seed)],
            None => return Err(invalid(format!("unknown suite {suite:?}"))),
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&checks).unwrap()),
        _ => {
            for c in &checks {
                println!("{c}");
            }
        }
    }
    if checks.iter().all(|c| c.passed()) {
        Ok(())
    } else {
        Err(CliError {
            code: 1,
            msg: "verification failed".into(),
        })
    }
}

fn cmd_abelian_dims(cli: &Cli) -> Result<(), CliError> {
    let hctx = HAlgebraContext::new(cli.m, cli.n);
    let gr1 = hctx.gr1h_basis().len();
    let y = hctx.gr2h_dim();
    let t2 = hctx.free().dim_tk(2);
    let rank = hctx.relation_rank();
    match cli.format {
        Format::Text => {
            println!("m={} n={}", cli.m, cli.n);
            println!("dim gr1 = {gr1}");
            println!("|Y| = dim gr2 = {y}");
            println!("|T_2| = {t2}");
            println!("relation rank = {rank}");
        }
        Format::Csv => {
            println!("m,n,gr1,y,t2,relation_rank");
            println!("{},{},{gr1},{y},{t2},{rank}", cli.m, cli.n);
        }
        Format::Json => {
            let out = json!({
                "m": cli.m, "n": cli.n,
                "gr1": gr1, "y": y, "t2": t2, "relation_rank": rank,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
    Ok(())
}
