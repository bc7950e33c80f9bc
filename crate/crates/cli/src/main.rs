use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use immaculate::{
    enumerate_z, enumerate_z_gamma, format_text, skew_fundamental, skew_pieri_raw, Basis,
    CalcError, Composition, Evaluator, IntVector, SkewMethod, TransitionCache,
};
use serde_json::json;

/// Exact calculator for immaculate and dual immaculate functions.
#[derive(Parser)]
#[command(name = "immaculate", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Output basis: H, Imm, M, F, DImm or h
    #[arg(long, global = true, value_parser = parse_basis)]
    basis: Option<Basis>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Largest degree for transition matrices
    #[arg(long, global = true, default_value_t = immaculate::DEFAULT_DEGREE_CAP)]
    max_degree: usize,
    /// How F_s^perp is computed on immaculate functions
    #[arg(long, global = true, default_value = "theorem", value_parser = parse_method)]
    method: SkewMethod,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression, e.g. "H[2]*Imm[1,4]"
    Eval { expr: String },
    /// Pair an NSym expression with a QSym expression
    Pair { nsym: String, qsym: String },
    /// List the signed vectors of Z_{s,alpha}, optionally only those compacting to gamma
    Zset {
        s: usize,
        #[arg(value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, value_parser = parse_composition)]
        gamma: Option<Composition>,
    },
    /// Expand F_s^perp of an immaculate function
    Skew {
        s: usize,
        #[arg(value_parser = parse_composition)]
        alpha: Composition,
        /// Print the unstraightened sum over integer vectors
        #[arg(long)]
        raw: bool,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    Basis::from_tag(s).map_err(|e| e.to_string())
}

fn parse_method(s: &str) -> Result<SkewMethod, String> {
    s.parse().map_err(|e: immaculate::Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad part `{p}`: {e}"))
            })
            .collect::<Result<_, _>>()?
    };
    Composition::new(parts).map_err(|e| e.to_string())
}

fn vector(v: &IntVector) -> String {
    let parts: Vec<String> = v.entries().iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn run(cli: Cli) -> Result<String, CalcError> {
    let cache = TransitionCache::new(cli.opts.max_degree);
    let eval = Evaluator::new(&cache, cli.opts.method);
    let json = cli.opts.json;
    match cli.command {
        Command::Eval { expr } => {
            let x = eval.evaluate(&expr, cli.opts.basis)?;
            Ok(if json { x.to_json() } else { format_text(&x) })
        }
        Command::Pair { nsym, qsym } => {
            let p = eval.pair(&nsym, &qsym)?;
            Ok(if json {
                json!({ "op": "pair", "value": p.to_string() }).to_string()
            } else {
                p.to_string()
            })
        }
        Command::Zset { s, alpha, gamma } => {
            if s == 0 {
                return Err(immaculate::Error::ZeroSkew.into());
            }
            let vectors = match &gamma {
                Some(g) => enumerate_z_gamma(s, &alpha, g)?,
                None => enumerate_z(s, &alpha),
            };
            let net: i64 = vectors.iter().map(|b| b.sgn() as i64).sum();
            Ok(if json {
                json!({
                    "op": "zset",
                    "s": s,
                    "alpha": alpha,
                    "gamma": gamma,
                    "vectors": vectors
                        .iter()
                        .map(|b| json!({ "beta": b, "sign": b.sgn() }))
                        .collect::<Vec<_>>(),
                    "net": net,
                })
                .to_string()
            } else {
                let mut lines: Vec<String> = vectors
                    .iter()
                    .map(|b| format!("{} {}", if b.sgn() > 0 { '+' } else { '-' }, vector(b)))
                    .collect();
                if gamma.is_some() {
                    lines.push(format!("net {net}"));
                }
                lines.join("\n")
            })
        }
        Command::Skew { s, alpha, raw } => {
            if raw {
                let e = skew_pieri_raw(s, &alpha);
                return Ok(if json {
                    e.to_json_value().to_string()
                } else {
                    let terms: Vec<String> = e
                        .terms
                        .keys()
                        .map(|b| format!("Imm{}", vector(b)))
                        .collect();
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    }
                });
            }
            let e = skew_fundamental(s, &alpha, cli.opts.method, &cache)?;
            Ok(if json {
                e.to_json_value(cli.opts.method).to_string()
            } else {
                format_text(&immaculate::BasisElement::new(Basis::Imm, e.terms))
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
