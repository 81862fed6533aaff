//! `liechain`: length, depth and chain computations for compact Lie groups.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use liechain_core::chains::{max_chain, min_chain, verify_chain, Chain, Overall};
use liechain_core::formulas::{chain_difference_refined, depth_refined, length, BoundsOrExact};
use liechain_core::subgroups::{maximal_connected, MaximalsJson};
use liechain_core::suites::{run_suite, SuiteConfig, SUITES};
use liechain_core::{parse_group, Error, GroupType, Oracle};

#[derive(Parser)]
#[command(name = "liechain", version, about = "Length, depth and unrefinable chains of compact Lie groups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length l(G).
    Len { group: String },
    /// Depth, exact or as an interval.
    Depth { group: String },
    /// Chain difference l(G) - depth(G).
    Cd { group: String },
    /// Dimension and rank.
    Dims { group: String },
    /// Maximal connected subgroups with their embedding kinds.
    Maximals { group: String },
    /// A witness chain of maximal or minimal length.
    Chain(ChainArgs),
    /// Check a chain file (one group per line, ending with `1`).
    VerifyChain { file: PathBuf },
    /// Run theorem-checking suites.
    CheckTheorems {
        /// Suite name; all suites when omitted.
        #[arg(long)]
        suite: Option<String>,
        /// Bound on classical degrees, also the scan range of per-simple checks.
        #[arg(long, env = "LIECHAIN_MAX_DEGREE")]
        max_degree: Option<u32>,
        /// Bound on total dimension of enumerated groups.
        #[arg(long, default_value_t = 60)]
        max_dim: u64,
    },
    /// Brute-force length and depth, or a cross-validation report.
    Oracle {
        group: Option<String>,
        /// Compare the oracle with the formulas; prints JSON lines.
        #[arg(long)]
        cross_validate: bool,
    },
}

#[derive(Args)]
struct ChainArgs {
    group: String,
    /// A chain of length l(G).
    #[arg(long, conflicts_with = "min", required_unless_present = "min")]
    max: bool,
    /// A chain of length depth(G), when the depth is known exactly.
    #[arg(long)]
    min: bool,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Syntax { .. } | Error::MalformedType(_) | Error::InvalidArgument(_) | Error::MalformedChain(_) => {
                Failure::Usage(e.to_string())
            }
            Error::TrivialGroup | Error::Incomplete { .. } => Failure::Check(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn group(spec: &str) -> std::result::Result<GroupType, Failure> {
    parse_group(spec).map_err(|e| Failure::Usage(format!("cannot parse `{spec}`: {e}")))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Len { group: spec } => {
            let g = group(&spec)?;
            let l = length(&g);
            if json {
                emit(&json!({ "group": g, "length": l }));
            } else {
                println!("{l}");
            }
            Ok(true)
        }
        Command::Depth { group: spec } => {
            let g = group(&spec)?;
            let d = depth_refined(&g, &Oracle::new())?;
            print_interval(json, &g, "depth", d);
            Ok(true)
        }
        Command::Cd { group: spec } => {
            let g = group(&spec)?;
            let cd = chain_difference_refined(&g, &Oracle::new())?;
            print_interval(json, &g, "cd", cd);
            Ok(true)
        }
        Command::Dims { group: spec } => {
            let g = group(&spec)?;
            let d = g.dims();
            if json {
                emit(&json!({ "group": g, "dim": d.dim, "rank": d.rank }));
            } else {
                println!("dim {} rank {}", d.dim, d.rank);
            }
            Ok(true)
        }
        Command::Maximals { group: spec } => {
            let g = group(&spec)?;
            let (entries, flag) = maximal_connected(&g)?;
            if json {
                emit(&MaximalsJson::new(&g, &entries, &flag));
            } else {
                for e in &entries {
                    println!("{}\t{}", e.subgroup, e.kind);
                }
                println!("complete: {} ({})", if flag.complete { "yes" } else { "no" }, flag.reason);
            }
            Ok(true)
        }
        Command::Chain(args) => {
            let g = group(&args.group)?;
            let chain = if args.max { Some(max_chain(&g)) } else { min_chain(&g) };
            match chain {
                Some(c) => print_chain(json, &c),
                None => {
                    let d = depth_refined(&g, &Oracle::new())?;
                    if json {
                        emit(&json!({ "group": g, "available": false, "depth": d }));
                    } else {
                        println!("unavailable: depth of {g} is only known to lie in {d}");
                    }
                }
            }
            Ok(true)
        }
        Command::VerifyChain { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
            let chain = Chain::parse(&text)?;
            let report = verify_chain(&chain);
            if json {
                emit(&report);
            } else {
                for (i, v) in report.steps.iter().enumerate() {
                    println!("{} > {}: {}", chain.nodes[i], chain.nodes[i + 1], serde_json::to_value(v).expect("verdict")
                        .as_str().unwrap_or_default());
                }
                match &report.overall {
                    Overall::Valid => println!("valid (length {})", chain.length()),
                    Overall::ValidModuloUnknown { steps } => {
                        println!("valid modulo unknown steps {steps:?} (length {})", chain.length())
                    }
                    Overall::Invalid { step: Some(i), reason } => println!("invalid at step {i}: {reason}"),
                    Overall::Invalid { step: None, reason } => println!("invalid: {reason}"),
                }
            }
            Ok(report.is_acceptable())
        }
        Command::CheckTheorems { suite, max_degree, max_dim } => {
            let names: Vec<String> = match suite {
                Some(s) if SUITES.contains(&s.as_str()) => vec![s],
                Some(s) => {
                    return Err(Failure::Usage(format!("unknown suite `{s}`; expected one of {}", SUITES.join(", "))))
                }
                None => SUITES.iter().map(|s| s.to_string()).collect(),
            };
            let cfg = SuiteConfig { max_dim, max_degree };
            let oracle = Oracle::new();
            let mut all_pass = true;
            for name in names {
                let r = run_suite(&name, &cfg, &oracle)?;
                all_pass &= r.pass;
                if json {
                    emit(&r);
                } else {
                    println!("{}: {} ({} checked, {} failed)", r.suite, if r.pass { "PASS" } else { "FAIL" }, r.checked, r.failed);
                    for f in r.failures.iter().take(5) {
                        println!("  {} [{}] {}: {} vs {}", f.claim, f.paper_ref, f.inputs, f.lhs, f.rhs);
                    }
                }
            }
            Ok(all_pass)
        }
        Command::Oracle { group: spec, cross_validate } => {
            let oracle = Oracle::new();
            if cross_validate {
                let scope = match spec {
                    Some(s) => vec![group(&s)?],
                    None => oracle_scope(),
                };
                let rows = oracle.cross_validate(&scope)?;
                for r in &rows {
                    emit(r);
                }
                return Ok(rows.iter().all(|r| r.pass));
            }
            let spec = spec.ok_or_else(|| Failure::Usage("oracle needs a group or --cross-validate".into()))?;
            let g = group(&spec)?;
            let inv = oracle.invariants(&g)?;
            if json {
                emit(&json!({ "group": g, "length": inv.length, "depth": inv.depth }));
            } else {
                println!("length {} depth {}", inv.length, inv.depth);
            }
            Ok(true)
        }
    }
}

fn print_interval(json: bool, g: &GroupType, key: &str, v: BoundsOrExact) {
    if json {
        emit(&json!({ "group": g, key: v }));
    } else {
        println!("{v}");
    }
}

fn print_chain(json: bool, c: &Chain) {
    if json {
        emit(c);
    } else {
        println!("{c}");
        println!("length {}", c.length());
    }
}

/// Curated simple types and small tori, with products of up to three of them.
fn oracle_scope() -> Vec<GroupType> {
    let mut base: Vec<GroupType> = (1..=5).map(GroupType::torus).collect();
    base.extend(liechain_core::subgroups::curated_simple_types().into_iter().map(GroupType::simple));
    let mut out = Vec::new();
    for i in 0..base.len() {
        out.push(base[i].clone());
        for j in i..base.len() {
            let two = base[i].product(&base[j]);
            for third in &base[j..] {
                out.push(two.product(third));
            }
            out.push(two);
        }
    }
    out.sort();
    out.dedup();
    out
}
