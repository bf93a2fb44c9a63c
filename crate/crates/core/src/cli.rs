//! Command-line front end. Exit codes: 0 success or true verdict, 1 false
//! verdict, 2 usage error.

use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::arith::{format_rational, is_prime};
use crate::eisenstein::{eis_k, pair_basis, tilde_s};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_h, sublattices_index_p, threads};
use crate::linalg::SparseVec;
use crate::manin::{Sign, SymbolSpace};
use crate::suite::{criteria, run_criterion, Outcome, Profile};
use crate::verify::{
    check_firstapprox, check_hecke_equivariance, check_mumap_all, check_newform_membership,
    check_tn_r01, eta_product, random_symbol, sturm_bound,
};

const MAX_ORDER: usize = 2000;
const MAX_LEVEL: u64 = 50;
const MAX_WEIGHT: u32 = 12;

#[derive(Parser, Debug)]
#[command(name = "toricmf", about = "Toric modular forms: series, symbols, lattices, checks")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Trimmed sweep ranges.
    #[arg(long, global = true)]
    fast: bool,
    /// Replace the truncation order chosen by a command.
    #[arg(long, global = true, value_name = "N")]
    order_override: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the q-expansion of s~^{(k)}_{a/l} (or E_k with --ek).
    Series {
        #[arg(long, default_value_t = 1)]
        level: u64,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 0)]
        a: i64,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long)]
        ek: bool,
    },
    /// Emit the pair basis as JSON lines.
    Pairs {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long)]
        quasi: bool,
    },
    /// Manin symbol spaces.
    Symbols {
        #[command(subcommand)]
        command: SymbolsCommand,
    },
    /// Sublattices and threads.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Run a verification.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
enum SymbolsCommand {
    Dims {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        weight: u32,
    },
    Hecke {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    Hp {
        #[arg(long)]
        p: u64,
    },
    Threads {
        #[arg(long)]
        d: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    Main {
        #[arg(long, default_value_t = 7)]
        level: u64,
        #[arg(long, default_value_t = 3)]
        weight: u32,
    },
    Mumap {
        #[arg(long, default_value_t = 5)]
        level: u64,
        #[arg(long, default_value_t = 3)]
        weight: u32,
    },
    Hecke {
        #[arg(long, default_value_t = 5)]
        level: u64,
        #[arg(long, default_value_t = 3)]
        weight: u32,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    Firstapprox {
        #[arg(long, default_value_t = 5)]
        level: u64,
        #[arg(long, default_value_t = 3)]
        weight: u32,
        #[arg(long, default_value_t = 12)]
        dmax: u64,
    },
    Abcd {
        #[arg(long, default_value_t = 13)]
        pmax: u64,
    },
    All,
}

#[derive(Serialize)]
struct Report {
    check: String,
    params: serde_json::Value,
    verdict: bool,
    elapsed: f64,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ (Error::InvalidParameter(_) | Error::NotCoprime { .. } | Error::Unsupported(_))) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn check_range(level: u64, weight: u32) -> Result<()> {
    if level == 0 || level > MAX_LEVEL {
        return Err(Error::InvalidParameter(format!("level must be in 1..={MAX_LEVEL}")));
    }
    if weight == 0 || weight > MAX_WEIGHT {
        return Err(Error::InvalidParameter(format!("weight must be in 1..={MAX_WEIGHT}")));
    }
    Ok(())
}

fn check_order(order: usize) -> Result<usize> {
    if order > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("order must be at most {MAX_ORDER}")));
    }
    Ok(order)
}

fn emit_verdict(cli: &Cli, check: &str, params: serde_json::Value, verdict: bool, start: Instant) {
    let report = Report {
        check: check.into(),
        params,
        verdict,
        elapsed: start.elapsed().as_secs_f64(),
    };
    if cli.json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!(
            "{}: {} ({})",
            report.check,
            if verdict { "true" } else { "false" },
            report.params
        );
    }
}

fn dispatch(cli: &Cli) -> Result<bool> {
    let order_of = |default: usize| check_order(cli.order_override.unwrap_or(default));
    match &cli.command {
        Command::Series { level, weight, a, order, ek } => {
            check_range(*level, *weight)?;
            let order = order_of(*order)?;
            let s = if *ek {
                eis_k(*weight, order)?
            } else {
                tilde_s(*level, *a, *weight, order)?
            };
            if cli.json {
                println!("{}", serde_json::to_string(&s.to_json()).expect("series serializes"));
            } else {
                println!("{s}");
            }
            Ok(true)
        }
        Command::Pairs { level, weight, order, quasi } => {
            check_range(*level, *weight)?;
            for (label, s) in pair_basis(*level, *weight, order_of(*order)?, *quasi)? {
                let line = json!({ "label": label.to_string(), "series": s.to_json() });
                println!("{line}");
            }
            Ok(true)
        }
        Command::Symbols { command } => symbols(cli, command),
        Command::Lattice { command } => lattice(cli, command),
        Command::Verify { command } => verify(cli, command),
    }
}

fn symbols(cli: &Cli, command: &SymbolsCommand) -> Result<bool> {
    match command {
        SymbolsCommand::Dims { level, weight } => {
            check_range(*level, *weight)?;
            let s = SymbolSpace::build(*level, *weight)?;
            let out = json!({
                "level": level,
                "weight": weight,
                "generators": s.num_generators(),
                "relation_rank": s.relation_rank(),
                "quotient_dim": s.quotient_dim(),
                "plus_dim": s.eigenspace_dim(Sign::Plus),
                "minus_dim": s.eigenspace_dim(Sign::Minus),
            });
            if cli.json {
                println!("{out}");
            } else {
                println!(
                    "generators {}  relation rank {}  quotient {}  (+) {}  (-) {}",
                    out["generators"], out["relation_rank"], out["quotient_dim"],
                    out["plus_dim"], out["minus_dim"]
                );
            }
            Ok(true)
        }
        SymbolsCommand::Hecke { level, weight, n, r, u, v } => {
            check_range(*level, *weight)?;
            let s = SymbolSpace::build(*level, *weight)?;
            if *weight < 2 || *r > *weight as usize - 2 {
                return Err(Error::InvalidParameter("r must be at most k-2".into()));
            }
            let w = s.vector(s.generator(*r, *u, *v));
            let image = s.hecke_tn(&w, *n)?;
            let terms = symbol_terms(&s, &image.reduced);
            if cli.json {
                println!("{}", json!({ "n": n, "reduced": terms }));
            } else if terms.is_empty() {
                println!("0");
            } else {
                let text: Vec<String> = terms
                    .iter()
                    .map(|(c, g)| format!("{c}*{g}"))
                    .collect();
                println!("{}", text.join(" + "));
            }
            Ok(true)
        }
    }
}

fn symbol_terms(s: &SymbolSpace, v: &SparseVec) -> Vec<(String, String)> {
    let deg = s.weight() as usize - 2;
    v.iter()
        .map(|(idx, c)| {
            let (i, (u, w)) = s.decode(idx);
            (format_rational(c), format!("x^{i}y^{}({u},{w})", deg - i))
        })
        .collect()
}

fn lattice(cli: &Cli, command: &LatticeCommand) -> Result<bool> {
    match command {
        LatticeCommand::Hp { p } => {
            if !is_prime(*p) || *p > 97 {
                return Err(Error::InvalidParameter("p must be a prime at most 97".into()));
            }
            let mut emitted = Vec::new();
            let mut rows = Vec::new();
            for s in sublattices_index_p(*p)? {
                let segs = s.boundary_segments();
                rows.push(json!({
                    "lattice": s.to_string(),
                    "segments": segs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }));
                emitted.extend(segs);
            }
            emitted.sort();
            let mut expect = enumerate_h(*p);
            expect.sort();
            let verdict = emitted == expect;
            if cli.json {
                println!("{}", json!({ "p": p, "lattices": rows, "bijection": verdict }));
            } else {
                for row in &rows {
                    println!("{}  {}", row["lattice"].as_str().unwrap_or(""), row["segments"]);
                }
                println!("bijection with H({p}): {verdict}");
            }
            Ok(verdict)
        }
        LatticeCommand::Threads { d } => {
            if *d == 0 || *d > 500 {
                return Err(Error::InvalidParameter("d must be in 1..=500".into()));
            }
            let ts = threads(*d);
            if cli.json {
                let rows: Vec<Vec<String>> = ts
                    .iter()
                    .map(|t| t.iter().map(ToString::to_string).collect())
                    .collect();
                println!("{}", json!({ "d": d, "threads": rows }));
            } else {
                for t in &ts {
                    let text: Vec<String> = t.iter().map(ToString::to_string).collect();
                    println!("{}", text.join(" -> "));
                }
            }
            Ok(true)
        }
    }
}

fn verify(cli: &Cli, command: &VerifyCommand) -> Result<bool> {
    let start = Instant::now();
    let profile = if cli.fast { Profile::Fast } else { Profile::Full };
    match command {
        VerifyCommand::Main { level, weight } => {
            check_range(*level, *weight)?;
            let eta: Vec<(u64, i64)> = match (level, weight) {
                (7, 3) => vec![(1, 3), (7, 3)],
                (5, 4) => vec![(1, 4), (5, 4)],
                _ => {
                    return Err(Error::Unsupported(
                        "newform oracle available for (7,3) and (5,4)".into(),
                    ))
                }
            };
            let order = check_order(cli.order_override.unwrap_or(40))?;
            let f = eta_product(&eta, order)?;
            let verdict = check_newform_membership(*level, *weight, &f, order)?.is_some();
            emit_verdict(cli, "main", json!({"level": level, "weight": weight, "order": order}), verdict, start);
            Ok(verdict)
        }
        VerifyCommand::Mumap { level, weight } => {
            check_range(*level, *weight)?;
            let order = check_order(cli.order_override.unwrap_or(sturm_bound(*level, *weight) + 24))?;
            let verdict = check_mumap_all(*level, *weight, order)?;
            emit_verdict(cli, "mumap", json!({"level": level, "weight": weight, "order": order}), verdict, start);
            Ok(verdict)
        }
        VerifyCommand::Hecke { level, weight, p } => {
            check_range(*level, *weight)?;
            if !is_prime(*p) {
                return Err(Error::InvalidParameter(format!("{p} is not prime")));
            }
            let space = SymbolSpace::build(*level, *weight)?;
            let order = check_order(cli.order_override.unwrap_or(sturm_bound(*level, *weight) + 10))?;
            let samples = if cli.fast { 5 } else { 10 };
            let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(2024);
            let mut verdict = true;
            for _ in 0..samples {
                let w = random_symbol(&space, &mut rng);
                verdict &= check_hecke_equivariance(&space, *p, &w, order)?;
            }
            emit_verdict(
                cli,
                "hecke",
                json!({"level": level, "weight": weight, "p": p, "order": order, "samples": samples}),
                verdict,
                start,
            );
            Ok(verdict)
        }
        VerifyCommand::Firstapprox { level, weight, dmax } => {
            check_range(*level, *weight)?;
            let space = SymbolSpace::build(*level, *weight)?;
            let verdict = check_firstapprox(&space, *dmax)
                && (1..=*dmax).try_fold(true, |acc, n| Ok::<_, Error>(acc && check_tn_r01(&space, n)?))?;
            emit_verdict(cli, "firstapprox", json!({"level": level, "weight": weight, "dmax": dmax}), verdict, start);
            Ok(verdict)
        }
        VerifyCommand::Abcd { pmax } => {
            if *pmax > 97 {
                return Err(Error::InvalidParameter("pmax must be at most 97".into()));
            }
            let mut verdict = true;
            for p in (2..=*pmax).filter(|&p| is_prime(p)) {
                let mut got: Vec<_> = sublattices_index_p(p)?
                    .iter()
                    .flat_map(|s| s.boundary_segments())
                    .collect();
                got.sort();
                let mut expect = enumerate_h(p);
                expect.sort();
                verdict &= got == expect;
            }
            emit_verdict(cli, "abcd", json!({"pmax": pmax}), verdict, start);
            Ok(verdict)
        }
        VerifyCommand::All => {
            let mut outcomes: Vec<Outcome> = criteria()
                .iter()
                .map(|c| run_criterion(c, profile))
                .collect();
            outcomes.sort_by(|a, b| a.check.cmp(&b.check));
            let verdict = outcomes.iter().all(|o| o.verdict);
            if cli.json {
                let entries: Vec<Report> = outcomes
                    .iter()
                    .map(|o| Report {
                        check: o.check.clone(),
                        params: json!({ "name": o.params, "detail": o.detail }),
                        verdict: o.verdict,
                        elapsed: o.elapsed,
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "check": "all", "params": {"profile": profile}, "verdict": verdict,
                            "elapsed": start.elapsed().as_secs_f64(), "entries": entries })
                );
            } else {
                for o in &outcomes {
                    println!(
                        "{} {}: {} [{}]",
                        if o.verdict { "PASS" } else { "FAIL" },
                        o.check,
                        o.params,
                        o.detail
                    );
                }
            }
            Ok(verdict)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(run(["toricmf", "series", "--level", "5", "--weight", "1", "--a", "1", "--order", "5"]), 0);
        assert_eq!(run(["toricmf", "series", "--level", "5"]), 2);
        assert_eq!(run(["toricmf", "bogus"]), 2);
        assert_eq!(run(["toricmf", "series", "--level", "0", "--weight", "1"]), 2);
        assert_eq!(run(["toricmf", "lattice", "hp", "--p", "4"]), 2);
        assert_eq!(run(["toricmf", "lattice", "hp", "--p", "3"]), 0);
        assert_eq!(run(["toricmf", "--json", "verify", "abcd", "--pmax", "7"]), 0);
        assert_eq!(run(["toricmf", "symbols", "dims", "--level", "5", "--weight", "3"]), 0);
    }
}
