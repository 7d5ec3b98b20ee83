//! Command-line front end: parses the manifold DSL, dispatches to the
//! computation modules, and prints text or JSON.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use mfdcalc_core::bundle::{classify_6mfd, pullback_total};
use mfdcalc_core::parser::{parse_expr, parse_group};
use mfdcalc_core::selftest::run_selftest;
use mfdcalc_core::suspension::{surface_pi1, suspend, suspension_homology};
use mfdcalc_core::torus::{q_manifold, spectral_e3_report, torus_tower};
use mfdcalc_core::{Error, FramingIndex, ManifoldExpr};

#[derive(Parser)]
#[command(
    name = "mfdcalc",
    about = "Exact calculator for suspensions, circle/torus bundle total spaces, and \
             classification normal forms of closed oriented manifolds",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress everything but the essential result lines.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its canonical form.
    Eval {
        /// Manifold expression, e.g. "2*SxS(2,3) # W".
        expr: String,
    },
    /// Integral homology, Poincaré polynomial and basic invariants.
    Homology { expr: String },
    /// Apply a suspension and print the rewritten manifold.
    Suspend {
        /// Framing index: 0 (untwisted) or 1 (twisted).
        #[arg(short, long)]
        i: u8,
        expr: String,
    },
    /// Total space of the circle bundle over B # N pulled back from E -> B.
    Pullback {
        /// Total space E (1-connected, dim >= 5).
        #[arg(long)]
        e: String,
        /// Base B with dim(B) = dim(E) - 1.
        #[arg(long)]
        b: String,
        /// Summand N with dim(N) = dim(B).
        #[arg(long)]
        n: String,
    },
    /// Normal form of a 1-connected 6-manifold with a regular circle action,
    /// from its quotient data.
    Classify6 {
        /// H_2 of the quotient, e.g. "Z^2 + Z/3 + Z/3".
        #[arg(long)]
        h2: String,
        /// Whether w2 of the quotient is nonzero (0 or 1).
        #[arg(long)]
        w2: u8,
        /// Whether the Euler class reduces mod 2 to w2 (0 or 1).
        #[arg(long = "euler-eq-w2")]
        euler_eq_w2: u8,
    },
    /// The torus-bundle total space Q_k, optionally cross-checked.
    Qk {
        #[arg(long)]
        k: u32,
        /// Re-derive the Poincaré polynomial from the spectral-sequence
        /// differentials and compare.
        #[arg(long)]
        oracle: bool,
        /// Re-derive the manifold from the iterated circle-bundle tower and
        /// compare.
        #[arg(long)]
        tower: bool,
    },
    /// Fundamental group of the suspension of a genus-g surface.
    #[command(name = "pi1-surface")]
    Pi1Surface {
        #[arg(short, long)]
        g: u32,
        /// Framing index: 0 or 1.
        #[arg(short, long)]
        i: u8,
    },
    /// Run the verification suite and print a pass/fail table.
    Selftest {
        /// Largest k for the torus-bundle checks.
        #[arg(long = "max-k", default_value_t = 8)]
        max_k: u32,
    },
}

fn expr_payload(m: &ManifoldExpr) -> Value {
    let mut v = m.to_json();
    v.as_object_mut()
        .expect("expression json is an object")
        .insert("expr".into(), json!(m.to_string()));
    v
}

fn homology_payload(m: &ManifoldExpr) -> Value {
    json!({
        "expr": m.to_string(),
        "dim": m.dim(),
        "homology": m.homology().to_json(),
        "poincare": m.poincare_poly().to_string(),
        "euler_characteristic": m.euler_characteristic(),
        "w2_nonzero": m.w2_nonzero(),
        "simply_connected": m.is_simply_connected(),
    })
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let out = std::io::stdout();
    match &cli.command {
        Command::Eval { expr } => {
            let m = parse_expr(expr)?;
            if cli.json {
                serde_json::to_writer_pretty(out, &expr_payload(&m)).expect("stdout");
                println!();
            } else {
                println!("{m}");
                if !cli.quiet {
                    println!("dim = {}", m.dim());
                }
            }
        }
        Command::Homology { expr } => {
            let m = parse_expr(expr)?;
            if cli.json {
                serde_json::to_writer_pretty(out, &homology_payload(&m)).expect("stdout");
                println!();
            } else {
                for (d, g) in m.homology().support() {
                    println!("H_{d} = {g}");
                }
                if !cli.quiet {
                    println!("P_t = {}", m.poincare_poly());
                    println!("chi = {}", m.euler_characteristic());
                }
            }
        }
        Command::Suspend { i, expr } => {
            let index = FramingIndex::from_u8(*i)?;
            let m = parse_expr(expr)?;
            let result = suspend(&m, index)?;
            if cli.json {
                let payload = json!({
                    "input": m.to_string(),
                    "index": index.as_u8(),
                    "result": expr_payload(&result),
                    "homology": suspension_homology(&m, index).to_json(),
                });
                serde_json::to_writer_pretty(out, &payload).expect("stdout");
                println!();
            } else {
                println!("{result}");
            }
        }
        Command::Pullback { e, b, n } => {
            let (e, b, n) = (parse_expr(e)?, parse_expr(b)?, parse_expr(n)?);
            let result = pullback_total(&e, &b, &n)?;
            if cli.json {
                let payload = json!({
                    "total": e.to_string(),
                    "base": b.to_string(),
                    "summand": n.to_string(),
                    "result": expr_payload(&result),
                });
                serde_json::to_writer_pretty(out, &payload).expect("stdout");
                println!();
            } else {
                println!("{result}");
            }
        }
        Command::Classify6 {
            h2,
            w2,
            euler_eq_w2,
        } => {
            let h2 = parse_group(h2)?;
            let w2 = match w2 {
                0 => false,
                1 => true,
                v => {
                    return Err(Error::InvalidArgument(format!(
                        "--w2 must be 0 or 1, got {v}"
                    )))
                }
            };
            let euler_eq = match euler_eq_w2 {
                0 => false,
                1 => true,
                v => {
                    return Err(Error::InvalidArgument(format!(
                        "--euler-eq-w2 must be 0 or 1, got {v}"
                    )))
                }
            };
            let m = classify_6mfd(&h2, w2, euler_eq)?;
            if cli.json {
                let payload = json!({
                    "h2": h2.to_json(),
                    "w2": w2,
                    "euler_eq_w2": euler_eq,
                    "result": expr_payload(&m),
                });
                serde_json::to_writer_pretty(out, &payload).expect("stdout");
                println!();
            } else {
                println!("{m}");
            }
        }
        Command::Qk { k, oracle, tower } => {
            let m = q_manifold(*k)?;
            let poly = m.poincare_poly();
            let oracle_result = if *oracle {
                let report = spectral_e3_report(*k)?;
                Some((report.poincare == poly, report))
            } else {
                None
            };
            let tower_result = if *tower {
                let t = torus_tower(*k)?;
                let pass = t == m;
                Some((pass, t))
            } else {
                None
            };
            if cli.json {
                let mut payload = json!({
                    "k": k,
                    "expr": m.to_string(),
                    "poincare": poly.to_string(),
                });
                let obj = payload.as_object_mut().expect("object");
                if let Some((pass, report)) = &oracle_result {
                    obj.insert(
                        "oracle".into(),
                        json!({
                            "pass": pass,
                            "poincare": report.poincare.to_string(),
                            "e3_ranks": report.e3_ranks,
                            "torsion_free": report.torsion_free,
                        }),
                    );
                }
                if let Some((pass, t)) = &tower_result {
                    obj.insert(
                        "tower".into(),
                        json!({"pass": pass, "expr": t.to_string()}),
                    );
                }
                serde_json::to_writer_pretty(out, &payload).expect("stdout");
                println!();
            } else {
                println!("Q_{k} = {m}");
                println!("P_t = {poly}");
                let mut failed = false;
                if let Some((pass, report)) = &oracle_result {
                    println!(
                        "oracle {} ({})",
                        if *pass { "PASS" } else { "FAIL" },
                        report.poincare
                    );
                    failed |= !pass;
                }
                if let Some((pass, t)) = &tower_result {
                    println!("tower {} ({t})", if *pass { "PASS" } else { "FAIL" });
                    failed |= !pass;
                }
                if failed {
                    return Err(Error::InvalidArgument(
                        "cross-check failed; see output above".into(),
                    ));
                }
            }
            if let Some((false, _)) = oracle_result {
                return Err(Error::InvalidArgument("oracle cross-check failed".into()));
            }
            if let Some((false, _)) = tower_result {
                return Err(Error::InvalidArgument("tower cross-check failed".into()));
            }
        }
        Command::Pi1Surface { g, i } => {
            let index = FramingIndex::from_u8(*i)?;
            let p = surface_pi1(*g, index);
            if cli.json {
                let payload = json!({
                    "genus": g,
                    "index": index.as_u8(),
                    "presentation": p.to_json(),
                    "abelianization": p.abelianization().to_json(),
                });
                serde_json::to_writer_pretty(out, &payload).expect("stdout");
                println!();
            } else {
                println!("{p}");
                if !cli.quiet {
                    println!("abelianization = {}", p.abelianization());
                }
            }
        }
        Command::Selftest { max_k } => {
            let results = run_selftest(*max_k);
            let all_pass = results.iter().all(|r| r.pass);
            if cli.json {
                let payload = json!({
                    "max_k": max_k,
                    "pass": all_pass,
                    "results": results
                        .iter()
                        .map(|r| json!({"name": r.name, "pass": r.pass, "detail": r.detail}))
                        .collect::<Vec<_>>(),
                });
                serde_json::to_writer_pretty(out, &payload).expect("stdout");
                println!();
            } else {
                for r in &results {
                    let status = if r.pass { "PASS" } else { "FAIL" };
                    if cli.quiet {
                        println!("{status}  {}", r.name);
                    } else {
                        println!("{status}  {:<28} {}", r.name, r.detail);
                    }
                }
            }
            if !all_pass {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
