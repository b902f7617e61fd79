//! Command-line front end for the ellipse negative-pedal geometry library.
//!
//! Subcommands: `compute` (JSON/CSV of one configuration), `verify` (the full
//! invariant suite with pass/fail lines), `render` (deterministic SVG
//! figures), `sweep` (CSV over pole or rotation-angle sweeps).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod compute;
mod config;
mod output;
mod svg;
mod sweep;

use clap::{Parser, Subcommand, ValueEnum};
use ellipse_npc::verify::{run_all, run_selected, VerifyConfig};
use serde::Serialize;

use config::CommonOpts;

#[derive(Parser)]
#[command(
    name = "ellipse-npc",
    about = "Negative pedal curves of an ellipse: compute, verify, render, sweep",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the derived configuration for one pole (JSON) or curve samples (CSV).
    Compute {
        #[command(flatten)]
        common: CommonOpts,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the verification suite and report one pass/fail line per check.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Only reproduce the special aspect-ratio area table.
        #[arg(long)]
        table1: bool,
    },
    /// Render one figure as a standalone SVG.
    Render {
        #[command(flatten)]
        common: CommonOpts,
        /// Figure name.
        #[arg(long)]
        figure: String,
    },
    /// Emit per-pole (or per-angle, with --theta) rows of the key scalars.
    Sweep {
        #[command(flatten)]
        common: CommonOpts,
    },
}

#[derive(Serialize)]
struct CheckDoc {
    anchor: String,
    max_residual: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(Serialize)]
struct ReportDoc {
    schema: u32,
    a: f64,
    b: f64,
    seed: u64,
    sweep: usize,
    samples: usize,
    passed: usize,
    failed: usize,
    checks: Vec<CheckDoc>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Compute { common, format } => {
            let cfg = common.validate().map_err(|e| e.to_string())?;
            let bytes = match format {
                Format::Json => output::to_json_bytes(&compute::compute_doc(&cfg)),
                Format::Csv => compute::compute_csv(&cfg),
                Format::Svg => {
                    return Err("compute emits json or csv; use the render subcommand for svg".into())
                }
            };
            output::write_out(&cfg.out, &bytes).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Verify { common, table1 } => {
            let cfg = common.validate().map_err(|e| e.to_string())?;
            let vcfg = VerifyConfig {
                a: cfg.a,
                b: cfg.b,
                samples: cfg.samples,
                sweep: cfg.sweep,
                tol: cfg.tol,
                seed: cfg.seed,
            };
            let report = if table1 {
                print_table1();
                run_selected(&vcfg, Some("area/special-ratios"))
            } else {
                run_all(&vcfg)
            };
            for c in &report.checks {
                println!(
                    "{} {:<28} max_residual={:.3e} tolerance={:.1e}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.anchor,
                    c.max_residual,
                    c.tolerance
                );
            }
            println!(
                "{} checks passed, {} failed (a={}, b={}, seed={})",
                report.passed_count(),
                report.failed_count(),
                report.a,
                report.b,
                report.seed
            );
            if cfg.out != "-" {
                let doc = ReportDoc {
                    schema: 1,
                    a: report.a,
                    b: report.b,
                    seed: report.seed,
                    sweep: report.sweep,
                    samples: report.samples,
                    passed: report.passed_count(),
                    failed: report.failed_count(),
                    checks: report
                        .checks
                        .iter()
                        .map(|c| CheckDoc {
                            anchor: c.anchor.to_string(),
                            max_residual: c.max_residual,
                            tolerance: c.tolerance,
                            passed: c.passed,
                        })
                        .collect(),
                };
                output::write_out(&cfg.out, &output::to_json_bytes(&doc)).map_err(|e| e.to_string())?;
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Render { common, figure } => {
            let cfg = common.validate().map_err(|e| e.to_string())?;
            let name = figure.replace('_', "-");
            let bytes = svg::render_figure(&name, &cfg)?;
            let path = if cfg.out == "-" {
                format!("{name}.svg")
            } else {
                cfg.out.clone()
            };
            output::write_out(&path, &bytes).map_err(|e| e.to_string())?;
            eprintln!("wrote {path}");
            Ok(0)
        }
        Command::Sweep { common } => {
            let cfg = common.validate().map_err(|e| e.to_string())?;
            if cfg.sweep < 2 {
                return Err("sweep needs at least 2 rows".into());
            }
            let bytes = sweep::sweep_csv(&cfg);
            output::write_out(&cfg.out, &bytes).map_err(|e| e.to_string())?;
            Ok(0)
        }
    }
}

/// The special aspect-ratio table: deltoid-to-ellipse area ratios.
fn print_table1() {
    println!("aspect ratio a/b    deltoid/ellipse area ratio");
    for (rho, want) in ellipse_npc::verify::special_area_ratios() {
        let e = ellipse_npc::Ellipsef::new(rho, 1.0);
        let got = ellipse_npc::deltoid_area(&e) / e.area();
        println!("{rho:<19.10} {got:<12.10} (expected {want})");
    }
}
