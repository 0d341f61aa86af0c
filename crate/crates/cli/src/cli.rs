//! Argument parsing and dispatch. Exit codes: 0 pass, 1 check failure,
//! 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use adskit_algebra::roots::Weight;
use adskit_geometry::parse_active;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::demo;
use crate::dump::{dump, Format, What};
use crate::suites::{run_verify, Options, Suite};

pub const PASS: u8 = 0;
pub const FAIL: u8 = 1;
pub const USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "adskit", about = "Exact checks for the so(2,3) frame geometry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Polynomial degree of the seeded potentials (at most 3).
    #[arg(long, default_value_t = 2)]
    degree: u32,
    /// Coordinates the potentials depend on, e.g. `t,x,a`.
    #[arg(long, default_value = "t,x,a")]
    active: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites; `all` or no suite runs everything.
    Verify {
        #[arg(value_enum)]
        suites: Vec<Suite>,
        #[command(flatten)]
        gen: GenArgs,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a table, the roots or a weight diagram.
    Dump {
        #[arg(value_enum)]
        what: What,
        /// Highest weight `q,s` for `weights`.
        #[arg(long)]
        highest: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Demo {
        #[command(subcommand)]
        kind: DemoKind,
    },
}

#[derive(Debug, Subcommand)]
enum DemoKind {
    /// Seeded connection: field components, reduced curvature and identities.
    Geometry {
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Plane-wave spectrum and residuals for a momentum `p_t,…,p_k`.
    Dirac {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Radius of curvature from a cosmological constant.
    Cosmo {
        /// |Λ| in m⁻².
        #[arg(long)]
        lambda: f64,
        /// Speed of light in m/s.
        #[arg(long, default_value_t = 2.998e8)]
        c: f64,
    },
}

fn options(gen: &GenArgs) -> Result<Options, String> {
    let active = parse_active(&gen.active).map_err(|e| e.to_string())?;
    let opts = Options { seed: gen.seed, degree: gen.degree, active };
    opts.validate().map_err(|e| e.to_string())?;
    Ok(opts)
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("ADSKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| format!("ADSKIT_THREADS must be a positive integer, got {v:?}"))?;
    // a pool already built in this process keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Run the CLI on `args` (program name first) and return the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return USAGE;
    }
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<u8, String> {
    let io = |e: std::io::Error| e.to_string();
    match cmd {
        Command::Verify { suites, gen, json } => {
            let opts = options(&gen)?;
            let report = run_verify(&suites, &opts);
            write!(out, "{}", report.summary_table()).map_err(io)?;
            if let Some(path) = json {
                std::fs::write(&path, report.to_json() + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(if report.passed() { PASS } else { FAIL })
        }
        Command::Dump { what, highest, format } => {
            let h = match highest {
                Some(s) => Some(Weight::parse(&s).ok_or_else(|| format!("cannot parse highest weight {s:?}"))?),
                None => None,
            };
            let text = dump(what, format, h).map_err(|e| e.to_string())?;
            write!(out, "{text}").map_err(io)?;
            Ok(PASS)
        }
        Command::Demo { kind } => match kind {
            DemoKind::Geometry { gen } => {
                let d = demo::geometry_demo(&options(&gen)?).map_err(|e| e.to_string())?;
                writeln!(out, "{}", pretty(&d)).map_err(io)?;
                Ok(if d.report.passed() { PASS } else { FAIL })
            }
            DemoKind::Dirac { p } => {
                let d = demo::dirac_demo(&demo::parse_momentum(&p)?);
                writeln!(out, "{}", pretty(&d)).map_err(io)?;
                Ok(if d.passed() { PASS } else { FAIL })
            }
            DemoKind::Cosmo { lambda, c } => {
                let d = demo::cosmo(lambda, c).map_err(|e| e.to_string())?;
                writeln!(out, "computed r = {:.3e} s", d.computed_r_seconds).map_err(io)?;
                writeln!(out, "quoted r   = {:.3e} s", d.quoted_r_seconds).map_err(io)?;
                if d.discrepancy {
                    writeln!(out, "discrepancy: computed/quoted = {:.2}", d.ratio_computed_to_quoted).map_err(io)?;
                }
                writeln!(out, "{}", pretty(&d)).map_err(io)?;
                Ok(PASS)
            }
        },
    }
}
