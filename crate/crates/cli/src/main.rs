//! resonance-lab: enumerate combinatorial state spaces, compute orbit
//! structures, verify resonance, and run the theorem suites.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on usage or domain errors (with a machine-readable JSON object on
//! standard error).

use clap::{Args, Parser, Subcommand};
use resonance_core::registry::{
    default_action, default_map, orbit_report, resonance_full_report, Caps, DomainSpec,
};
use resonance_core::suites::{run_suite, SUITE_NAMES};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "resonance-lab", version, about = "Exhaustive combinatorial dynamics runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DomainArgs {
    /// Chain-product box, e.g. --box 2,2,2
    #[arg(long = "box", value_name = "A,B,C")]
    box_dims: Option<String>,

    /// Rectangular tableau shape, e.g. --inc 4x4 (requires --q)
    #[arg(long = "inc", value_name = "AxB")]
    inc: Option<String>,

    /// Entry bound for --inc
    #[arg(long)]
    q: Option<u8>,

    /// Fully-packed loop order, e.g. --fpl 5
    #[arg(long)]
    fpl: Option<u8>,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Number of worker threads (default: all cores)
    #[arg(long)]
    workers: Option<usize>,

    /// State-space cap (overrides RESONANCE_LAB_CAP)
    #[arg(long)]
    cap: Option<usize>,

    /// Write the report here instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit structure of an action over a state space
    Orbits {
        #[command(flatten)]
        domain: DomainArgs,
        /// Action name (rowmotion | promotion | gyration | kpro)
        #[arg(long)]
        action: Option<String>,
        /// Emit CSV instead of JSON
        #[arg(long)]
        csv: bool,
        /// Append a text histogram of orbit sizes to standard output
        #[arg(long)]
        hist: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Resonance verification for a built-in projection
    Resonance {
        #[command(flatten)]
        domain: DomainArgs,
        /// Projection name (con | xmax | linkpattern)
        #[arg(long)]
        map: Option<String>,
        /// Claimed frequency (defaults to the natural one)
        #[arg(long)]
        freq: Option<u64>,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        hist: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a named theorem suite
    Verify {
        /// One of: brouwer-schrijver, height2, kpro-orders,
        /// conjecture-height3, cfdf-improved, trifold, intertwining, wieland
        #[arg(long)]
        suite: String,
        /// Size bound for suites parameterized by a maximum
        #[arg(long)]
        max: Option<u32>,
        /// Box for suites parameterized by boxes (repeatable)
        #[arg(long = "box", value_name = "A,B,C")]
        boxes: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

fn parse_box(s: &str) -> Result<Vec<u32>, String> {
    let dims: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    dims.map_err(|e| format!("bad box '{s}': {e}"))
}

fn parse_domain(d: &DomainArgs) -> Result<DomainSpec, String> {
    match (&d.box_dims, &d.inc, d.fpl) {
        (Some(b), None, None) => Ok(DomainSpec::Box(parse_box(b)?)),
        (None, Some(shape), None) => {
            let (rows, cols) = shape
                .split_once(['x', 'X'])
                .ok_or_else(|| format!("bad shape '{shape}', expected AxB"))?;
            let rows = rows.trim().parse::<u8>().map_err(|e| e.to_string())?;
            let cols = cols.trim().parse::<u8>().map_err(|e| e.to_string())?;
            let q = d.q.ok_or("--inc requires --q")?;
            Ok(DomainSpec::Inc { rows, cols, q })
        }
        (None, None, Some(n)) => Ok(DomainSpec::Fpl(n)),
        _ => Err("specify exactly one of --box, --inc, --fpl".into()),
    }
}

fn caps_for(run: &RunArgs) -> Caps {
    let mut caps = Caps::from_env();
    if let Some(cap) = run.cap {
        caps.ideals = cap;
    }
    caps
}

fn emit(run: &RunArgs, body: &str) -> Result<(), String> {
    match &run.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            print!("{body}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
    }
}

fn fail(kind: &str, message: String) -> ExitCode {
    let err = serde_json::json!({ "error": { "kind": kind, "message": message } });
    eprintln!("{err}");
    ExitCode::from(2)
}

fn error_kind(e: &resonance_core::Error) -> &'static str {
    use resonance_core::Error::*;
    match e {
        InvalidSpec(_) => "invalid-spec",
        IndexOutOfRange { .. } => "index-out-of-range",
        ResourceLimit { .. } => "resource-limit",
        InvalidExtension(_) => "invalid-extension",
        NotRanked => "not-ranked",
        DimensionMismatch(_) => "dimension-mismatch",
        InvalidSweep(_) => "invalid-sweep",
        LabelRange { .. } => "label-range",
        Shape(_) => "shape",
        InvalidTableau(_) => "invalid-tableau",
        InvalidConfig(_) => "invalid-configuration",
        ContractViolation(_) => "contract-violation",
        UnknownName(_) => "unknown-name",
        Serde(_) => "serialization",
    }
}

fn install_pool(workers: Option<usize>) -> Result<(), String> {
    if let Some(n) = workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Orbits {
            domain,
            action,
            csv,
            hist,
            run,
        } => {
            if let Err(e) = install_pool(run.workers) {
                return fail("workers", e);
            }
            let spec = match parse_domain(&domain) {
                Ok(s) => s,
                Err(e) => return fail("invalid-spec", e),
            };
            let action = action.unwrap_or_else(|| default_action(&spec).to_string());
            let caps = caps_for(&run);
            match orbit_report(&spec, &action, &caps) {
                Ok(report) => {
                    let body = if csv { report.to_csv() } else { report.to_json() };
                    if let Err(e) = emit(&run, &body) {
                        return fail("io", e);
                    }
                    if hist {
                        print!("{}", report.to_histogram());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(error_kind(&e), e.to_string()),
            }
        }
        Command::Resonance {
            domain,
            map,
            freq,
            csv,
            hist,
            run,
        } => {
            if let Err(e) = install_pool(run.workers) {
                return fail("workers", e);
            }
            let spec = match parse_domain(&domain) {
                Ok(s) => s,
                Err(e) => return fail("invalid-spec", e),
            };
            let map = map.unwrap_or_else(|| default_map(&spec).to_string());
            let caps = caps_for(&run);
            match resonance_full_report(&spec, &map, freq, &caps) {
                Ok(report) => {
                    let body = if csv { report.to_csv() } else { report.to_json() };
                    if let Err(e) = emit(&run, &body) {
                        return fail("io", e);
                    }
                    if hist {
                        print!("{}", report.to_histogram());
                    }
                    let holds = report.resonance.as_ref().is_some_and(|r| r.holds);
                    if holds {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail(error_kind(&e), e.to_string()),
            }
        }
        Command::Verify {
            suite,
            max,
            boxes,
            run,
        } => {
            if let Err(e) = install_pool(run.workers) {
                return fail("workers", e);
            }
            let parsed_boxes = if boxes.is_empty() {
                None
            } else {
                let mut out = Vec::new();
                for b in &boxes {
                    match parse_box(b) {
                        Ok(dims) => out.push(dims),
                        Err(e) => return fail("invalid-spec", e),
                    }
                }
                Some(out)
            };
            let caps = caps_for(&run);
            let started = std::time::Instant::now();
            match run_suite(&suite, max, parsed_boxes, &caps) {
                Ok(report) => {
                    if let Err(e) = emit(&run, &report.to_json()) {
                        return fail("io", e);
                    }
                    for inst in &report.instances {
                        eprintln!(
                            "{}: {} [{}]",
                            inst.name,
                            if inst.pass { "pass" } else { "FAIL" },
                            inst.detail
                        );
                    }
                    eprintln!(
                        "suite {} {} in {:?} (available: {})",
                        report.suite,
                        if report.pass { "passed" } else { "FAILED" },
                        started.elapsed(),
                        SUITE_NAMES.join(", ")
                    );
                    if report.pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail(error_kind(&e), e.to_string()),
            }
        }
    }
}
