//! `comsc`: generate, classify and measure sign-vector systems, and run the
//! compression scheme on them.
//!
//! Exit codes: 0 success, 1 a verified property failed, 2 bad input or
//! usage, 3 an enumeration cap was hit. Payloads go to stdout as JSON,
//! diagnostics to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use comsc_core::catalog::catalog;
use comsc_core::generators::{com_from_arrangement, Arrangement};
use comsc_core::lemmas::{run_all, run_suite};
use comsc_core::scheme::Scheme;
use comsc_core::vcdim::{shattered_sets, vc_dimension};
use comsc_core::{ElementSet, Error, SignSystem, TopeGraph};

#[derive(Parser)]
#[command(
    name = "comsc",
    version,
    about = "Sample compression for complexes of oriented matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArg {
    /// Sign-system JSON file
    system: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Build the sign system of a hyperplane arrangement
    Gen {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write a named instance
    Catalog {
        name: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Classify the system and check its tope graph
    Verify(SystemArg),
    /// VC-dimension with a witness
    Vcdim(SystemArg),
    /// Tope graph as an edge list
    Graph {
        #[command(flatten)]
        sys: SystemArg,
        /// Emit JSON instead of "T1 T2 e" lines
        #[arg(long)]
        json: bool,
    },
    /// Compress a sample
    Compress {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        sample: String,
    },
    /// Reconstruct a tope from a label
    Reconstruct {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        label: String,
    },
    /// Check compression followed by reconstruction
    Roundtrip {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long, conflicts_with = "all")]
        sample: Option<String>,
        /// Every realizable sample (the default)
        #[arg(long)]
        all: bool,
    },
    /// Run the invariant suites
    Lemmas {
        #[command(flatten)]
        sys: SystemArg,
        /// Run only this suite
        #[arg(long)]
        suite: Option<String>,
    },
}

/// What a command produced: the payload and whether its property held.
enum Outcome {
    Json(Value, bool),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Json(v, ok)) => {
            let text = serde_json::to_string_pretty(&v).unwrap_or_default();
            out(&(text + "\n"));
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Ok(Outcome::Text(s)) => {
            out(&s);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::Resource { .. }) {
                3
            } else {
                2
            })
        }
    }
}

/// A closed pipe (`comsc ... | head`) is not an error worth a panic.
fn out(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load(arg: &SystemArg) -> Result<SignSystem, Error> {
    SignSystem::from_json(&read(&arg.system)?)
}

fn labels(m: &SignSystem, d: ElementSet) -> Vec<&str> {
    d.iter().map(|e| m.label(e)).collect()
}

/// Writes the system to `out` and returns a short summary, or returns the
/// system itself when there is no output path.
fn emit(m: &SignSystem, out: Option<&Path>) -> Result<Outcome, Error> {
    let text = m.to_json();
    let Some(out) = out else {
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(e.to_string()))?;
        return Ok(Outcome::Json(v, true));
    };
    fs::write(out, text + "\n")
        .map_err(|e| Error::Input(format!("cannot write {}: {e}", out.display())))?;
    Ok(Outcome::Json(
        json!({
            "output": out.display().to_string(),
            "elements": m.ground().len(),
            "covectors": m.covectors().len(),
            "topes": m.topes().len(),
        }),
        true,
    ))
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Gen {
            arrangement,
            output,
        } => {
            let arr = Arrangement::from_json(&read(&arrangement)?)?;
            emit(&com_from_arrangement(&arr)?, output.as_deref())
        }
        Command::Catalog { name, output } => emit(&catalog(&name)?, output.as_deref()),
        Command::Verify(sys) => {
            let m = load(&sys)?;
            let c = m.classify();
            let g = TopeGraph::build(&m).ok();
            let partial_cube = g.as_ref().map(|g| g.is_partial_cube());
            let convex = g.as_ref().map(|g| g.halfspaces_convex());
            let ok = c.simple && c.com && partial_cube == Some(true) && convex == Some(true);
            for v in &c.violations {
                eprintln!("{}: {} [{}]", v.axiom, v.detail, v.witnesses.join(", "));
            }
            Ok(Outcome::Json(
                json!({
                    "classification": c,
                    "partial_cube": partial_cube,
                    "halfspaces_convex": convex,
                }),
                ok,
            ))
        }
        Command::Vcdim(sys) => {
            let m = load(&sys)?;
            let g = TopeGraph::build(&m)?;
            let d = vc_dimension(&g);
            let witness = shattered_sets(g.vertices(), g.ground(), d)
                .first()
                .map(|w| labels(&m, *w))
                .unwrap_or_default();
            Ok(Outcome::Json(json!({ "vcd": d, "witness": witness }), true))
        }
        Command::Graph { sys, json } => {
            let m = load(&sys)?;
            let g = TopeGraph::build(&m)?;
            if !json {
                return Ok(Outcome::Text(g.edge_list()));
            }
            let vertices: Vec<String> = g.vertices().iter().map(|v| m.format_vector(v)).collect();
            let edges: Vec<Value> = g
                .edges()
                .into_iter()
                .map(|(u, v, e)| json!([vertices[u], vertices[v], m.label(e)]))
                .collect();
            Ok(Outcome::Json(
                json!({ "vertices": vertices, "edges": edges }),
                true,
            ))
        }
        Command::Compress { sys, sample } => {
            let m = load(&sys)?;
            let s = m.parse_vector(&sample)?;
            let c = Scheme::new(&m)?.alpha(&s)?;
            Ok(Outcome::Json(
                Value::String(m.format_vector(&c.value)),
                true,
            ))
        }
        Command::Reconstruct { sys, label } => {
            let m = load(&sys)?;
            let c = m.parse_vector(&label)?;
            match Scheme::new(&m)?.beta(&c) {
                Ok(t) => Ok(Outcome::Json(Value::String(m.format_vector(&t)), true)),
                Err(Error::Reconstruction(msg)) => {
                    eprintln!("reconstruction error: {msg}");
                    Ok(Outcome::Json(json!({ "reconstruction_error": msg }), false))
                }
                Err(e) => Err(e),
            }
        }
        Command::Roundtrip {
            sys,
            sample,
            all: _,
        } => {
            let m = load(&sys)?;
            let mut scheme = Scheme::new(&m)?;
            if let Some(sample) = sample {
                let s = m.parse_vector(&sample)?;
                return Ok(match scheme.check(&s) {
                    Some(f) => {
                        eprintln!("{}: {}", f.sample, f.reason);
                        Outcome::Json(json!({ "proper": false, "counterexample": f }), false)
                    }
                    None => {
                        let c = scheme.alpha(&s)?.value;
                        let t = scheme.beta(&c)?;
                        Outcome::Json(
                            json!({
                                "proper": true,
                                "sample": m.format_vector(&s),
                                "label": m.format_vector(&c),
                                "reconstruction": m.format_vector(&t),
                            }),
                            true,
                        )
                    }
                });
            }
            let rep = scheme.verify()?;
            eprintln!("{}", rep.summary());
            let ok = rep.passed();
            Ok(Outcome::Json(
                json!({
                    "summary": rep.summary(),
                    "samples": rep.samples,
                    "vcd": rep.vcd,
                    "max_label_size": rep.max_label_size,
                    "first_counterexample": rep.failures.first(),
                    "failures": rep.failures.len(),
                }),
                ok,
            ))
        }
        Command::Lemmas { sys, suite } => {
            let m = load(&sys)?;
            let reports = match suite {
                Some(name) => vec![run_suite(&m, &name)?],
                None => run_all(&m)?,
            };
            for r in &reports {
                eprintln!(
                    "{:<16} {:?} ({} checks, {} ms)",
                    r.name, r.status, r.checks, r.millis
                );
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(Outcome::Json(
                json!({ "passed": ok, "suites": reports }),
                ok,
            ))
        }
    }
}
