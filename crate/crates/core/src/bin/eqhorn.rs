//! Command-line front end. Every invocation prints one JSON document
//! (or plain text with `--human`). Exit codes: 0 success, 1 a check or
//! internal invariant failed, 2 bad usage or malformed input.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqhorn::coefficient::{eq_coef, eq_nonzero_with_rows, graham_decompose, lr_coef};
use eqhorn::horn::{classical_feasible, majorized_feasible, triples, Family, FeasibilityReport, Violation};
use eqhorn::verify::{classical_horn_suite, horn_suite, oracle_suite, saturation_suite, SuiteReport};
use eqhorn::{Error, Partition, RealSpectrum};

#[derive(Parser)]
#[command(name = "eqhorn", version, about = "Equivariant Littlewood-Richardson coefficients and Horn inequalities")]
struct Cli {
    /// Print plain text instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoefKind {
    Classical,
    Equivariant,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Classical,
    Majorized,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    LrPositive,
    Sdr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Saturation,
    Horn,
    Oracle,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Structure coefficient of (λ, μ, ν).
    Coef {
        kind: CoefKind,
        #[arg(short = 'l', allow_hyphen_values = true)]
        lambda: String,
        #[arg(short = 'm')]
        mu: String,
        #[arg(short = 'n')]
        nu: String,
        /// Rows of the ambient rectangle; defaults to the length of ν.
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Whether the equivariant coefficient is nonzero.
    Nonzero {
        #[arg(short = 'l')]
        lambda: String,
        #[arg(short = 'm')]
        mu: String,
        #[arg(short = 'n')]
        nu: String,
        #[arg(long)]
        rows: Option<usize>,
        /// Include a witness tableau and its weight.
        #[arg(long)]
        witness: bool,
    },
    /// Eigenvalue feasibility for spectra x, y, z.
    Feasible {
        problem: Problem,
        #[arg(short = 'x', allow_hyphen_values = true)]
        x: String,
        #[arg(short = 'y', allow_hyphen_values = true)]
        y: String,
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
    },
    /// Horn triples of d-subsets of [r].
    Triples {
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'r')]
        r: usize,
        #[arg(long, value_enum, default_value = "lr-positive")]
        family: FamilyArg,
    },
    /// Exhaustive consistency checks.
    Verify {
        suite: Suite,
        /// Shape bound for the saturation and oracle suites, as RxC.
        #[arg(long = "box", default_value = "2x2")]
        bounds: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        stretch: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long, default_value_t = 3)]
        max_part: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Coef { .. } => "coef",
            Command::Nonzero { .. } => "nonzero",
            Command::Feasible { .. } => "feasible",
            Command::Triples { .. } => "triples",
            Command::Verify { .. } => "verify",
        }
    }
}

/// What a command produced: the result, an optional certificate, a
/// human-readable rendering, and whether every check passed.
struct Outcome {
    result: Value,
    certificate: Option<Value>,
    text: String,
    ok: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) | Error::Calibration(_) | Error::NotTranslationInvariant | Error::Checksum { .. } => 1,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::NotWeaklyDecreasing(_) => "not-weakly-decreasing",
        Error::DoesNotFit { .. } => "does-not-fit",
        Error::IndexOutOfRange { .. } => "index-out-of-range",
        Error::AmbientMismatch { .. } => "ambient-mismatch",
        Error::LengthMismatch { .. } => "length-mismatch",
        Error::Precondition(_) => "precondition",
        Error::Calibration(_) => "calibration",
        Error::NotTranslationInvariant => "not-translation-invariant",
        Error::Internal(_) => "internal",
        Error::Checksum { .. } => "checksum",
        Error::Io(_) => "io",
    }
}

fn partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn spectrum(s: &str) -> Result<RealSpectrum, Error> {
    s.parse()
}

fn parse_box(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("expected RxC, got {s:?}"));
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
}

fn integer_json(n: &num_bigint::BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn feasibility_outcome(report: FeasibilityReport) -> Outcome {
    let text = match &report.violation {
        None => format!("feasible ({} inequalities checked)", report.checked_count),
        Some(Violation::Trace { lhs, rhs, required }) => {
            format!("infeasible: trace {lhs} must be {required} {rhs}")
        }
        Some(Violation::Inequality { triple, x_sum, y_sum, z_sum, .. }) => {
            format!("infeasible: {triple} gives {x_sum} + {y_sum} < {z_sum}")
        }
    };
    Outcome {
        result: json!({ "feasible": report.feasible, "checked_count": report.checked_count }),
        certificate: report.violation.as_ref().map(|v| json!(v)),
        text,
        ok: true,
    }
}

fn suites_outcome(reports: Vec<SuiteReport>) -> Outcome {
    let ok = reports.iter().all(|r| r.passed);
    let text = reports
        .iter()
        .map(|r| {
            let mut line = format!(
                "{}: {} ({} checked, {} failures)",
                r.suite,
                if r.passed { "pass" } else { "FAIL" },
                r.checked,
                r.failure_count
            );
            for f in &r.failures {
                line.push_str(&format!("\n  {f}"));
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n");
    Outcome {
        result: json!({ "passed": ok, "suites": reports }),
        certificate: None,
        text,
        ok,
    }
}

fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Coef { kind, lambda, mu, nu, rows } => {
            let (l, m, n) = (partition(lambda)?, partition(mu)?, partition(nu)?);
            match kind {
                CoefKind::Classical => {
                    let c = lr_coef(&l, &m, &n);
                    Ok(Outcome {
                        result: integer_json(&c),
                        certificate: None,
                        text: c.to_string(),
                        ok: true,
                    })
                }
                CoefKind::Equivariant => {
                    let r = rows.unwrap_or(n.length().max(1));
                    let c = eq_coef(&l, &m, &n, r)?;
                    let g = graham_decompose(&c)?;
                    let mut result = c.to_json_value(Some(&g));
                    result["text"] = json!(c.to_string());
                    result["rows"] = json!(r);
                    Ok(Outcome {
                        text: format!("{c}\nin y: {}", g.display_with("y")),
                        result,
                        certificate: None,
                        ok: true,
                    })
                }
            }
        }
        Command::Nonzero { lambda, mu, nu, rows, witness } => {
            let (l, m, n) = (partition(lambda)?, partition(mu)?, partition(nu)?);
            let r = rows.unwrap_or(n.length().max(1));
            if r < n.length() {
                return Err(Error::Precondition(format!("{r} rows cannot hold ({n})")));
            }
            let report = eq_nonzero_with_rows(&l, &m, &n, r);
            let mut text = report.nonzero.to_string();
            let certificate = if *witness && report.nonzero {
                let t = report.witness.as_ref().expect("nonzero report carries a witness");
                let w = report.witness_weight().expect("nonzero report carries a witness");
                let factors: Vec<String> = t
                    .weight_factors()?
                    .into_iter()
                    .map(|(_, p, q)| format!("t_{p} - t_{q}"))
                    .collect();
                text.push_str(&format!("\n{}weight: ({})", t.render(), factors.join(")(")));
                Some(json!({
                    "tableau": t.render(),
                    "weight": &w,
                    "weight_factors": factors,
                }))
            } else {
                None
            };
            Ok(Outcome {
                result: json!(report.nonzero),
                certificate,
                text,
                ok: true,
            })
        }
        Command::Feasible { problem, x, y, z } => {
            let (x, y, z) = (spectrum(x)?, spectrum(y)?, spectrum(z)?);
            let report = match problem {
                Problem::Classical => classical_feasible(&x, &y, &z)?,
                Problem::Majorized => majorized_feasible(&x, &y, &z)?,
            };
            Ok(feasibility_outcome(report))
        }
        Command::Triples { d, r, family } => {
            let family = match family {
                FamilyArg::LrPositive => Family::LrPositive,
                FamilyArg::Sdr => Family::Sdr,
            };
            let table = triples(*d, *r, family)?;
            let text = table
                .iter()
                .map(|t| format!("{t} {}", t.kind))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                result: json!({ "count": table.len(), "triples": *table }),
                certificate: None,
                text,
                ok: true,
            })
        }
        Command::Verify { suite, bounds, stretch, rows, max_part, trials, seed } => {
            let (br, bc) = parse_box(bounds)?;
            let mut reports = Vec::new();
            let wants = |s: Suite| *suite == s || *suite == Suite::All;
            if wants(Suite::Saturation) {
                reports.push(saturation_suite(br, bc, stretch));
            }
            if wants(Suite::Horn) {
                reports.push(horn_suite(*rows, *max_part)?);
                reports.push(classical_horn_suite(*rows, *max_part)?);
            }
            if wants(Suite::Oracle) {
                reports.push(oracle_suite(br, bc, *trials, *seed)?);
            }
            Ok(suites_outcome(reports))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = json!({
                "status": "error",
                "error": { "kind": "usage", "message": e.to_string().trim_end() },
            });
            println!("{doc}");
            return ExitCode::from(2);
        }
    };

    let start = Instant::now();
    let name = cli.command.name();
    let outcome = run(&cli.command);
    let timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    match outcome {
        Ok(out) => {
            if cli.human {
                println!("{}", out.text);
            } else {
                let mut doc = json!({
                    "status": if out.ok { "ok" } else { "failed" },
                    "command": name,
                    "result": out.result,
                    "timing_ms": timing_ms,
                });
                if let Some(c) = out.certificate {
                    doc["certificate"] = c;
                }
                println!("{doc}");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.human {
                eprintln!("error: {e}");
            } else {
                let doc = json!({
                    "status": "error",
                    "command": name,
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                    "timing_ms": timing_ms,
                });
                println!("{doc}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
