//! Command-line front end: `oscigeo describe | check | scan`.
//!
//! Exit codes: 0 success, 2 bad input, 3 I/O failure, 4 closed-form /
//! engine conflict under `--strict`.

use clap::{Args, Parser, Subcommand};
use oscigeo::report::{
    self, check_to_csv, closed_form_conflict, describe_family, render_json, run_check, run_scan,
    scan_to_csv, CheckConfig, FamilyConfig, ScanConfig, Subspace,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "oscigeo",
    version,
    about = "Extrinsic geometry of left-invariant unit vector fields on \
             oscillator and Heisenberg groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket, connection, and curvature tables of a group
    /// (exact arithmetic whenever the parameters are rational).
    Describe {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Analyze one unit field: residuals, singular values, verdicts.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Field coefficients in the standard frame, comma-separated.
        /// Accepts integers, fractions like 3/2, and decimals; the field
        /// is normalized and the original norm is recorded.
        #[arg(long, value_name = "C1,C2,...", allow_hyphen_values = true)]
        field: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify a seeded sample of the unit sphere.
    Scan {
        #[command(flatten)]
        group: GroupArgs,
        /// Number of fields to sample.
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// RNG seed; a fixed seed gives byte-identical output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampling subspace: `full`, `xy`, or `mask=1,0,...` over the
        /// frame coordinates.
        #[arg(long, default_value = "full")]
        subspace: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Group family: oscillator | heisenberg | custom.
    #[arg(long, default_value = "oscillator")]
    family: String,
    /// Block count n of the built-in families (inferred from --lambda
    /// when omitted).
    #[arg(long)]
    n: Option<usize>,
    /// Frequencies λ1,…,λn, comma-separated (oscillator family only).
    #[arg(long, value_name = "L1,L2,...", allow_hyphen_values = true)]
    lambda: Option<String>,
    /// JSON description of a custom metric Lie algebra.
    #[arg(long, value_name = "PATH")]
    algebra: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Classification tolerance for residual-based verdicts.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Output format: json | csv.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write the document to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Fail (exit 4) when a closed-form verdict disagrees with the engine.
    #[arg(long)]
    strict: bool,
}

/// A failure routed to a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn from_lib(err: oscigeo::Error) -> Failure {
    input_error(err.to_string())
}

fn io_error(context: &str, err: std::io::Error) -> Failure {
    Failure {
        code: 3,
        message: format!("{context}: {err}"),
    }
}

/// Parse one scalar: exact rational forms first, float syntax second.
fn parse_scalar(text: &str) -> Result<f64, Failure> {
    if let Some(rat) = report::parse_rational(text) {
        use oscigeo::Scalar;
        return Ok(rat.to_f64());
    }
    text.trim()
        .parse::<f64>()
        .map_err(|_| input_error(format!("cannot parse `{text}` as a number")))
}

fn parse_scalar_list(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',').map(parse_scalar).collect()
}

struct ResolvedGroup {
    family: FamilyConfig,
    /// Original λ text, kept so `describe` can use exact arithmetic.
    lambda_text: Option<Vec<String>>,
}

fn resolve_group(args: &GroupArgs) -> Result<ResolvedGroup, Failure> {
    match args.family.as_str() {
        "oscillator" => {
            let text = args.lambda.as_deref().ok_or_else(|| {
                input_error("the oscillator family needs --lambda L1,...,Ln")
            })?;
            let pieces: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
            let lambda = parse_scalar_list(text)?;
            let n = args.n.unwrap_or(lambda.len());
            if n != lambda.len() {
                return Err(input_error(format!(
                    "--n {n} does not match {} frequencies",
                    lambda.len()
                )));
            }
            if args.algebra.is_some() {
                return Err(input_error("--algebra only applies to --family custom"));
            }
            Ok(ResolvedGroup {
                family: FamilyConfig::Oscillator { n, lambda },
                lambda_text: Some(pieces),
            })
        }
        "heisenberg" => {
            if args.lambda.is_some() {
                return Err(input_error("the Heisenberg family takes no --lambda"));
            }
            if args.algebra.is_some() {
                return Err(input_error("--algebra only applies to --family custom"));
            }
            let n = args
                .n
                .ok_or_else(|| input_error("the Heisenberg family needs --n"))?;
            Ok(ResolvedGroup {
                family: FamilyConfig::Heisenberg { n },
                lambda_text: None,
            })
        }
        "custom" => {
            let path = args
                .algebra
                .as_deref()
                .ok_or_else(|| input_error("--family custom needs --algebra PATH"))?;
            if args.n.is_some() || args.lambda.is_some() {
                return Err(input_error("--n/--lambda do not apply to --family custom"));
            }
            let json = std::fs::read_to_string(path)
                .map_err(|e| io_error(&format!("reading {}", path.display()), e))?;
            Ok(ResolvedGroup {
                family: FamilyConfig::Custom { json },
                lambda_text: None,
            })
        }
        other => Err(input_error(format!(
            "unknown family `{other}` (expected oscillator, heisenberg, or custom)"
        ))),
    }
}

fn resolve_subspace(text: &str) -> Result<Subspace, Failure> {
    match text {
        "full" => Ok(Subspace::Full),
        "xy" => Ok(Subspace::XY),
        _ => {
            let Some(bits) = text.strip_prefix("mask=") else {
                return Err(input_error(format!(
                    "unknown subspace `{text}` (expected full, xy, or mask=1,0,...)"
                )));
            };
            let mask: Result<Vec<bool>, Failure> = bits
                .split(',')
                .map(|b| match b.trim() {
                    "1" => Ok(true),
                    "0" => Ok(false),
                    other => Err(input_error(format!(
                        "mask entries must be 0 or 1, got `{other}`"
                    ))),
                })
                .collect();
            Ok(Subspace::Mask(mask?))
        }
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| io_error(&format!("writing {}", path.display()), e))
}

fn render(output: &OutputArgs, json: String, csv: String) -> Result<String, Failure> {
    match output.format.as_str() {
        "json" => Ok(json),
        "csv" => Ok(csv),
        other => Err(input_error(format!(
            "unknown format `{other}` (expected json or csv)"
        ))),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Describe { group } => {
            let resolved = resolve_group(group)?;
            let text = describe_family(&resolved.family, resolved.lambda_text.as_deref())
                .map_err(from_lib)?;
            print!("{text}");
            Ok(())
        }
        Command::Check {
            group,
            field,
            output,
        } => {
            let resolved = resolve_group(group)?;
            let coeffs = parse_scalar_list(field)?;
            let doc = run_check(&CheckConfig {
                family: resolved.family,
                field: coeffs,
                tolerance: output.tol,
            })
            .map_err(from_lib)?;
            let text = render(
                output,
                render_json(&doc).map_err(from_lib)?,
                check_to_csv(&doc),
            )?;
            emit(output, &text)?;
            if output.strict && closed_form_conflict(&doc.closed_form, &doc.verdicts) {
                return Err(Failure {
                    code: 4,
                    message: "closed-form verdicts disagree with the engine".into(),
                });
            }
            Ok(())
        }
        Command::Scan {
            group,
            samples,
            seed,
            subspace,
            output,
        } => {
            let resolved = resolve_group(group)?;
            let doc = run_scan(&ScanConfig {
                family: resolved.family,
                samples: *samples,
                seed: *seed,
                subspace: resolve_subspace(subspace)?,
                tolerance: output.tol,
            })
            .map_err(from_lib)?;
            let text = render(
                output,
                render_json(&doc).map_err(from_lib)?,
                scan_to_csv(&doc),
            )?;
            emit(output, &text)?;
            let s = &doc.summary;
            eprintln!(
                "scan: {} samples ({}), minimal {}, harmonic {}, harmonic-map {}, \
                 totally geodesic {}, conflicts {}",
                doc.samples, doc.subspace, s.minimal, s.harmonic, s.harmonic_map,
                s.totally_geodesic, s.conflicts
            );
            if output.strict && s.conflicts > 0 {
                return Err(Failure {
                    code: 4,
                    message: format!(
                        "{} sample(s) where closed forms disagree with the engine",
                        s.conflicts
                    ),
                });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("oscigeo: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
