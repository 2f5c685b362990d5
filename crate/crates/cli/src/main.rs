mod report;
mod text;

use std::process::ExitCode;
use std::time::Instant;

use bs3_core::arrangement::parse_arrangement;
use bs3_core::groebner::{Limits, DEFAULT_STEP_CAP};
use bs3_core::polyring::{parse_polynomial, parse_rational, WeightSystem};
use bs3_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Input, Outcome, Report};

/// Zero sets of Bernstein–Sato polynomials in three variables, computed exactly.
#[derive(Debug, Parser)]
#[command(name = "bs3", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of reduction steps per Gröbner computation.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    step_cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct PolyArgs {
    /// Polynomial in x, y, z (or x1, x2, x3).
    #[arg(long)]
    poly: String,
    /// Positive rational weights of the variables.
    #[arg(long, default_value = "1,1,1")]
    weights: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RootKind {
    /// Isolated quasi-homogeneous singularity.
    Isolated,
    /// Reduced, locally quasi-homogeneous divisor.
    Lqh,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Milnor algebra degrees, H⁰ of the Milnor algebra, and the zeroes of B(L_f).
    Milnor(PolyArgs),
    /// Zeroes of b_f for an isolated singularity, or the root data of a locally
    /// quasi-homogeneous divisor.
    Roots {
        #[arg(value_enum)]
        kind: RootKind,
        #[command(flatten)]
        poly: PolyArgs,
        /// Twist λ ≤ 0 for the twisted logarithmic comparison theorem (lqh only).
        #[arg(long, allow_hyphen_values = true)]
        lct_lambda: Option<String>,
    },
    /// Full zero set and condition report of a central line arrangement.
    Arrangement {
        /// Comma-separated linear forms.
        #[arg(long)]
        forms: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        e if e.is_parse_error() => 1,
        Error::ResourceLimit(_) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let limits = Limits { step_cap: cli.step_cap };
    let start = Instant::now();
    let (command, input, result, assertions) = match &cli.command {
        Command::Milnor(p) => {
            let w = WeightSystem::parse(&p.weights)?;
            let f = parse_polynomial(&p.poly, w.len())?;
            let input = poly_input(p, None, cli.step_cap);
            ("milnor", input, Outcome::Milnor(report::milnor(&f, &w, &limits)?), vec![])
        }
        Command::Roots { kind, poly: p, lct_lambda } => {
            let w = WeightSystem::parse(&p.weights)?;
            let f = parse_polynomial(&p.poly, w.len())?;
            let input = poly_input(p, lct_lambda.clone(), cli.step_cap);
            match kind {
                RootKind::Isolated => {
                    if lct_lambda.is_some() {
                        return Err(Error::InvalidArgument(
                            "--lct-lambda applies to 'roots lqh' only".into(),
                        ));
                    }
                    let r = report::isolated(&f, &w, &limits)?;
                    ("roots isolated", input, Outcome::Isolated(r), vec![])
                }
                RootKind::Lqh => {
                    let lambda = lct_lambda.as_deref().map(parse_rational).transpose()?;
                    let r = report::lqh(&f, &w, lambda.as_ref(), &limits)?;
                    let assertions = vec![
                        "f is reduced (not verified)".to_string(),
                        "f is locally quasi-homogeneous (not verified)".to_string(),
                    ];
                    ("roots lqh", input, Outcome::Lqh(r), assertions)
                }
            }
        }
        Command::Arrangement { forms } => {
            let a = parse_arrangement(forms)?;
            let input = Input {
                poly: None,
                weights: None,
                lct_lambda: None,
                forms: Some(forms.clone()),
                step_cap: cli.step_cap,
            };
            let r = report::arrangement(&a, &limits)?;
            ("arrangement", input, Outcome::Arrangement(Box::new(r)), vec![])
        }
    };
    Ok(Report {
        command: command.to_string(),
        input,
        result,
        assertions,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

fn poly_input(p: &PolyArgs, lct_lambda: Option<String>, step_cap: u64) -> Input {
    Input {
        poly: Some(p.poly.clone()),
        weights: Some(p.weights.clone()),
        lct_lambda,
        forms: None,
        step_cap,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            let value = serde_json::to_value(&report).expect("reports serialize");
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&value).expect("valid json"))
                }
                Format::Text => print!("{}", text::render(&value)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
