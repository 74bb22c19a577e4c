//! Command-line front end for the digamma rational-approximant toolkit.
//!
//! Three subcommands: `table` re-emits the two built-in convergence tables,
//! `eval` computes ψ(1+z) at a point, and `compare` shows per-order errors
//! of the raw series, the known-ratio transform, and the epsilon algorithm
//! side by side.

mod format;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use digamma_accel::Scalar;
use digamma_accel::digamma::{DigammaConfig, Method, convergence_rows, digamma};
use format::{TableStyle, complex, magnitude, render_table, significant, significant_grouped};

#[derive(Parser)]
#[command(
    name = "digamma-accel",
    version,
    about = "Digamma via rational approximants",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce one of the built-in convergence tables (1: z = 1,
    /// 2: z = (1+sqrt(3)i)/2).
    Table(TableArgs),
    /// Evaluate psi(1+z) at a single point.
    Eval(EvalArgs),
    /// Per-order error of each accelerator against the converged value.
    Compare(CompareArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Table id, 1 or 2.
    #[arg(long)]
    id: u8,
    /// Significant figures per value (6..=16).
    #[arg(long, default_value_t = 16)]
    digits: usize,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Also write the output bytes to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    z_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    z_im: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::T)]
    method: MethodArg,
    /// Significant figures for the printed value (6..=16).
    #[arg(long, default_value_t = 16)]
    digits: usize,
    /// Cap on the accelerator order.
    #[arg(long, default_value_t = 40)]
    max_order: usize,
    /// Successive-approximant agreement threshold.
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, allow_hyphen_values = true)]
    z_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    z_im: f64,
    /// Highest order to tabulate (at most 40).
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    /// Significant figures for the error magnitudes.
    #[arg(long, default_value_t = 6)]
    digits: usize,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
}

impl Format {
    fn style(self) -> TableStyle {
        match self {
            Format::Csv => TableStyle::Csv,
            Format::Markdown => TableStyle::Markdown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Known-ratio transformation.
    T,
    /// Wynn's epsilon algorithm.
    Epsilon,
    /// Raw partial sums.
    Raw,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::T => Method::KnownRatio,
            MethodArg::Epsilon => Method::Epsilon,
            MethodArg::Raw => Method::RawSeries,
        }
    }
}

const USAGE_ERROR: u8 = 2;
const NOT_CONVERGED: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table(args) => run_table(args),
        Command::Eval(args) => run_eval(args),
        Command::Compare(args) => run_compare(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn check_digits(digits: usize) -> Result<(), String> {
    if !(6..=16).contains(&digits) {
        return Err(format!("--digits must be between 6 and 16, got {digits}"));
    }
    Ok(())
}

/// Print to stdout and, when requested, write the identical bytes to a file.
fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    print!("{text}");
    if let Some(path) = out {
        fs::write(path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

fn run_table(args: TableArgs) -> Result<u8, String> {
    check_digits(args.digits)?;
    let (z, n_max) = match args.id {
        1 => (Scalar::new(1.0, 0.0), 14usize),
        2 => (Scalar::new(0.5, 3.0f64.sqrt() / 2.0), 15usize),
        other => return Err(format!("--id must be 1 or 2, got {other}")),
    };
    let rows = convergence_rows(z, n_max).map_err(|e| e.to_string())?;
    let config = DigammaConfig {
        tol: 1e-16,
        ..DigammaConfig::default()
    };
    let converged = digamma(z, &config).map_err(|e| e.to_string())?;
    if !converged.converged {
        eprintln!("warning: reference evaluation did not converge at the order cap");
    }

    let digits = args.digits;
    let grouped = matches!(args.format, Format::Markdown);
    let real_cell = |x: f64| {
        if grouped {
            significant_grouped(x, digits)
        } else {
            significant(x, digits)
        }
    };

    let text = match args.id {
        1 => {
            let header = ["n", "partial sum", "transform", "epsilon"];
            let mut body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    vec![
                        row.n.to_string(),
                        real_cell(row.raw.re),
                        real_cell(row.t_value.re),
                        row.eps_value.map(|e| real_cell(e.re)).unwrap_or_default(),
                    ]
                })
                .collect();
            body.push(vec![
                "psi(1+z)".to_string(),
                String::new(),
                real_cell(converged.value.re),
                real_cell(converged.value.re),
            ]);
            render_table(&args.format.style(), &header, &body)
        }
        _ => match args.format {
            // Complex tables keep real and imaginary parts in separate CSV
            // columns so the output stays machine-parseable.
            Format::Csv => {
                let header = [
                    "n",
                    "partial_re",
                    "partial_im",
                    "transform_re",
                    "transform_im",
                ];
                let mut body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|row| {
                        vec![
                            row.n.to_string(),
                            significant(row.raw.re, digits),
                            significant(row.raw.im, digits),
                            significant(row.t_value.re, digits),
                            significant(row.t_value.im, digits),
                        ]
                    })
                    .collect();
                body.push(vec![
                    "psi(1+z)".to_string(),
                    String::new(),
                    String::new(),
                    significant(converged.value.re, digits),
                    significant(converged.value.im, digits),
                ]);
                render_table(&TableStyle::Csv, &header, &body)
            }
            Format::Markdown => {
                let header = ["n", "partial sum", "transform"];
                let mut body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|row| {
                        vec![
                            row.n.to_string(),
                            complex(row.raw, digits, true),
                            complex(row.t_value, digits, true),
                        ]
                    })
                    .collect();
                body.push(vec![
                    "psi(1+z)".to_string(),
                    String::new(),
                    complex(converged.value, digits, true),
                ]);
                render_table(&TableStyle::Markdown, &header, &body)
            }
        },
    };
    emit(&text, args.out.as_ref())?;
    Ok(0)
}

fn run_eval(args: EvalArgs) -> Result<u8, String> {
    check_digits(args.digits)?;
    let z = Scalar::new(args.z_re, args.z_im);
    let config = DigammaConfig {
        max_order: args.max_order,
        tol: args.tol,
        method: args.method.into(),
    };
    let result = digamma(z, &config).map_err(|e| e.to_string())?;

    let value = if z.im == 0.0 && result.value.im == 0.0 {
        significant(result.value.re, args.digits)
    } else {
        complex(result.value, args.digits, false)
    };
    let method = match args.method {
        MethodArg::T => "t",
        MethodArg::Epsilon => "epsilon",
        MethodArg::Raw => "raw",
    };
    let text = format!(
        "psi(1+z) = {value}\nmethod = {method}\norder_used = {}\nreduction_steps = {}\nconverged = {}\n",
        result.order_used, result.reduction_steps, result.converged
    );
    emit(&text, args.out.as_ref())?;
    if result.converged {
        Ok(0)
    } else {
        eprintln!(
            "warning: approximants did not settle within tol at order {}",
            result.order_used
        );
        Ok(NOT_CONVERGED)
    }
}

fn run_compare(args: CompareArgs) -> Result<u8, String> {
    check_digits(args.digits)?;
    if args.max_n > 40 {
        return Err(format!("--max-n must be at most 40, got {}", args.max_n));
    }
    let z = Scalar::new(args.z_re, args.z_im);
    let rows = convergence_rows(z, args.max_n).map_err(|e| e.to_string())?;

    // Reference: the adaptive transform pushed past the tabulated range.
    let config = DigammaConfig {
        max_order: (args.max_n + 10).max(24),
        tol: 1e-15,
        method: Method::KnownRatio,
    };
    let reference = digamma(z, &config).map_err(|e| e.to_string())?;
    if !reference.converged {
        eprintln!(
            "warning: reference evaluation did not converge; errors are relative to the best available value"
        );
    }

    let header = ["n", "raw_error", "transform_error", "epsilon_error"];
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let err = |v: Scalar| magnitude((v - reference.value).norm(), args.digits);
            vec![
                row.n.to_string(),
                err(row.raw),
                err(row.t_value),
                row.eps_value.map(err).unwrap_or_default(),
            ]
        })
        .collect();
    let text = render_table(&args.format.style(), &header, &body);
    emit(&text, args.out.as_ref())?;
    Ok(0)
}
