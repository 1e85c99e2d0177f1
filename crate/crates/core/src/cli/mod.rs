//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for usage,
//! parse and domain errors. The oracle's term budget can be changed through
//! `HARMONIC_SUMS_TERM_BUDGET`.

pub mod report;
pub mod sampling;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

pub use report::{VerificationReport, REPORT_VERSION};

use crate::const_combo::Rational;
use crate::error::{Error, Result};
use crate::harmonic::{harmonic_value, shifted_harmonic_exact};
use crate::identities::{DomainMode, Family, TwoFactorSpec};
use crate::oracle::OracleConfig;
use crate::w_sums::{euler_shifted_oracle, euler_shifted_sum, w_sum, WSpec};

pub const TERM_BUDGET_VAR: &str = "HARMONIC_SUMS_TERM_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "harmonic-sums", version, about = "Shifted harmonic numbers and closed-form Euler sums")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate H^(m)_alpha.
    Harmonic(HarmonicArgs),
    /// Evaluate a closed form, optionally checking it against the oracle.
    Identity(IdentityArgs),
    /// Run a built-in collection of checks.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct HarmonicArgs {
    /// Shift, as `p/q` or a decimal.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Print the value as a combination of constants (integer and half-integer shifts).
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    /// One of the two-factor families, `wsum` or `euler-shifted`.
    #[arg(long)]
    family: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Shift for the shift families, harmonic order for `wsum`.
    #[arg(long)]
    m: Option<u32>,
    /// Power of `n` for `weighted-tail` and `wsum`.
    #[arg(long)]
    p: Option<u32>,
    /// Power of the harmonic number for `wsum`.
    #[arg(long)]
    l: Option<u32>,
    /// Odd weight for `euler-shifted`.
    #[arg(long)]
    weight: Option<u32>,
    /// Compare the closed form with direct summation.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Evaluate outside the stated hypotheses.
    #[arg(long)]
    unchecked: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    PaperExamples,
    PropertySmoke,
}

#[derive(Debug, Args)]
struct SuiteArgs {
    #[arg(value_enum)]
    name: SuiteName,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Parses a shift given as `p/q` or as a decimal. The rational is kept when
/// the input is one, or when a decimal is exactly a half-integer.
pub fn parse_alpha(s: &str) -> Result<(f64, Option<Rational>)> {
    let s = s.trim();
    if s.contains('/') {
        let q: Rational = s
            .parse()
            .map_err(|e| Error::Parse(format!("cannot read '{s}' as a rational: {e}")))?;
        let v = q
            .to_f64()
            .ok_or_else(|| Error::Parse(format!("'{s}' is out of range")))?;
        return Ok((v, Some(q)));
    }
    let v: f64 = s
        .parse()
        .map_err(|e| Error::Parse(format!("cannot read '{s}' as a number: {e}")))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("'{s}' is not finite")));
    }
    let twice = 2.0 * v;
    let exact = if twice == twice.round() && twice.abs() < 1e15 {
        Some(Rational::new((twice as i64).into(), 2.into()))
    } else {
        None
    };
    Ok((v, exact))
}

/// Oracle settings, with the term budget taken from the environment if set.
pub fn oracle_config() -> Result<OracleConfig> {
    let mut config = OracleConfig::default();
    if let Ok(v) = std::env::var(TERM_BUDGET_VAR) {
        config.term_budget = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{TERM_BUDGET_VAR} must be a positive integer, got '{v}'")))?;
        if config.term_budget == 0 {
            return Err(Error::Parse(format!("{TERM_BUDGET_VAR} must be positive")));
        }
    }
    Ok(config)
}

/// Accuracy requested from the oracle when verifying at tolerance `tol`.
fn oracle_target(tol: f64) -> f64 {
    (tol / 10.0).clamp(1e-13, 1e-6)
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Harmonic(a) => cmd_harmonic(&a, out),
        Command::Identity(a) => cmd_identity(&a, out),
        Command::Suite(a) => cmd_suite(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("cannot write output: {e}"))
}

fn cmd_harmonic(a: &HarmonicArgs, out: &mut dyn Write) -> Result<i32> {
    let (alpha, exact_alpha) = parse_alpha(&a.alpha)?;
    if a.m < 1 {
        return Err(Error::domain("m must be at least 1"));
    }
    let exact = if a.exact {
        let q = match exact_alpha {
            Some(q) => q,
            None => {
                return Err(Error::UnsupportedDenominator {
                    den: "non-rational".into(),
                    supported: "1 and 2".into(),
                })
            }
        };
        Some(shifted_harmonic_exact(&q, a.m)?)
    } else {
        None
    };
    let value = match &exact {
        Some(c) => c.eval(),
        None => harmonic_value(alpha, a.m)?,
    };
    match a.format {
        Format::Text => match &exact {
            Some(c) => writeln!(out, "{c} = {value}"),
            None => writeln!(out, "{value}"),
        }
        .map_err(io)?,
        Format::Json => {
            let doc = json!({
                "alpha": a.alpha,
                "m": a.m,
                "value": value,
                "exact_form": exact.as_ref().map(|c| c.to_string()),
                "exact": exact.as_ref().map(|c| c.to_json()),
            });
            writeln!(out, "{doc}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn need(v: Option<u32>, name: &str, family: &str) -> Result<u32> {
    v.ok_or_else(|| Error::Parse(format!("--{name} is required for family {family}")))
}

fn cmd_identity(a: &IdentityArgs, out: &mut dyn Write) -> Result<i32> {
    let (alpha, _) = parse_alpha(&a.alpha)?;
    if !(a.tol >= 0.0) {
        return Err(Error::Parse(format!("--tol must be non-negative, got {}", a.tol)));
    }
    let config = oracle_config()?;
    let target = oracle_target(a.tol);
    let mode = if a.unchecked { DomainMode::Unchecked } else { DomainMode::Strict };
    let family = a.family.as_str();

    let (name, spec, closed, oracle): (String, String, f64, Box<dyn FnOnce() -> Result<_>>) = match family {
        "wsum" => {
            if a.unchecked {
                return Err(Error::Parse("--unchecked applies to the two-factor families only".into()));
            }
            let spec = WSpec::new(
                a.l.unwrap_or(1),
                a.p.unwrap_or(0),
                a.m.unwrap_or(1),
                need(a.k, "k", family)?,
                a.r.unwrap_or(0),
                alpha,
            );
            let closed = w_sum(spec)?;
            (family.into(), spec.describe(), closed, Box::new(move || spec.oracle(target, &config)))
        }
        "euler-shifted" => {
            let (p, m) = match (a.weight, a.p, a.m) {
                (Some(w), None, None) => {
                    if w < 2 {
                        return Err(Error::domain(format!("weight must be at least 3, got {w}")));
                    }
                    (1, w - 1)
                }
                (None, Some(p), Some(m)) => (p, m),
                _ => return Err(Error::Parse("euler-shifted takes either --weight or both --p and --m".into())),
            };
            let closed = euler_shifted_sum(alpha, p, m)?;
            let spec = format!("euler-shifted alpha={alpha} p={p} m={m}");
            (
                family.into(),
                spec,
                closed,
                Box::new(move || euler_shifted_oracle(alpha, p + m, target, &config)),
            )
        }
        _ => {
            let fam: Family = family.parse()?;
            let r = if fam.single_parameter() { a.r.unwrap_or(0) } else { need(a.r, "r", family)? };
            let mut spec = TwoFactorSpec::new(fam, alpha, r, need(a.k, "k", family)?);
            if fam.uses_shift() {
                spec = spec.with_shift(need(a.m, "m", family)?);
            }
            if fam == Family::WeightedTail {
                spec = spec.with_power(need(a.p, "p", family)?);
            }
            let closed = spec.evaluate(mode)?;
            (family.into(), spec.describe(), closed, Box::new(move || spec.oracle(target, &config)))
        }
    };

    if !a.verify {
        match a.format {
            Format::Text => writeln!(out, "{closed}"),
            Format::Json => writeln!(out, "{}", json!({ "spec": spec, "closed_form": closed })),
        }
        .map_err(io)?;
        return Ok(EXIT_OK);
    }
    let report = match oracle() {
        Ok(est) => VerificationReport::new(name, spec, closed, est, a.tol),
        Err(Error::NonConvergence(msg)) => {
            VerificationReport::failed(name, spec, a.tol, format!("oracle did not converge: {msg}"))
        }
        Err(e) => return Err(e),
    };
    match a.format {
        Format::Text => write!(out, "{}", report.render_text()),
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes")),
    }
    .map_err(io)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_suite(a: &SuiteArgs, out: &mut dyn Write) -> Result<i32> {
    let config = oracle_config()?;
    let reports = match a.name {
        SuiteName::PaperExamples => suite::paper_examples(&config),
        SuiteName::PropertySmoke => suite::property_smoke(a.seed, &config),
    };
    let failed = reports.iter().filter(|r| !r.pass).count();
    match a.format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", r.render_line()).map_err(io)?;
            }
            writeln!(out, "{} of {} passed", reports.len() - failed, reports.len()).map_err(io)?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
            writeln!(out, "{text}").map_err(io)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
}
