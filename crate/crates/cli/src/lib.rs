//! `qpos` command-line front end: compute an object, verify an identity at a
//! parameter point, or scan a parameter grid for positivity.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 invalid input,
//! 3 exact-division failure.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qpos_core::{Error, IdentityCheckResult, IntPoly};

pub mod scan;

pub use scan::{Check, ScanSpec};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_DIVISIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qpos", version, about = "Exact q-Catalan and alternating-sum positivity checker")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one polynomial: A m n, B n m, C m n, gauss N K, or F with --m/--n/--a/--b.
    Compute(ComputeArgs),
    /// Check one identity at one parameter point.
    Verify(VerifyArgs),
    /// Evaluate a whole parameter grid and report per-instance verdicts.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeFamily {
    A,
    B,
    C,
    F,
    Gauss,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct CyclicArgs {
    /// Cyclic m-vector, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub m: Option<Vec<i64>>,
    /// Cyclic n-vector, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub n: Option<Vec<i64>>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    /// Allow a > s and b > r (results are flagged out-of-theorem).
    #[arg(long)]
    pub unsafe_params: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum, ignore_case = true)]
    pub family: ComputeFamily,
    /// Positional integer parameters for A, B, C and gauss.
    #[arg(allow_negative_numbers = true)]
    pub params: Vec<i64>,
    #[command(flatten)]
    pub cyclic: CyclicArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    DoubleExpansion,
    Reciprocity,
    ProductIdentity,
    Deletion,
    Recombine,
    Separation,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    #[arg(long = "N")]
    pub big_n: Option<u32>,
    #[arg(long)]
    pub h: Option<u32>,
    #[arg(long)]
    pub m1: Option<u32>,
    #[arg(long)]
    pub m2: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub ell: Option<i64>,
    #[command(flatten)]
    pub cyclic: CyclicArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// A, B, C or F.
    pub family: String,
    /// A and C: all (m, n) with m + n <= max-sum.
    #[arg(long)]
    pub max_sum: Option<u32>,
    /// B: 0 <= m <= n <= param-max. F: every entry in [m-min or 1, param-max].
    #[arg(long)]
    pub param_max: Option<i64>,
    /// F: length of the m-vector.
    #[arg(long)]
    pub r: Option<usize>,
    /// F: length of the n-vector.
    #[arg(long)]
    pub s: Option<usize>,
    /// F: smallest m entry (0 or 1).
    #[arg(long, default_value_t = 1)]
    pub m_min: i64,
    /// F: largest a (default s; larger needs --unsafe-params).
    #[arg(long)]
    pub a_max: Option<i64>,
    /// F: largest b (default r; larger needs --unsafe-params).
    #[arg(long)]
    pub b_max: Option<i64>,
    /// Comma-separated subset of: positivity, oracle-equivalence, reciprocity,
    /// deletion, degree-bound, q1-specialization.
    #[arg(long, value_delimiter = ',', default_value = "positivity")]
    pub checks: Vec<String>,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub unsafe_params: bool,
}

/// Error carrying the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotDivisible { .. } => EXIT_NOT_DIVISIBLE,
            _ => EXIT_INVALID,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: format!("i/o error: {e}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Runs a parsed command, writing results to `stdout` (or `--out`) and
/// diagnostics to `stderr`. Returns the process exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Compute(args) => with_output(args.out.clone(), stdout, |w| cmd_compute(&args, w)),
        Command::Verify(args) => with_output(args.out.clone(), stdout, |w| cmd_verify(&args, w)),
        Command::Scan(args) => {
            with_output(args.out.clone(), stdout, |w| scan::cmd_scan(&args, w, &mut *stderr))
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code
        }
    }
}

fn with_output(
    out: Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> CliResult<i32>,
) -> CliResult<i32> {
    match out {
        Some(path) => {
            let file = File::create(&path)
                .map_err(|e| CliError::invalid(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            let code = f(&mut w)?;
            w.flush()?;
            Ok(code)
        }
        None => {
            let code = f(stdout)?;
            stdout.flush()?;
            Ok(code)
        }
    }
}

pub(crate) fn cyclic_params(args: &CyclicArgs) -> CliResult<qpos_core::CyclicParams> {
    let m = args.m.clone().ok_or_else(|| CliError::invalid("missing --m"))?;
    let n = args.n.clone().ok_or_else(|| CliError::invalid("missing --n"))?;
    let a = args.a.ok_or_else(|| CliError::invalid("missing --a"))?;
    let b = args.b.ok_or_else(|| CliError::invalid("missing --b"))?;
    let params = if args.unsafe_params {
        qpos_core::CyclicParams::new_unchecked_range(m, n, a, b)?
    } else {
        qpos_core::CyclicParams::new(m, n, a, b)?
    };
    Ok(params)
}

fn pair(params: &[i64], names: [&str; 2]) -> CliResult<(u32, u32)> {
    match params {
        [x, y] => {
            let conv = |v: i64, name: &str| {
                u32::try_from(v).map_err(|_| CliError::invalid(format!("{name} must be a non-negative integer, got {v}")))
            };
            Ok((conv(*x, names[0])?, conv(*y, names[1])?))
        }
        _ => Err(CliError::invalid(format!(
            "expected two parameters {} {}, got {}",
            names[0],
            names[1],
            params.len()
        ))),
    }
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    family: String,
    params: String,
    poly: &'a IntPoly,
    display: String,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    out_of_theorem: bool,
}

pub fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> CliResult<i32> {
    let needs_positional = args.family != ComputeFamily::F;
    if needs_positional && args.cyclic.m.is_some() {
        return Err(CliError::invalid("--m/--n/--a/--b only apply to family F"));
    }
    let (label, poly, out_of_theorem) = match args.family {
        ComputeFamily::A => {
            let (m, n) = pair(&args.params, ["m", "n"])?;
            (format!("m={m};n={n}"), qpos_core::super_catalan_a(m, n)?, false)
        }
        ComputeFamily::B => {
            let (n, m) = pair(&args.params, ["n", "m"])?;
            (format!("n={n};m={m}"), qpos_core::ratio_b(n, m)?, false)
        }
        ComputeFamily::C => {
            let (m, n) = pair(&args.params, ["m", "n"])?;
            (format!("m={m};n={n}"), qpos_core::odd_super_catalan_direct(m, n)?, false)
        }
        ComputeFamily::Gauss => {
            let (big_n, k) = match args.params[..] {
                [x, y] => (x, y),
                _ => return Err(CliError::invalid("gauss expects two integers N K")),
            };
            (format!("N={big_n};K={k}"), qpos_core::gauss_binom(big_n, k), false)
        }
        ComputeFamily::F => {
            if !args.params.is_empty() {
                return Err(CliError::invalid("F takes --m/--n/--a/--b, not positional parameters"));
            }
            let params = cyclic_params(&args.cyclic)?;
            let oot = !params.in_theorem_range();
            (params.to_string(), qpos_core::F(&params)?, oot)
        }
    };
    let family = format!("{:?}", args.family).to_ascii_uppercase();
    let family = if family == "GAUSS" { "gauss".to_string() } else { family };
    match args.format {
        Format::Json | Format::Jsonl => {
            let o = ComputeOutput {
                family,
                params: label,
                poly: &poly,
                display: poly.to_string(),
                out_of_theorem,
            };
            writeln!(out, "{}", serde_json::to_string(&o).expect("serializable"))?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "{}", serde_json::to_string(&poly).expect("serializable"))?;
            writeln!(out, "{poly}")?;
            if out_of_theorem {
                writeln!(out, "# out-of-theorem parameters")?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::invalid(format!("missing {flag}")))
}

fn vectors(args: &CyclicArgs) -> CliResult<(Vec<i64>, Vec<i64>)> {
    let m = args.m.clone().ok_or_else(|| CliError::invalid("missing --m"))?;
    let n = args.n.clone().ok_or_else(|| CliError::invalid("missing --n"))?;
    if let Some(x) = m.iter().find(|&&x| x < 0) {
        return Err(CliError::invalid(format!("m entries must be >= 0, got {x}")));
    }
    if let Some(x) = n.iter().find(|&&x| x < 1) {
        return Err(CliError::invalid(format!("n entries must be >= 1, got {x}")));
    }
    Ok((m, n))
}

pub fn run_identity(args: &VerifyArgs) -> CliResult<IdentityCheckResult> {
    let result = match args.identity {
        Identity::DoubleExpansion => {
            qpos_core::double_expansion_check(need(args.big_n, "--N")?, need(args.h, "--h")?)?
        }
        Identity::Reciprocity => qpos_core::reciprocity_check(&cyclic_params(&args.cyclic)?)?,
        Identity::Deletion => qpos_core::deletion_check(&cyclic_params(&args.cyclic)?)?,
        Identity::ProductIdentity => {
            qpos_core::product_identity_check(need(args.m1, "--m1")?, need(args.m2, "--m2")?, need(args.k, "--k")?)
        }
        Identity::Recombine => {
            let (m, n) = vectors(&args.cyclic)?;
            qpos_core::recombine_check(&m, &n, need(args.ell, "--ell")?, need(args.k, "--k")?)?
        }
        Identity::Separation => {
            let (m, n) = vectors(&args.cyclic)?;
            qpos_core::separation_check(&m, &n, need(args.k, "--k")?)?
        }
    };
    Ok(result)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let result = run_identity(args)?;
    match args.format {
        Format::Json | Format::Jsonl => {
            writeln!(out, "{}", serde_json::to_string(&result).expect("serializable"))?;
        }
        Format::Text | Format::Csv => {
            let verdict = match (result.passed, result.vacuous) {
                (true, true) => "PASS (vacuous)",
                (true, false) => "PASS",
                (false, _) => "FAIL",
            };
            writeln!(out, "{} [{}]: {verdict}", result.identity, result.params)?;
            if let Some(d) = &result.detail {
                writeln!(out, "  {d}")?;
            }
            if let Some(diff) = &result.difference {
                writeln!(out, "  difference: {diff}")?;
            }
        }
    }
    Ok(if result.passed { EXIT_PASS } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_divisible_maps_to_exit_three() {
        let e: CliError = Error::NotDivisible { remainder: IntPoly::one() }.into();
        assert_eq!(e.code, EXIT_NOT_DIVISIBLE);
        let e: CliError = Error::InvalidRange("x".into()).into();
        assert_eq!(e.code, EXIT_INVALID);
    }

    #[test]
    fn parse_flags() {
        let cli = Cli::try_parse_from(["qpos", "verify", "product-identity", "--m1", "1", "--m2", "2", "--k", "-3"]).unwrap();
        match cli.command {
            Command::Verify(v) => assert_eq!(v.k, Some(-3)),
            _ => panic!("expected verify"),
        }
    }
}
