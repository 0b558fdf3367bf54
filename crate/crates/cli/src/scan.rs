//! Grid scans. Instances are evaluated in parallel and emitted in
//! lexicographic parameter order, so identical invocations produce
//! byte-identical reports.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use qpos_core::altsum::degree_bound_holds;
use qpos_core::{
    CatalanPair, CyclicParams, Error, Family, Instance, OddCatalanRecursion, PositivityReport,
};

use crate::{CliError, CliResult, Format, ScanArgs, EXIT_FAIL, EXIT_PASS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Positivity,
    OracleEquivalence,
    Reciprocity,
    Deletion,
    DegreeBound,
    Q1Specialization,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Positivity => "positivity",
            Check::OracleEquivalence => "oracle-equivalence",
            Check::Reciprocity => "reciprocity",
            Check::Deletion => "deletion",
            Check::DegreeBound => "degree-bound",
            Check::Q1Specialization => "q1-specialization",
        }
    }

    fn applies_to(self, family: Family) -> bool {
        match self {
            Check::Positivity | Check::Q1Specialization => true,
            Check::OracleEquivalence => family == Family::C,
            Check::Reciprocity | Check::Deletion | Check::DegreeBound => family == Family::F,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Ok(match s.trim() {
            "positivity" => Check::Positivity,
            "oracle-equivalence" => Check::OracleEquivalence,
            "reciprocity" => Check::Reciprocity,
            "deletion" => Check::Deletion,
            "degree-bound" => Check::DegreeBound,
            "q1-specialization" => Check::Q1Specialization,
            other => return Err(CliError::invalid(format!("unknown check {other:?}"))),
        })
    }
}

/// A validated grid: which family, which parameter points, which checks.
#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub family: Family,
    pub instances: Vec<Instance>,
    pub checks: Vec<Check>,
}

fn nonneg_u32(v: i64, flag: &str) -> CliResult<u32> {
    u32::try_from(v).map_err(|_| CliError::invalid(format!("{flag} must be a non-negative integer")))
}

/// All vectors of length `len` with entries in `lo..=hi`, lexicographic.
fn vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Upper bound on grid size; keeps an accidental huge scan from starting.
const MAX_INSTANCES: usize = 2_000_000;

impl ScanSpec {
    pub fn from_args(args: &ScanArgs) -> CliResult<Self> {
        let family: Family = args.family.parse().map_err(|e: Error| CliError::invalid(e.to_string()))?;
        let mut checks = Vec::new();
        for c in &args.checks {
            let c: Check = c.parse()?;
            if !c.applies_to(family) {
                return Err(CliError::invalid(format!("check {c} does not apply to family {family}")));
            }
            if !checks.contains(&c) {
                checks.push(c);
            }
        }
        if checks.is_empty() {
            return Err(CliError::invalid("--checks must name at least one check"));
        }
        let f_only = args.r.is_some() || args.s.is_some() || args.a_max.is_some() || args.b_max.is_some();
        if family != Family::F && (f_only || args.m_min != 1 || args.unsafe_params) {
            return Err(CliError::invalid("--r/--s/--m-min/--a-max/--b-max/--unsafe-params only apply to F"));
        }

        let instances = match family {
            Family::A | Family::C => {
                let max = args
                    .max_sum
                    .ok_or_else(|| CliError::invalid(format!("scan {family} needs --max-sum")))?;
                if args.param_max.is_some() {
                    return Err(CliError::invalid(format!("scan {family} takes --max-sum, not --param-max")));
                }
                let mut v = Vec::new();
                for m in 0..=max {
                    for n in 0..=max - m {
                        let p = CatalanPair { m, n };
                        v.push(if family == Family::A { Instance::A(p) } else { Instance::C(p) });
                    }
                }
                v
            }
            Family::B => {
                let max = nonneg_u32(
                    args.param_max.ok_or_else(|| CliError::invalid("scan B needs --param-max"))?,
                    "--param-max",
                )?;
                if args.max_sum.is_some() {
                    return Err(CliError::invalid("scan B takes --param-max, not --max-sum"));
                }
                let mut v = Vec::new();
                for n in 0..=max {
                    for m in 0..=n {
                        v.push(Instance::B(CatalanPair { m, n }));
                    }
                }
                v
            }
            Family::F => Self::f_grid(args)?,
        };
        if instances.len() > MAX_INSTANCES {
            return Err(CliError::invalid(format!("grid has {} instances; limit is {MAX_INSTANCES}", instances.len())));
        }
        Ok(ScanSpec {
            family,
            instances,
            checks,
        })
    }

    fn f_grid(args: &ScanArgs) -> CliResult<Vec<Instance>> {
        let r = args.r.ok_or_else(|| CliError::invalid("scan F needs --r"))?;
        let s = args.s.ok_or_else(|| CliError::invalid("scan F needs --s"))?;
        let max = args.param_max.ok_or_else(|| CliError::invalid("scan F needs --param-max"))?;
        if args.max_sum.is_some() {
            return Err(CliError::invalid("scan F takes --param-max, not --max-sum"));
        }
        if r < 2 || s < 2 {
            return Err(CliError::invalid(format!("need r, s >= 2, got r={r}, s={s}")));
        }
        if !(0..=1).contains(&args.m_min) {
            return Err(CliError::invalid("--m-min must be 0 or 1"));
        }
        if max < 1 || max < args.m_min {
            return Err(CliError::invalid("--param-max must be at least 1"));
        }
        let a_max = args.a_max.unwrap_or(s as i64);
        let b_max = args.b_max.unwrap_or(r as i64);
        if a_max < 0 || b_max < 1 {
            return Err(CliError::invalid("--a-max must be >= 0 and --b-max >= 1"));
        }
        if (a_max > s as i64 || b_max > r as i64) && !args.unsafe_params {
            return Err(CliError::invalid("a > s or b > r requires --unsafe-params"));
        }
        let count = ((max - args.m_min + 1) as usize)
            .checked_pow(r as u32)
            .and_then(|x| x.checked_mul((max as usize).checked_pow(s as u32)?))
            .and_then(|x| x.checked_mul((a_max as usize + 1) * b_max as usize));
        if count.is_none_or(|c| c > MAX_INSTANCES) {
            return Err(CliError::invalid(format!("grid exceeds {MAX_INSTANCES} instances")));
        }

        let ms = vectors(r, args.m_min, max);
        let ns = vectors(s, 1, max);
        let mut v = Vec::new();
        for m in &ms {
            for n in &ns {
                for a in 0..=a_max {
                    for b in 1..=b_max {
                        let p = CyclicParams::new_unchecked_range(m.clone(), n.clone(), a, b)?;
                        v.push(Instance::F(p));
                    }
                }
            }
        }
        Ok(v)
    }

    /// Evaluates every instance and runs the selected checks.
    pub fn run(&self) -> CliResult<Vec<PositivityReport>> {
        let recursion = OddCatalanRecursion::new();
        self.instances
            .par_iter()
            .map(|inst| self.evaluate(inst, &recursion))
            .collect()
    }

    fn evaluate(&self, inst: &Instance, recursion: &OddCatalanRecursion) -> CliResult<PositivityReport> {
        let mut report = PositivityReport::evaluate(inst.clone())?;
        for &check in &self.checks {
            let verdict = match check {
                Check::Positivity => Some(report.is_polynomial && report.nonneg),
                Check::Q1Specialization => Some(
                    report.is_polynomial
                        && inst
                            .integer_value_at_one()
                            .map(|v| v.to_string() == report.value_at_one)
                            .unwrap_or(false),
                ),
                Check::OracleEquivalence => match inst {
                    Instance::C(p) => Some(report.is_polynomial && recursion.get(p.m, p.n)? == report.poly),
                    _ => None,
                },
                Check::DegreeBound => match inst {
                    Instance::F(p) => Some(report.is_polynomial && degree_bound_holds(p, &report.poly).unwrap_or(true)),
                    _ => None,
                },
                Check::Reciprocity => match inst {
                    Instance::F(p) if p.in_theorem_range() => Some(match qpos_core::reciprocity_check(p) {
                        Ok(r) => r.passed,
                        Err(Error::NotDivisible { .. }) => false,
                        Err(e) => return Err(e.into()),
                    }),
                    _ => None,
                },
                Check::Deletion => match inst {
                    Instance::F(p) if p.in_theorem_range() && p.r() >= 3 && p.b >= 2 => {
                        Some(match qpos_core::deletion_check(p) {
                            Ok(r) => r.passed,
                            Err(Error::NotDivisible { .. }) => false,
                            Err(e) => return Err(e.into()),
                        })
                    }
                    _ => None,
                },
            };
            if let Some(passed) = verdict {
                report.record(check.name(), passed);
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(reports: &[PositivityReport]) -> Self {
        let failed = reports.iter().filter(|r| r.failed()).count();
        Summary {
            instances: reports.len(),
            passed: reports.len() - failed,
            failed,
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} instances, {} passed, {} failed",
            self.instances, self.passed, self.failed
        )
    }
}

fn csv_row(r: &PositivityReport) -> [String; 7] {
    [
        r.instance.family().to_string(),
        r.instance.param_string(),
        r.degree.map_or_else(String::new, |d| d.to_string()),
        u8::from(r.nonneg).to_string(),
        r.value_at_one.clone(),
        r.checks_passed.join(";"),
        r.checks_failed.join(";"),
    ]
}

pub const CSV_HEADER: [&str; 7] = [
    "family",
    "params",
    "degree",
    "nonneg",
    "value_at_one",
    "checks_passed",
    "checks_failed",
];

/// Writes reports in the requested format. JSON-lines and CSV keep the
/// summary out of the report stream; it goes to `footer` instead.
pub fn write_reports(
    reports: &[PositivityReport],
    format: Format,
    out: &mut dyn Write,
    footer: &mut dyn Write,
) -> CliResult<()> {
    let summary = Summary::of(reports);
    match format {
        Format::Jsonl => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
            }
            writeln!(footer, "summary: {summary}")?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                reports: &'a [PositivityReport],
                summary: Summary,
            }
            let doc = Doc { reports, summary };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let to_err = |e: csv::Error| CliError::invalid(format!("csv: {e}"));
            w.write_record(CSV_HEADER).map_err(to_err)?;
            for r in reports {
                w.write_record(csv_row(r)).map_err(to_err)?;
            }
            w.flush()?;
            drop(w);
            writeln!(footer, "summary: {summary}")?;
        }
        Format::Text => {
            for r in reports {
                let status = if r.failed() { "FAIL" } else { "ok" };
                let degree = r.degree.map_or_else(|| "-".to_string(), |d| d.to_string());
                write!(
                    out,
                    "{status} {} {} deg={degree} nonneg={} q1={} poly={}",
                    r.instance.family(),
                    r.instance.param_string(),
                    u8::from(r.nonneg),
                    r.value_at_one,
                    r.poly
                )?;
                if !r.checks_failed.is_empty() {
                    write!(out, " failed={}", r.checks_failed.join(";"))?;
                }
                if r.out_of_theorem {
                    write!(out, " out-of-theorem")?;
                }
                writeln!(out)?;
            }
            writeln!(out, "# {summary}")?;
        }
    }
    Ok(())
}

pub fn cmd_scan(args: &ScanArgs, out: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let spec = ScanSpec::from_args(args)?;
    let reports = spec.run()?;
    write_reports(&reports, args.format, out, stderr)?;
    Ok(if Summary::of(&reports).failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}
