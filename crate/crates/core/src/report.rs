//! Per-instance positivity verdicts for the families `A`, `B`, `C` and `F`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::altsum::{self, CyclicParams};
use crate::catalan::{self, CatalanPair};
use crate::error::{Error, Result};
use crate::qpoly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    F,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::F => "F",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "F" | "f" => Ok(Family::F),
            other => Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        }
    }
}

/// One parameter point of one family. For `B` the pair holds `B_{n,m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum Instance {
    A(CatalanPair),
    B(CatalanPair),
    C(CatalanPair),
    F(CyclicParams),
}

impl Instance {
    pub fn family(&self) -> Family {
        match self {
            Instance::A(_) => Family::A,
            Instance::B(_) => Family::B,
            Instance::C(_) => Family::C,
            Instance::F(_) => Family::F,
        }
    }

    pub fn compute(&self) -> Result<IntPoly> {
        match self {
            Instance::A(p) => catalan::super_catalan_a(p.m, p.n),
            Instance::B(p) => catalan::ratio_b(p.n, p.m),
            Instance::C(p) => catalan::odd_super_catalan_direct(p.m, p.n),
            Instance::F(p) => altsum::F(p),
        }
    }

    /// Integer value at `q = 1` from the factorial formulas alone.
    pub fn integer_value_at_one(&self) -> Result<BigInt> {
        match self {
            Instance::A(p) => crate::qone::super_catalan_a(p.m, p.n),
            Instance::B(p) => crate::qone::ratio_b(p.n, p.m),
            Instance::C(p) => crate::qone::odd_super_catalan(p.m, p.n),
            Instance::F(p) => crate::qone::alternating_sum(p),
        }
    }

    pub fn out_of_theorem(&self) -> bool {
        matches!(self, Instance::F(p) if !p.in_theorem_range())
    }

    /// Semicolon-joined parameter tuple, e.g. `m=2;n=1`.
    pub fn param_string(&self) -> String {
        match self {
            Instance::A(p) | Instance::C(p) => format!("m={};n={}", p.m, p.n),
            Instance::B(p) => format!("n={};m={}", p.n, p.m),
            Instance::F(p) => p.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    #[serde(flatten)]
    pub instance: Instance,
    pub poly: IntPoly,
    pub is_polynomial: bool,
    pub nonneg: bool,
    pub degree: Option<usize>,
    pub value_at_one: String,
    #[serde(default)]
    pub out_of_theorem: bool,
    #[serde(default)]
    pub checks_passed: Vec<String>,
    #[serde(default)]
    pub checks_failed: Vec<String>,
}

impl PositivityReport {
    /// Evaluates the instance. A failed exact division yields a report with
    /// `is_polynomial = false` and the zero polynomial; other errors propagate.
    pub fn evaluate(instance: Instance) -> Result<Self> {
        let (poly, is_polynomial) = match instance.compute() {
            Ok(p) => (p, true),
            Err(Error::NotDivisible { .. }) => (IntPoly::zero(), false),
            Err(e) => return Err(e),
        };
        Ok(Self::from_poly(instance, poly, is_polynomial))
    }

    pub fn from_poly(instance: Instance, poly: IntPoly, is_polynomial: bool) -> Self {
        PositivityReport {
            out_of_theorem: instance.out_of_theorem(),
            instance,
            nonneg: is_polynomial && poly.is_nonneg(),
            degree: poly.degree(),
            value_at_one: poly.eval_at_one().to_string(),
            is_polynomial,
            poly,
            checks_passed: Vec::new(),
            checks_failed: Vec::new(),
        }
    }

    pub fn record(&mut self, check: &str, passed: bool) {
        if passed {
            self.checks_passed.push(check.to_string());
        } else {
            self.checks_failed.push(check.to_string());
        }
    }

    pub fn failed(&self) -> bool {
        !self.checks_failed.is_empty()
    }
}
