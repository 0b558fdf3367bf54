use serde::{Deserialize, Serialize};

use crate::qpoly::IntPoly;

/// Outcome of checking one named identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheckResult {
    pub identity: String,
    pub params: String,
    pub passed: bool,
    /// Set when the identity holds only because it is outside its domain
    /// (both sides vanish by convention).
    #[serde(default)]
    pub vacuous: bool,
    /// `lhs - rhs` when the sides differ.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub difference: Option<IntPoly>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl IdentityCheckResult {
    pub fn compare(identity: &str, params: String, lhs: &IntPoly, rhs: &IntPoly) -> Self {
        let diff = lhs - rhs;
        let passed = diff.is_zero();
        IdentityCheckResult {
            identity: identity.to_string(),
            params,
            passed,
            vacuous: false,
            difference: (!passed).then_some(diff),
            detail: None,
        }
    }

    pub fn vacuous(identity: &str, params: String, why: &str) -> Self {
        IdentityCheckResult {
            identity: identity.to_string(),
            params,
            passed: true,
            vacuous: true,
            difference: None,
            detail: Some(why.to_string()),
        }
    }

    pub fn failed(identity: &str, params: String, why: String) -> Self {
        IdentityCheckResult {
            identity: identity.to_string(),
            params,
            passed: false,
            vacuous: false,
            difference: None,
            detail: Some(why),
        }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}
