//! Machine-readable outcome of an identity check.

use std::fmt;

use serde::Serialize;

use crate::poly::{first_difference, Polynomial};
use crate::scalar::Rational;

/// First coefficient (or entry) at which two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub n: usize,
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub scope: String,
    pub n_max: usize,
    /// Which derivation was checked when more than one is available.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    /// Hypotheses that did not hold for this instance; the checks still ran.
    pub flags: Vec<String>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>, scope: impl Into<String>, n_max: usize) -> Self {
        Self {
            target: target.into(),
            scope: scope.into(),
            n_max,
            path: None,
            flags: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn with_path(mut self, path: impl Into<String>) -> Self {
        self.path = Some(path.into());
        self
    }

    pub fn flag(&mut self, flag: impl Into<String>) {
        self.flags.push(flag.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn push_bool(&mut self, n: usize, label: impl Into<String>, passed: bool, note: Option<String>) {
        self.checks.push(Check {
            n,
            label: label.into(),
            passed,
            mismatch: None,
            note,
        });
    }

    /// Compares two polynomials coefficientwise.
    pub fn push_poly(&mut self, n: usize, label: impl Into<String>, lhs: &Polynomial<Rational>, rhs: &Polynomial<Rational>) {
        let mismatch = first_difference(lhs, rhs).map(|(index, l, r)| Mismatch {
            index,
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
        self.checks.push(Check {
            n,
            label: label.into(),
            passed: mismatch.is_none(),
            mismatch,
            note: None,
        });
    }

    /// Compares two finite sequences, missing entries read as zero.
    pub fn push_values(&mut self, n: usize, label: impl Into<String>, lhs: &[Rational], rhs: &[Rational]) {
        self.push_poly(n, label, &Polynomial::new(lhs.to_vec()), &Polynomial::new(rhs.to_vec()));
    }

    /// Appends another report's checks, prefixing their labels.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for f in other.flags {
            self.flags.push(format!("{prefix}: {f}"));
        }
        for mut c in other.checks {
            c.label = format!("{prefix}: {}", c.label);
            self.checks.push(c);
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.checks.len();
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(
            f,
            "{} on {} (n <= {}): {}/{} checks passed",
            self.target, self.scope, self.n_max, ok, total
        )?;
        if let Some(c) = self.first_failure() {
            write!(f, "; first failure at n = {} [{}]", c.n, c.label)?;
            if let Some(m) = &c.mismatch {
                write!(f, " coefficient {}: {} vs {}", m.index, m.lhs, m.rhs)?;
            }
        }
        Ok(())
    }
}
