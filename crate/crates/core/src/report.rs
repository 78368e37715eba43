//! Pass/fail reports for families of laws checked over all element tuples.

use std::fmt::Write as _;

use serde::Serialize;

/// Outcome of checking one law exhaustively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    /// Lexicographically first tuple on which the law fails.
    pub witness: Option<Vec<usize>>,
    /// For inequalities: first tuple on which the reverse inequality fails,
    /// i.e. where the law holds strictly and the converse is refuted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_witness: Option<Vec<usize>>,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Check {
            id: id.into(),
            statement: statement.into(),
            passed: witness.is_none(),
            witness,
            strict_witness: None,
        }
    }

    pub fn with_strict(mut self, strict_witness: Option<Vec<usize>>) -> Self {
        self.strict_witness = strict_witness;
        self
    }

    pub fn verdict(id: impl Into<String>, statement: impl Into<String>, passed: bool) -> Self {
        Check {
            id: id.into(),
            statement: statement.into(),
            passed,
            witness: None,
            strict_witness: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failure_ids(&self) -> Vec<&str> {
        self.failures().map(|c| c.id.as_str()).collect()
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// One line per law, witnesses shown through `names`.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(
                out,
                "{:<8} {} {}",
                c.id,
                if c.passed { "pass" } else { "FAIL" },
                c.statement
            );
            if let Some(w) = &c.witness {
                let _ = write!(out, "  [witness {}]", label_tuple(w, names));
            }
            if let Some(w) = &c.strict_witness {
                let _ = write!(out, "  [strict at {}]", label_tuple(w, names));
            }
            out.push('\n');
        }
        out
    }
}

/// Witness tuples may carry non-element entries (exponents, quantifier
/// indices); those print as plain numbers when out of range.
pub fn label_tuple(tuple: &[usize], names: &[String]) -> String {
    let parts: Vec<String> = tuple
        .iter()
        .map(|&i| names.get(i).cloned().unwrap_or_else(|| i.to_string()))
        .collect();
    format!("({})", parts.join(","))
}

pub(crate) fn scan1(n: usize, mut holds: impl FnMut(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&x| !holds(x)).map(|x| vec![x])
}

pub(crate) fn scan2(n: usize, mut holds: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            if !holds(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

pub(crate) fn scan3(n: usize, mut holds: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}
