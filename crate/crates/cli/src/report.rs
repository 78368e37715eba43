use std::fmt::Write as _;

use mnm_core::report::CheckReport;
use mnm_core::{ElementSet, FiniteNmAlgebra};
use serde_json::{json, Value};

/// Text and structured forms of one command's output.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub affirmative: bool,
}

impl Report {
    pub fn new(text: String, json: Value, affirmative: bool) -> Self {
        Report {
            text,
            json,
            affirmative,
        }
    }
}

/// Accumulates text lines.
#[derive(Default)]
pub struct Lines(String);

impl Lines {
    pub fn push(&mut self, line: impl AsRef<str>) {
        self.0.push_str(line.as_ref());
        self.0.push('\n');
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

pub fn labels(a: &FiniteNmAlgebra, s: ElementSet) -> Vec<String> {
    a.set_labels(s).into_iter().map(String::from).collect()
}

pub fn image(a: &FiniteNmAlgebra, q: &[usize]) -> Vec<String> {
    q.iter().map(|&x| a.label(x).to_string()).collect()
}

pub fn tuple(a: &FiniteNmAlgebra, xs: &[usize]) -> String {
    format!("({})", image(a, xs).join(","))
}

/// One `PASS`/`FAIL` line per check, with labelled witnesses.
pub fn render_checks(out: &mut Lines, a: &FiniteNmAlgebra, r: &CheckReport) {
    for c in &r.checks {
        let mut line = format!(
            "{} {:<26} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.statement
        );
        if let Some(w) = &c.witness {
            let _ = write!(line, "  fails at {}", tuple(a, w));
        }
        if let Some(w) = &c.strict_witness {
            let _ = write!(line, "  strict at {}", tuple(a, w));
        }
        out.push(line);
    }
}

pub fn checks_json(a: &FiniteNmAlgebra, r: &CheckReport) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "statement": c.statement,
                    "passed": c.passed,
                    "witness": c.witness.as_deref().map(|w| image(a, w)),
                    "strict_witness": c.strict_witness.as_deref().map(|w| image(a, w)),
                })
            })
            .collect(),
    )
}
