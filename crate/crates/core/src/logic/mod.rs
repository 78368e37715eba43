//! Monadic NM-logic: formulas, axiom schemas, evaluation and proof checking.
//!
//! Concrete syntax, loosest binding last:
//!
//! | operator          | syntax          | associativity |
//! |-------------------|-----------------|---------------|
//! | forall, exists, ¬ | `A` `E` `~`     | prefix        |
//! | strong conj.      | `&`             | left          |
//! | meet              | `/\`            | left          |
//! | join              | `\/`            | left          |
//! | implication       | `->`            | right         |
//! | equivalence       | `<->`           | left          |
//!
//! `~φ`, `Eφ` and `φ <-> ψ` are expanded while parsing, so a [`Formula`]
//! only ever holds the primitive connectives.

mod eval;
mod parse;
mod proof;
mod schema;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::{
    consequence_check, evaluate, is_model, soundness_sweep, Assignment, Countermodel, SchemaCounterexample,
    SoundnessReport, SweepOptions,
};
pub use parse::{parse_formula, parse_theory, Theory};
pub use proof::{check_proof, parse_proof, Justification, Proof, ProofLine, ProofVerdict};
pub use schema::{axiom_schemas, instantiate, schema, AxiomSchema, MetaVar, Substitution, WNM_UNGUARDED};

/// Bundled sample derivation over [`SAMPLE_THEORY`], and three corrupted copies.
pub const SAMPLE_PROOF: &str = include_str!("../../fixtures/proofs/sample.proof");
pub const SAMPLE_THEORY: &str = include_str!("../../fixtures/proofs/sample.theory");
pub const SAMPLE_MUTANTS: [(&str, &str); 3] = [
    ("swapped-mp", include_str!("../../fixtures/proofs/swapped_mp.proof")),
    ("forward-nec", include_str!("../../fixtures/proofs/forward_nec.proof")),
    (
        "wrong-substitution",
        include_str!("../../fixtures/proofs/wrong_substitution.proof"),
    ),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Zero,
    One,
    Min(Box<Formula>, Box<Formula>),
    Max(Box<Formula>, Box<Formula>),
    StrongConj(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn min(a: Formula, b: Formula) -> Self {
        Formula::Min(Box::new(a), Box::new(b))
    }

    pub fn max(a: Formula, b: Formula) -> Self {
        Formula::Max(Box::new(a), Box::new(b))
    }

    pub fn conj(a: Formula, b: Formula) -> Self {
        Formula::StrongConj(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(a: Formula) -> Self {
        Formula::Forall(Box::new(a))
    }

    /// `φ ⇒ 0̄`
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::imp(a, Formula::Zero)
    }

    /// `¬∀¬φ`
    pub fn exists(a: Formula) -> Self {
        Formula::not(Formula::forall(Formula::not(a)))
    }

    /// `(φ ⇒ ψ) ⊓ (ψ ⇒ φ)`
    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::min(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Zero | Formula::One => {}
            Formula::Forall(a) => a.collect_vars(out),
            Formula::Min(a, b) | Formula::Max(a, b) | Formula::StrongConj(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Zero | Formula::One => 0,
            Formula::Forall(a) => 1 + a.depth(),
            Formula::Min(a, b) | Formula::Max(a, b) | Formula::StrongConj(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Imp(..) => 1,
            Formula::Max(..) => 2,
            Formula::Min(..) => 3,
            Formula::StrongConj(..) => 4,
            _ => 5,
        }
    }
}

/// Prints with the fewest parentheses the parser needs to rebuild the same tree.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |out: &mut fmt::Formatter<'_>, g: &Formula, parens: bool| {
            if parens {
                write!(out, "({g})")
            } else {
                write!(out, "{g}")
            }
        };
        let p = self.precedence();
        let (op, a, b) = match self {
            Formula::Var(v) => return write!(out, "{v}"),
            Formula::Zero => return write!(out, "0"),
            Formula::One => return write!(out, "1"),
            Formula::Forall(a) => {
                // `A(p)` and `A p` parse alike; the space keeps `A p1` from lexing as `Ap1`
                return match **a {
                    Formula::Var(_) | Formula::Zero | Formula::One | Formula::Forall(_) => write!(out, "A {a}"),
                    _ => write!(out, "A({a})"),
                };
            }
            Formula::Min(a, b) => ("/\\", a, b),
            Formula::Max(a, b) => ("\\/", a, b),
            Formula::StrongConj(a, b) => ("&", a, b),
            Formula::Imp(a, b) => ("->", a, b),
        };
        let right_assoc = matches!(self, Formula::Imp(..));
        let (lp, rp) = (a.precedence(), b.precedence());
        wrap(out, a, if right_assoc { lp <= p } else { lp < p })?;
        write!(out, " {op} ")?;
        wrap(out, b, if right_assoc { rp < p } else { rp <= p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing_uses_minimal_parentheses() {
        let p = || Formula::var("p1");
        let q = || Formula::var("p2");
        assert_eq!(Formula::imp(p(), Formula::imp(q(), p())).to_string(), "p1 -> p2 -> p1");
        assert_eq!(
            Formula::imp(Formula::imp(p(), q()), p()).to_string(),
            "(p1 -> p2) -> p1"
        );
        assert_eq!(
            Formula::conj(Formula::max(p(), q()), p()).to_string(),
            "(p1 \\/ p2) & p1"
        );
        assert_eq!(
            Formula::min(p(), Formula::min(q(), p())).to_string(),
            "p1 /\\ (p2 /\\ p1)"
        );
        assert_eq!(Formula::forall(Formula::forall(p())).to_string(), "A A p1");
        assert_eq!(Formula::exists(p()).to_string(), "A(p1 -> 0) -> 0");
    }

    #[test]
    fn depth_and_variables() {
        let f = Formula::imp(
            Formula::forall(Formula::var("p1")),
            Formula::conj(Formula::var("p2"), Formula::One),
        );
        assert_eq!(f.depth(), 2);
        assert_eq!(f.variables().into_iter().collect::<Vec<_>>(), ["p1", "p2"]);
    }
}
