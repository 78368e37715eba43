use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{parse_formula, Formula};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MetaVar {
    Phi,
    Psi,
    Chi,
}

impl MetaVar {
    pub const ALL: [MetaVar; 3] = [MetaVar::Phi, MetaVar::Psi, MetaVar::Chi];

    pub fn name(self) -> &'static str {
        match self {
            MetaVar::Phi => "phi",
            MetaVar::Psi => "psi",
            MetaVar::Chi => "chi",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        MetaVar::ALL.into_iter().find(|m| m.name() == s)
    }
}

pub type Substitution = BTreeMap<MetaVar, Formula>;

#[derive(Clone, Debug)]
pub struct AxiomSchema {
    pub id: &'static str,
    /// Concrete syntax with `phi`, `psi`, `chi` as metavariables.
    pub text: &'static str,
    pub template: Formula,
    pub metavars: Vec<MetaVar>,
    /// Only sound for strong quantifiers.
    pub strong_only: bool,
    pub note: Option<&'static str>,
}

/// The WNM shape with the negation applied to `φ` alone. It fails on the
/// 3-chain at `φ = ψ = 1/2`, so the schema list uses `¬(φ&ψ)` instead.
pub const WNM_UNGUARDED: &str = "((phi -> 0) & psi) \\/ (phi /\\ psi -> phi & psi)";

const TABLE: [(&str, &str, Option<&str>); 17] = [
    ("MTL1", "(phi -> psi) -> (psi -> chi) -> phi -> chi", None),
    ("MTL2", "phi & psi -> phi", None),
    ("MTL3", "phi & psi -> psi & phi", None),
    ("MTL4", "phi /\\ psi -> phi", None),
    ("MTL5", "phi /\\ psi -> psi /\\ phi", None),
    ("MTL6", "phi & (phi -> psi) -> phi /\\ psi", None),
    ("MTL7a", "(phi -> psi -> chi) -> phi & psi -> chi", None),
    ("MTL7b", "(phi & psi -> chi) -> phi -> psi -> chi", None),
    ("MTL8", "((phi -> psi) -> chi) -> ((psi -> phi) -> chi) -> chi", None),
    ("MTL9", "0 -> phi", None),
    ("DN", "((phi -> 0) -> 0) -> phi", None),
    (
        "WNM",
        "(phi & psi -> 0) \\/ (phi /\\ psi -> phi & psi)",
        Some("negation taken over phi & psi; the variant negating phi alone is not valid on the 3-chain"),
    ),
    ("U1", "A phi -> phi", None),
    (
        "U2",
        "A((phi -> 0) -> A psi) -> (A phi -> 0) -> A psi",
        Some("grouped as the algebraic law: A(~phi -> A psi) -> (~A phi -> A psi)"),
    ),
    ("U3", "A(A phi -> psi) -> A phi -> A psi", None),
    ("U4", "A(phi \\/ A psi) -> A phi \\/ A psi", None),
    ("SMNL", "A(phi \\/ psi) -> A phi \\/ A psi", None),
];

/// The sixteen MNL schemas followed by the strong schema `SMNL`.
pub fn axiom_schemas() -> &'static [AxiomSchema] {
    static SCHEMAS: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    SCHEMAS.get_or_init(|| {
        TABLE
            .iter()
            .map(|&(id, text, note)| {
                let template = parse_formula(text).expect("schema table parses");
                let vars = template.variables();
                AxiomSchema {
                    id,
                    text,
                    metavars: MetaVar::ALL.into_iter().filter(|m| vars.contains(m.name())).collect(),
                    template,
                    strong_only: id == "SMNL",
                    note,
                }
            })
            .collect()
    })
}

pub fn schema(id: &str) -> Result<&'static AxiomSchema> {
    axiom_schemas()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::Precondition(format!("unknown axiom schema `{id}`")))
}

fn substitute(t: &Formula, sub: &dyn Fn(&str) -> Formula) -> Formula {
    let go = |x: &Formula| Box::new(substitute(x, sub));
    match t {
        Formula::Var(v) => sub(v),
        Formula::Zero => Formula::Zero,
        Formula::One => Formula::One,
        Formula::Forall(a) => Formula::Forall(go(a)),
        Formula::Min(a, b) => Formula::Min(go(a), go(b)),
        Formula::Max(a, b) => Formula::Max(go(a), go(b)),
        Formula::StrongConj(a, b) => Formula::StrongConj(go(a), go(b)),
        Formula::Imp(a, b) => Formula::Imp(go(a), go(b)),
    }
}

/// Replaces each metavariable of the schema by its formula. Substituted
/// formulas are not traversed again, so their variables never clash with
/// metavariable names.
pub fn instantiate(id: &str, subst: &Substitution) -> Result<Formula> {
    let s = schema(id)?;
    if let Some(m) = s.metavars.iter().find(|m| !subst.contains_key(m)) {
        return Err(Error::Precondition(format!(
            "schema {id} needs a formula for {}",
            m.name()
        )));
    }
    Ok(substitute(&s.template, &|v| {
        let m = MetaVar::from_name(v).expect("templates only mention metavariables");
        subst[&m].clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(pairs: &[(MetaVar, &str)]) -> Substitution {
        pairs.iter().map(|&(m, t)| (m, parse_formula(t).unwrap())).collect()
    }

    #[test]
    fn sixteen_plus_one() {
        let all = axiom_schemas();
        assert_eq!(all.len(), 17);
        assert_eq!(all.iter().filter(|s| !s.strong_only).count(), 16);
        assert_eq!(schema("MTL1").unwrap().metavars, MetaVar::ALL);
        assert_eq!(schema("MTL9").unwrap().metavars, [MetaVar::Phi]);
    }

    #[test]
    fn instances() {
        let p = sub(&[(MetaVar::Phi, "p1"), (MetaVar::Psi, "p1")]);
        assert_eq!(
            instantiate("MTL2", &p).unwrap(),
            parse_formula("(p1 & p1) -> p1").unwrap()
        );

        let p = sub(&[(MetaVar::Phi, "p1"), (MetaVar::Psi, "p2")]);
        assert_eq!(
            instantiate("U2", &p).unwrap(),
            parse_formula("A((p1 -> 0) -> A p2) -> (((A p1) -> 0) -> A p2)").unwrap()
        );
        assert_eq!(
            instantiate("SMNL", &p).unwrap(),
            parse_formula("A(p1 \\/ p2) -> (A p1 \\/ A p2)").unwrap()
        );
    }

    #[test]
    fn substituted_formulas_are_not_rewritten() {
        let p = sub(&[(MetaVar::Phi, "psi")]);
        assert_eq!(instantiate("U1", &p).unwrap(), parse_formula("A psi -> psi").unwrap());
    }

    #[test]
    fn unguarded_wnm_fails_at_the_midpoint() {
        use crate::catalog::nm_chain;
        use crate::logic::{evaluate, Assignment};
        use crate::quantifier::MonadicNmAlgebra;
        let m = MonadicNmAlgebra::identity(nm_chain(3).unwrap());
        let half: Assignment = [("phi".to_string(), 1), ("psi".to_string(), 1)].into();
        let f = parse_formula(WNM_UNGUARDED).unwrap();
        assert_eq!(evaluate(&m, &half, &f).unwrap(), 1);
        assert_eq!(evaluate(&m, &half, &schema("WNM").unwrap().template).unwrap(), 2);
    }

    #[test]
    fn errors() {
        assert!(instantiate("MTL10", &Substitution::new()).is_err());
        assert!(instantiate("MTL1", &sub(&[(MetaVar::Phi, "p1")])).is_err());
    }
}
