//! Universal and existential quantifiers on finite NM-algebras.

mod dual;
mod enumerate;
mod laws;

use serde::Serialize;

pub use dual::{
    check_modal, check_w_axioms, enumerate_h_pairs, enumerate_modal, modal_strong_equivalence, rough_space,
    verify_g_h_equivalence, GhReport, ModalReport, RoughApproximationSpace, W3Form, DUAL_LIMIT,
};
pub use enumerate::{enumerate_quantifiers, enumerate_quantifiers_naive, NAIVE_LIMIT, PRUNED_LIMIT};
pub use laws::{
    is_monadic_boolean, quantifier_properties, IdentityFailure, MonadicBooleanReport, QuantifierPropertyReport,
};

use crate::algebra::{Elem, FiniteNmAlgebra};
use crate::error::{Error, Result};
use crate::report::{scan1, scan2, Check, CheckReport};
use crate::set::ElementSet;

/// A self-map of an algebra's universe, stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct QuantifierMap(Vec<Elem>);

impl QuantifierMap {
    /// Checks only the shape: one in-range image per element.
    pub fn new(a: &FiniteNmAlgebra, image: Vec<Elem>) -> Result<Self> {
        if image.len() != a.size() {
            return Err(Error::Precondition(format!(
                "map has {} images but the algebra has {} elements",
                image.len(),
                a.size()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&v| v >= a.size()) {
            return Err(Error::Precondition(format!("image index {bad} out of range")));
        }
        Ok(QuantifierMap(image))
    }

    pub(crate) fn from_image(image: Vec<Elem>) -> Self {
        QuantifierMap(image)
    }

    pub fn identity(a: &FiniteNmAlgebra) -> Self {
        QuantifierMap(a.elements().collect())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x]
    }

    pub fn image(&self) -> &[Elem] {
        &self.0
    }

    pub fn fixpoints(&self) -> ElementSet {
        (0..self.0.len()).filter(|&x| self.0[x] == x).collect()
    }

    pub fn range(&self) -> ElementSet {
        self.0.iter().copied().collect()
    }

    pub fn show(&self, a: &FiniteNmAlgebra) -> String {
        self.0.iter().map(|&v| a.label(v)).collect::<Vec<_>>().join(" ")
    }
}

/// `∃x = ¬∀¬x` computed from an arbitrary map.
pub fn dual_map(a: &FiniteNmAlgebra, q: &[Elem]) -> Vec<Elem> {
    a.elements().map(|x| a.neg(q[a.neg(x)])).collect()
}

/// The four defining axioms, each with its first failing tuple.
pub fn check_universal(a: &FiniteNmAlgebra, q: &QuantifierMap) -> Result<CheckReport> {
    if q.image().len() != a.size() {
        return Err(Error::Precondition("quantifier size does not match the algebra".into()));
    }
    Ok(universal_report(a, q.image()))
}

pub(crate) fn universal_report(a: &FiniteNmAlgebra, q: &[Elem]) -> CheckReport {
    let n = a.size();
    let f = |x: Elem| q[x];
    let mut r = CheckReport::new();
    r.push(Check::new("U1", "∀x ≤ x", scan1(n, |x| a.leq(f(x), x))));
    r.push(Check::new(
        "U2",
        "∀(¬x→∀y) = ¬∀x→∀y",
        scan2(n, |x, y| f(a.imp(a.neg(x), f(y))) == a.imp(a.neg(f(x)), f(y))),
    ));
    r.push(Check::new(
        "U3",
        "∀(∀x→y) = ∀x→∀y",
        scan2(n, |x, y| f(a.imp(f(x), y)) == a.imp(f(x), f(y))),
    ));
    r.push(Check::new(
        "U4",
        "∀(x∨∀y) = ∀x∨∀y",
        scan2(n, |x, y| f(a.join(x, f(y))) == a.join(f(x), f(y))),
    ));
    r
}

/// Fast yes/no version of [`check_universal`] used inside enumerations.
pub(crate) fn is_universal(a: &FiniteNmAlgebra, q: &[Elem]) -> bool {
    let n = a.size();
    (0..n).all(|x| a.leq(q[x], x))
        && (0..n).all(|x| {
            (0..n).all(|y| {
                q[a.imp(q[x], y)] == a.imp(q[x], q[y])
                    && q[a.join(x, q[y])] == a.join(q[x], q[y])
                    && q[a.imp(a.neg(x), q[y])] == a.imp(a.neg(q[x]), q[y])
            })
        })
}

/// First pair with `∀(x∨y) ≠ ∀x∨∀y`.
pub fn strong_witness(a: &FiniteNmAlgebra, q: &[Elem]) -> Option<(Elem, Elem)> {
    scan2(a.size(), |x, y| q[a.join(x, y)] == a.join(q[x], q[y])).map(|w| (w[0], w[1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongVerdict {
    pub strong: bool,
    pub witness: Option<(Elem, Elem)>,
}

/// The unrestricted join law, for a map already satisfying U1–U3.
pub fn check_strong(a: &FiniteNmAlgebra, q: &QuantifierMap) -> Result<StrongVerdict> {
    let r = check_universal(a, q)?;
    if let Some(c) = r.checks.iter().take(3).find(|c| !c.passed) {
        return Err(Error::NotQuantifier(c.id.clone()));
    }
    let witness = strong_witness(a, q.image());
    Ok(StrongVerdict {
        strong: witness.is_none(),
        witness,
    })
}

/// An NM-algebra with a validated universal quantifier and its derived data.
#[derive(Clone, Debug)]
pub struct MonadicNmAlgebra {
    algebra: FiniteNmAlgebra,
    forall: QuantifierMap,
    exists: Vec<Elem>,
    fixpoints: ElementSet,
}

impl MonadicNmAlgebra {
    /// Fails with [`Error::NotQuantifier`] naming the first violated axiom.
    pub fn new(algebra: FiniteNmAlgebra, forall: QuantifierMap) -> Result<Self> {
        let r = check_universal(&algebra, &forall)?;
        if let Some(c) = r.failures().next() {
            return Err(Error::NotQuantifier(c.id.clone()));
        }
        let exists = dual_map(&algebra, forall.image());
        let fixpoints = forall.fixpoints();
        Ok(MonadicNmAlgebra {
            algebra,
            forall,
            exists,
            fixpoints,
        })
    }

    pub fn identity(algebra: FiniteNmAlgebra) -> Self {
        let q = QuantifierMap::identity(&algebra);
        MonadicNmAlgebra::new(algebra, q).expect("the identity is a quantifier")
    }

    pub fn algebra(&self) -> &FiniteNmAlgebra {
        &self.algebra
    }

    pub fn forall_map(&self) -> &QuantifierMap {
        &self.forall
    }

    #[inline]
    pub fn forall(&self, x: Elem) -> Elem {
        self.forall.apply(x)
    }

    #[inline]
    pub fn exists(&self, x: Elem) -> Elem {
        self.exists[x]
    }

    pub fn exists_map(&self) -> &[Elem] {
        &self.exists
    }

    /// `L_∀ = {x | ∀x = x}`.
    pub fn fixpoints(&self) -> ElementSet {
        self.fixpoints
    }

    pub fn is_strong(&self) -> bool {
        strong_witness(&self.algebra, self.forall.image()).is_none()
    }

    /// `L_∀` as an NM-algebra, with its embedding into `L`.
    pub fn fixpoint_algebra(&self) -> Result<(FiniteNmAlgebra, Vec<Elem>)> {
        let name = format!("{}-fixpoints", self.algebra.name());
        self.algebra.subalgebra(self.fixpoints, name)
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }
}

/// `∃ = ¬∀¬` together with the dual axioms E1–E4.
pub fn exists_of(m: &MonadicNmAlgebra) -> (Vec<Elem>, CheckReport) {
    let a = m.algebra();
    let n = a.size();
    let e = |x: Elem| m.exists(x);
    let mut r = CheckReport::new();
    r.push(Check::new("E1", "x ≤ ∃x", scan1(n, |x| a.leq(x, e(x)))));
    r.push(Check::new(
        "E2",
        "∃(¬x⊙∃y) = ∃¬x⊙∃y",
        scan2(n, |x, y| e(a.mul(a.neg(x), e(y))) == a.mul(e(a.neg(x)), e(y))),
    ));
    r.push(Check::new(
        "E3",
        "∃(¬∃x⊙¬y) = ¬∃x⊙∃¬y",
        scan2(n, |x, y| {
            e(a.mul(a.neg(e(x)), a.neg(y))) == a.mul(a.neg(e(x)), e(a.neg(y)))
        }),
    ));
    r.push(Check::new(
        "E4",
        "∃(x∧∃y) = ∃x∧∃y",
        scan2(n, |x, y| e(a.meet(x, e(y))) == a.meet(e(x), e(y))),
    ));
    (m.exists_map().to_vec(), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_six_element, nm_chain};

    fn labels(a: &FiniteNmAlgebra, v: &[Elem]) -> Vec<String> {
        v.iter().map(|&x| a.label(x).to_string()).collect()
    }

    #[test]
    fn six_element_quantifier_and_its_dual() {
        let m = fixture_six_element().monadic(0).unwrap();
        let a = m.algebra();
        assert_eq!(m.forall_map().show(a), "0 0 b b d 1");
        let (ex, r) = exists_of(&m);
        assert!(r.all_pass());
        assert_eq!(labels(a, &ex), ["0", "d", "b", "1", "d", "1"]);
        let ea = a.element("a").unwrap();
        assert_eq!(m.exists(a.mul(ea, ea)), a.bottom());
        assert_eq!(a.label(a.mul(m.exists(ea), m.exists(ea))), "d");
    }

    #[test]
    fn identity_is_a_quantifier_with_identity_dual() {
        let a = fixture_six_element().algebra;
        let m = MonadicNmAlgebra::identity(a.clone());
        assert_eq!(m.exists_map(), QuantifierMap::identity(&a).image());
        assert!(m.is_strong());
    }

    #[test]
    fn constant_bottom_map_fails_u3() {
        let a = nm_chain(3).unwrap();
        let q = QuantifierMap::new(&a, vec![0, 0, 0]).unwrap();
        let r = check_universal(&a, &q).unwrap();
        assert!(r.passed("U1"));
        assert!(!r.passed("U3"));
        assert!(matches!(MonadicNmAlgebra::new(a, q), Err(Error::NotQuantifier(_))));
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = nm_chain(3).unwrap();
        assert!(QuantifierMap::new(&a, vec![0, 1]).is_err());
        assert!(QuantifierMap::new(&a, vec![0, 1, 3]).is_err());
    }

    #[test]
    fn six_element_quantifier_is_strong() {
        let m = fixture_six_element().monadic(0).unwrap();
        assert!(check_strong(m.algebra(), m.forall_map()).unwrap().strong);
        let a = m.algebra();
        let (x, y) = (a.element("a").unwrap(), a.element("b").unwrap());
        assert_eq!(a.label(a.join(x, y)), "c");
    }
}
