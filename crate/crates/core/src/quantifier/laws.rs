//! Derived laws of a quantifier and its dual, checked exhaustively.

use serde::Serialize;

use super::{enumerate_quantifiers, MonadicNmAlgebra};
use crate::algebra::Elem;
use crate::error::Result;
use crate::properties::is_boolean;
use crate::report::{scan1, scan2, Check, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantifierPropertyReport {
    /// Fifteen laws of `∀`.
    pub forall: CheckReport,
    /// Seventeen laws of `∃` and its interaction with `∀`.
    pub exists: CheckReport,
}

impl QuantifierPropertyReport {
    pub fn all_pass(&self) -> bool {
        self.forall.all_pass() && self.exists.all_pass()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.forall.get(id).or_else(|| self.exists.get(id))
    }
}

/// Checks an inequality `lhs ≤ rhs`; the strict witness is the first tuple
/// where `rhs ≤ lhs` fails, refuting the converse.
fn inequality2(
    id: &str,
    statement: &str,
    n: usize,
    leq: impl Fn(Elem, Elem) -> bool,
    lhs: impl Fn(Elem, Elem) -> Elem,
    rhs: impl Fn(Elem, Elem) -> Elem,
) -> Check {
    Check::new(id, statement, scan2(n, |x, y| leq(lhs(x, y), rhs(x, y))))
        .with_strict(scan2(n, |x, y| leq(rhs(x, y), lhs(x, y))))
}

pub fn quantifier_properties(m: &MonadicNmAlgebra) -> QuantifierPropertyReport {
    let a = m.algebra();
    let n = a.size();
    let all = |x: Elem| m.forall(x);
    let ex = |x: Elem| m.exists(x);
    let le = |x: Elem, y: Elem| a.leq(x, y);
    let fix = m.fixpoints();
    let range_all = m.forall_map().range();
    let range_ex: crate::set::ElementSet = a.elements().map(ex).collect();
    let fix_ex: crate::set::ElementSet = a.elements().filter(|&x| ex(x) == x).collect();

    let mut f = CheckReport::new();
    f.push(Check::new(
        "forall-bottom",
        "∀0 = 0",
        (all(a.bottom()) != a.bottom()).then(Vec::new),
    ));
    f.push(Check::new(
        "forall-top",
        "∀1 = 1",
        (all(a.top()) != a.top()).then(Vec::new),
    ));
    f.push(Check::new(
        "forall-idempotent",
        "∀∀x = ∀x",
        scan1(n, |x| all(all(x)) == all(x)),
    ));
    f.push(Check::new(
        "forall-monotone",
        "x ≤ y ⇒ ∀x ≤ ∀y",
        scan2(n, |x, y| !le(x, y) || le(all(x), all(y))),
    ));
    let imp_sub = inequality2(
        "forall-imp",
        "∀(x→y) ≤ ∀x→∀y, in particular ∀¬x ≤ ¬∀x",
        n,
        le,
        |x, y| all(a.imp(x, y)),
        |x, y| a.imp(all(x), all(y)),
    );
    let neg_case = scan1(n, |x| le(all(a.neg(x)), a.neg(all(x))));
    f.push(Check {
        passed: imp_sub.passed && neg_case.is_none(),
        witness: imp_sub.witness.clone().or(neg_case),
        ..imp_sub
    });
    f.push(Check::new(
        "forall-adjoint",
        "∀x ≤ y ⇔ ∀x ≤ ∀y",
        scan2(n, |x, y| le(all(x), y) == le(all(x), all(y))),
    ));
    f.push(Check::new(
        "forall-imp-closed",
        "∀(∀x→∀y) = ∀x→∀y",
        scan2(n, |x, y| all(a.imp(all(x), all(y))) == a.imp(all(x), all(y))),
    ));
    f.push(Check::new(
        "forall-neg-closed",
        "∀¬∀x = ¬∀x",
        scan1(n, |x| all(a.neg(all(x))) == a.neg(all(x))),
    ));
    f.push(Check::new(
        "forall-meet",
        "∀(x∧y) = ∀x∧∀y",
        scan2(n, |x, y| all(a.meet(x, y)) == a.meet(all(x), all(y))),
    ));
    f.push(inequality2(
        "forall-mul",
        "∀(x⊙y) ≥ ∀x⊙∀y",
        n,
        le,
        |x, y| a.mul(all(x), all(y)),
        |x, y| all(a.mul(x, y)),
    ));
    f.push(Check::new(
        "forall-oplus-closed",
        "∀(∀x⊕∀y) = ∀x⊕∀y",
        scan2(n, |x, y| all(a.oplus(all(x), all(y))) == a.oplus(all(x), all(y))),
    ));
    f.push(inequality2(
        "forall-oplus",
        "∀(x⊕y) ≥ ∀x⊕∀y",
        n,
        le,
        |x, y| a.oplus(all(x), all(y)),
        |x, y| all(a.oplus(x, y)),
    ));
    f.push(Check::new(
        "forall-mul-closed",
        "∀(∀x⊙∀y) = ∀x⊙∀y",
        scan2(n, |x, y| all(a.mul(all(x), all(y))) == a.mul(all(x), all(y))),
    ));
    f.push(Check::new(
        "forall-range",
        "∀L = L_∀",
        (range_all != fix).then(|| range_all.difference(fix).union(fix.difference(range_all)).to_vec()),
    ));
    f.push(Check::verdict(
        "forall-subalgebra",
        "∀L is a subalgebra",
        a.is_subuniverse(range_all),
    ));

    let mut e = CheckReport::new();
    e.push(Check::new(
        "exists-bottom",
        "∃0 = 0",
        (ex(a.bottom()) != a.bottom()).then(Vec::new),
    ));
    e.push(Check::new(
        "exists-top",
        "∃1 = 1",
        (ex(a.top()) != a.top()).then(Vec::new),
    ));
    e.push(Check::new(
        "exists-idempotent",
        "∃∃x = ∃x",
        scan1(n, |x| ex(ex(x)) == ex(x)),
    ));
    e.push(Check::new(
        "exists-monotone",
        "x ≤ y ⇒ ∃x ≤ ∃y",
        scan2(n, |x, y| !le(x, y) || le(ex(x), ex(y))),
    ));
    e.push(Check::new(
        "exists-mul-closed",
        "∃(∃x⊙∃y) = ∃x⊙∃y",
        scan2(n, |x, y| ex(a.mul(ex(x), ex(y))) == a.mul(ex(x), ex(y))),
    ));
    e.push(Check::new(
        "exists-neg-closed",
        "∃¬∃x = ¬∃x",
        scan1(n, |x| ex(a.neg(ex(x))) == a.neg(ex(x))),
    ));
    e.push(
        Check::new("exists-neg", "¬∃x ≤ ∃¬x", scan1(n, |x| le(a.neg(ex(x)), ex(a.neg(x)))))
            .with_strict(scan1(n, |x| le(ex(a.neg(x)), a.neg(ex(x))))),
    );
    e.push(Check::new(
        "exists-join",
        "∃(x∨y) = ∃x∨∃y",
        scan2(n, |x, y| ex(a.join(x, y)) == a.join(ex(x), ex(y))),
    ));
    e.push(Check::new(
        "exists-adjoint",
        "x ≤ ∃y ⇔ ∃x ≤ ∃y",
        scan2(n, |x, y| le(x, ex(y)) == le(ex(x), ex(y))),
    ));
    e.push(Check::new(
        "forall-exists",
        "∀∃x = ∃x",
        scan1(n, |x| all(ex(x)) == ex(x)),
    ));
    e.push(Check::new(
        "exists-forall",
        "∃∀x = ∀x",
        scan1(n, |x| ex(all(x)) == all(x)),
    ));
    e.push(Check::new(
        "fixpoints-agree",
        "∀x = x ⇔ ∃x = x",
        scan1(n, |x| (all(x) == x) == (ex(x) == x)),
    ));
    e.push(Check::verdict("exists-range", "∃L = L_∃", range_ex == fix_ex));
    e.push(Check::verdict("ranges-agree", "∃L = ∀L", range_ex == range_all));
    e.push(Check::new(
        "galois",
        "∃x ≤ y ⇔ x ≤ ∀y",
        scan2(n, |x, y| le(ex(x), y) == le(x, all(y))),
    ));
    e.push(Check::new(
        "forall-exists-imp",
        "∀(∃x→∃y) = ∃x→∃y",
        scan2(n, |x, y| all(a.imp(ex(x), ex(y))) == a.imp(ex(x), ex(y))),
    ));
    e.push(Check::new(
        "exists-oplus-closed",
        "∃(∃x⊕∃y) = ∃x⊕∃y",
        scan2(n, |x, y| ex(a.oplus(ex(x), ex(y))) == a.oplus(ex(x), ex(y))),
    ));
    QuantifierPropertyReport { forall: f, exists: e }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonadicBooleanReport {
    pub boolean: bool,
    /// Every quantifier on the algebra satisfies `∀(x∧y) = ∀x⊙∀y`.
    pub meet_as_mul: bool,
    /// Every quantifier on the algebra satisfies `∀(x∨y) = ∀x⊕∀y`.
    pub join_as_oplus: bool,
    /// First failure of `∀(x∧y) = ∀x⊙∀y` for the algebra's own quantifier.
    pub meet_as_mul_witness: Option<(Elem, Elem)>,
    /// First failure of `∀(x∨y) = ∀x⊕∀y` for the algebra's own quantifier.
    pub join_as_oplus_witness: Option<(Elem, Elem)>,
    /// First quantifier (by image) violating `∀(x∧y) = ∀x⊙∀y`, with its pair.
    pub meet_as_mul_counterexample: Option<IdentityFailure>,
    /// First quantifier (by image) violating `∀(x∨y) = ∀x⊕∀y`, with its pair.
    pub join_as_oplus_counterexample: Option<IdentityFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub quantifier: Vec<Elem>,
    pub x: Elem,
    pub y: Elem,
}

impl MonadicBooleanReport {
    pub fn meet_as_mul_matches(&self) -> bool {
        self.meet_as_mul == self.boolean
    }

    pub fn join_as_oplus_matches(&self) -> bool {
        self.join_as_oplus == self.boolean
    }
}

/// Boolean test of the underlying algebra, compared with the two quantifier
/// identities evaluated over every quantifier the algebra carries.
pub fn is_monadic_boolean(m: &MonadicNmAlgebra) -> Result<MonadicBooleanReport> {
    let a = m.algebra();
    let n = a.size();
    let boolean = is_boolean(a)?.boolean;
    let meet_mul = |q: &[Elem]| scan2(n, |x, y| q[a.meet(x, y)] == a.mul(q[x], q[y]));
    let join_oplus = |q: &[Elem]| scan2(n, |x, y| q[a.join(x, y)] == a.oplus(q[x], q[y]));
    let all = enumerate_quantifiers(a, false)?;
    let first_failure = |law: &dyn Fn(&[Elem]) -> Option<Vec<Elem>>| {
        all.iter().find_map(|q| {
            law(q.image()).map(|w| IdentityFailure {
                quantifier: q.image().to_vec(),
                x: w[0],
                y: w[1],
            })
        })
    };
    let meet_counter = first_failure(&meet_mul);
    let join_counter = first_failure(&join_oplus);
    let own = m.forall_map().image();
    Ok(MonadicBooleanReport {
        boolean,
        meet_as_mul: meet_counter.is_none(),
        join_as_oplus: join_counter.is_none(),
        meet_as_mul_witness: meet_mul(own).map(|w| (w[0], w[1])),
        join_as_oplus_witness: join_oplus(own).map(|w| (w[0], w[1])),
        meet_as_mul_counterexample: meet_counter,
        join_as_oplus_counterexample: join_counter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{direct_product, fixture_six_element, nm_chain, zero_one_quantifier};
    use crate::quantifier::MonadicNmAlgebra;

    #[test]
    fn six_element_laws_and_strict_oplus() {
        let m = fixture_six_element().monadic(0).unwrap();
        let r = quantifier_properties(&m);
        assert_eq!(r.forall.checks.len(), 15);
        assert_eq!(r.exists.checks.len(), 17);
        assert!(
            r.all_pass(),
            "{:?} {:?}",
            r.forall.failure_ids(),
            r.exists.failure_ids()
        );
        assert!(r.get("forall-oplus").unwrap().strict_witness.is_some());
        let a = m.algebra();
        let c = a.element("c").unwrap();
        assert_eq!(m.forall(a.oplus(c, c)), a.top());
        assert_eq!(a.label(a.oplus(m.forall(c), m.forall(c))), "b");
    }

    #[test]
    fn zero_one_three_chain_strict_negation() {
        let a = nm_chain(3).unwrap();
        let q = zero_one_quantifier(&a).unwrap();
        let m = MonadicNmAlgebra::new(a, q).unwrap();
        let r = quantifier_properties(&m);
        assert!(r.all_pass());
        assert_eq!(r.get("exists-neg").unwrap().strict_witness, Some(vec![1]));
    }

    #[test]
    fn boolean_identities() {
        let two = MonadicNmAlgebra::identity(nm_chain(2).unwrap());
        let r = is_monadic_boolean(&two).unwrap();
        assert!(r.boolean && r.meet_as_mul && r.join_as_oplus);

        let six = fixture_six_element().monadic(0).unwrap();
        let r = is_monadic_boolean(&six).unwrap();
        assert!(!r.boolean && !r.meet_as_mul);
        // the algebra's own quantifier has a Boolean range, so the identity
        // quantifier supplies the failure: a∧a = a but a⊙a = 0
        assert_eq!(r.meet_as_mul_witness, None);
        let w = r.meet_as_mul_counterexample.unwrap();
        assert_eq!(w.quantifier, (0..6).collect::<Vec<_>>());
        let a = six.algebra();
        assert_eq!((a.label(w.x), a.label(w.y)), ("a", "a"));

        let square = direct_product(
            &MonadicNmAlgebra::identity(nm_chain(2).unwrap()),
            &MonadicNmAlgebra::identity(nm_chain(2).unwrap()),
        )
        .unwrap();
        let r = is_monadic_boolean(&square).unwrap();
        assert!(r.boolean && r.meet_as_mul);
        // The simple quantifier on the four-element Boolean algebra sends both
        // atoms to 0 while their join is 1.
        assert!(!r.join_as_oplus);
        assert_eq!(r.join_as_oplus_witness, None);
    }
}
