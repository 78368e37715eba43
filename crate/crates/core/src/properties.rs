//! Elementary identities every NM-algebra satisfies, checked exhaustively,
//! and the Boolean test.

use serde::Serialize;

use crate::algebra::{Elem, FiniteNmAlgebra};
use crate::error::{Error, Result};
use crate::report::{scan1, scan2, scan3, Check, CheckReport};

/// Checks the twelve basic laws over all tuples of elements.
///
/// The power law `(x→y)ⁿ ∨ (y→x)ⁿ = 1` is checked for `1 ≤ n ≤ |L|`; powers
/// of a finite element stabilise before that bound.
pub fn check_basic_properties(a: &FiniteNmAlgebra) -> CheckReport {
    let n = a.size();
    let top = a.top();
    let mut r = CheckReport::new();
    r.push(Check::new(
        "order-imp",
        "x ≤ y ⇔ x→y = 1",
        scan2(n, |x, y| a.leq(x, y) == (a.imp(x, y) == top)),
    ));
    r.push(Check::new(
        "weakening",
        "x ≤ y→x",
        scan2(n, |x, y| a.leq(x, a.imp(y, x))),
    ));
    r.push(Check::new(
        "antitone-left",
        "x ≤ y ⇒ y→z ≤ x→z",
        scan3(n, |x, y, z| !a.leq(x, y) || a.leq(a.imp(y, z), a.imp(x, z))),
    ));
    r.push(Check::new(
        "monotone-right",
        "x ≤ y ⇒ z→x ≤ z→y",
        scan3(n, |x, y, z| !a.leq(x, y) || a.leq(a.imp(z, x), a.imp(z, y))),
    ));
    r.push(Check::new(
        "join-by-imp",
        "x∨y = ((x→y)→y) ∧ ((y→x)→x)",
        scan2(n, |x, y| {
            a.join(x, y) == a.meet(a.imp(a.imp(x, y), y), a.imp(a.imp(y, x), x))
        }),
    ));
    r.push(Check::new(
        "complement",
        "x⊙¬x = 0 and x⊕¬x = 1",
        scan1(n, |x| a.mul(x, a.neg(x)) == a.bottom() && a.oplus(x, a.neg(x)) == top),
    ));
    r.push(Check::new(
        "currying",
        "(x⊙y)→z = x→(y→z)",
        scan3(n, |x, y, z| a.imp(a.mul(x, y), z) == a.imp(x, a.imp(y, z))),
    ));
    r.push(Check::new(
        "imp-meet",
        "x→y = x→(x∧y)",
        scan2(n, |x, y| a.imp(x, y) == a.imp(x, a.meet(x, y))),
    ));
    r.push(Check::new(
        "imp-over-meet",
        "x→(y∧z) = (x→y) ∧ (x→z)",
        scan3(n, |x, y, z| a.imp(x, a.meet(y, z)) == a.meet(a.imp(x, y), a.imp(x, z))),
    ));
    r.push(Check::new(
        "join-imp",
        "(x∨y)→z = (x→z) ∧ (y→z)",
        scan3(n, |x, y, z| a.imp(a.join(x, y), z) == a.meet(a.imp(x, z), a.imp(y, z))),
    ));
    let pow_witness = (1..=n).find_map(|k| {
        scan2(n, |x, y| {
            a.join(a.power(a.imp(x, y), k), a.power(a.imp(y, x), k)) == top
        })
        .map(|mut w| {
            w.push(k);
            w
        })
    });
    r.push(Check::new("prelinear-powers", "(x→y)ⁿ ∨ (y→x)ⁿ = 1", pow_witness));
    r.push(Check::new(
        "meet-imp",
        "(x∧y)→z = (x→z) ∨ (y→z)",
        scan3(n, |x, y, z| a.imp(a.meet(x, y), z) == a.join(a.imp(x, z), a.imp(y, z))),
    ));
    r
}

/// Checks `x⊙y = ¬(x→¬y)` and `x⊕y = ¬(¬x⊙¬y)`.
pub fn check_definability(a: &FiniteNmAlgebra) -> CheckReport {
    let n = a.size();
    let mut r = CheckReport::new();
    r.push(Check::new(
        "mul-by-imp",
        "x⊙y = ¬(x→¬y)",
        scan2(n, |x, y| a.mul(x, y) == a.neg(a.imp(x, a.neg(y)))),
    ));
    r.push(Check::new(
        "oplus-de-morgan",
        "x⊕y = ¬(¬x⊙¬y)",
        scan2(n, |x, y| a.oplus(x, y) == a.neg(a.mul(a.neg(x), a.neg(y)))),
    ));
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanVerdict {
    pub boolean: bool,
    /// First pair with `x⊙y ≠ x∧y`.
    pub witness: Option<(Elem, Elem)>,
}

/// Decides whether the algebra is Boolean, by `⊙ = ∧` and independently by
/// `⊕ = ∨`. The two tests must agree on any NM-algebra.
pub fn is_boolean(a: &FiniteNmAlgebra) -> Result<BooleanVerdict> {
    let n = a.size();
    let by_mul = scan2(n, |x, y| a.mul(x, y) == a.meet(x, y));
    let by_oplus = scan2(n, |x, y| a.oplus(x, y) == a.join(x, y));
    if by_mul.is_none() != by_oplus.is_none() {
        return Err(Error::Internal(format!(
            "Boolean tests disagree on {}: ⊙=∧ gives {}, ⊕=∨ gives {}",
            a.name(),
            by_mul.is_none(),
            by_oplus.is_none()
        )));
    }
    Ok(BooleanVerdict {
        boolean: by_mul.is_none(),
        witness: by_mul.map(|w| (w[0], w[1])),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_six_element, nm_chain};

    #[test]
    fn six_element_satisfies_all_basic_laws() {
        let a = fixture_six_element().algebra;
        let r = check_basic_properties(&a);
        assert_eq!(r.checks.len(), 12);
        assert!(r.all_pass(), "{:?}", r.failure_ids());
        assert!(check_definability(&a).all_pass());
    }

    #[test]
    fn join_formula_spot_check() {
        let a = fixture_six_element().algebra;
        let (x, y, c) = (
            a.element("a").unwrap(),
            a.element("b").unwrap(),
            a.element("c").unwrap(),
        );
        assert_eq!(a.join(x, y), c);
        assert_eq!(a.meet(a.imp(a.imp(x, y), y), a.imp(a.imp(y, x), x)), c);
    }

    #[test]
    fn boolean_verdicts() {
        assert!(is_boolean(&nm_chain(2).unwrap()).unwrap().boolean);
        let c3 = nm_chain(3).unwrap();
        let v = is_boolean(&c3).unwrap();
        assert!(!v.boolean);
        assert_eq!(v.witness, Some((1, 1)));
        assert_eq!(c3.mul(1, 1), 0);
        let a = fixture_six_element().algebra;
        let v = is_boolean(&a).unwrap();
        assert!(!v.boolean);
        let (x, y) = v.witness.unwrap();
        assert_ne!(a.mul(x, y), a.meet(x, y));
        let c = a.element("c").unwrap();
        assert_eq!(a.label(a.mul(c, c)), "b");
    }
}
