//! Enumeration of all quantifiers on a finite algebra.

use rayon::prelude::*;

use super::{is_universal, strong_witness, QuantifierMap};
use crate::algebra::{Elem, FiniteNmAlgebra};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest algebra accepted by [`enumerate_quantifiers`].
pub const PRUNED_LIMIT: usize = 10;
/// Largest algebra accepted by [`enumerate_quantifiers_naive`].
pub const NAIVE_LIMIT: usize = 8;

/// Every quantifier (or every strong one), sorted by image.
///
/// A quantifier is an interior operator whose fixpoints form a subalgebra `S`,
/// and `∀x = max{s ∈ S | s ≤ x}`. The search therefore runs over subalgebras
/// in which every element has a greatest member below it, builds that map and
/// keeps it when the remaining axioms hold.
pub fn enumerate_quantifiers(a: &FiniteNmAlgebra, strong_only: bool) -> Result<Vec<QuantifierMap>> {
    let n = a.size();
    if n > PRUNED_LIMIT {
        return Err(Error::TooLarge {
            what: "quantifier enumeration",
            size: n,
            limit: PRUNED_LIMIT,
        });
    }
    let fixed = ElementSet::singleton(a.bottom()).with(a.top());
    let free: Vec<Elem> = a.elements().filter(|&x| !fixed.contains(x)).collect();
    let mut out: Vec<QuantifierMap> = (0u64..1 << free.len())
        .into_par_iter()
        .filter_map(|bits| {
            let s = free
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits >> i & 1 == 1)
                .fold(fixed, |acc, (_, &x)| acc.with(x));
            candidate(a, s)
        })
        .filter(|q| is_universal(a, q) && (!strong_only || strong_witness(a, q).is_none()))
        .map(QuantifierMap::from_image)
        .collect();
    out.sort();
    Ok(out)
}

/// The map `x ↦ max{s ∈ S | s ≤ x}` when `S` is a subuniverse in which every
/// such maximum exists.
fn candidate(a: &FiniteNmAlgebra, s: ElementSet) -> Option<Vec<Elem>> {
    if !a.is_subuniverse(s) {
        return None;
    }
    a.elements()
        .map(|x| {
            let below: Vec<Elem> = s.iter().filter(|&t| a.leq(t, x)).collect();
            below.iter().copied().find(|&m| below.iter().all(|&t| a.leq(t, m)))
        })
        .collect()
}

/// Reference enumeration: tests every one of the `nⁿ` self-maps.
pub fn enumerate_quantifiers_naive(a: &FiniteNmAlgebra, strong_only: bool) -> Result<Vec<QuantifierMap>> {
    let n = a.size();
    if n > NAIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "naive quantifier enumeration",
            size: n,
            limit: NAIVE_LIMIT,
        });
    }
    let total = (n as u64).pow(n as u32);
    let mut out: Vec<QuantifierMap> = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut q = vec![0; n];
            let mut c = code;
            for slot in q.iter_mut().rev() {
                *slot = (c % n as u64) as Elem;
                c /= n as u64;
            }
            q
        })
        .filter(|q| is_universal(a, q) && (!strong_only || strong_witness(a, q).is_none()))
        .map(QuantifierMap::from_image)
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_six_element, nm_chain};

    #[test]
    fn small_chains() {
        let two = nm_chain(2).unwrap();
        assert_eq!(
            enumerate_quantifiers(&two, false).unwrap(),
            vec![QuantifierMap::identity(&two)]
        );
        let three = nm_chain(3).unwrap();
        let qs = enumerate_quantifiers(&three, false).unwrap();
        let images: Vec<&[Elem]> = qs.iter().map(QuantifierMap::image).collect();
        assert_eq!(images, vec![&[0, 0, 2][..], &[0, 1, 2][..]]);
        assert_eq!(qs, enumerate_quantifiers_naive(&three, false).unwrap());
    }

    #[test]
    fn six_element_list_contains_documented_and_identity() {
        let e = fixture_six_element();
        let qs = enumerate_quantifiers(&e.algebra, false).unwrap();
        assert!(qs.contains(&QuantifierMap::identity(&e.algebra)));
        assert!(qs.contains(&e.quantifiers[0]));
        assert_eq!(qs, enumerate_quantifiers_naive(&e.algebra, false).unwrap());
    }

    #[test]
    fn limits_are_enforced() {
        let big = nm_chain(11).unwrap();
        assert!(matches!(
            enumerate_quantifiers(&big, false),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_quantifiers_naive(&nm_chain(9).unwrap(), false),
            Err(Error::TooLarge { .. })
        ));
    }
}
