//! Prime and maximal monadic filters, simplicity and subdirect irreducibility.

use serde::Serialize;

use super::{all_monadic_filters, is_mf, mf_principal, quotient_monadic};
use crate::algebra::Elem;
use crate::error::{Error, Result};
use crate::filter::{is_si_nm, is_simple_nm, least_nontrivial};
use crate::quantifier::MonadicNmAlgebra;
use crate::report::{Check, CheckReport};
use crate::set::ElementSet;

fn require_proper_mf(m: &MonadicNmAlgebra, f: ElementSet) -> Result<()> {
    let a = m.algebra();
    if !is_mf(m, f) {
        return Err(Error::Precondition(format!(
            "{} is not a monadic filter",
            a.show_set(f)
        )));
    }
    if f == a.universe() {
        return Err(Error::Precondition("the whole algebra is not a proper filter".into()));
    }
    Ok(())
}

fn prime_in(mfs: &[ElementSet], f: ElementSet) -> bool {
    mfs.iter().all(|&f1| {
        mfs.iter()
            .all(|&f2| !f1.intersection(f2).is_subset(f) || f1.is_subset(f) || f2.is_subset(f))
    })
}

/// `F₁ ∩ F₂ ⊆ F` forces `F₁ ⊆ F` or `F₂ ⊆ F`, over all monadic filters.
pub fn is_prime_mf(m: &MonadicNmAlgebra, f: ElementSet) -> Result<bool> {
    require_proper_mf(m, f)?;
    Ok(prime_in(&all_monadic_filters(m), f))
}

/// Four primality tests for a proper monadic filter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeEquivalences {
    /// The equivalence is only claimed for strong quantifiers.
    pub strong: bool,
    pub definition: bool,
    /// `∀x∨∀y ∈ F` forces `∀x ∈ F` or `∀y ∈ F`.
    pub forall_join_split: bool,
    /// `∀x→∀y ∈ F` or `∀y→∀x ∈ F` for all `x, y`.
    pub forall_imp_total: bool,
    pub chain_quotient: bool,
}

impl PrimeEquivalences {
    pub fn agree(&self) -> bool {
        let d = self.definition;
        self.forall_join_split == d && self.forall_imp_total == d && self.chain_quotient == d
    }
}

pub fn prime_equivalences(m: &MonadicNmAlgebra, f: ElementSet) -> Result<PrimeEquivalences> {
    let definition = is_prime_mf(m, f)?;
    let a = m.algebra();
    let n = a.size();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (m.forall(x), m.forall(y))));
    let forall_join_split = pairs().all(|(p, q)| !f.contains(a.join(p, q)) || f.contains(p) || f.contains(q));
    let forall_imp_total = pairs().all(|(p, q)| f.contains(a.imp(p, q)) || f.contains(a.imp(q, p)));
    let chain_quotient = quotient_monadic(m, f)?.monadic.algebra().is_chain();
    Ok(PrimeEquivalences {
        strong: m.is_strong(),
        definition,
        forall_join_split,
        forall_imp_total,
        chain_quotient,
    })
}

fn maximal_in(mfs: &[ElementSet], f: ElementSet, full: ElementSet) -> bool {
    mfs.iter().all(|&g| g == full || !f.is_proper_subset(g))
}

/// Not strictly contained in any proper monadic filter.
pub fn is_maximal_mf(m: &MonadicNmAlgebra, f: ElementSet) -> Result<bool> {
    require_proper_mf(m, f)?;
    Ok(maximal_in(&all_monadic_filters(m), f, m.algebra().universe()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalEquivalences {
    pub definition: bool,
    /// `∀x ∈ F` or `¬∀x ∈ F` for every `x`; the first failure otherwise.
    pub forall_dichotomy: bool,
    pub forall_witness: Option<Elem>,
    /// `∃x ∈ F` or `¬∃x ∈ F` for every `x`; the first failure otherwise.
    pub exists_dichotomy: bool,
    pub exists_witness: Option<Elem>,
}

impl MaximalEquivalences {
    pub fn agree(&self) -> bool {
        self.forall_dichotomy == self.definition && self.exists_dichotomy == self.definition
    }
}

pub fn maximal_equivalences(m: &MonadicNmAlgebra, f: ElementSet) -> Result<MaximalEquivalences> {
    let definition = is_maximal_mf(m, f)?;
    let a = m.algebra();
    let dichotomy = |v: &dyn Fn(Elem) -> Elem| a.elements().find(|&x| !f.contains(v(x)) && !f.contains(a.neg(v(x))));
    let forall_witness = dichotomy(&|x| m.forall(x));
    let exists_witness = dichotomy(&|x| m.exists(x));
    Ok(MaximalEquivalences {
        definition,
        forall_dichotomy: forall_witness.is_none(),
        forall_witness,
        exists_dichotomy: exists_witness.is_none(),
        exists_witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub size: usize,
    pub chain: bool,
    pub strong: bool,
    pub monadic_filters: Vec<ElementSet>,
    pub prime_filters: Vec<ElementSet>,
    pub maximal_filters: Vec<ElementSet>,
    /// Exactly two monadic filters.
    pub simple: bool,
    /// `L_∀ = {0, 1}`.
    pub fixpoints_two_element: bool,
    /// `∀L` is simple as an NM-algebra.
    pub range_simple: bool,
    /// Intersection of the monadic filters other than `{1}`.
    pub least_nontrivial: Option<ElementSet>,
    pub subdirectly_irreducible: bool,
    /// An `a < 1` lying in `⟨x⟩_∀` for every `x < 1`.
    pub si_witness: Option<Elem>,
    /// `L_∀` is subdirectly irreducible as an NM-algebra.
    pub fixpoints_si: bool,
    pub range_chain: bool,
    /// `x∨y = 1` forces `x = 1` or `y = 1`.
    pub top_join_prime: bool,
    pub coatoms: Vec<Elem>,
}

pub fn classify(m: &MonadicNmAlgebra) -> Result<ClassificationReport> {
    let a = m.algebra();
    let (top, full) = (a.top(), a.universe());
    let fix = m.fixpoints();
    let (range, _) = m.fixpoint_algebra()?;
    let mfs = all_monadic_filters(m);
    let proper: Vec<ElementSet> = mfs.iter().copied().filter(|&f| f != full).collect();
    let least = least_nontrivial(&mfs, a.top_set(), full);
    let below_top: Vec<Elem> = a.elements().filter(|&x| x != top).collect();
    let si_witness = below_top
        .iter()
        .copied()
        .find(|&w| below_top.iter().all(|&x| mf_principal(m, x).contains(w)));
    Ok(ClassificationReport {
        size: a.size(),
        chain: a.is_chain(),
        strong: m.is_strong(),
        prime_filters: proper.iter().copied().filter(|&f| prime_in(&mfs, f)).collect(),
        maximal_filters: proper.iter().copied().filter(|&f| maximal_in(&mfs, f, full)).collect(),
        simple: mfs.len() == 2,
        fixpoints_two_element: fix == ElementSet::singleton(a.bottom()).with(top),
        range_simple: is_simple_nm(&range),
        subdirectly_irreducible: least.is_some_and(|l| l != a.top_set()),
        least_nontrivial: least,
        si_witness,
        fixpoints_si: is_si_nm(&range),
        range_chain: range.is_chain(),
        top_join_prime: a
            .elements()
            .all(|x| a.elements().all(|y| a.join(x, y) != top || x == top || y == top)),
        coatoms: a.coatoms(),
        monadic_filters: mfs,
    })
}

impl ClassificationReport {
    /// Cross-checks between the independently computed verdicts. The last
    /// three apply only to strong quantifiers and are omitted otherwise.
    pub fn consistency(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let si = self.subdirectly_irreducible;
        r.push(Check::verdict(
            "simple-iff-fixpoints-0-1",
            "simple ⇔ L∀ = {0,1}",
            self.simple == self.fixpoints_two_element,
        ));
        r.push(Check::verdict(
            "simple-iff-range-simple",
            "simple ⇔ ∀L simple",
            self.simple == self.range_simple,
        ));
        r.push(Check::verdict(
            "si-iff-witness-element",
            "SI ⇔ ∃a<1 ∀x<1: a ∈ ⟨x⟩∀",
            si == self.si_witness.is_some(),
        ));
        r.push(Check::verdict(
            "si-iff-fixpoints-si",
            "SI ⇔ L∀ SI",
            si == self.fixpoints_si,
        ));
        r.push(Check::verdict(
            "si-implies-range-chain",
            "SI ⇒ ∀L chain",
            !si || self.range_chain,
        ));
        if self.strong {
            r.push(Check::verdict("si-iff-chain", "SI ⇔ chain", si == self.chain));
            r.push(Check::verdict(
                "si-implies-top-join-prime",
                "SI ⇒ (x∨y = 1 ⇒ x = 1 or y = 1)",
                !si || self.top_join_prime,
            ));
            r.push(Check::verdict(
                "si-implies-one-coatom",
                "SI ⇒ at most one coatom",
                !si || self.coatoms.len() <= 1,
            ));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_nine_element, fixture_six_element, nm_chain, zero_one_quantifier};

    #[test]
    fn six_element_primes_and_maximals() {
        let m = fixture_six_element().monadic(0).unwrap();
        let a = m.algebra();
        let set = |s: &str| a.parse_set(s).unwrap();
        assert!(is_prime_mf(&m, set("d,1")).unwrap());
        assert!(is_prime_mf(&m, set("b,c,1")).unwrap());
        assert!(!is_prime_mf(&m, set("1")).unwrap());
        assert!(is_prime_mf(&m, a.universe()).is_err());
        let e = maximal_equivalences(&m, set("d,1")).unwrap();
        assert!(e.definition && e.agree());
        assert!(prime_equivalences(&m, set("d,1")).unwrap().chain_quotient);

        let c = classify(&m).unwrap();
        assert!(!c.simple && !c.subdirectly_irreducible);
        assert_eq!(c.least_nontrivial, Some(a.top_set()));
    }

    #[test]
    fn nine_element_classification() {
        let m = fixture_nine_element().monadic(0).unwrap();
        let a = m.algebra();
        let c = classify(&m).unwrap();
        let shown: Vec<String> = c.monadic_filters.iter().map(|&f| a.show_set(f)).collect();
        assert_eq!(shown, ["{1}", "{e,f,g,1}", "{0,a,b,c,d,e,f,g,1}"]);
        assert!(c.subdirectly_irreducible);
        assert_eq!(a.show_set(c.least_nontrivial.unwrap()), "{e,f,g,1}");
        assert_eq!(c.maximal_filters, [a.parse_set("e,f,g,1").unwrap()]);
    }

    #[test]
    fn zero_one_chain_is_simple() {
        let a = nm_chain(5).unwrap();
        let m = MonadicNmAlgebra::new(a.clone(), zero_one_quantifier(&a).unwrap()).unwrap();
        let c = classify(&m).unwrap();
        assert!(c.simple && c.fixpoints_two_element && c.subdirectly_irreducible);
        assert!(c.consistency().all_pass());
    }

    #[test]
    fn three_chain_identity_separates_simplicity_from_two_fixpoints() {
        // m⊙m = 0, so the only monadic filters are {1} and L, yet every
        // element is a fixpoint.
        let m = MonadicNmAlgebra::identity(nm_chain(3).unwrap());
        let c = classify(&m).unwrap();
        assert!(c.simple && !c.fixpoints_two_element && c.range_simple);
        let r = c.consistency();
        assert_eq!(r.failure_ids(), ["simple-iff-fixpoints-0-1"]);
        let f = m.algebra().top_set();
        let e = maximal_equivalences(&m, f).unwrap();
        assert!(e.definition && !e.forall_dichotomy && !e.exists_dichotomy);
        assert_eq!(e.forall_witness, Some(1));
    }
}
