//! Monadic filters, monadic congruences and quotient monadic algebras.

mod classify;
mod represent;

use rayon::prelude::*;
use serde::Serialize;

pub use classify::{
    classify, is_maximal_mf, is_prime_mf, maximal_equivalences, prime_equivalences, ClassificationReport,
    MaximalEquivalences, PrimeEquivalences,
};
pub use represent::{
    filter_intersection_identity, prime_extension, representable_with_quantifier, separating_representation,
    subdirect_representation, IntersectionIdentityReport, QuantifierRepresentability, SubdirectEmbedding,
};

use crate::algebra::Elem;
use crate::error::{Error, Result};
use crate::filter::{
    all_filters, filter_failure, filter_generated, quotient_by, up_closure, Congruence, FilterFailure, Quotient,
};
use crate::quantifier::{MonadicNmAlgebra, QuantifierMap};
use crate::report::{Check, CheckReport};
use crate::set::ElementSet;

/// Largest algebra whose full congruence lattice is enumerated.
pub const CONGRUENCE_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonadicFilterVerdict {
    pub monadic: bool,
    pub filter_failure: Option<FilterFailure>,
    /// A member `x` with `∀x` outside the set.
    pub not_closed: Option<Elem>,
}

pub fn is_monadic_filter(m: &MonadicNmAlgebra, s: ElementSet) -> MonadicFilterVerdict {
    let filter_failure = filter_failure(m.algebra(), s);
    let not_closed = s.iter().find(|&x| !s.contains(m.forall(x)));
    MonadicFilterVerdict {
        monadic: filter_failure.is_none() && not_closed.is_none(),
        filter_failure,
        not_closed,
    }
}

pub(crate) fn is_mf(m: &MonadicNmAlgebra, s: ElementSet) -> bool {
    filter_failure(m.algebra(), s).is_none() && s.iter().all(|x| s.contains(m.forall(x)))
}

/// `⟨X⟩_∀`: the filter generated by `{∀x | x ∈ X}`.
pub fn mf_generated(m: &MonadicNmAlgebra, x: ElementSet) -> Result<ElementSet> {
    if x.is_empty() {
        return Err(Error::Precondition(
            "cannot generate a monadic filter from the empty set".into(),
        ));
    }
    let f = filter_generated(m.algebra(), x.iter().map(|e| m.forall(e)).collect())?;
    if !is_mf(m, f) {
        return Err(Error::Internal(format!(
            "generated set {} is not ∀-closed",
            m.algebra().show_set(f)
        )));
    }
    Ok(f)
}

/// `⟨a⟩_∀`.
pub fn mf_principal(m: &MonadicNmAlgebra, a: Elem) -> ElementSet {
    mf_generated(m, ElementSet::singleton(a)).expect("a singleton is nonempty")
}

/// `F₁ ∨ F₂ = ⟨F₁ ∪ F₂⟩_∀`.
pub fn mf_join(m: &MonadicNmAlgebra, f1: ElementSet, f2: ElementSet) -> ElementSet {
    mf_generated(m, f1.union(f2).with(m.algebra().top())).expect("contains the top")
}

/// Every monadic filter, in canonical order.
pub fn all_monadic_filters(m: &MonadicNmAlgebra) -> Vec<ElementSet> {
    all_filters(m.algebra()).into_iter().filter(|&f| is_mf(m, f)).collect()
}

/// Laws of principal and joined monadic filters; the intersection law is
/// included only for strong quantifiers.
pub fn mf_principal_laws(m: &MonadicNmAlgebra) -> CheckReport {
    let a = m.algebra();
    let n = a.size();
    let fa = |x: Elem| m.forall(x);
    let pow = |x: Elem| a.power(x, n);
    let gen = |x: Elem| mf_principal(m, x);
    let mfs = all_monadic_filters(m);
    let mut r = CheckReport::new();

    let w = (0..n).find(|&x| gen(x) != up_closure(a, ElementSet::singleton(pow(fa(x)))));
    r.push(Check::new(
        "principal-power",
        "⟨a⟩∀ = {x | x ≥ (∀a)ⁿ}",
        w.map(|x| vec![x]),
    ));

    // witness: the element `a`
    let w = mfs.iter().find_map(|&f| {
        a.elements().filter(|&x| !f.contains(x)).find_map(|x| {
            let lhs = mf_generated(m, f.with(x)).expect("nonempty");
            let rhs = up_closure(a, f.iter().map(|g| a.mul(g, pow(fa(x)))).collect());
            let via_join = filter_generated(a, f.with(fa(x))).expect("nonempty");
            (lhs != rhs || lhs != via_join).then(|| vec![x])
        })
    });
    r.push(Check::new("filter-and-element", "⟨F∪{a}⟩∀ = {x ≥ f⊙(∀a)ⁿ} = F∨[∀a)", w));

    let joins_hold = mfs.iter().all(|&f1| {
        mfs.iter().all(|&f2| {
            let products: ElementSet = f1.iter().flat_map(|x| f2.iter().map(move |y| a.mul(x, y))).collect();
            mf_join(m, f1, f2) == up_closure(a, products)
        })
    });
    r.push(Check::verdict("join-of-filters", "⟨F₁∪F₂⟩∀ = {x ≥ f₁⊙f₂}", joins_hold));

    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let w = pairs().find(|&(x, y)| a.leq(x, y) && !gen(y).is_subset(gen(x)));
    r.push(Check::new(
        "antitone",
        "a ≤ b ⇒ ⟨b⟩∀ ⊆ ⟨a⟩∀",
        w.map(|(x, y)| vec![x, y]),
    ));

    let w = (0..n).find(|&x| gen(fa(x)) != gen(x));
    r.push(Check::new("forall-invariant", "⟨∀a⟩∀ = ⟨a⟩∀", w.map(|x| vec![x])));

    let w = pairs().find(|&(x, y)| {
        let j = mf_join(m, gen(x), gen(y));
        j != gen(a.meet(x, y)) || j != gen(a.mul(x, y))
    });
    r.push(Check::new(
        "meet-and-product",
        "⟨a⟩∀ ∨ ⟨b⟩∀ = ⟨a∧b⟩∀ = ⟨a⊙b⟩∀",
        w.map(|(x, y)| vec![x, y]),
    ));

    if m.is_strong() {
        let w = pairs().find(|&(x, y)| gen(x).intersection(gen(y)) != gen(a.join(fa(x), fa(y))));
        r.push(Check::new(
            "strong-intersection",
            "⟨a⟩∀ ∩ ⟨b⟩∀ = ⟨∀a∨∀b⟩∀",
            w.map(|(x, y)| vec![x, y]),
        ));
    }
    r
}

/// `F ↦ F ∩ L_∀` compared with the filters of the fixpoint subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub monadic_filters: Vec<ElementSet>,
    /// Filters of `L_∀`, as subsets of `L`.
    pub fixpoint_filters: Vec<ElementSet>,
    pub bijective: bool,
    /// `F ⊆ G ⇔ F∩L_∀ ⊆ G∩L_∀`.
    pub order_preserving_both_ways: bool,
    /// `F = ⟨F ∩ L_∀⟩` for every monadic filter.
    pub generated_back: bool,
    /// A filter of `L` is monadic exactly when it is generated by its fixpoints.
    pub characterises_monadic: bool,
    /// `⟨F ∪ {x}⟩` is monadic for every monadic `F` and fixpoint `x`.
    pub fixpoint_extension: bool,
}

impl RestrictionReport {
    pub fn all_hold(&self) -> bool {
        self.bijective
            && self.order_preserving_both_ways
            && self.generated_back
            && self.characterises_monadic
            && self.fixpoint_extension
    }
}

pub fn restriction_isomorphism(m: &MonadicNmAlgebra) -> Result<RestrictionReport> {
    let a = m.algebra();
    let fix = m.fixpoints();
    let (sub, embed) = m.fixpoint_algebra()?;
    let mut fixpoint_filters: Vec<ElementSet> = all_filters(&sub)
        .into_iter()
        .map(|g| g.iter().map(|i| embed[i]).collect())
        .collect();
    fixpoint_filters.sort();
    let monadic_filters = all_monadic_filters(m);
    let mut images: Vec<ElementSet> = monadic_filters.iter().map(|f| f.intersection(fix)).collect();
    images.sort();
    images.dedup();
    let bijective = images.len() == monadic_filters.len() && images == fixpoint_filters;
    let order_preserving_both_ways = monadic_filters.iter().all(|&f| {
        monadic_filters
            .iter()
            .all(|&g| f.is_subset(g) == f.intersection(fix).is_subset(g.intersection(fix)))
    });
    let generate = |s: ElementSet| filter_generated(a, s).expect("contains the top");
    let generated_back = monadic_filters.iter().all(|&f| generate(f.intersection(fix)) == f);
    let characterises_monadic = all_filters(a)
        .into_iter()
        .all(|f| is_mf(m, f) == (generate(f.intersection(fix)) == f));
    let fixpoint_extension = monadic_filters
        .iter()
        .all(|&f| fix.iter().all(|x| is_mf(m, generate(f.with(x)))));
    Ok(RestrictionReport {
        monadic_filters,
        fixpoint_filters,
        bijective,
        order_preserving_both_ways,
        generated_back,
        characterises_monadic,
        fixpoint_extension,
    })
}

/// Every partition of `0..n` as a block-index vector, in restricted-growth order.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            go(i + 1, max.max(b), cur, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut cur, &mut out);
    }
    out
}

fn is_monadic_congruence(m: &MonadicNmAlgebra, theta: &Congruence) -> bool {
    let n = m.size();
    theta.is_compatible(m.algebra())
        && (0..n).all(|x| (0..n).all(|y| !theta.related(x, y) || theta.related(m.forall(x), m.forall(y))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCorrespondence {
    pub monadic_filters: usize,
    pub monadic_congruences: usize,
    /// `F ↦ θ_F ↦ [1]` returns `F` for every monadic filter.
    pub filter_round_trip: bool,
    /// `θ ↦ [1]_θ ↦ θ_{[1]}` returns `θ` for every monadic congruence.
    pub congruence_round_trip: bool,
}

impl CongruenceCorrespondence {
    pub fn bijective(&self) -> bool {
        self.monadic_filters == self.monadic_congruences && self.filter_round_trip && self.congruence_round_trip
    }
}

/// `θ_F`, checked to be a monadic congruence.
pub fn monadic_congruence(m: &MonadicNmAlgebra, f: ElementSet) -> Result<Congruence> {
    require_mf(m, f)?;
    let a = m.algebra();
    let theta = Congruence::from_relation(a.size(), |x, y| f.contains(a.imp(x, y)) && f.contains(a.imp(y, x)));
    if !is_monadic_congruence(m, &theta) {
        return Err(Error::Internal(format!(
            "θ for {} is not a monadic congruence",
            a.show_set(f)
        )));
    }
    Ok(theta)
}

/// Enumerates every monadic congruence and matches it with monadic filters.
pub fn congruence_correspondence(m: &MonadicNmAlgebra) -> Result<CongruenceCorrespondence> {
    let n = m.size();
    if n > CONGRUENCE_LIMIT {
        return Err(Error::TooLarge {
            what: "congruence enumeration",
            size: n,
            limit: CONGRUENCE_LIMIT,
        });
    }
    let top = m.algebra().top();
    let congruences: Vec<Congruence> = partitions(n)
        .into_par_iter()
        .map(Congruence::from_class_of)
        .filter(|t| is_monadic_congruence(m, t))
        .collect();
    let filters = all_monadic_filters(m);
    let filter_round_trip = filters
        .iter()
        .map(|&f| monadic_congruence(m, f).map(|t| t.block_of(top) == f))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    let congruence_round_trip = congruences
        .iter()
        .map(|t| monadic_congruence(m, t.block_of(top)).map(|back| &back == t))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    Ok(CongruenceCorrespondence {
        monadic_filters: filters.len(),
        monadic_congruences: congruences.len(),
        filter_round_trip,
        congruence_round_trip,
    })
}

pub(super) fn require_mf(m: &MonadicNmAlgebra, f: ElementSet) -> Result<()> {
    if is_mf(m, f) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{} is not a monadic filter",
            m.algebra().show_set(f)
        )))
    }
}

/// `(L/F, ∀_F)` with `∀_F[x] = [∀x]`.
#[derive(Clone, Debug)]
pub struct MonadicQuotient {
    pub monadic: MonadicNmAlgebra,
    pub quotient: Quotient,
}

impl MonadicQuotient {
    pub fn projection(&self) -> &[Elem] {
        &self.quotient.projection
    }
}

pub fn quotient_monadic(m: &MonadicNmAlgebra, f: ElementSet) -> Result<MonadicQuotient> {
    let theta = monadic_congruence(m, f)?;
    let a = m.algebra();
    let quotient = quotient_by(a, theta, format!("{}/{}", a.name(), a.show_set(f)))?;
    let image: Vec<Elem> = quotient
        .congruence
        .blocks
        .iter()
        .map(|b| quotient.projection[m.forall(b.first().expect("blocks are nonempty"))])
        .collect();
    let q = QuantifierMap::new(&quotient.algebra, image)?;
    let monadic = MonadicNmAlgebra::new(quotient.algebra.clone(), q)
        .map_err(|e| Error::Internal(format!("quotient quantifier failed validation: {e}")))?;
    Ok(MonadicQuotient { monadic, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, fixture_six_element, nm_chain, subchain_quantifier, CatalogOptions};

    fn six() -> MonadicNmAlgebra {
        fixture_six_element().monadic(0).unwrap()
    }

    #[test]
    fn six_element_monadic_filters() {
        let m = six();
        let a = m.algebra();
        let shown: Vec<String> = all_monadic_filters(&m).iter().map(|&f| a.show_set(f)).collect();
        assert_eq!(shown, ["{1}", "{d,1}", "{b,c,1}", "{0,a,b,c,d,1}"]);
        assert!(is_monadic_filter(&m, a.parse_set("d,1").unwrap()).monadic);
    }

    #[test]
    fn filter_that_is_not_forall_closed() {
        let a = nm_chain(5).unwrap();
        let m = MonadicNmAlgebra::new(a, subchain_quantifier(5, 3).unwrap()).unwrap();
        let s = m.algebra().parse_set("3/4,1").unwrap();
        let v = is_monadic_filter(&m, s);
        assert!(v.filter_failure.is_none());
        assert_eq!(v.not_closed, Some(3));
    }

    #[test]
    fn generated_monadic_filters() {
        let m = six();
        let a = m.algebra();
        assert_eq!(
            a.show_set(mf_generated(&m, a.parse_set("b").unwrap()).unwrap()),
            "{b,c,1}"
        );
        assert_eq!(mf_generated(&m, a.top_set()).unwrap(), a.top_set());
        assert_eq!(mf_generated(&m, a.parse_set("a").unwrap()).unwrap(), a.universe());
        let c = a.element("c").unwrap();
        assert_eq!(mf_principal(&m, m.forall(c)), mf_principal(&m, c));
        assert!(mf_generated(&m, ElementSet::EMPTY).is_err());
    }

    #[test]
    fn principal_laws_across_catalog() {
        for e in build_catalog(&CatalogOptions::default()).unwrap() {
            for (name, m) in e.monadics() {
                let r = mf_principal_laws(&m);
                assert!(r.all_pass(), "{} {name}: {:?}", e.id, r.failure_ids());
            }
        }
    }

    #[test]
    fn restriction_and_correspondence() {
        let m = six();
        let r = restriction_isomorphism(&m).unwrap();
        assert!(r.all_hold());
        assert_eq!(m.algebra().show_set(m.fixpoints()), "{0,b,d,1}");
        assert_eq!(r.fixpoint_filters.len(), 4);
        let c = congruence_correspondence(&m).unwrap();
        assert!(c.bijective());
        assert_eq!(c.monadic_congruences, 4);
        assert_eq!(partitions(4).len(), 15);
    }

    #[test]
    fn identity_quantifier_makes_every_filter_monadic() {
        let m = MonadicNmAlgebra::identity(fixture_six_element().algebra);
        assert_eq!(all_monadic_filters(&m), all_filters(m.algebra()));
    }

    #[test]
    fn quotient_carries_the_induced_quantifier() {
        let m = six();
        let a = m.algebra();
        let q = quotient_monadic(&m, a.parse_set("d,1").unwrap()).unwrap();
        assert!(q.monadic.algebra().is_chain());
        assert_eq!(q.monadic.size(), 3);
        // ∀a = 0 and ∀c = b both fall in the bottom block {0,b}
        assert_eq!(q.monadic.forall_map().image(), &[0, 0, 2]);
        assert_eq!(q.monadic.algebra().names(), ["b", "c", "1"]);
        let q = quotient_monadic(&m, a.parse_set("b,c,1").unwrap()).unwrap();
        assert_eq!(q.monadic.size(), 2);
        assert!(quotient_monadic(&m, a.parse_set("c,1").unwrap()).is_err());
        let same = quotient_monadic(&m, a.top_set()).unwrap();
        assert_eq!(same.monadic.forall_map(), m.forall_map());
    }
}
