//! Filters of an NM-algebra, the congruences they induce, quotients, and the
//! filter-theoretic classification (prime, maximal, minimal prime, simple,
//! subdirectly irreducible, representable).

use serde::Serialize;

use crate::algebra::{validate_quotient, Elem, FiniteNmAlgebra, NmTables};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Universes up to this size enumerate filters by scanning every subset.
pub const BRUTE_FORCE_FILTER_LIMIT: usize = 12;

/// Upward closure of `s`.
pub fn up_closure(a: &FiniteNmAlgebra, s: ElementSet) -> ElementSet {
    a.elements().filter(|&y| s.iter().any(|x| a.leq(x, y))).collect()
}

/// Why a subset fails to be a filter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FilterFailure {
    Empty,
    NotMulClosed { x: Elem, y: Elem },
    NotUpwardClosed { x: Elem, y: Elem },
}

impl FilterFailure {
    pub fn describe(&self, a: &FiniteNmAlgebra) -> String {
        match *self {
            FilterFailure::Empty => "empty set".into(),
            FilterFailure::NotMulClosed { x, y } => {
                format!("{}⊙{} = {} is missing", a.label(x), a.label(y), a.label(a.mul(x, y)))
            }
            FilterFailure::NotUpwardClosed { x, y } => {
                format!("{} ≤ {} but {} is missing", a.label(x), a.label(y), a.label(y))
            }
        }
    }
}

pub fn filter_failure(a: &FiniteNmAlgebra, s: ElementSet) -> Option<FilterFailure> {
    if s.is_empty() {
        return Some(FilterFailure::Empty);
    }
    for x in s {
        for y in s {
            if !s.contains(a.mul(x, y)) {
                return Some(FilterFailure::NotMulClosed { x, y });
            }
        }
    }
    for x in s {
        for y in a.elements() {
            if a.leq(x, y) && !s.contains(y) {
                return Some(FilterFailure::NotUpwardClosed { x, y });
            }
        }
    }
    None
}

pub fn is_filter(a: &FiniteNmAlgebra, s: ElementSet) -> bool {
    filter_failure(a, s).is_none()
}

fn require_filter(a: &FiniteNmAlgebra, f: ElementSet) -> Result<()> {
    match filter_failure(a, f) {
        None => Ok(()),
        Some(why) => Err(Error::Precondition(format!(
            "{} is not a filter: {}",
            a.show_set(f),
            why.describe(a)
        ))),
    }
}

/// The least filter containing `x`: closure under `⊙`, then upward closure.
pub fn filter_generated(a: &FiniteNmAlgebra, x: ElementSet) -> Result<ElementSet> {
    if x.is_empty() {
        return Err(Error::Precondition(
            "cannot generate a filter from the empty set".into(),
        ));
    }
    let mut closed = x;
    loop {
        let mut next = closed;
        for p in closed {
            for q in closed {
                next.insert(a.mul(p, q));
            }
        }
        if next == closed {
            break;
        }
        closed = next;
    }
    Ok(up_closure(a, closed))
}

/// `⟨x⟩ = {y | y ≥ xⁿ for some n}`.
pub fn principal_filter(a: &FiniteNmAlgebra, x: Elem) -> ElementSet {
    filter_generated(a, ElementSet::singleton(x)).expect("singleton is nonempty")
}

/// Every filter, sorted canonically.
///
/// Small universes are scanned subset by subset. Larger ones use the fact that
/// a finite filter contains the product `p` of all its members and so equals
/// the principal filter `⟨p⟩`.
pub fn all_filters(a: &FiniteNmAlgebra) -> Vec<ElementSet> {
    if a.size() <= BRUTE_FORCE_FILTER_LIMIT {
        all_filters_brute_force(a)
    } else {
        all_filters_by_generators(a)
    }
}

pub fn all_filters_brute_force(a: &FiniteNmAlgebra) -> Vec<ElementSet> {
    let n = a.size();
    assert!(n < 32, "subset scan is limited to small universes");
    let top = a.top();
    let mut out: Vec<ElementSet> = (0u64..1 << n)
        .map(ElementSet::from_bits)
        .filter(|s| s.contains(top) && is_filter(a, *s))
        .collect();
    out.sort();
    out
}

pub fn all_filters_by_generators(a: &FiniteNmAlgebra) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = a.elements().map(|x| principal_filter(a, x)).collect();
    out.sort();
    out.dedup();
    out
}

pub fn is_prime_filter(a: &FiniteNmAlgebra, f: ElementSet) -> Result<bool> {
    require_filter(a, f)?;
    Ok(f != a.universe()
        && a.elements().all(|x| {
            a.elements()
                .all(|y| !f.contains(a.join(x, y)) || f.contains(x) || f.contains(y))
        }))
}

/// Proper, and no proper filter strictly contains it.
pub fn is_maximal_filter(a: &FiniteNmAlgebra, f: ElementSet) -> Result<bool> {
    require_filter(a, f)?;
    let full = a.universe();
    Ok(f != full && all_filters(a).into_iter().all(|g| g == full || !f.is_proper_subset(g)))
}

/// `a⊥ = {x | a∨x = 1}`.
pub fn ortho_complement(a: &FiniteNmAlgebra, x: Elem) -> ElementSet {
    a.elements().filter(|&y| a.join(x, y) == a.top()).collect()
}

/// Three verdicts on whether a prime filter `P` is minimal among primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPrimeReport {
    /// No prime filter is strictly contained in `P`.
    pub definitional: bool,
    /// `P = ⋃{a⊥ | a ∈ P}`.
    pub union_over_members: bool,
    /// `P = ⋃{a⊥ | a ∉ P}`.
    pub union_over_complement: bool,
}

impl MinimalPrimeReport {
    pub fn union_over_members_agrees(&self) -> bool {
        self.definitional == self.union_over_members
    }

    pub fn union_over_complement_agrees(&self) -> bool {
        self.definitional == self.union_over_complement
    }
}

pub fn prime_filters(a: &FiniteNmAlgebra) -> Vec<ElementSet> {
    all_filters(a)
        .into_iter()
        .filter(|&f| is_prime_filter(a, f).expect("enumerated filters are filters"))
        .collect()
}

pub fn is_minimal_prime(a: &FiniteNmAlgebra, p: ElementSet) -> Result<MinimalPrimeReport> {
    if !is_prime_filter(a, p)? {
        return Err(Error::Precondition(format!("{} is not a prime filter", a.show_set(p))));
    }
    let definitional = prime_filters(a).into_iter().all(|q| !q.is_proper_subset(p));
    let union_of = |members: bool| -> ElementSet {
        a.elements()
            .filter(|&x| p.contains(x) == members)
            .fold(ElementSet::EMPTY, |acc, x| acc.union(ortho_complement(a, x)))
    };
    Ok(MinimalPrimeReport {
        definitional,
        union_over_members: union_of(true) == p,
        union_over_complement: union_of(false) == p,
    })
}

pub fn minimal_primes(a: &FiniteNmAlgebra) -> Vec<ElementSet> {
    let primes = prime_filters(a);
    primes
        .iter()
        .copied()
        .filter(|p| primes.iter().all(|q| !q.is_proper_subset(*p)))
        .collect()
}

/// A partition of the universe compatible with the operations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Congruence {
    /// Block index of each element.
    pub class_of: Vec<usize>,
    /// Blocks sorted by their least member.
    pub blocks: Vec<ElementSet>,
}

impl Congruence {
    /// Builds a partition from an equivalence predicate.
    pub fn from_relation(n: usize, mut related: impl FnMut(Elem, Elem) -> bool) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = ElementSet::EMPTY;
            for (y, c) in class_of.iter_mut().enumerate().skip(x) {
                if *c == usize::MAX && related(x, y) {
                    *c = id;
                    block.insert(y);
                }
            }
            blocks.push(block);
        }
        Congruence { class_of, blocks }
    }

    pub fn from_class_of(class_of: Vec<usize>) -> Self {
        let n = class_of.len();
        Congruence::from_relation(n, |x, y| class_of[x] == class_of[y])
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn block_of(&self, x: Elem) -> ElementSet {
        self.blocks[self.class_of[x]]
    }

    /// Whether the partition respects `∧ ∨ ⊙ →`.
    pub fn is_compatible(&self, a: &FiniteNmAlgebra) -> bool {
        let n = a.size();
        for x in 0..n {
            for x2 in self.block_of(x) {
                for y in 0..n {
                    for y2 in self.block_of(y) {
                        if !self.related(a.meet(x, y), a.meet(x2, y2))
                            || !self.related(a.join(x, y), a.join(x2, y2))
                            || !self.related(a.mul(x, y), a.mul(x2, y2))
                            || !self.related(a.imp(x, y), a.imp(x2, y2))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// `x ≡ y` iff `x→y ∈ F` and `y→x ∈ F`.
pub fn congruence_from_filter(a: &FiniteNmAlgebra, f: ElementSet) -> Result<Congruence> {
    require_filter(a, f)?;
    let theta = Congruence::from_relation(a.size(), |x, y| f.contains(a.imp(x, y)) && f.contains(a.imp(y, x)));
    if !theta.is_compatible(a) {
        return Err(Error::Internal(format!(
            "filter {} induced an incompatible relation",
            a.show_set(f)
        )));
    }
    Ok(theta)
}

/// A quotient algebra with its canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: FiniteNmAlgebra,
    pub congruence: Congruence,
    /// Quotient element of each original element.
    pub projection: Vec<Elem>,
}

/// Greatest element of a block; exists because blocks are closed under `∨`.
fn block_max(a: &FiniteNmAlgebra, block: ElementSet) -> Elem {
    block
        .iter()
        .find(|&m| block.iter().all(|x| a.leq(x, m)))
        .expect("congruence blocks are closed under joins")
}

/// Builds the quotient by an arbitrary congruence. Blocks are labelled by
/// their greatest member.
pub fn quotient_by(a: &FiniteNmAlgebra, theta: Congruence, name: impl Into<String>) -> Result<Quotient> {
    if !theta.is_compatible(a) {
        return Err(Error::Precondition("partition is not a congruence".into()));
    }
    let k = theta.blocks.len();
    let reps: Vec<Elem> = theta.blocks.iter().map(|&b| block_max(a, b)).collect();
    let cls = |x: Elem| theta.class_of[x];
    let tables = NmTables {
        name: name.into(),
        names: reps.iter().map(|&r| a.label(r).to_string()).collect(),
        bottom: cls(a.bottom()),
        top: cls(a.top()),
        leq: (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| theta.related(a.imp(reps[i], reps[j]), a.top()))
                    .collect()
            })
            .collect(),
        mul: (0..k)
            .map(|i| (0..k).map(|j| cls(a.mul(reps[i], reps[j]))).collect())
            .collect(),
        imp: (0..k)
            .map(|i| (0..k).map(|j| cls(a.imp(reps[i], reps[j]))).collect())
            .collect(),
    };
    let algebra =
        validate_quotient(&tables).map_err(|e| Error::Internal(format!("quotient failed validation: {e}")))?;
    let projection = theta.class_of.clone();
    Ok(Quotient {
        algebra,
        congruence: theta,
        projection,
    })
}

/// `L/F` with `[x] ≤ [y]` iff `x→y ∈ F`.
pub fn quotient(a: &FiniteNmAlgebra, f: ElementSet) -> Result<Quotient> {
    let theta = congruence_from_filter(a, f)?;
    quotient_by(a, theta, format!("{}/{}", a.name(), a.show_set(f)))
}

/// Exactly two filters, `{1}` and `L`.
pub fn is_simple_nm(a: &FiniteNmAlgebra) -> bool {
    all_filters(a).len() == 2
}

/// The intersection of all filters other than `{1}`, if that family is nonempty.
pub fn least_nontrivial(filters: &[ElementSet], trivial: ElementSet, universe: ElementSet) -> Option<ElementSet> {
    let mut nontrivial = filters.iter().copied().filter(|&f| f != trivial).peekable();
    nontrivial.peek()?;
    Some(nontrivial.fold(universe, ElementSet::intersection))
}

/// The intersection of all non-`{1}` filters differs from `{1}`.
pub fn is_si_nm(a: &FiniteNmAlgebra) -> bool {
    least_nontrivial(&all_filters(a), a.top_set(), a.universe()).is_some_and(|m| m != a.top_set())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representability {
    pub representable: bool,
    /// A smallest family of prime filters intersecting to `{1}`.
    pub witness: Vec<ElementSet>,
}

/// Searches for a smallest family of prime filters whose intersection is `{1}`.
pub fn is_representable(a: &FiniteNmAlgebra) -> Representability {
    let primes = prime_filters(a);
    let target = a.top_set();
    if primes.iter().fold(a.universe(), |acc, &p| acc.intersection(p)) != target {
        return Representability {
            representable: false,
            witness: Vec::new(),
        };
    }
    for k in 1..=primes.len() {
        let mut chosen = Vec::with_capacity(k);
        if choose(&primes, 0, k, a.universe(), target, &mut chosen) {
            return Representability {
                representable: true,
                witness: chosen,
            };
        }
    }
    unreachable!("the full family of primes intersects to the top")
}

fn choose(
    primes: &[ElementSet],
    start: usize,
    k: usize,
    acc: ElementSet,
    target: ElementSet,
    chosen: &mut Vec<ElementSet>,
) -> bool {
    if chosen.len() == k {
        return acc == target;
    }
    for i in start..primes.len() {
        chosen.push(primes[i]);
        if choose(primes, i + 1, k, acc.intersection(primes[i]), target, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, fixture_six_element, nm_chain, CatalogOptions};

    fn six() -> FiniteNmAlgebra {
        fixture_six_element().algebra
    }

    fn set(a: &FiniteNmAlgebra, s: &str) -> ElementSet {
        a.parse_set(s).unwrap()
    }

    #[test]
    fn generated_filters() {
        let a = six();
        assert_eq!(filter_generated(&a, set(&a, "d")).unwrap(), set(&a, "d,1"));
        assert_eq!(filter_generated(&a, a.top_set()).unwrap(), a.top_set());
        assert_eq!(filter_generated(&a, set(&a, "b,d")).unwrap(), a.universe());
        assert!(filter_generated(&a, ElementSet::EMPTY).is_err());
    }

    #[test]
    fn six_element_filters() {
        let a = six();
        let fs = all_filters(&a);
        let shown: Vec<String> = fs.iter().map(|&f| a.show_set(f)).collect();
        assert_eq!(shown, vec!["{1}", "{d,1}", "{b,c,1}", "{0,a,b,c,d,1}"]);
        // c⊙c = b, so {c,1} is not multiplicatively closed.
        assert!(!is_filter(&a, set(&a, "c,1")));
        assert!(is_prime_filter(&a, set(&a, "d,1")).unwrap());
        assert!(!is_prime_filter(&a, a.universe()).unwrap());
        assert!(is_prime_filter(&a, set(&a, "c")).is_err());
        assert!(!is_simple_nm(&a));
        assert!(!is_si_nm(&a));
    }

    #[test]
    fn brute_force_and_generators_agree() {
        for e in build_catalog(&CatalogOptions::default()).unwrap() {
            if e.algebra.size() <= 8 {
                assert_eq!(
                    all_filters_brute_force(&e.algebra),
                    all_filters_by_generators(&e.algebra),
                    "{}",
                    e.id
                );
            }
        }
    }

    #[test]
    fn ortho_and_minimal_primes() {
        let a = six();
        assert_eq!(ortho_complement(&a, a.top()), a.universe());
        assert_eq!(ortho_complement(&a, a.element("d").unwrap()), set(&a, "b,c,1"));
        let r = is_minimal_prime(&a, set(&a, "d,1")).unwrap();
        assert!(r.definitional);
        assert!(r.union_over_complement);
        assert!(!r.union_over_members);
    }

    #[test]
    fn complement_reading_matches_minimality_across_catalog() {
        for e in build_catalog(&CatalogOptions::default()).unwrap() {
            for p in prime_filters(&e.algebra) {
                let r = is_minimal_prime(&e.algebra, p).unwrap();
                assert!(r.union_over_complement_agrees(), "{} {:?}", e.id, p);
            }
        }
    }

    #[test]
    fn quotients() {
        let a = six();
        let id = quotient(&a, a.top_set()).unwrap();
        assert_eq!(id.algebra.size(), a.size());
        let q = quotient(&a, set(&a, "b,c,1")).unwrap();
        let blocks: Vec<String> = q.congruence.blocks.iter().map(|&b| a.show_set(b)).collect();
        assert_eq!(blocks, vec!["{0,a,d}", "{b,c,1}"]);
        assert_eq!(q.algebra.names(), ["d", "1"]);
        // d→0 = b lies in the filter, so d collapses onto 0
        assert_eq!(a.label(a.imp(a.element("d").unwrap(), 0)), "b");
        let q2 = quotient(&a, set(&a, "d,1")).unwrap();
        let blocks: Vec<String> = q2.congruence.blocks.iter().map(|&b| a.show_set(b)).collect();
        assert_eq!(blocks, vec!["{0,b}", "{a,c}", "{d,1}"]);
        assert!(q2.algebra.is_chain());
    }

    #[test]
    fn quotient_by_prime_is_chain_across_catalog() {
        for e in build_catalog(&CatalogOptions::default()).unwrap() {
            for f in all_filters(&e.algebra) {
                let q = quotient(&e.algebra, f).unwrap();
                if is_prime_filter(&e.algebra, f).unwrap() {
                    assert!(q.algebra.is_chain(), "{}", e.id);
                }
            }
        }
    }

    #[test]
    fn simplicity_of_chains() {
        assert!(is_simple_nm(&nm_chain(2).unwrap()));
        // The odd chain's filters are {1} and L, since the midpoint is nilpotent.
        assert!(is_simple_nm(&nm_chain(3).unwrap()));
        assert!(!is_simple_nm(&nm_chain(4).unwrap()));
        assert!(is_si_nm(&nm_chain(4).unwrap()));
    }

    #[test]
    fn representability() {
        let a = six();
        let r = is_representable(&a);
        assert!(r.representable);
        assert_eq!(r.witness, vec![set(&a, "d,1"), set(&a, "b,c,1")]);
        let c = nm_chain(5).unwrap();
        let r = is_representable(&c);
        assert!(r.representable);
        assert_eq!(r.witness, vec![c.top_set()]);
    }
}
