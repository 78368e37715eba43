//! Prime extension and subdirect representation by chain quotients.

use rayon::prelude::*;
use serde::Serialize;

use super::{all_monadic_filters, mf_generated, quotient_monadic, require_mf};
use crate::algebra::Elem;
use crate::error::{Error, Result};
use crate::filter::minimal_primes;
use crate::quantifier::MonadicNmAlgebra;
use crate::set::ElementSet;

fn require_strong(m: &MonadicNmAlgebra) -> Result<()> {
    if m.is_strong() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "the quantifier on {} is not strong",
            m.algebra().name()
        )))
    }
}

fn prime_mfs(m: &MonadicNmAlgebra) -> Vec<ElementSet> {
    let mfs = all_monadic_filters(m);
    let full = m.algebra().universe();
    mfs.iter()
        .copied()
        .filter(|&f| f != full)
        .filter(|&f| {
            mfs.iter().all(|&g| {
                mfs.iter()
                    .all(|&h| !g.intersection(h).is_subset(f) || g.is_subset(f) || h.is_subset(f))
            })
        })
        .collect()
}

/// The first candidate not strictly below another candidate.
fn maximal_of(candidates: &[ElementSet]) -> Option<ElementSet> {
    candidates
        .iter()
        .copied()
        .find(|&p| candidates.iter().all(|&q| !p.is_proper_subset(q)))
}

/// A prime monadic filter `P ⊇ F` with `a ∉ P`, maximal among such.
pub fn prime_extension(m: &MonadicNmAlgebra, f: ElementSet, a: Elem) -> Result<ElementSet> {
    require_strong(m)?;
    require_mf(m, f)?;
    let alg = m.algebra();
    if f.contains(a) {
        return Err(Error::Precondition(format!(
            "{} already contains {}",
            alg.show_set(f),
            alg.label(a)
        )));
    }
    let candidates: Vec<ElementSet> = prime_mfs(m)
        .into_iter()
        .filter(|&p| f.is_subset(p) && !p.contains(a))
        .collect();
    maximal_of(&candidates).ok_or_else(|| {
        Error::Internal(format!(
            "no prime monadic filter extends {} while omitting {}",
            alg.show_set(f),
            alg.label(a)
        ))
    })
}

/// `x ↦ ([x]_P)_P` into a product of quotient monadic chains.
#[derive(Clone, Debug)]
pub struct SubdirectEmbedding {
    /// In canonical order, without repeats or redundant factors.
    pub factor_filters: Vec<ElementSet>,
    pub factors: Vec<MonadicNmAlgebra>,
    /// One row per element, one column per factor.
    pub embedding: Vec<Vec<Elem>>,
    pub injective: bool,
    /// Every coordinate projection is onto its factor.
    pub surjective: bool,
    pub factors_are_chains: bool,
    /// Every coordinate commutes with the operations and with `∀`.
    pub homomorphism: bool,
    /// Every coordinate is injective on `∀L`.
    pub range_injective: bool,
}

impl SubdirectEmbedding {
    pub fn is_valid(&self) -> bool {
        self.injective && self.surjective && self.factors_are_chains && self.homomorphism
    }

    /// Each element label with the labels of its image tuple.
    pub fn table(&self, m: &MonadicNmAlgebra) -> Vec<(String, Vec<String>)> {
        self.embedding
            .iter()
            .enumerate()
            .map(|(x, row)| {
                let coords = row
                    .iter()
                    .zip(&self.factors)
                    .map(|(&y, f)| f.algebra().label(y).to_string())
                    .collect();
                (m.algebra().label(x).to_string(), coords)
            })
            .collect()
    }
}

/// Drops factors, largest first, while the rest still intersect to `{1}`.
fn prune(a: &crate::algebra::FiniteNmAlgebra, filters: &mut Vec<ElementSet>) {
    let meet = |fs: &[ElementSet]| fs.iter().fold(a.universe(), |acc, &f| acc.intersection(f));
    for i in (0..filters.len()).rev() {
        let mut rest = filters.clone();
        rest.remove(i);
        if !rest.is_empty() && meet(&rest) == a.top_set() {
            *filters = rest;
        }
    }
}

fn embed(m: &MonadicNmAlgebra, mut filters: Vec<ElementSet>) -> Result<SubdirectEmbedding> {
    filters.sort();
    filters.dedup();
    prune(m.algebra(), &mut filters);
    let quotients = filters
        .iter()
        .map(|&p| quotient_monadic(m, p))
        .collect::<Result<Vec<_>>>()?;
    let a = m.algebra();
    let embedding: Vec<Vec<Elem>> = a
        .elements()
        .map(|x| quotients.iter().map(|q| q.projection()[x]).collect())
        .collect();
    let mut rows = embedding.clone();
    rows.sort();
    rows.dedup();
    let injective = rows.len() == a.size();
    let surjective = quotients.iter().all(|q| {
        let hit: ElementSet = q.projection().iter().copied().collect();
        hit == q.monadic.algebra().universe()
    });
    let homomorphism = quotients.iter().all(|q| {
        let (p, b) = (q.projection(), q.monadic.algebra());
        a.elements().all(|x| {
            p[m.forall(x)] == q.monadic.forall(p[x])
                && a.elements().all(|y| {
                    p[a.mul(x, y)] == b.mul(p[x], p[y])
                        && p[a.imp(x, y)] == b.imp(p[x], p[y])
                        && p[a.meet(x, y)] == b.meet(p[x], p[y])
                        && p[a.join(x, y)] == b.join(p[x], p[y])
                })
        })
    });
    let range = m.forall_map().range();
    let range_injective = quotients.iter().all(|q| {
        let images: ElementSet = range.iter().map(|x| q.projection()[x]).collect();
        images.len() == range.len()
    });
    Ok(SubdirectEmbedding {
        factors_are_chains: quotients.iter().all(|q| q.monadic.algebra().is_chain()),
        factors: quotients.into_iter().map(|q| q.monadic).collect(),
        factor_filters: filters,
        embedding,
        injective,
        surjective,
        homomorphism,
        range_injective,
    })
}

/// One prime monadic filter omitting each `a < 1`, extended from `{1}`.
pub fn subdirect_representation(m: &MonadicNmAlgebra) -> Result<SubdirectEmbedding> {
    require_strong(m)?;
    let a = m.algebra();
    let filters = a
        .elements()
        .filter(|&x| x != a.top())
        .map(|x| prime_extension(m, a.top_set(), x))
        .collect::<Result<Vec<_>>>()?;
    embed(m, filters)
}

/// For each `a < 1`, a prime monadic filter disjoint from `{a∨∀r | r ≠ 1}`.
/// Requires a strong quantifier whose range is a chain.
pub fn separating_representation(m: &MonadicNmAlgebra) -> Result<SubdirectEmbedding> {
    require_strong(m)?;
    let a = m.algebra();
    let range = m.forall_map().range();
    if !range.iter().all(|x| range.iter().all(|y| a.leq(x, y) || a.leq(y, x))) {
        return Err(Error::Precondition(format!(
            "the range of ∀ on {} is not a chain",
            a.name()
        )));
    }
    let primes = prime_mfs(m);
    let filters = a
        .elements()
        .filter(|&x| x != a.top())
        .map(|x| {
            let avoid: ElementSet = a
                .elements()
                .filter(|&r| r != a.top())
                .map(|r| a.join(x, m.forall(r)))
                .collect();
            let candidates: Vec<ElementSet> = primes
                .iter()
                .copied()
                .filter(|p| p.intersection(avoid).is_empty())
                .collect();
            maximal_of(&candidates).ok_or_else(|| {
                Error::Internal(format!(
                    "no prime monadic filter separates {} on {}",
                    a.label(x),
                    a.name()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    embed(m, filters)
}

/// Minimal prime filters of the underlying algebra against `∀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantifierRepresentability {
    pub minimal_primes: Vec<ElementSet>,
    /// Minimal primes with some `x` whose `∀x` falls outside.
    pub not_forall_closed: Vec<ElementSet>,
    pub intersection_is_top: bool,
}

impl QuantifierRepresentability {
    pub fn representable(&self) -> bool {
        self.not_forall_closed.is_empty() && self.intersection_is_top
    }
}

pub fn representable_with_quantifier(m: &MonadicNmAlgebra) -> Result<QuantifierRepresentability> {
    require_strong(m)?;
    let a = m.algebra();
    let minimal_primes = minimal_primes(a);
    let not_forall_closed = minimal_primes
        .iter()
        .copied()
        .filter(|&p| p.iter().any(|x| !p.contains(m.forall(x))))
        .collect();
    let meet = minimal_primes.iter().fold(a.universe(), |acc, &p| acc.intersection(p));
    Ok(QuantifierRepresentability {
        intersection_is_top: meet == a.top_set(),
        minimal_primes,
        not_forall_closed,
    })
}

/// `F = ⟨F∪{x→y}⟩∀ ∩ ⟨F∪{y→x}⟩∀` over all monadic `F` and pairs `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionIdentityReport {
    pub checked: usize,
    /// `(F, x, y)` of the first failure.
    pub failure: Option<(ElementSet, Elem, Elem)>,
}

impl IntersectionIdentityReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn filter_intersection_identity(m: &MonadicNmAlgebra) -> Result<IntersectionIdentityReport> {
    require_strong(m)?;
    let a = m.algebra();
    let n = a.size();
    let mfs = all_monadic_filters(m);
    let gen = |s: ElementSet| mf_generated(m, s).expect("contains the top");
    let failures: Vec<(ElementSet, Elem, Elem)> = mfs
        .par_iter()
        .filter_map(|&f| {
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .find(|&(x, y)| gen(f.with(a.imp(x, y))).intersection(gen(f.with(a.imp(y, x)))) != f)
                .map(|(x, y)| (f, x, y))
        })
        .collect();
    Ok(IntersectionIdentityReport {
        checked: mfs.len() * n * n,
        failure: failures.into_iter().next(),
    })
}
