//! Alternative axiomatisations: the paired `(∀, ∃)` system, modal operators,
//! and the rough approximation space induced by a quantifier.

use rayon::prelude::*;
use serde::Serialize;

use super::{dual_map, enumerate_quantifiers, MonadicNmAlgebra, QuantifierMap};
use crate::algebra::{Elem, FiniteNmAlgebra};
use crate::error::{Error, Result};
use crate::report::{scan1, scan2, Check, CheckReport};
use crate::set::ElementSet;

/// Largest algebra for the map-pair and modal enumerations.
pub const DUAL_LIMIT: usize = 6;

/// The two forms of the third paired axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum W3Form {
    /// `∀(x→∃y) = ∃x→∃y`.
    ExistsConsequent,
    /// `∀(x→∀y) = ∃x→∀y`, the form that follows from U2.
    ForallConsequent,
}

impl W3Form {
    pub fn statement(self) -> &'static str {
        match self {
            W3Form::ExistsConsequent => "∀(x→∃y) = ∃x→∃y",
            W3Form::ForallConsequent => "∀(x→∀y) = ∃x→∀y",
        }
    }

    fn holds(self, a: &FiniteNmAlgebra, fa: &[Elem], ex: &[Elem], x: Elem, y: Elem) -> bool {
        match self {
            W3Form::ExistsConsequent => fa[a.imp(x, ex[y])] == a.imp(ex[x], ex[y]),
            W3Form::ForallConsequent => fa[a.imp(x, fa[y])] == a.imp(ex[x], fa[y]),
        }
    }
}

/// W1–W5 for a pair of maps, with W3 in the given form.
pub fn check_w_axioms(a: &FiniteNmAlgebra, fa: &[Elem], ex: &[Elem], form: W3Form) -> Result<CheckReport> {
    let n = a.size();
    if fa.len() != n || ex.len() != n {
        return Err(Error::Precondition("map sizes do not match the algebra".into()));
    }
    let mut r = CheckReport::new();
    r.push(Check::new("W1", "∀x ≤ x", scan1(n, |x| a.leq(fa[x], x))));
    r.push(Check::new("W2", "x ≤ ∃x", scan1(n, |x| a.leq(x, ex[x]))));
    r.push(Check::new(
        "W3",
        form.statement(),
        scan2(n, |x, y| form.holds(a, fa, ex, x, y)),
    ));
    r.push(Check::new(
        "W4",
        "∀(∃x→y) = ∃x→∀y",
        scan2(n, |x, y| fa[a.imp(ex[x], y)] == a.imp(ex[x], fa[y])),
    ));
    r.push(Check::new(
        "W5",
        "∀(x∨∃y) = ∀x∨∃y",
        scan2(n, |x, y| fa[a.join(x, ex[y])] == a.join(fa[x], ex[y])),
    ));
    Ok(r)
}

fn w_rest_holds(a: &FiniteNmAlgebra, fa: &[Elem], ex: &[Elem], form: W3Form) -> bool {
    let n = a.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            fa[a.imp(ex[x], y)] == a.imp(ex[x], fa[y])
                && fa[a.join(x, ex[y])] == a.join(fa[x], ex[y])
                && form.holds(a, fa, ex, x, y)
        })
    })
}

/// All maps `f` with `f(x)` in the given per-element candidate lists.
fn product_of(choices: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::with_capacity(choices.len())];
    for opts in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

fn deflationary_maps(a: &FiniteNmAlgebra) -> Vec<Vec<Elem>> {
    let choices: Vec<Vec<Elem>> = a
        .elements()
        .map(|x| a.elements().filter(|&y| a.leq(y, x)).collect())
        .collect();
    product_of(&choices)
}

fn inflationary_maps(a: &FiniteNmAlgebra) -> Vec<Vec<Elem>> {
    let choices: Vec<Vec<Elem>> = a
        .elements()
        .map(|x| a.elements().filter(|&y| a.leq(x, y)).collect())
        .collect();
    product_of(&choices)
}

fn require_dual_size(a: &FiniteNmAlgebra, what: &'static str) -> Result<()> {
    if a.size() > DUAL_LIMIT {
        return Err(Error::TooLarge {
            what,
            size: a.size(),
            limit: DUAL_LIMIT,
        });
    }
    Ok(())
}

/// Every pair `(∀, ∃)` of self-maps satisfying W1–W5, sorted.
///
/// W1 and W2 restrict each map pointwise, so the search runs over deflationary
/// `∀` and inflationary `∃` independently and filters pairs by W3–W5.
pub fn enumerate_h_pairs(a: &FiniteNmAlgebra, form: W3Form) -> Result<Vec<(Vec<Elem>, Vec<Elem>)>> {
    require_dual_size(a, "paired quantifier enumeration")?;
    let alls = deflationary_maps(a);
    let exs = inflationary_maps(a);
    let mut out: Vec<(Vec<Elem>, Vec<Elem>)> = exs
        .par_iter()
        .flat_map_iter(|ex| {
            alls.iter()
                .filter(move |fa| w_rest_holds(a, fa, ex, form))
                .map(move |fa| (fa.clone(), ex.clone()))
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GhReport {
    pub form: W3Form,
    /// `(∀, ¬∀¬)` for every quantifier satisfying U1–U4.
    pub g_pairs: Vec<(Vec<Elem>, Vec<Elem>)>,
    /// Every pair satisfying W1–W5.
    pub h_pairs: Vec<(Vec<Elem>, Vec<Elem>)>,
    pub equal: bool,
    /// First pair in H but not in G.
    pub h_only: Option<(Vec<Elem>, Vec<Elem>)>,
    /// First pair in G but not in H.
    pub g_only: Option<(Vec<Elem>, Vec<Elem>)>,
}

/// Compares the U-axiom quantifiers with the W-axiom map pairs.
pub fn verify_g_h_equivalence(a: &FiniteNmAlgebra, form: W3Form) -> Result<GhReport> {
    let mut g_pairs: Vec<(Vec<Elem>, Vec<Elem>)> = enumerate_quantifiers(a, false)?
        .into_iter()
        .map(|q| {
            let e = dual_map(a, q.image());
            (q.image().to_vec(), e)
        })
        .collect();
    g_pairs.sort();
    let h_pairs = enumerate_h_pairs(a, form)?;
    let h_only = h_pairs.iter().find(|p| g_pairs.binary_search(p).is_err()).cloned();
    let g_only = g_pairs.iter().find(|p| h_pairs.binary_search(p).is_err()).cloned();
    Ok(GhReport {
        form,
        equal: h_only.is_none() && g_only.is_none(),
        g_pairs,
        h_pairs,
        h_only,
        g_only,
    })
}

/// M1–M5 and the closure condition `τ(τx→τy) = τx→τy`.
pub fn check_modal(a: &FiniteNmAlgebra, t: &QuantifierMap) -> Result<CheckReport> {
    let n = a.size();
    if t.image().len() != n {
        return Err(Error::Precondition("map size does not match the algebra".into()));
    }
    let f = |x: Elem| t.apply(x);
    let mut r = CheckReport::new();
    r.push(Check::new("M1", "τ1 = 1", (f(a.top()) != a.top()).then(Vec::new)));
    r.push(Check::new(
        "M2",
        "τ(x∨y) ≤ τx∨τy",
        scan2(n, |x, y| a.leq(f(a.join(x, y)), a.join(f(x), f(y)))),
    ));
    r.push(Check::new(
        "M3",
        "τ(x→y) ≤ τx→τy",
        scan2(n, |x, y| a.leq(f(a.imp(x, y)), a.imp(f(x), f(y)))),
    ));
    r.push(Check::new("M4", "τx ≤ ττx", scan1(n, |x| a.leq(f(x), f(f(x))))));
    r.push(Check::new("M5", "τx ≤ x", scan1(n, |x| a.leq(f(x), x))));
    r.push(Check::new(
        "closure",
        "τ(τx→τy) = τx→τy",
        scan2(n, |x, y| f(a.imp(f(x), f(y))) == a.imp(f(x), f(y))),
    ));
    Ok(r)
}

fn is_modal_closed(a: &FiniteNmAlgebra, t: &[Elem]) -> bool {
    let n = a.size();
    t[a.top()] == a.top()
        && (0..n).all(|x| a.leq(t[x], t[t[x]]))
        && (0..n).all(|x| {
            (0..n).all(|y| {
                a.leq(t[a.join(x, y)], a.join(t[x], t[y]))
                    && a.leq(t[a.imp(x, y)], a.imp(t[x], t[y]))
                    && t[a.imp(t[x], t[y])] == a.imp(t[x], t[y])
            })
        })
}

/// Every modal operator satisfying the closure condition, sorted.
pub fn enumerate_modal(a: &FiniteNmAlgebra) -> Result<Vec<QuantifierMap>> {
    require_dual_size(a, "modal operator enumeration")?;
    let mut out: Vec<QuantifierMap> = deflationary_maps(a)
        .into_par_iter()
        .filter(|t| is_modal_closed(a, t))
        .map(QuantifierMap::from_image)
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModalReport {
    pub modal: Vec<QuantifierMap>,
    pub strong: Vec<QuantifierMap>,
    pub equal: bool,
}

/// Compares closed modal operators with strong quantifiers.
pub fn modal_strong_equivalence(a: &FiniteNmAlgebra) -> Result<ModalReport> {
    let modal = enumerate_modal(a)?;
    let strong = enumerate_quantifiers(a, true)?;
    let equal = modal == strong;
    Ok(ModalReport { modal, strong, equal })
}

/// The rough approximation space `(L, ∀L, ∃L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoughApproximationSpace {
    pub lower: Vec<Elem>,
    pub upper: Vec<Elem>,
    pub inner_definable: ElementSet,
    pub upper_definable: ElementSet,
    /// First `(x, y)` with `x ∈ ∀L` and `x ≤ y ⇎ x ≤ ∀y`.
    pub inner_law_failure: Option<(Elem, Elem)>,
    /// First `(x, y)` with `y ∈ ∃L` and `x ≤ y ⇎ ∃x ≤ y`.
    pub upper_law_failure: Option<(Elem, Elem)>,
    /// `∀x` is the greatest inner-definable element below `x` for every `x`.
    pub lower_is_inner_approximation: bool,
    /// `∃x` is the least upper-definable element above `x` for every `x`.
    pub upper_is_outer_approximation: bool,
    /// Pairs `x < y` (by index) with the same rough pair `(∀x, ∃x)`.
    pub collisions: Vec<(Elem, Elem)>,
}

impl RoughApproximationSpace {
    pub fn is_valid(&self) -> bool {
        self.inner_law_failure.is_none()
            && self.upper_law_failure.is_none()
            && self.lower_is_inner_approximation
            && self.upper_is_outer_approximation
    }
}

pub fn rough_space(m: &MonadicNmAlgebra) -> RoughApproximationSpace {
    let a = m.algebra();
    let n = a.size();
    let lower: Vec<Elem> = m.forall_map().image().to_vec();
    let upper = m.exists_map().to_vec();
    let inner_definable: ElementSet = lower.iter().copied().collect();
    let upper_definable: ElementSet = upper.iter().copied().collect();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let inner_law_failure = pairs().find(|&(x, y)| inner_definable.contains(x) && a.leq(x, y) != a.leq(x, lower[y]));
    let upper_law_failure = pairs().find(|&(x, y)| upper_definable.contains(y) && a.leq(x, y) != a.leq(upper[x], y));
    let lower_is_inner_approximation = (0..n).all(|x| {
        inner_definable.contains(lower[x])
            && a.leq(lower[x], x)
            && inner_definable.iter().all(|s| !a.leq(s, x) || a.leq(s, lower[x]))
    });
    let upper_is_outer_approximation = (0..n).all(|x| {
        upper_definable.contains(upper[x])
            && a.leq(x, upper[x])
            && upper_definable.iter().all(|r| !a.leq(x, r) || a.leq(upper[x], r))
    });
    let collisions = pairs()
        .filter(|&(x, y)| x < y && lower[x] == lower[y] && upper[x] == upper[y])
        .collect();
    RoughApproximationSpace {
        lower,
        upper,
        inner_definable,
        upper_definable,
        inner_law_failure,
        upper_law_failure,
        lower_is_inner_approximation,
        upper_is_outer_approximation,
        collisions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_six_element, nm_chain, zero_one_quantifier};
    use crate::quantifier::strong_witness;

    #[test]
    fn w_axioms_for_six_element_pair() {
        let m = fixture_six_element().monadic(0).unwrap();
        for form in [W3Form::ExistsConsequent, W3Form::ForallConsequent] {
            let r = check_w_axioms(m.algebra(), m.forall_map().image(), m.exists_map(), form).unwrap();
            assert!(r.all_pass(), "{:?}", r.failure_ids());
            let id = QuantifierMap::identity(m.algebra());
            assert!(check_w_axioms(m.algebra(), id.image(), id.image(), form)
                .unwrap()
                .all_pass());
        }
    }

    #[test]
    fn g_and_h_agree_on_small_chains() {
        for k in 2..=5 {
            let r = verify_g_h_equivalence(&nm_chain(k).unwrap(), W3Form::ForallConsequent).unwrap();
            assert!(r.equal, "chain {k}");
        }
    }

    #[test]
    fn exists_consequent_form_admits_a_stray_pair() {
        // On the two-element chain, the identity paired with the constant-1
        // map satisfies W1–W5 with the ∃-consequent W3, but ∃ ≠ ¬∀¬.
        let r = verify_g_h_equivalence(&nm_chain(2).unwrap(), W3Form::ExistsConsequent).unwrap();
        assert!(!r.equal);
        assert_eq!(r.h_only, Some((vec![0, 1], vec![1, 1])));
        assert_eq!(r.g_only, None);
    }

    #[test]
    fn identity_is_closed_modal() {
        let a = fixture_six_element().algebra;
        assert!(check_modal(&a, &QuantifierMap::identity(&a)).unwrap().all_pass());
        let r = modal_strong_equivalence(&a).unwrap();
        assert!(r.equal);
        assert!(r.modal.iter().all(|t| strong_witness(&a, t.image()).is_none()));
    }

    #[test]
    fn rough_spaces() {
        let id = MonadicNmAlgebra::identity(fixture_six_element().algebra);
        let r = rough_space(&id);
        assert!(r.is_valid());
        assert!(r.collisions.is_empty());

        let m = fixture_six_element().monadic(0).unwrap();
        let r = rough_space(&m);
        assert!(r.is_valid());
        let a = m.algebra();
        let ea = a.element("a").unwrap();
        assert_eq!((a.label(r.lower[ea]), a.label(r.upper[ea])), ("0", "d"));
        assert_eq!((r.lower[0], r.upper[0]), (0, 0));

        let c4 = nm_chain(4).unwrap();
        let q = zero_one_quantifier(&c4).unwrap();
        let r = rough_space(&MonadicNmAlgebra::new(c4, q).unwrap());
        assert_eq!(r.collisions, vec![(1, 2)]);
    }
}
