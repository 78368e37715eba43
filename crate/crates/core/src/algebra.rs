//! Finite NM-algebras: table representation, axiom validation and derived
//! operations.
//!
//! An NM-algebra is a bounded lattice carrying a commutative monoid `⊙` with
//! unit `1` and its residuum `→`, subject to prelinearity, the weak
//! nilpotent-minimum identity and involutive negation `¬x = x → 0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Index of an element in its algebra's universe.
pub type Elem = usize;

/// Square operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    n: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        Table { n, cells }
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.n + y]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.cells.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }
}

/// Unvalidated input: the order relation and the `⊙`/`→` tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NmTables {
    pub name: String,
    pub names: Vec<String>,
    pub bottom: Elem,
    pub top: Elem,
    pub leq: Vec<Vec<bool>>,
    pub mul: Vec<Vec<Elem>>,
    pub imp: Vec<Vec<Elem>>,
}

impl NmTables {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == label)
    }
}

/// The defining clauses of an NM-algebra, plus the two definability identities
/// `x⊙y = ¬(x→¬y)` and `x⊕y = ¬(¬x⊙¬y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NmClause {
    BoundedLattice,
    CommutativeMonoid,
    Adjointness,
    Prelinearity,
    WeakNilpotentMinimum,
    Involution,
    Definability,
}

impl NmClause {
    /// Position in the usual numbered list of NM-algebra axioms; the
    /// definability identities are not part of that list.
    pub fn number(self) -> Option<u8> {
        match self {
            NmClause::BoundedLattice => Some(1),
            NmClause::CommutativeMonoid => Some(2),
            NmClause::Adjointness => Some(3),
            NmClause::Prelinearity => Some(4),
            NmClause::WeakNilpotentMinimum => Some(5),
            NmClause::Involution => Some(6),
            NmClause::Definability => None,
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            NmClause::BoundedLattice => "bounded lattice",
            NmClause::CommutativeMonoid => "commutative monoid with unit 1",
            NmClause::Adjointness => "adjointness x⊙y ≤ z ⇔ x ≤ y→z",
            NmClause::Prelinearity => "prelinearity (x→y)∨(y→x) = 1",
            NmClause::WeakNilpotentMinimum => "¬(x⊙y) ∨ ((x∧y)→(x⊙y)) = 1",
            NmClause::Involution => "involution ¬¬x = x",
            NmClause::Definability => "definability of ⊙ and ⊕ through → and ¬",
        }
    }
}

/// One failed clause with the lexicographically first witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: NmClause,
    pub detail: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn clauses(&self) -> Vec<NmClause> {
        let mut v: Vec<NmClause> = self.violations.iter().map(|v| v.clause).collect();
        v.dedup();
        v
    }

    pub fn violation(&self, clause: NmClause) -> Option<&Violation> {
        self.violations.iter().find(|v| v.clause == clause)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| match v.clause.number() {
                Some(k) => format!("({k}) {}: {}", v.clause.title(), v.detail),
                None => format!("{}: {}", v.clause.title(), v.detail),
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A validated finite NM-algebra. Immutable; all operations are table lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteNmAlgebra {
    name: String,
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Table,
    join: Table,
    mul: Table,
    imp: Table,
    neg: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

/// Validates tables against every NM-algebra axiom.
///
/// Structural problems (ragged tables, out-of-range entries, duplicate labels)
/// are reported as [`Error::Malformed`]; axiom failures as [`Error::NotNm`]
/// carrying every violated clause.
pub fn validate_nm(tables: &NmTables) -> Result<FiniteNmAlgebra> {
    validate_sized(tables, 2)
}

/// Like [`validate_nm`] but also admits the one-element algebra, which arises
/// as the quotient by the improper filter.
pub(crate) fn validate_quotient(tables: &NmTables) -> Result<FiniteNmAlgebra> {
    validate_sized(tables, 1)
}

fn validate_sized(tables: &NmTables, min_size: usize) -> Result<FiniteNmAlgebra> {
    check_shape(tables, min_size)?;
    let n = tables.size();
    let mut report = ValidationReport::default();
    let lbl = |x: Elem| tables.names[x].clone();
    let le = |x: Elem, y: Elem| tables.leq[x][y];
    let mul = |x: Elem, y: Elem| tables.mul[x][y];
    let imp = |x: Elem, y: Elem| tables.imp[x][y];
    let (bot, top) = (tables.bottom, tables.top);

    let mut push = |clause: NmClause, detail: String, witness: Vec<Elem>| {
        report.violations.push(Violation {
            clause,
            detail,
            witness: witness.into_iter().map(lbl).collect(),
        });
    };

    // (1) bounded lattice
    let mut lattice: Option<(Table, Table)> = None;
    if let Some(x) = (0..n).find(|&x| !le(x, x)) {
        push(
            NmClause::BoundedLattice,
            format!("order not reflexive at {}", lbl(x)),
            vec![x],
        );
    } else if let Some((x, y)) = pairs(n).find(|&(x, y)| x != y && le(x, y) && le(y, x)) {
        push(
            NmClause::BoundedLattice,
            format!("order not antisymmetric at ({}, {})", lbl(x), lbl(y)),
            vec![x, y],
        );
    } else if let Some((x, y, z)) = triples(n).find(|&(x, y, z)| le(x, y) && le(y, z) && !le(x, z)) {
        push(
            NmClause::BoundedLattice,
            format!("order not transitive at ({}, {}, {})", lbl(x), lbl(y), lbl(z)),
            vec![x, y, z],
        );
    } else if let Some(x) = (0..n).find(|&x| !le(bot, x)) {
        push(
            NmClause::BoundedLattice,
            format!("bottom {} is not below {}", lbl(bot), lbl(x)),
            vec![bot, x],
        );
    } else if let Some(x) = (0..n).find(|&x| !le(x, top)) {
        push(
            NmClause::BoundedLattice,
            format!("top {} is not above {}", lbl(top), lbl(x)),
            vec![x, top],
        );
    } else {
        let bound = |x: Elem, y: Elem, lower: bool| -> Option<Elem> {
            let below = |a: Elem, b: Elem| if lower { le(a, b) } else { le(b, a) };
            let cands: Vec<Elem> = (0..n).filter(|&z| below(z, x) && below(z, y)).collect();
            cands.iter().copied().find(|&z| cands.iter().all(|&w| below(w, z)))
        };
        let mut missing = None;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        'outer: for x in 0..n {
            for y in 0..n {
                match (bound(x, y, true), bound(x, y, false)) {
                    (Some(m), Some(j)) => {
                        meet[x * n + y] = m;
                        join[x * n + y] = j;
                    }
                    (m, _) => {
                        missing = Some((x, y, m.is_none()));
                        break 'outer;
                    }
                }
            }
        }
        match missing {
            Some((x, y, no_meet)) => push(
                NmClause::BoundedLattice,
                format!(
                    "no {} for ({}, {})",
                    if no_meet {
                        "greatest lower bound"
                    } else {
                        "least upper bound"
                    },
                    lbl(x),
                    lbl(y)
                ),
                vec![x, y],
            ),
            None => lattice = Some((Table { n, cells: meet }, Table { n, cells: join })),
        }
    }

    // (2) commutative monoid
    if let Some(x) = (0..n).find(|&x| mul(x, top) != x || mul(top, x) != x) {
        let shown = if mul(x, top) != x { mul(x, top) } else { mul(top, x) };
        push(
            NmClause::CommutativeMonoid,
            format!(
                "unit law fails at ({0}, {1}): {0}⊙{1} = {2}",
                lbl(x),
                lbl(top),
                lbl(shown)
            ),
            vec![x, top],
        );
    }
    if let Some((x, y)) = pairs(n).find(|&(x, y)| mul(x, y) != mul(y, x)) {
        push(
            NmClause::CommutativeMonoid,
            format!(
                "not commutative: {0}⊙{1} = {2} but {1}⊙{0} = {3}",
                lbl(x),
                lbl(y),
                lbl(mul(x, y)),
                lbl(mul(y, x))
            ),
            vec![x, y],
        );
    }
    if let Some((x, y, z)) = triples(n).find(|&(x, y, z)| mul(mul(x, y), z) != mul(x, mul(y, z))) {
        push(
            NmClause::CommutativeMonoid,
            format!("not associative at ({}, {}, {})", lbl(x), lbl(y), lbl(z)),
            vec![x, y, z],
        );
    }
    // (3) adjointness
    if let Some((x, y, z)) = triples(n).find(|&(x, y, z)| le(mul(x, y), z) != le(x, imp(y, z))) {
        push(
            NmClause::Adjointness,
            format!(
                "at ({0}, {1}, {2}): {0}⊙{1} = {3}, {1}→{2} = {4}",
                lbl(x),
                lbl(y),
                lbl(z),
                lbl(mul(x, y)),
                lbl(imp(y, z))
            ),
            vec![x, y, z],
        );
    }

    if let Some((meet, join)) = &lattice {
        // (4) prelinearity
        if let Some((x, y)) = pairs(n).find(|&(x, y)| join.get(imp(x, y), imp(y, x)) != top) {
            push(
                NmClause::Prelinearity,
                format!("(x→y)∨(y→x) ≠ 1 at ({}, {})", lbl(x), lbl(y)),
                vec![x, y],
            );
        }
        // (5) weak nilpotent minimum
        if let Some((x, y)) = pairs(n).find(|&(x, y)| {
            let p = mul(x, y);
            join.get(imp(p, bot), imp(meet.get(x, y), p)) != top
        }) {
            push(
                NmClause::WeakNilpotentMinimum,
                format!("fails at ({}, {})", lbl(x), lbl(y)),
                vec![x, y],
            );
        }
    }

    // (6) involution
    if let Some(x) = (0..n).find(|&x| imp(imp(x, bot), bot) != x) {
        push(
            NmClause::Involution,
            format!("¬¬{} = {}", lbl(x), lbl(imp(imp(x, bot), bot))),
            vec![x],
        );
    }

    // definability identities
    let neg = |x: Elem| imp(x, bot);
    if let Some((x, y)) = pairs(n).find(|&(x, y)| mul(x, y) != neg(imp(x, neg(y)))) {
        push(
            NmClause::Definability,
            format!(
                "{0}⊙{1} = {2} but ¬({0}→¬{1}) = {3}",
                lbl(x),
                lbl(y),
                lbl(mul(x, y)),
                lbl(neg(imp(x, neg(y))))
            ),
            vec![x, y],
        );
    } else if let Some((x, y)) = pairs(n).find(|&(x, y)| imp(neg(x), y) != neg(mul(neg(x), neg(y)))) {
        push(
            NmClause::Definability,
            format!("x⊕y ≠ ¬(¬x⊙¬y) at ({}, {})", lbl(x), lbl(y)),
            vec![x, y],
        );
    }

    if !report.is_valid() {
        return Err(Error::NotNm(report));
    }
    let (meet, join) = lattice.expect("lattice tables exist when no violation was recorded");
    let leq: Vec<bool> = tables.leq.iter().flatten().copied().collect();
    let mul = Table::from_fn(n, |x, y| tables.mul[x][y]);
    let imp = Table::from_fn(n, |x, y| tables.imp[x][y]);
    let neg = (0..n).map(|x| imp.get(x, bot)).collect();
    Ok(FiniteNmAlgebra {
        name: tables.name.clone(),
        names: tables.names.clone(),
        leq,
        meet,
        join,
        mul,
        imp,
        neg,
        bottom: bot,
        top,
    })
}

fn check_shape(t: &NmTables, min_size: usize) -> Result<()> {
    let n = t.size();
    let bad = |m: String| Err(Error::Malformed(m));
    if n < min_size {
        return bad(format!("an algebra needs at least {min_size} elements, got {n}"));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::TooLarge {
            what: "algebra size",
            size: n,
            limit: MAX_ELEMENTS,
        });
    }
    for (i, name) in t.names.iter().enumerate() {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return bad(format!("element label {name:?} must be a non-empty token"));
        }
        if t.names[..i].contains(name) {
            return bad(format!("duplicate element label {name}"));
        }
    }
    if t.bottom >= n || t.top >= n {
        return bad("bottom/top index out of range".into());
    }
    if t.leq.len() != n || t.leq.iter().any(|r| r.len() != n) {
        return bad("order relation is not square".into());
    }
    for (what, table) in [("mul", &t.mul), ("imp", &t.imp)] {
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return bad(format!("{what} table is not {n}×{n}"));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return bad(format!("{what} table has an entry out of range"));
        }
    }
    Ok(())
}

fn pairs(n: usize) -> impl Iterator<Item = (Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (Elem, Elem, Elem)> {
    pairs(n).flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)))
}

impl FiniteNmAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == label)
    }

    /// Looks up an element by label, as a hard error when unknown.
    pub fn element(&self, label: &str) -> Result<Elem> {
        self.index_of(label)
            .ok_or_else(|| Error::Malformed(format!("unknown element label {label:?} in {}", self.name)))
    }

    /// Checks that an index names an element.
    pub fn elem(&self, x: usize) -> Result<Elem> {
        if x < self.size() {
            Ok(x)
        } else {
            Err(Error::Precondition(format!(
                "element index {x} out of range for size {}",
                self.size()
            )))
        }
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn top_set(&self) -> ElementSet {
        ElementSet::singleton(self.top)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size() + y]
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp.get(x, y)
    }

    /// `¬x = x → 0`
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    /// `x ⊕ y = ¬x → y`
    #[inline]
    pub fn oplus(&self, x: Elem, y: Elem) -> Elem {
        self.imp(self.neg(x), y)
    }

    /// `x⁰ = 1`, `xⁿ = x ⊙ xⁿ⁻¹`
    pub fn power(&self, x: Elem, n: usize) -> Elem {
        (0..n).fold(self.top, |acc, _| self.mul(x, acc))
    }

    pub fn is_chain(&self) -> bool {
        pairs(self.size()).all(|(x, y)| self.leq(x, y) || self.leq(y, x))
    }

    /// Elements `b ≠ 1` with nothing strictly between `b` and `1`.
    pub fn coatoms(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&b| b != self.top)
            .filter(|&b| self.elements().all(|c| c == b || c == self.top || !self.leq(b, c)))
            .collect()
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn imp_table(&self) -> &Table {
        &self.imp
    }

    pub fn to_tables(&self) -> NmTables {
        let n = self.size();
        NmTables {
            name: self.name.clone(),
            names: self.names.clone(),
            bottom: self.bottom,
            top: self.top,
            leq: (0..n).map(|x| (0..n).map(|y| self.leq(x, y)).collect()).collect(),
            mul: self.mul.rows(),
            imp: self.imp.rows(),
        }
    }

    /// Whether `s` contains `0`, `1` and is closed under `∧ ∨ ⊙ →`.
    pub fn is_subuniverse(&self, s: ElementSet) -> bool {
        s.contains(self.bottom)
            && s.contains(self.top)
            && s.iter().all(|x| {
                s.iter().all(|y| {
                    s.contains(self.meet(x, y))
                        && s.contains(self.join(x, y))
                        && s.contains(self.mul(x, y))
                        && s.contains(self.imp(x, y))
                })
            })
    }

    /// The subalgebra on `s` and its embedding (sub index → parent index).
    pub fn subalgebra(&self, s: ElementSet, name: impl Into<String>) -> Result<(FiniteNmAlgebra, Vec<Elem>)> {
        if !self.is_subuniverse(s) {
            return Err(Error::Precondition(format!(
                "{:?} is not a subuniverse of {}",
                s, self.name
            )));
        }
        let embed = s.to_vec();
        let pos = |x: Elem| embed.iter().position(|&e| e == x).expect("closed subset");
        let k = embed.len();
        let tables = NmTables {
            name: name.into(),
            names: embed.iter().map(|&x| self.names[x].clone()).collect(),
            bottom: pos(self.bottom),
            top: pos(self.top),
            leq: (0..k)
                .map(|i| (0..k).map(|j| self.leq(embed[i], embed[j])).collect())
                .collect(),
            mul: (0..k)
                .map(|i| (0..k).map(|j| pos(self.mul(embed[i], embed[j]))).collect())
                .collect(),
            imp: (0..k)
                .map(|i| (0..k).map(|j| pos(self.imp(embed[i], embed[j]))).collect())
                .collect(),
        };
        let sub = validate_nm(&tables).map_err(|e| Error::Internal(format!("subalgebra failed validation: {e}")))?;
        Ok((sub, embed))
    }

    pub fn set_labels(&self, s: ElementSet) -> Vec<&str> {
        s.iter().map(|x| self.label(x)).collect()
    }

    /// `{a, b, 1}` style rendering.
    pub fn show_set(&self, s: ElementSet) -> String {
        format!("{{{}}}", self.set_labels(s).join(","))
    }

    /// Parses a comma separated list of labels.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| self.element(t))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_six_element, nm_chain, six_element_uncorrected_tables};

    #[test]
    fn boolean_two_chain_is_valid() {
        let a = nm_chain(2).unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(a.neg(a.bottom()), a.top());
    }

    #[test]
    fn six_element_fixture_validates() {
        let a = fixture_six_element().algebra;
        assert_eq!(a.size(), 6);
        let (ea, eb, ec, ed) = (1, 2, 3, 4);
        assert_eq!(a.neg(ea), ec);
        assert_eq!(a.neg(eb), ed);
        assert_eq!(a.oplus(ec, ec), a.imp(ea, ec));
        assert_eq!(a.oplus(ec, ec), a.top());
    }

    #[test]
    fn power_zero_is_top() {
        let a = fixture_six_element().algebra;
        for x in a.elements() {
            assert_eq!(a.power(x, 0), a.top());
            assert_eq!(a.power(x, 1), x);
        }
    }

    #[test]
    fn mutated_negation_is_reported_as_involution_failure() {
        let mut t = fixture_six_element().algebra.to_tables();
        let (a, d) = (t.index_of("a").unwrap(), t.index_of("d").unwrap());
        t.imp[a][t.bottom] = d;
        let Err(Error::NotNm(report)) = validate_nm(&t) else {
            panic!("mutated tables must fail validation");
        };
        let inv = report.violation(NmClause::Involution).expect("involution violation");
        assert_eq!(inv.witness, vec!["a".to_string()]);
    }

    #[test]
    fn uncorrected_six_element_mul_table_is_not_commutative() {
        let t = six_element_uncorrected_tables();
        let Err(Error::NotNm(report)) = validate_nm(&t) else {
            panic!("uncorrected tables are expected to fail");
        };
        let v = report.violation(NmClause::CommutativeMonoid).unwrap();
        assert_eq!(v.witness, vec!["c".to_string(), "d".to_string()]);
    }

    #[test]
    fn malformed_input_is_distinct_from_axiom_failure() {
        let mut t = nm_chain(3).unwrap().to_tables();
        t.mul.pop();
        assert!(matches!(validate_nm(&t), Err(Error::Malformed(_))));
        let mut t = nm_chain(3).unwrap().to_tables();
        t.imp[0][0] = 7;
        assert!(matches!(validate_nm(&t), Err(Error::Malformed(_))));
        let mut t = nm_chain(3).unwrap().to_tables();
        t.names[1] = t.names[0].clone();
        assert!(matches!(validate_nm(&t), Err(Error::Malformed(_))));
    }

    #[test]
    fn non_lattice_order_is_rejected() {
        // 0 < a, b < c, d < 1 has no least upper bound for (a, b).
        let names: Vec<String> = ["0", "a", "b", "c", "d", "1"].iter().map(|s| s.to_string()).collect();
        let mut leq: Vec<Vec<bool>> = (0..6)
            .map(|x| (0..6).map(|y| x == y || x == 0 || y == 5).collect())
            .collect();
        for (x, y) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
            leq[x][y] = true;
        }
        let t = NmTables {
            name: "bowtie".into(),
            names,
            bottom: 0,
            top: 5,
            leq,
            mul: vec![vec![0; 6]; 6],
            imp: vec![vec![5; 6]; 6],
        };
        let Err(Error::NotNm(report)) = validate_nm(&t) else {
            panic!()
        };
        assert_eq!(report.violations[0].clause, NmClause::BoundedLattice);
        assert_eq!(report.violations[0].witness, vec!["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn index_out_of_range_is_an_error() {
        let a = nm_chain(3).unwrap();
        assert!(a.elem(2).is_ok());
        assert!(matches!(a.elem(3), Err(Error::Precondition(_))));
        assert!(a.element("zz").is_err());
    }

    #[test]
    fn subalgebra_of_fixpoints() {
        let a = nm_chain(5).unwrap();
        let s: ElementSet = [0, 2, 4].into_iter().collect();
        let (sub, embed) = a.subalgebra(s, "sub").unwrap();
        assert_eq!(sub.size(), 3);
        assert_eq!(embed, vec![0, 2, 4]);
        assert!(a.subalgebra([0, 1, 4].into_iter().collect(), "x").is_err());
    }
}
