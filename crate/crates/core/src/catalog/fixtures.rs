//! The two hand-built table fixtures, shipped uncorrected and corrected.

use serde::Serialize;

use super::{CatalogEntry, Provenance};
use crate::algebra::{FiniteNmAlgebra, NmTables};
use crate::format::{load_algebra, parse_algebra_file};

pub const SIX_ELEMENT: &str = include_str!("../../fixtures/six_element.alg");
pub const SIX_ELEMENT_UNCORRECTED: &str = include_str!("../../fixtures/six_element_uncorrected.alg");
pub const NINE_ELEMENT: &str = include_str!("../../fixtures/nine_element.alg");
pub const NINE_ELEMENT_UNCORRECTED: &str = include_str!("../../fixtures/nine_element_uncorrected.alg");

/// One table cell that differs between the uncorrected and corrected tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Emendation {
    pub table: &'static str,
    pub x: String,
    pub y: String,
    pub before: String,
    pub after: String,
}

impl std::fmt::Display for Emendation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}({},{}): {} -> {}",
            self.table, self.x, self.y, self.before, self.after
        )
    }
}

/// Cell-by-cell differences of the `mul` and `imp` tables. Both sides must use
/// the same labels in the same order.
pub fn emendations(before: &NmTables, after: &FiniteNmAlgebra) -> Vec<Emendation> {
    let names = &before.names;
    let mut out = Vec::new();
    for (table, old, new) in [
        ("mul", &before.mul, after.mul_table().rows()),
        ("imp", &before.imp, after.imp_table().rows()),
    ] {
        for (x, row) in old.iter().enumerate() {
            for (y, &cell) in row.iter().enumerate() {
                if cell != new[x][y] {
                    out.push(Emendation {
                        table,
                        x: names[x].clone(),
                        y: names[y].clone(),
                        before: names[cell].clone(),
                        after: after.label(new[x][y]).to_string(),
                    });
                }
            }
        }
    }
    out
}

pub fn six_element_uncorrected_tables() -> NmTables {
    parse_algebra_file(SIX_ELEMENT_UNCORRECTED)
        .expect("bundled fixture parses")
        .tables
}

pub fn nine_element_uncorrected_tables() -> NmTables {
    parse_algebra_file(NINE_ELEMENT_UNCORRECTED)
        .expect("bundled fixture parses")
        .tables
}

fn fixture(text: &str, uncorrected: NmTables, notes: &[&str]) -> CatalogEntry {
    let (algebra, m) = load_algebra(text).expect("bundled fixture validates");
    let forall = m.expect("bundled fixture carries a quantifier").forall_map().clone();
    let mut notes: Vec<String> = notes.iter().map(|s| s.to_string()).collect();
    notes.extend(
        emendations(&uncorrected, &algebra)
            .iter()
            .map(|e| format!("changed {e}")),
    );
    CatalogEntry::with_quantifiers(
        algebra,
        vec![(String::from("forall"), forall)],
        Provenance::FixtureRepaired,
        notes,
    )
    .expect("fixture sizes are within the enumeration limit")
}

/// Six-element algebra `0 ≤ a,b; a ≤ c,d; b ≤ c` with `∀ = (0 0 b b d 1)`.
pub fn fixture_six_element() -> CatalogEntry {
    fixture(
        SIX_ELEMENT,
        six_element_uncorrected_tables(),
        &[
            "uncorrected product table is not commutative: c*d = a but d*c = 0",
            "product re-derived from the implication by adjointness; implication unchanged",
        ],
    )
}

/// Nine-element algebra `0 ≤ a,b ≤ c ≤ d ≤ e ≤ f,g ≤ 1` with
/// `∀ = (0 0 0 c d e e e 1)`.
pub fn fixture_nine_element() -> CatalogEntry {
    fixture(
        NINE_ELEMENT,
        nine_element_uncorrected_tables(),
        &[
            "uncorrected product table breaks the unit law: a*1 = 0",
            "uncorrected implication is not the residuum of any product on this order",
            "rebuilt as the unique NM-algebra on the given order with negation read off the implication's 0 column",
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_nm, NmClause};
    use crate::error::Error;

    #[test]
    fn six_element_changes_three_product_cells() {
        let e = fixture_six_element();
        let changed: Vec<String> = emendations(&six_element_uncorrected_tables(), &e.algebra)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(changed, ["mul(a,d): 0 -> a", "mul(d,a): 0 -> a", "mul(d,c): 0 -> a"]);
    }

    #[test]
    fn nine_element_uncorrected_breaks_unit_law() {
        match validate_nm(&nine_element_uncorrected_tables()) {
            Err(Error::NotNm(r)) => {
                let v = r.violation(NmClause::CommutativeMonoid).unwrap();
                assert_eq!(v.witness, ["a", "1"]);
            }
            other => panic!("expected a validation failure, got {other:?}"),
        }
    }

    #[test]
    fn nine_element_corrected_validates_with_its_quantifier() {
        let e = fixture_nine_element();
        let m = e.monadic(0).unwrap();
        assert_eq!(m.forall_map().show(m.algebra()), "0 0 0 c d e e e 1");
        let a = m.algebra();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.imp(x, y), a.neg(a.mul(x, a.neg(y))));
            }
        }
        assert!(e.notes.iter().any(|n| n.starts_with("changed mul(a,1)")));
    }
}
