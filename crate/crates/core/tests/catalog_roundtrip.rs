use mnm_core::catalog::{build_catalog, CatalogOptions};
use mnm_core::format::{load_algebra, write_algebra};
use mnm_core::logic::{consequence_check, parse_formula, parse_theory, Theory};
use mnm_core::monadic::{all_monadic_filters, quotient_monadic};

#[test]
fn every_entry_survives_write_then_load() {
    let catalog = build_catalog(&CatalogOptions::default()).unwrap();
    for e in &catalog {
        for (name, m) in e.monadics() {
            let text = write_algebra(m.algebra(), Some(m.forall_map()));
            let (a, back) = load_algebra(&text).unwrap_or_else(|err| panic!("{}/{name}: {err}", e.id));
            assert_eq!(&a, m.algebra());
            assert_eq!(back.unwrap().forall_map(), m.forall_map());
        }
    }
}

#[test]
fn quotients_by_monadic_filters_are_monadic_algebras() {
    let catalog = build_catalog(&CatalogOptions {
        max_chain: 4,
        ..CatalogOptions::default()
    })
    .unwrap();
    for e in &catalog {
        for (name, m) in e.monadics() {
            for f in all_monadic_filters(&m) {
                let q = quotient_monadic(&m, f).unwrap_or_else(|err| panic!("{}/{name}: {err}", e.id));
                let blocks = q.quotient.congruence.blocks.len();
                assert_eq!(q.monadic.size(), blocks);
                assert!(blocks <= m.size());
            }
        }
    }
}

#[test]
fn excluded_middle_is_not_a_consequence_of_nothing() {
    let catalog = build_catalog(&CatalogOptions {
        max_chain: 3,
        products: false,
        fixtures: false,
    })
    .unwrap();
    let lem = parse_formula("p1 \\/ ~p1").unwrap();
    let c = consequence_check(&Theory::default(), &lem, &catalog).unwrap().unwrap();
    assert_eq!(c.entry, "chain-3");
    assert_eq!(c.value, "1/2");

    let t = parse_theory("t", "A p1").unwrap();
    assert_eq!(
        consequence_check(&t, &parse_formula("p1").unwrap(), &catalog).unwrap(),
        None
    );
}
