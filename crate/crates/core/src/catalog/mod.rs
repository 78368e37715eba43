//! Generated and fixture algebras used throughout the test suites.

mod fixtures;
mod generators;

use rayon::prelude::*;
use serde::Serialize;

pub use fixtures::{
    emendations, fixture_nine_element, fixture_six_element, nine_element_uncorrected_tables,
    six_element_uncorrected_tables, Emendation, NINE_ELEMENT, NINE_ELEMENT_UNCORRECTED, SIX_ELEMENT,
    SIX_ELEMENT_UNCORRECTED,
};
pub use generators::{
    direct_product, nm_chain, product_algebra, projections, subchain_quantifier, zero_one_quantifier,
};

use crate::algebra::FiniteNmAlgebra;
use crate::error::{Error, Result};
use crate::quantifier::{enumerate_quantifiers, MonadicNmAlgebra, QuantifierMap, PRUNED_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Generated,
    Fixture,
    FixtureRepaired,
}

/// An algebra together with every quantifier on it.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: FiniteNmAlgebra,
    /// Named quantifiers first, then the rest of the enumeration in sorted order.
    pub quantifiers: Vec<QuantifierMap>,
    pub quantifier_names: Vec<String>,
    pub provenance: Provenance,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    /// Attaches the named quantifiers and, when the algebra is small enough,
    /// every other quantifier the enumeration finds.
    pub fn with_quantifiers(
        algebra: FiniteNmAlgebra,
        named: Vec<(String, QuantifierMap)>,
        provenance: Provenance,
        notes: Vec<String>,
    ) -> Result<Self> {
        let mut quantifier_names = Vec::new();
        let mut quantifiers: Vec<QuantifierMap> = Vec::new();
        for (name, q) in named {
            MonadicNmAlgebra::new(algebra.clone(), q.clone())?;
            if !quantifiers.contains(&q) {
                quantifier_names.push(name);
                quantifiers.push(q);
            }
        }
        if algebra.size() <= PRUNED_LIMIT {
            for q in enumerate_quantifiers(&algebra, false)? {
                if !quantifiers.contains(&q) {
                    quantifier_names.push(format!("q{}", quantifiers.len()));
                    quantifiers.push(q);
                }
            }
        }
        Ok(CatalogEntry {
            id: algebra.name().to_string(),
            algebra,
            quantifiers,
            quantifier_names,
            provenance,
            notes,
        })
    }

    pub fn monadic(&self, k: usize) -> Result<MonadicNmAlgebra> {
        let q = self.quantifiers.get(k).ok_or_else(|| {
            Error::Precondition(format!(
                "{} has {} quantifiers, index {k} requested",
                self.id,
                self.quantifiers.len()
            ))
        })?;
        MonadicNmAlgebra::new(self.algebra.clone(), q.clone())
    }

    /// Every attached quantifier as a monadic algebra, with its name.
    pub fn monadics(&self) -> impl Iterator<Item = (&str, MonadicNmAlgebra)> + '_ {
        self.quantifier_names.iter().zip(&self.quantifiers).map(|(name, q)| {
            let m = MonadicNmAlgebra::new(self.algebra.clone(), q.clone()).expect("catalog quantifiers are validated");
            (name.as_str(), m)
        })
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogOptions {
    pub max_chain: usize,
    pub products: bool,
    pub fixtures: bool,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions {
            max_chain: 6,
            products: true,
            fixtures: true,
        }
    }
}

/// Largest `max_chain` accepted by [`build_catalog`].
pub const MAX_CHAIN: usize = 9;
/// Largest product algebra included in the catalog.
pub const MAX_PRODUCT: usize = 9;

fn chain_entry(n: usize) -> Result<CatalogEntry> {
    let a = nm_chain(n)?;
    let mut named = vec![
        ("identity".to_string(), QuantifierMap::identity(&a)),
        ("zero-one".to_string(), zero_one_quantifier(&a)?),
    ];
    for k in 3..n {
        if (n - 1).is_multiple_of(k - 1) {
            named.push((format!("subchain-{k}"), subchain_quantifier(n, k)?));
        }
    }
    CatalogEntry::with_quantifiers(a, named, Provenance::Generated, Vec::new())
}

fn product_entry(i: usize, j: usize) -> Result<CatalogEntry> {
    let (x, y) = (nm_chain(i)?, nm_chain(j)?);
    let mut named = Vec::new();
    for (nx, qx) in [
        ("identity", QuantifierMap::identity(&x)),
        ("zero-one", zero_one_quantifier(&x)?),
    ] {
        for (ny, qy) in [
            ("identity", QuantifierMap::identity(&y)),
            ("zero-one", zero_one_quantifier(&y)?),
        ] {
            let m = direct_product(
                &MonadicNmAlgebra::new(x.clone(), qx.clone())?,
                &MonadicNmAlgebra::new(y.clone(), qy)?,
            )?;
            named.push((format!("{nx}x{ny}"), m.forall_map().clone()));
        }
    }
    let a = product_algebra(&x, &y)?;
    CatalogEntry::with_quantifiers(a, named, Provenance::Generated, Vec::new())
}

/// Chains `2..=max_chain`, products of two chains up to [`MAX_PRODUCT`]
/// elements, and the fixtures, in that order.
pub fn build_catalog(options: &CatalogOptions) -> Result<Vec<CatalogEntry>> {
    if options.max_chain > MAX_CHAIN {
        return Err(Error::TooLarge {
            what: "catalog chain length",
            size: options.max_chain,
            limit: MAX_CHAIN,
        });
    }
    let mut specs: Vec<(usize, usize)> = (2..=options.max_chain).map(|n| (n, 0)).collect();
    if options.products {
        for i in 2..=options.max_chain {
            for j in i..=options.max_chain {
                if i * j <= MAX_PRODUCT {
                    specs.push((i, j));
                }
            }
        }
    }
    let mut entries = specs
        .into_par_iter()
        .map(|(i, j)| if j == 0 { chain_entry(i) } else { product_entry(i, j) })
        .collect::<Result<Vec<_>>>()?;
    if options.fixtures {
        entries.push(fixture_six_element());
        entries.push(fixture_nine_element());
    }
    Ok(entries)
}

pub fn find_entry<'a>(catalog: &'a [CatalogEntry], id: &str) -> Option<&'a CatalogEntry> {
    catalog.iter().find(|e| e.id == id)
}
