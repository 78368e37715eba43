use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use mnm_core::catalog::{build_catalog, find_entry, CatalogEntry, CatalogOptions};
use mnm_core::format::{parse_algebra_file, resolve_forall, AlgebraFile};
use mnm_core::{validate_nm, ElementSet, FiniteNmAlgebra, MonadicNmAlgebra, QuantifierMap};

/// An algebra named on the command line, with the quantifier it carries.
pub struct Target {
    pub algebra: FiniteNmAlgebra,
    pub forall: Option<QuantifierMap>,
}

/// Where a target came from, before validation.
pub enum Source {
    File(AlgebraFile),
    Entry(CatalogEntry),
}

pub fn catalog(max_chain: usize) -> Result<Vec<CatalogEntry>> {
    Ok(build_catalog(&CatalogOptions {
        max_chain,
        ..CatalogOptions::default()
    })?)
}

/// A readable path is loaded as an algebra file; anything else is looked up
/// as a catalog id.
pub fn source(name: &str, max_chain: usize) -> Result<Source> {
    let path = Path::new(name);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {name}"))?;
        let file = parse_algebra_file(&text).with_context(|| name.to_string())?;
        return Ok(Source::File(file));
    }
    let entries = catalog(max_chain)?;
    match find_entry(&entries, name) {
        Some(e) => Ok(Source::Entry(e.clone())),
        None => {
            bail!("{name}: no such file and no catalog entry with this id (see `mnm catalog`, or raise --max-chain)")
        }
    }
}

/// `--quantifier` is an entry's quantifier name or a list of image labels.
fn pick_quantifier(a: &FiniteNmAlgebra, entry: Option<&CatalogEntry>, spec: &str) -> Result<QuantifierMap> {
    if let Some(e) = entry {
        if let Some(k) = e.quantifier_names.iter().position(|n| n == spec) {
            return Ok(e.quantifiers[k].clone());
        }
    }
    let images: Vec<String> = spec
        .split([' ', ','])
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    resolve_forall(a, &images).map_err(|e| anyhow!("--quantifier {spec:?}: {e}"))
}

impl Source {
    pub fn into_target(self, quantifier: Option<&str>) -> Result<Target> {
        let (algebra, default, entry) = match self {
            Source::File(file) => {
                let a = validate_nm(&file.tables)?;
                let q = file
                    .forall
                    .as_ref()
                    .map(|images| resolve_forall(&a, images))
                    .transpose()?;
                (a, q, None)
            }
            Source::Entry(e) => (e.algebra.clone(), e.quantifiers.first().cloned(), Some(e)),
        };
        let forall = match quantifier {
            Some(spec) => Some(pick_quantifier(&algebra, entry.as_ref(), spec)?),
            None => default,
        };
        Ok(Target { algebra, forall })
    }
}

impl Target {
    /// The monadic algebra, failing when the map is missing or not a quantifier.
    pub fn monadic(&self) -> Result<MonadicNmAlgebra> {
        let q = self.forall.clone().ok_or_else(|| {
            anyhow!(
                "{} carries no quantifier; add a `forall` line or pass --quantifier",
                self.algebra.name()
            )
        })?;
        Ok(MonadicNmAlgebra::new(self.algebra.clone(), q)?)
    }

    pub fn set(&self, text: &str) -> Result<ElementSet> {
        self.algebra
            .parse_set(text)
            .map_err(|e| anyhow!("--filter {text:?}: {e}"))
    }
}
