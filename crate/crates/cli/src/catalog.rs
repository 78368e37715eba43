use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use mnm_core::catalog::{find_entry, CatalogEntry};
use mnm_core::format::write_algebra;
use mnm_core::quantifier::check_strong;
use serde_json::json;

use crate::report::{image, Lines, Report};
use crate::target::catalog;
use crate::Flags;

fn strong_count(e: &CatalogEntry) -> usize {
    e.quantifiers
        .iter()
        .filter(|q| check_strong(&e.algebra, q).is_ok_and(|s| s.strong))
        .count()
}

pub fn list(f: &Flags) -> Result<Report> {
    let entries = catalog(f.max_chain)?;
    let mut out = Lines::default();
    let mut listed = Vec::new();
    for e in &entries {
        let strong = strong_count(e);
        out.push(format!(
            "{:<18} {:>2} elements  {:>3} quantifiers ({strong} strong)",
            e.id,
            e.size(),
            e.quantifiers.len()
        ));
        listed.push(json!({
            "id": e.id,
            "size": e.size(),
            "quantifiers": e.quantifiers.len(),
            "strong": strong,
            "provenance": e.provenance,
            "notes": e.notes,
        }));
    }
    Ok(Report::new(out.into_string(), json!({ "entries": listed }), true))
}

pub fn show(id: &str, f: &Flags) -> Result<Report> {
    let entries = catalog(f.max_chain)?;
    let e = find_entry(&entries, id).ok_or_else(|| anyhow!("no catalog entry {id:?}"))?;
    let a = &e.algebra;
    let mut out = Lines::default();
    for n in &e.notes {
        out.push(format!("# {n}"));
    }
    out.push(write_algebra(a, e.quantifiers.first()).trim_end());
    let mut qs = Vec::new();
    for (name, q) in e.quantifier_names.iter().zip(&e.quantifiers) {
        let strong = check_strong(a, q)?.strong;
        out.push(format!(
            "{name:<20} {}{}",
            q.show(a),
            if strong { "  strong" } else { "" }
        ));
        qs.push(json!({ "name": name, "image": image(a, q.image()), "strong": strong }));
    }
    let json = json!({
        "id": e.id,
        "provenance": e.provenance,
        "notes": e.notes,
        "algebra": write_algebra(a, e.quantifiers.first()),
        "quantifiers": qs,
    });
    Ok(Report::new(out.into_string(), json, true))
}

/// One `<id>.alg` per entry, carrying its first quantifier.
pub fn export(dir: &Path, f: &Flags) -> Result<Report> {
    let entries = catalog(f.max_chain)?;
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut out = Lines::default();
    let mut written = Vec::new();
    for e in &entries {
        let path = dir.join(format!("{}.alg", e.id));
        let mut text: String = e.notes.iter().map(|n| format!("# {n}\n")).collect();
        text.push_str(&write_algebra(&e.algebra, e.quantifiers.first()));
        fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        out.push(path.display().to_string());
        written.push(path.display().to_string());
    }
    Ok(Report::new(out.into_string(), json!({ "written": written }), true))
}
