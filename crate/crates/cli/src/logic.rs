//! Verbs on formulas, theories and proofs.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use mnm_core::logic::{
    axiom_schemas, check_proof, consequence_check, evaluate, is_model, parse_formula, parse_proof, parse_theory,
    soundness_sweep, Assignment, Formula, SweepOptions, Theory,
};
use mnm_core::MonadicNmAlgebra;
use serde_json::json;

use crate::report::{Lines, Report};
use crate::target::{catalog, source};
use crate::Flags;

fn theory(f: &Flags) -> Result<Theory> {
    match &f.theory {
        None => Ok(Theory::default()),
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            let name = path
                .file_stem()
                .map_or("theory".into(), |s| s.to_string_lossy().into_owned());
            parse_theory(&name, &text).with_context(|| path.display().to_string())
        }
    }
}

fn formula(f: &Flags) -> Result<Formula> {
    let text = f.formula.as_deref().ok_or_else(|| anyhow!("--formula is required"))?;
    parse_formula(text).with_context(|| format!("--formula {text:?}"))
}

fn mentions_quantifier(f: &Formula) -> bool {
    match f {
        Formula::Forall(_) => true,
        Formula::Var(_) | Formula::Zero | Formula::One => false,
        Formula::Min(a, b) | Formula::Max(a, b) | Formula::StrongConj(a, b) | Formula::Imp(a, b) => {
            mentions_quantifier(a) || mentions_quantifier(b)
        }
    }
}

/// Every assignment of the free variables extending `fixed`, in lexicographic order.
fn assignments(vars: &[String], n: usize, fixed: &Assignment) -> Vec<Assignment> {
    let free: Vec<&String> = vars.iter().filter(|v| !fixed.contains_key(*v)).collect();
    let total = n.pow(free.len() as u32);
    (0..total)
        .map(|mut k| {
            let mut e = fixed.clone();
            for v in free.iter().rev() {
                e.insert((*v).clone(), k % n);
                k /= n;
            }
            e
        })
        .collect()
}

fn show_assignment(m: &MonadicNmAlgebra, e: &Assignment) -> String {
    e.iter()
        .map(|(v, &x)| format!("{v}={}", m.algebra().label(x)))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn eval(name: &str, f: &Flags) -> Result<Report> {
    let phi = formula(f)?;
    let t = source(name, f.max_chain)?.into_target(f.quantifier.as_deref())?;
    let m = if t.forall.is_some() {
        t.monadic()?
    } else if mentions_quantifier(&phi) {
        bail!("{} carries no quantifier, and the formula uses one", t.algebra.name());
    } else {
        MonadicNmAlgebra::identity(t.algebra.clone())
    };
    let a = m.algebra();
    let mut fixed = Assignment::new();
    for part in f
        .assign
        .as_deref()
        .unwrap_or("")
        .split(',')
        .filter(|s| !s.trim().is_empty())
    {
        let (v, l) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("--assign expects var=label, found {part:?}"))?;
        fixed.insert(v.trim().to_string(), a.element(l.trim())?);
    }
    let th = theory(f)?;
    let mut vars: Vec<String> = phi.variables().into_iter().collect();
    for g in &th.formulas {
        vars.extend(g.variables());
    }
    vars.sort();
    vars.dedup();

    let mut out = Lines::default();
    let all = assignments(&vars, a.size(), &fixed);
    if all.len() == 1 {
        let e = &all[0];
        let v = evaluate(&m, e, &phi)?;
        out.push(a.label(v));
        let mut json = json!({ "formula": phi.to_string(), "value": a.label(v) });
        let mut affirmative = true;
        if f.theory.is_some() {
            let model = is_model(&m, e, &th)?;
            out.push(format!("model of {}: {}", th.name, if model { "yes" } else { "no" }));
            json["model"] = json!(model);
            affirmative = model;
        }
        return Ok(Report::new(out.into_string(), json, affirmative));
    }

    // Free variables remain: check validity among the models of the theory.
    let mut counter = None;
    let mut models = 0;
    for e in &all {
        if !is_model(&m, e, &th)? {
            continue;
        }
        models += 1;
        let v = evaluate(&m, e, &phi)?;
        if v != a.top() {
            counter = Some((show_assignment(&m, e), a.label(v).to_string()));
            break;
        }
    }
    match &counter {
        None => out.push(format!("valid: 1 under all {models} assignments satisfying the theory")),
        Some((e, v)) => out.push(format!("not valid: {v} at {e}")),
    }
    let json = json!({
        "formula": phi.to_string(),
        "valid": counter.is_none(),
        "counterexample": counter.as_ref().map(|(e, v)| json!({ "assignment": e, "value": v })),
    });
    Ok(Report::new(out.into_string(), json, counter.is_none()))
}

pub fn consequence(f: &Flags) -> Result<Report> {
    let phi = formula(f)?;
    let th = theory(f)?;
    let entries = catalog(f.max_chain)?;
    let count: usize = entries.iter().map(|e| e.quantifiers.len()).sum();
    let mut out = Lines::default();
    let found = consequence_check(&th, &phi, &entries)?;
    match &found {
        None => out.push(format!("no countermodel among {count} monadic algebras")),
        Some(c) => {
            let e: Vec<String> = c.assignment.iter().map(|(v, l)| format!("{v}={l}")).collect();
            out.push(format!(
                "countermodel: {}/{} at {} gives {}",
                c.entry,
                c.quantifier,
                e.join(","),
                c.value
            ));
        }
    }
    let json = json!({ "formula": phi.to_string(), "searched": count, "countermodel": found });
    Ok(Report::new(out.into_string(), json, found.is_none()))
}

pub fn proof(file: Option<&Path>, f: &Flags) -> Result<Report> {
    let mut out = Lines::default();
    if f.soundness {
        let entries = catalog(f.max_chain)?;
        let r = soundness_sweep(&entries, &SweepOptions::default())?;
        out.push(format!(
            "{} monadic algebras, {} formulas per metavariable, {} instances",
            r.monadic_algebras, r.formulas, r.instances_evaluated
        ));
        for v in &r.violations {
            out.push(format!(
                "violation: {} on {}/{}: {} is {}",
                v.schema, v.entry, v.quantifier, v.instance, v.value
            ));
        }
        for s in &r.smnl_separations {
            out.push(format!(
                "SMNL fails on {}/{}: {} is {}",
                s.entry, s.quantifier, s.instance, s.value
            ));
        }
        out.push(format!("rules preserve 1: {}", r.rules_preserve_top));
        out.push(if r.sound() { "sound" } else { "not sound" });
        return Ok(Report::new(out.into_string(), serde_json::to_value(&r)?, r.sound()));
    }

    let Some(path) = file else {
        let mut listed = Vec::new();
        for s in axiom_schemas() {
            out.push(format!(
                "{:<6} {}{}",
                s.id,
                s.text,
                if s.strong_only { "  (strong only)" } else { "" }
            ));
            listed.push(json!({ "id": s.id, "text": s.text, "strong_only": s.strong_only, "note": s.note }));
        }
        return Ok(Report::new(out.into_string(), json!({ "schemas": listed }), true));
    };
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let p = parse_proof(&text).with_context(|| path.display().to_string())?;
    let v = check_proof(&theory(f)?, &p)?;
    match (&v.conclusion, v.first_bad_line) {
        (Some(c), _) => out.push(format!("valid proof of {c}")),
        (None, Some(n)) => out.push(format!("invalid at line {n}: {}", v.reason.as_deref().unwrap_or(""))),
        (None, None) => out.push("invalid"),
    }
    let json = json!({
        "valid": v.valid,
        "lines": p.lines.len(),
        "conclusion": v.conclusion.as_ref().map(ToString::to_string),
        "first_bad_line": v.first_bad_line,
        "reason": v.reason,
    });
    Ok(Report::new(out.into_string(), json, v.valid))
}
