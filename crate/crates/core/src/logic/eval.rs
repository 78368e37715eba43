use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::schema::{axiom_schemas, instantiate, AxiomSchema, Substitution};
use super::{Formula, Theory};
use crate::algebra::Elem;
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::quantifier::MonadicNmAlgebra;

type Connective = fn(Formula, Formula) -> Formula;

/// Variable name to element.
pub type Assignment = BTreeMap<String, Elem>;

pub fn evaluate(m: &MonadicNmAlgebra, e: &Assignment, f: &Formula) -> Result<Elem> {
    let a = m.algebra();
    let bin = |x: &Formula, y: &Formula| -> Result<(Elem, Elem)> { Ok((evaluate(m, e, x)?, evaluate(m, e, y)?)) };
    Ok(match f {
        Formula::Var(v) => *e
            .get(v)
            .ok_or_else(|| Error::Precondition(format!("variable {v} is not assigned")))?,
        Formula::Zero => a.bottom(),
        Formula::One => a.top(),
        Formula::Forall(x) => m.forall(evaluate(m, e, x)?),
        Formula::Min(x, y) => bin(x, y).map(|(p, q)| a.meet(p, q))?,
        Formula::Max(x, y) => bin(x, y).map(|(p, q)| a.join(p, q))?,
        Formula::StrongConj(x, y) => bin(x, y).map(|(p, q)| a.mul(p, q))?,
        Formula::Imp(x, y) => bin(x, y).map(|(p, q)| a.imp(p, q))?,
    })
}

/// Every member of `t` evaluates to the top element.
pub fn is_model(m: &MonadicNmAlgebra, e: &Assignment, t: &Theory) -> Result<bool> {
    for f in &t.formulas {
        if evaluate(m, e, f)? != m.algebra().top() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All maps from `vars` into `0..n`, the last variable varying fastest.
fn assignments(vars: &[String], n: usize) -> impl Iterator<Item = Assignment> + '_ {
    let total = n.pow(vars.len() as u32);
    (0..total).map(move |mut code| {
        let mut e = Assignment::new();
        for v in vars.iter().rev() {
            e.insert(v.clone(), code % n);
            code /= n;
        }
        e
    })
}

fn labelled(m: &MonadicNmAlgebra, e: &Assignment) -> Vec<(String, String)> {
    e.iter()
        .map(|(v, &x)| (v.clone(), m.algebra().label(x).to_string()))
        .collect()
}

/// A model of the theory in which the formula is not valid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Countermodel {
    pub entry: String,
    pub quantifier: String,
    pub assignment: Vec<(String, String)>,
    pub value: String,
}

/// Searches every assignment on every monadic algebra of the catalog for a
/// model of `t` where `f` falls below the top. `None` only means no
/// countermodel exists among these algebras.
pub fn consequence_check(t: &Theory, f: &Formula, catalog: &[CatalogEntry]) -> Result<Option<Countermodel>> {
    let mut vars = f.variables();
    for g in &t.formulas {
        vars.extend(g.variables());
    }
    let vars: Vec<String> = vars.into_iter().collect();
    let jobs: Vec<(&CatalogEntry, usize)> = catalog
        .iter()
        .flat_map(|e| (0..e.quantifiers.len()).map(move |k| (e, k)))
        .collect();
    let found = jobs
        .par_iter()
        .map(|&(entry, k)| -> Result<Option<Countermodel>> {
            let m = entry.monadic(k)?;
            for e in assignments(&vars, m.size()) {
                if is_model(&m, &e, t)? {
                    let v = evaluate(&m, &e, f)?;
                    if v != m.algebra().top() {
                        return Ok(Some(Countermodel {
                            entry: entry.id.clone(),
                            quantifier: entry.quantifier_names[k].clone(),
                            assignment: labelled(&m, &e),
                            value: m.algebra().label(v).to_string(),
                        }));
                    }
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found.into_iter().flatten().next())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Largest formula depth substituted for a metavariable.
    pub depth: usize,
    pub vars: usize,
    /// Catalog entries above this size are skipped.
    pub max_size: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            depth: 2,
            vars: 2,
            max_size: 6,
        }
    }
}

/// An axiom instance and assignment under which the instance is not the top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemaCounterexample {
    pub schema: String,
    pub entry: String,
    pub quantifier: String,
    pub strong: bool,
    pub instance: String,
    pub assignment: Vec<(String, String)>,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub monadic_algebras: usize,
    /// Formulas per metavariable within the depth and variable budget.
    pub formulas: u128,
    /// Instances covered, counting every combination of representatives.
    pub instances_evaluated: usize,
    /// MNL schemas failing anywhere, or `SMNL` failing on a strong entry.
    pub violations: Vec<SchemaCounterexample>,
    /// `SMNL` failing on an entry whose quantifier is not strong.
    pub smnl_separations: Vec<SchemaCounterexample>,
    /// Modus ponens and necessitation keep the top on every algebra.
    pub rules_preserve_top: bool,
}

impl SoundnessReport {
    pub fn sound(&self) -> bool {
        self.violations.is_empty() && self.rules_preserve_top
    }
}

fn formula_count(vars: usize, depth: usize) -> u128 {
    let atoms = vars as u128 + 2;
    (0..depth).fold(atoms, |c, _| atoms + c + 4 * c * c)
}

/// For each value reachable by a formula within the budget, the first such
/// formula found.
fn representatives(m: &MonadicNmAlgebra, e: &Assignment, depth: usize) -> BTreeMap<Elem, Formula> {
    let a = m.algebra();
    let mut reps = BTreeMap::new();
    for (v, &x) in e {
        reps.entry(x).or_insert_with(|| Formula::var(v.clone()));
    }
    reps.entry(a.bottom()).or_insert(Formula::Zero);
    reps.entry(a.top()).or_insert(Formula::One);
    for _ in 0..depth {
        let prev: Vec<(Elem, Formula)> = reps.iter().map(|(&x, f)| (x, f.clone())).collect();
        for (x, f) in &prev {
            reps.entry(m.forall(*x)).or_insert_with(|| Formula::forall(f.clone()));
        }
        for (x, f) in &prev {
            for (y, g) in &prev {
                let (x, y) = (*x, *y);
                let built: [(Elem, Connective); 4] = [
                    (a.meet(x, y), Formula::min),
                    (a.join(x, y), Formula::max),
                    (a.mul(x, y), Formula::conj),
                    (a.imp(x, y), Formula::imp),
                ];
                for (z, build) in built {
                    reps.entry(z).or_insert_with(|| build(f.clone(), g.clone()));
                }
            }
        }
    }
    reps
}

struct AlgebraSweep {
    instances: usize,
    failures: Vec<SchemaCounterexample>,
    rules_ok: bool,
}

fn sweep_one(entry: &CatalogEntry, name: &str, m: &MonadicNmAlgebra, opts: &SweepOptions) -> Result<AlgebraSweep> {
    let a = m.algebra();
    let top = a.top();
    let vars: Vec<String> = (1..=opts.vars).map(|i| format!("p{i}")).collect();
    let strong = m.is_strong();
    let mut instances = 0;
    let mut failures: Vec<SchemaCounterexample> = Vec::new();
    for e in assignments(&vars, a.size()) {
        let found = representatives(m, &e, opts.depth);
        let reps: Vec<&Formula> = found.values().collect();
        for s in axiom_schemas() {
            if failures.iter().any(|c| c.schema == s.id) {
                continue;
            }
            if let Some(c) = first_failure(s, &reps, m, &e)? {
                failures.push(SchemaCounterexample {
                    schema: s.id.to_string(),
                    entry: entry.id.clone(),
                    quantifier: name.to_string(),
                    strong,
                    instance: c.0.to_string(),
                    assignment: labelled(m, &e),
                    value: a.label(c.1).to_string(),
                });
            }
            instances += reps.len().pow(s.metavars.len() as u32);
        }
    }
    let rules_ok = m.forall(top) == top && a.elements().all(|y| a.imp(top, y) != top || y == top);
    Ok(AlgebraSweep {
        instances,
        failures,
        rules_ok,
    })
}

fn first_failure(
    s: &AxiomSchema,
    reps: &[&Formula],
    m: &MonadicNmAlgebra,
    e: &Assignment,
) -> Result<Option<(Formula, Elem)>> {
    let k = s.metavars.len();
    let total = reps.len().pow(k as u32);
    for mut code in 0..total {
        let mut sub = Substitution::new();
        for &mv in &s.metavars {
            sub.insert(mv, reps[code % reps.len()].clone());
            code /= reps.len();
        }
        let f = instantiate(s.id, &sub)?;
        let v = evaluate(m, e, &f)?;
        if v != m.algebra().top() {
            return Ok(Some((f, v)));
        }
    }
    Ok(None)
}

/// Instantiates every schema with formulas of depth at most `opts.depth` over
/// `p1..p{vars}` and evaluates under every assignment on every catalog
/// monadic algebra of size at most `opts.max_size`.
///
/// Under a fixed assignment an instance's value depends only on the values
/// of the substituted formulas, so one formula per reachable value is
/// substituted; this covers every instance in the budget.
pub fn soundness_sweep(catalog: &[CatalogEntry], opts: &SweepOptions) -> Result<SoundnessReport> {
    let jobs: Vec<(&CatalogEntry, usize)> = catalog
        .iter()
        .filter(|e| e.size() <= opts.max_size)
        .flat_map(|e| (0..e.quantifiers.len()).map(move |k| (e, k)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(entry, k)| {
            let m = entry.monadic(k)?;
            sweep_one(entry, &entry.quantifier_names[k], &m, opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SoundnessReport {
        monadic_algebras: jobs.len(),
        formulas: formula_count(opts.vars, opts.depth),
        rules_preserve_top: true,
        ..SoundnessReport::default()
    };
    for r in results {
        report.instances_evaluated += r.instances;
        report.rules_preserve_top &= r.rules_ok;
        for c in r.failures {
            if c.schema == "SMNL" && !c.strong {
                report.smnl_separations.push(c);
            } else {
                report.violations.push(c);
            }
        }
    }
    Ok(report)
}
