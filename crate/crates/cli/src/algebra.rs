//! Verbs on a single algebra: validation, quantifiers, filters, quotients and representations.

use anyhow::{bail, Result};
use mnm_core::filter::{
    all_filters, filter_failure, filter_generated, is_maximal_filter, is_minimal_prime, is_prime_filter,
    is_representable, is_si_nm, is_simple_nm, minimal_primes, quotient as nm_quotient,
};
use mnm_core::format::{resolve_forall, write_algebra};
use mnm_core::monadic::{
    all_monadic_filters, classify as classify_monadic, congruence_correspondence, filter_intersection_identity,
    is_maximal_mf, is_monadic_filter, is_prime_mf, maximal_equivalences, mf_generated, mf_principal_laws,
    prime_equivalences, prime_extension, quotient_monadic, representable_with_quantifier, restriction_isomorphism,
    separating_representation, subdirect_representation, SubdirectEmbedding, CONGRUENCE_LIMIT,
};
use mnm_core::properties::{check_basic_properties, check_definability, is_boolean};
use mnm_core::quantifier::{
    check_strong, check_universal, enumerate_quantifiers, enumerate_quantifiers_naive, exists_of, is_monadic_boolean,
    modal_strong_equivalence, quantifier_properties, rough_space, verify_g_h_equivalence, W3Form,
};
use mnm_core::{validate_nm, ElementSet, Error, FiniteNmAlgebra, MonadicNmAlgebra};
use serde_json::{json, Value};

use crate::report::{checks_json, image, labels, render_checks, tuple, Lines, Report};
use crate::target::{source, Source, Target};
use crate::Flags;

fn load(name: &str, f: &Flags) -> Result<Target> {
    source(name, f.max_chain)?.into_target(f.quantifier.as_deref())
}

fn set_list(a: &FiniteNmAlgebra, sets: &[ElementSet]) -> Vec<String> {
    sets.iter().map(|&s| a.show_set(s)).collect()
}

pub fn validate(name: &str, f: &Flags) -> Result<Report> {
    let requested: Option<Vec<String>> = f.quantifier.as_ref().map(|s| {
        s.split([' ', ','])
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect()
    });
    let (tables, forall) = match source(name, f.max_chain)? {
        Source::File(file) => (file.tables, requested.or(file.forall)),
        Source::Entry(e) => {
            let named = f
                .quantifier
                .as_ref()
                .and_then(|s| e.quantifier_names.iter().position(|n| n == s));
            let q = match named {
                Some(k) => Some(&e.quantifiers[k]),
                None if requested.is_some() => None,
                None => e.quantifiers.first(),
            };
            (
                e.algebra.to_tables(),
                q.map(|q| image(&e.algebra, q.image())).or(requested),
            )
        }
    };
    let mut out = Lines::default();
    let a = match validate_nm(&tables) {
        Ok(a) => a,
        Err(Error::NotNm(r)) => {
            out.push("NM-algebra: invalid");
            let mut vs = Vec::new();
            for v in &r.violations {
                let clause = v.clause.number().map_or(String::new(), |k| format!("({k}) "));
                out.push(format!("  {clause}{}: {}", v.clause.title(), v.detail));
                vs.push(json!({
                    "clause": v.clause,
                    "number": v.clause.number(),
                    "detail": v.detail,
                    "witness": v.witness,
                }));
            }
            return Ok(Report::new(
                out.into_string(),
                json!({ "valid": false, "violations": vs }),
                false,
            ));
        }
        Err(e) => return Err(e.into()),
    };

    let q = forall.map(|images| resolve_forall(&a, &images)).transpose()?;
    let basic = check_basic_properties(&a);
    let mut definability = check_definability(&a);
    definability.extend(basic);
    let boolean = is_boolean(&a)?;

    let mut affirmative = definability.all_pass();
    let mut json = json!({
        "valid": true,
        "algebra": a.name(),
        "size": a.size(),
        "chain": a.is_chain(),
        "boolean": boolean.boolean,
        "properties": checks_json(&a, &definability),
    });
    match &q {
        None => out.push("NM-algebra: valid"),
        Some(q) => {
            let u = check_universal(&a, q)?;
            if u.all_pass() {
                out.push("NM-algebra: valid; quantifier: U1-U4 pass");
                let s = check_strong(&a, q)?;
                let witness = s.witness.map(|(x, y)| tuple(&a, &[x, y]));
                match &witness {
                    None => out.push("strong: yes"),
                    Some(w) => out.push(format!("strong: no, ∀(x∨y) ≠ ∀x∨∀y at {w}")),
                }
                if f.strong && !s.strong {
                    affirmative = false;
                }
                json["quantifier"] = json!({
                    "image": image(&a, q.image()),
                    "axioms": checks_json(&a, &u),
                    "strong": s.strong,
                    "strong_witness": witness,
                });
            } else {
                out.push(format!(
                    "NM-algebra: valid; quantifier: fails {}",
                    u.failure_ids().join(", ")
                ));
                render_checks(&mut out, &a, &u);
                affirmative = false;
                json["quantifier"] = json!({ "image": image(&a, q.image()), "axioms": checks_json(&a, &u) });
            }
        }
    }
    out.push(format!("boolean: {}", if boolean.boolean { "yes" } else { "no" }));
    if !definability.all_pass() {
        render_checks(&mut out, &a, &definability);
    }
    Ok(Report::new(out.into_string(), json, affirmative))
}

pub fn quantifiers(name: &str, f: &Flags) -> Result<Report> {
    let t = load(name, f)?;
    let a = &t.algebra;
    let mut out = Lines::default();
    let mut json = json!({ "algebra": a.name(), "strong_only": f.strong, "oracle": f.oracle });
    let mut affirmative = true;

    let mut qs = if f.oracle {
        enumerate_quantifiers_naive(a, f.strong)?
    } else {
        enumerate_quantifiers(a, f.strong)?
    };
    qs.sort();
    let mut listed = Vec::new();
    for q in &qs {
        let strong = check_strong(a, q)?.strong;
        let fix = a.show_set(q.fixpoints());
        out.push(format!(
            "{}  fixpoints {fix}{}",
            q.show(a),
            if strong { "  strong" } else { "" }
        ));
        listed.push(json!({ "image": image(a, q.image()), "strong": strong, "fixpoints": labels(a, q.fixpoints()) }));
    }
    out.push(format!("{} quantifiers", qs.len()));
    json["quantifiers"] = Value::Array(listed);

    if f.laws {
        let m = t.monadic()?;
        let props = quantifier_properties(&m);
        let (_, e_axioms) = exists_of(&m);
        out.push(format!("laws of {}", m.forall_map().show(a)));
        render_checks(&mut out, a, &e_axioms);
        render_checks(&mut out, a, &props.forall);
        render_checks(&mut out, a, &props.exists);
        let b = is_monadic_boolean(&m)?;
        out.push(format!(
            "boolean: {}; ∀(x∧y) = ∀x⊙∀y for all quantifiers: {}; ∀(x∨y) = ∀x⊕∀y for all quantifiers: {}",
            b.boolean, b.meet_as_mul, b.join_as_oplus
        ));
        let rough = rough_space(&m);
        out.push(format!(
            "rough space: lower {}, upper {}, valid {}",
            a.show_set(rough.inner_definable),
            a.show_set(rough.upper_definable),
            rough.is_valid()
        ));
        affirmative &= props.all_pass() && e_axioms.all_pass() && rough.is_valid();
        json["laws"] = json!({
            "exists_axioms": checks_json(a, &e_axioms),
            "forall": checks_json(a, &props.forall),
            "exists": checks_json(a, &props.exists),
            "boolean": b,
            "rough_space": {
                "lower": labels(a, rough.inner_definable),
                "upper": labels(a, rough.upper_definable),
                "valid": rough.is_valid(),
            },
        });
    }

    if f.pairs {
        let mut forms = Vec::new();
        for form in [W3Form::ForallConsequent, W3Form::ExistsConsequent] {
            let r = verify_g_h_equivalence(a, form)?;
            let diff = r
                .h_only
                .as_ref()
                .or(r.g_only.as_ref())
                .map(|(p, q)| format!("{} / {}", image(a, p).join(" "), image(a, q).join(" ")));
            out.push(format!(
                "W3 as {}: {} quantifier pairs, {} map pairs, {}",
                form.statement(),
                r.g_pairs.len(),
                r.h_pairs.len(),
                match &diff {
                    None => "equal".to_string(),
                    Some(d) => format!("differ at {d}"),
                }
            ));
            if form == W3Form::ForallConsequent {
                affirmative &= r.equal;
            }
            forms.push(json!({ "form": form, "g": r.g_pairs.len(), "h": r.h_pairs.len(), "equal": r.equal, "difference": diff }));
        }
        let modal = modal_strong_equivalence(a)?;
        out.push(format!(
            "closed modal operators: {}, strong quantifiers: {}, {}",
            modal.modal.len(),
            modal.strong.len(),
            if modal.equal { "equal" } else { "differ" }
        ));
        affirmative &= modal.equal;
        json["pairs"] = json!({ "w3": forms, "modal": modal.modal.len(), "strong": modal.strong.len(), "modal_equal": modal.equal });
    }
    Ok(Report::new(out.into_string(), json, affirmative))
}

fn tags(a: &FiniteNmAlgebra, s: ElementSet, prime: bool, maximal: bool) -> Vec<&'static str> {
    let mut t = Vec::new();
    if s == a.top_set() {
        t.push("trivial");
    }
    if s == a.universe() {
        t.push("improper");
    }
    if prime {
        t.push("prime");
    }
    if maximal {
        t.push("maximal");
    }
    t
}

pub fn filters(name: &str, f: &Flags) -> Result<Report> {
    let t = load(name, f)?;
    let a = &t.algebra;
    let mut out = Lines::default();
    if let Some(text) = &f.filter {
        let s = t.set(text)?;
        return if f.monadic {
            let m = t.monadic()?;
            let v = is_monadic_filter(&m, s);
            let reason = v
                .filter_failure
                .as_ref()
                .map(|x| x.describe(a))
                .or(v.not_closed.map(|x| {
                    format!(
                        "{} is in the set but ∀{} = {} is not",
                        a.label(x),
                        a.label(x),
                        a.label(m.forall(x))
                    )
                }));
            let generated = mf_generated(&m, s).ok();
            let proper = v.monadic && s != a.universe();
            let prime = if proper { Some(is_prime_mf(&m, s)?) } else { None };
            let maximal = if proper { Some(is_maximal_mf(&m, s)?) } else { None };
            out.push(format!(
                "{}: {}",
                a.show_set(s),
                if v.monadic {
                    "monadic filter"
                } else {
                    "not a monadic filter"
                }
            ));
            if let Some(r) = &reason {
                out.push(format!("  {r}"));
            }
            if let Some(g) = generated {
                out.push(format!("  generates {}", a.show_set(g)));
            }
            if let (Some(p), Some(x)) = (prime, maximal) {
                out.push(format!("  prime: {p}; maximal: {x}"));
            }
            let json = json!({
                "set": labels(a, s),
                "monadic": v.monadic,
                "reason": reason,
                "generated": generated.map(|g| labels(a, g)),
                "prime": prime,
                "maximal": maximal,
            });
            Ok(Report::new(out.into_string(), json, v.monadic))
        } else {
            let failure = filter_failure(a, s);
            let reason = failure.as_ref().map(|x| x.describe(a));
            let generated = filter_generated(a, s).ok();
            let proper = failure.is_none() && s != a.universe();
            let prime = if proper { Some(is_prime_filter(a, s)?) } else { None };
            let maximal = if proper { Some(is_maximal_filter(a, s)?) } else { None };
            out.push(format!(
                "{}: {}",
                a.show_set(s),
                if failure.is_none() { "filter" } else { "not a filter" }
            ));
            if let Some(r) = &reason {
                out.push(format!("  {r}"));
            }
            if let Some(g) = generated {
                out.push(format!("  generates {}", a.show_set(g)));
            }
            if let (Some(p), Some(x)) = (prime, maximal) {
                out.push(format!("  prime: {p}; maximal: {x}"));
            }
            let json = json!({
                "set": labels(a, s),
                "filter": failure.is_none(),
                "reason": reason,
                "generated": generated.map(|g| labels(a, g)),
                "prime": prime,
                "maximal": maximal,
            });
            Ok(Report::new(out.into_string(), json, failure.is_none()))
        };
    }

    let mut listed = Vec::new();
    if f.monadic {
        let m = t.monadic()?;
        for s in all_monadic_filters(&m) {
            let proper = s != a.universe();
            let prime = proper && is_prime_mf(&m, s)?;
            let maximal = proper && is_maximal_mf(&m, s)?;
            listed.push((s, tags(a, s, prime, maximal)));
        }
    } else {
        let minimal = minimal_primes(a);
        for s in all_filters(a) {
            let proper = s != a.universe();
            let prime = proper && is_prime_filter(a, s)?;
            let maximal = proper && is_maximal_filter(a, s)?;
            let mut tg = tags(a, s, prime, maximal);
            if minimal.contains(&s) {
                tg.push("minimal-prime");
            }
            listed.push((s, tg));
        }
    }
    for (s, tg) in &listed {
        out.push(format!(
            "{}{}",
            a.show_set(*s),
            if tg.is_empty() {
                String::new()
            } else {
                format!("  {}", tg.join(" "))
            }
        ));
    }
    let json = json!({
        "algebra": a.name(),
        "monadic": f.monadic,
        "filters": listed.iter().map(|(s, tg)| json!({ "set": labels(a, *s), "tags": tg })).collect::<Vec<_>>(),
    });
    Ok(Report::new(out.into_string(), json, true))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn classify(name: &str, f: &Flags) -> Result<Report> {
    let t = load(name, f)?;
    let a = &t.algebra;
    let mut out = Lines::default();
    let rep = is_representable(a);
    let minimal = minimal_primes(a);
    let mut minimal_agree = true;
    for &p in &minimal {
        let r = is_minimal_prime(a, p)?;
        minimal_agree &= r.union_over_complement_agrees();
    }
    out.push(format!(
        "algebra {} ({} elements{})",
        a.name(),
        a.size(),
        if a.is_chain() { ", chain" } else { "" }
    ));
    out.push(format!("simple: {}", yes(is_simple_nm(a))));
    out.push(format!("subdirectly irreducible: {}", yes(is_si_nm(a))));
    out.push(format!("boolean: {}", yes(is_boolean(a)?.boolean)));
    out.push(format!(
        "representable: {} via {}",
        yes(rep.representable),
        set_list(a, &rep.witness).join(" ")
    ));
    out.push(format!("minimal primes: {}", set_list(a, &minimal).join(" ")));
    let mut json = json!({
        "algebra": a.name(),
        "size": a.size(),
        "chain": a.is_chain(),
        "simple": is_simple_nm(a),
        "subdirectly_irreducible": is_si_nm(a),
        "representable": rep.representable,
        "representation": rep.witness.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
        "minimal_primes": minimal.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
        "minimal_primes_by_complement": minimal_agree,
    });

    if let Some(m) = t.forall.as_ref().map(|_| t.monadic()).transpose()? {
        let c = classify_monadic(&m)?;
        out.push(format!(
            "quantifier {}{}",
            m.forall_map().show(a),
            if c.strong { " (strong)" } else { "" }
        ));
        out.push(format!(
            "monadic filters: {}",
            set_list(a, &c.monadic_filters).join(" ")
        ));
        out.push(format!("prime: {}", set_list(a, &c.prime_filters).join(" ")));
        out.push(format!("maximal: {}", set_list(a, &c.maximal_filters).join(" ")));
        out.push(format!("monadic simple: {}", yes(c.simple)));
        out.push(format!(
            "monadic subdirectly irreducible: {}",
            yes(c.subdirectly_irreducible)
        ));
        if let Some(l) = c.least_nontrivial.filter(|&l| l != a.top_set()) {
            out.push(format!("least nontrivial monadic filter: {}", a.show_set(l)));
        }
        out.push(format!("fixpoints: {}", a.show_set(m.fixpoints())));
        let consistency = c.consistency();
        render_checks(&mut out, a, &consistency);

        let mut equivalences = Vec::new();
        for s in c.monadic_filters.iter().copied().filter(|&s| s != a.universe()) {
            let p = prime_equivalences(&m, s)?;
            let x = maximal_equivalences(&m, s)?;
            out.push(format!(
                "{}: prime tests agree {}, maximal tests agree {}",
                a.show_set(s),
                yes(p.agree()),
                yes(x.agree())
            ));
            equivalences.push(json!({ "filter": labels(a, s), "prime": p, "maximal": x }));
        }

        let laws = mf_principal_laws(&m);
        render_checks(&mut out, a, &laws);
        let r = restriction_isomorphism(&m)?;
        out.push(format!(
            "restriction to fixpoints is an isomorphism: {}",
            yes(r.all_hold())
        ));
        let congruences = if m.size() <= CONGRUENCE_LIMIT {
            let k = congruence_correspondence(&m)?;
            out.push(format!(
                "monadic congruences: {}, matching monadic filters: {}",
                k.monadic_congruences,
                yes(k.bijective())
            ));
            Some(k)
        } else {
            None
        };
        json["monadic"] = json!({
            "quantifier": image(a, m.forall_map().image()),
            "strong": c.strong,
            "monadic_filters": c.monadic_filters.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
            "prime_filters": c.prime_filters.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
            "maximal_filters": c.maximal_filters.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
            "simple": c.simple,
            "subdirectly_irreducible": c.subdirectly_irreducible,
            "least_nontrivial": c.least_nontrivial.map(|s| labels(a, s)),
            "fixpoints": labels(a, m.fixpoints()),
            "consistency": checks_json(a, &consistency),
            "equivalences": equivalences,
            "principal_laws": checks_json(a, &laws),
            "restriction": r,
            "congruences": congruences,
        });
    }
    Ok(Report::new(out.into_string(), json, true))
}

pub fn quotient(name: &str, f: &Flags) -> Result<Report> {
    let t = load(name, f)?;
    let a = &t.algebra;
    let Some(text) = &f.filter else {
        bail!("quotient needs --filter");
    };
    let s = t.set(text)?;
    let result = if f.monadic {
        let m = t.monadic()?;
        quotient_monadic(&m, s).map(|q| (q.quotient, Some(q.monadic)))
    } else {
        nm_quotient(a, s).map(|q| (q, None))
    };
    let (q, monadic) = match result {
        Ok(r) => r,
        Err(e @ Error::Precondition(_)) => {
            let msg = e.to_string();
            return Ok(Report::new(format!("{msg}\n"), json!({ "error": msg }), false));
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = Lines::default();
    let blocks: Vec<Vec<String>> = q.congruence.blocks.iter().map(|&b| labels(a, b)).collect();
    for (b, block) in q.congruence.blocks.iter().enumerate() {
        out.push(format!("[{}] = {}", q.algebra.label(b), a.show_set(*block)));
    }
    let forall = monadic.as_ref().map(|m| m.forall_map());
    let file = write_algebra(&q.algebra, forall);
    out.push(file.trim_end());
    let json = json!({
        "filter": labels(a, s),
        "blocks": blocks,
        "chain": q.algebra.is_chain(),
        "algebra": file,
    });
    Ok(Report::new(out.into_string(), json, true))
}

fn embedding_lines(out: &mut Lines, m: &MonadicNmAlgebra, e: &SubdirectEmbedding) -> Value {
    let a = m.algebra();
    out.push(format!("factors: {}", set_list(a, &e.factor_filters).join(" ")));
    let rows = e.table(m);
    for (x, coords) in &rows {
        out.push(format!("  {x} -> ({})", coords.join(", ")));
    }
    out.push(format!(
        "injective {}, onto each factor {}, chains {}, homomorphism {}, injective on ∀L {}",
        yes(e.injective),
        yes(e.surjective),
        yes(e.factors_are_chains),
        yes(e.homomorphism),
        yes(e.range_injective)
    ));
    json!({
        "factors": e.factor_filters.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
        "factor_sizes": e.factors.iter().map(MonadicNmAlgebra::size).collect::<Vec<_>>(),
        "table": rows,
        "valid": e.is_valid(),
        "range_injective": e.range_injective,
    })
}

pub fn represent(name: &str, f: &Flags) -> Result<Report> {
    let t = load(name, f)?;
    let a = &t.algebra;
    let mut out = Lines::default();
    if !f.monadic {
        let r = is_representable(a);
        out.push(format!("representable: {}", yes(r.representable)));
        for &p in &r.witness {
            let q = nm_quotient(a, p)?;
            out.push(format!(
                "  {} gives a {}-element chain",
                a.show_set(p),
                q.algebra.size()
            ));
        }
        let json = json!({
            "representable": r.representable,
            "primes": r.witness.iter().map(|&s| labels(a, s)).collect::<Vec<_>>(),
        });
        return Ok(Report::new(out.into_string(), json, r.representable));
    }

    let m = t.monadic()?;
    let verdict = |e: Error| -> Result<Report> {
        match e {
            Error::Precondition(msg) => Ok(Report::new(format!("{msg}\n"), json!({ "error": msg }), false)),
            e => Err(e.into()),
        }
    };
    if let (Some(text), Some(omit)) = (&f.filter, &f.omit) {
        let s = t.set(text)?;
        let x = a.element(omit)?;
        return match prime_extension(&m, s, x) {
            Ok(p) => {
                out.push(a.show_set(p));
                Ok(Report::new(out.into_string(), json!({ "prime": labels(a, p) }), true))
            }
            Err(e) => verdict(e),
        };
    }
    let e = if f.strong {
        separating_representation(&m)
    } else {
        subdirect_representation(&m)
    };
    let e = match e {
        Ok(e) => e,
        Err(e) => return verdict(e),
    };
    let mut json = embedding_lines(&mut out, &m, &e);
    let valid = e.is_valid() && (!f.strong || e.range_injective);
    let identity = filter_intersection_identity(&m)?;
    out.push(format!("F = ⟨F,x→y⟩∀ ∩ ⟨F,y→x⟩∀ holds: {}", yes(identity.holds())));
    let rq = representable_with_quantifier(&m)?;
    out.push(format!(
        "minimal primes closed under ∀: {}; intersect to {{1}}: {}",
        yes(rq.not_forall_closed.is_empty()),
        yes(rq.intersection_is_top)
    ));
    json["intersection_identity"] = json!(identity.holds());
    json["minimal_primes_forall_closed"] = json!(rq.not_forall_closed.is_empty());
    Ok(Report::new(out.into_string(), json, valid && identity.holds()))
}
