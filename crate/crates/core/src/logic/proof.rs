use super::parse::parse_formula_at;
use super::schema::{instantiate, schema, MetaVar, Substitution};
use super::{Formula, Theory};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom {
        schema: String,
        substitution: Substitution,
    },
    /// 1-based index into the theory.
    Premise(usize),
    /// Line `j` must be `(line i) -> (this line)`.
    ModusPonens(usize, usize),
    Necessitation(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub number: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Proof {
    pub lines: Vec<ProofLine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofVerdict {
    pub valid: bool,
    /// The last line, when every line checks.
    pub conclusion: Option<Formula>,
    pub first_bad_line: Option<usize>,
    pub reason: Option<String>,
}

fn parse_index(word: Option<&str>, line: usize, col: usize) -> Result<usize> {
    let w = word.ok_or_else(|| Error::parse(line, col, "missing line number"))?;
    match w.parse::<usize>() {
        Ok(k) if k > 0 => Ok(k),
        _ => Err(Error::parse(line, col, format!("`{w}` is not a positive line number"))),
    }
}

fn parse_substitution(text: &str, line: usize, col: usize) -> Result<Substitution> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::parse(line, col, "substitution must be written [phi=..., psi=..., chi=...]"))?;
    let mut sub = Substitution::new();
    let mut offset = col;
    for part in inner.split(',') {
        let (name, formula) = part.split_once('=').ok_or_else(|| {
            Error::parse(
                line,
                offset + 1,
                format!("expected name=formula, found `{}`", part.trim()),
            )
        })?;
        let m = MetaVar::from_name(name.trim())
            .ok_or_else(|| Error::parse(line, offset + 1, format!("unknown metavariable `{}`", name.trim())))?;
        let f = parse_formula_at(formula, line, offset + name.chars().count() + 1)?;
        if sub.insert(m, f).is_some() {
            return Err(Error::parse(line, offset + 1, format!("{} given twice", m.name())));
        }
        offset += part.chars().count() + 1;
    }
    Ok(sub)
}

fn parse_justification(text: &str, line: usize, col: usize) -> Result<Justification> {
    let trimmed = text.trim_start();
    let col = col + text.len() - trimmed.len();
    let (kind, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
    let mut words = rest.split_whitespace();
    let arg_col = col + kind.len() + 1;
    let j = match kind {
        "axiom" => {
            let rest = rest.trim();
            let (id, sub) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            if id.is_empty() {
                return Err(Error::parse(line, arg_col, "missing schema id"));
            }
            let sub = sub.trim();
            let substitution = if sub.is_empty() {
                Substitution::new()
            } else {
                let sub_col = col + trimmed.find(sub).unwrap_or(0);
                parse_substitution(sub, line, sub_col)?
            };
            return Ok(Justification::Axiom {
                schema: id.to_string(),
                substitution,
            });
        }
        "premise" => Justification::Premise(parse_index(words.next(), line, arg_col)?),
        "mp" => {
            let i = parse_index(words.next(), line, arg_col)?;
            Justification::ModusPonens(i, parse_index(words.next(), line, arg_col)?)
        }
        "nec" => Justification::Necessitation(parse_index(words.next(), line, arg_col)?),
        other => {
            return Err(Error::parse(
                line,
                col,
                format!("unknown justification `{other}`; expected axiom, premise, mp or nec"),
            ))
        }
    };
    if let Some(extra) = words.next() {
        return Err(Error::parse(
            line,
            col,
            format!("unexpected `{extra}` after justification"),
        ));
    }
    Ok(j)
}

/// Lines `n. <formula> ; <justification>`, numbered from 1 without gaps.
/// Blank lines and `#` comments are skipped.
pub fn parse_proof(text: &str) -> Result<Proof> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim_start();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let indent = raw.len() - body.len();
        let (num, rest) = body
            .split_once('.')
            .ok_or_else(|| Error::parse(line, indent + 1, "expected `n.` at the start of the line"))?;
        let number = num
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(line, indent + 1, format!("`{num}` is not a line number")))?;
        if number != lines.len() + 1 {
            return Err(Error::parse(
                line,
                indent + 1,
                format!("expected line {}, found {number}", lines.len() + 1),
            ));
        }
        let (formula, just) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(line, raw.len() + 1, "missing `; justification`"))?;
        let fcol = indent + num.len() + 1;
        let formula = parse_formula_at(formula, line, fcol)?;
        let justification = parse_justification(just, line, fcol + rest.find(';').unwrap_or(0) + 1)?;
        lines.push(ProofLine {
            number,
            formula,
            justification,
        });
    }
    Ok(Proof { lines })
}

fn check_line(t: &Theory, earlier: &[ProofLine], line: &ProofLine) -> std::result::Result<(), String> {
    let n = line.number;
    let cited = |k: usize| -> std::result::Result<&Formula, String> {
        if k == 0 || k >= n {
            return Err(format!("line {k} is not an earlier line"));
        }
        Ok(&earlier[k - 1].formula)
    };
    match &line.justification {
        Justification::Axiom {
            schema: id,
            substitution,
        } => {
            let s = schema(id).map_err(|e| e.to_string())?;
            if let Some(m) = substitution.keys().find(|m| !s.metavars.contains(m)) {
                return Err(format!("schema {id} has no metavariable {}", m.name()));
            }
            let instance = instantiate(id, substitution).map_err(|e| e.to_string())?;
            if instance != line.formula {
                return Err(format!("{id} with this substitution gives {instance}"));
            }
        }
        Justification::Premise(k) => {
            let p = t
                .formulas
                .get(k - 1)
                .ok_or_else(|| format!("the theory has {} formulas, premise {k} requested", t.formulas.len()))?;
            if p != &line.formula {
                return Err(format!("premise {k} is {p}"));
            }
        }
        Justification::ModusPonens(i, j) => {
            let (a, b) = (cited(*i)?, cited(*j)?);
            if b != &Formula::imp(a.clone(), line.formula.clone()) {
                return Err(format!("line {j} is not (line {i}) -> (line {n})"));
            }
        }
        Justification::Necessitation(i) => {
            let a = cited(*i)?;
            if line.formula != Formula::forall(a.clone()) {
                return Err(format!("line {n} is not A applied to line {i}"));
            }
        }
    }
    Ok(())
}

/// Checks every justification in order and stops at the first bad line.
pub fn check_proof(t: &Theory, proof: &Proof) -> Result<ProofVerdict> {
    if proof.lines.is_empty() {
        return Err(Error::Precondition("a proof needs at least one line".into()));
    }
    for (i, line) in proof.lines.iter().enumerate() {
        if let Err(reason) = check_line(t, &proof.lines[..i], line) {
            return Ok(ProofVerdict {
                valid: false,
                conclusion: None,
                first_bad_line: Some(line.number),
                reason: Some(reason),
            });
        }
    }
    Ok(ProofVerdict {
        valid: true,
        conclusion: proof.lines.last().map(|l| l.formula.clone()),
        first_bad_line: None,
        reason: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, parse_theory, SAMPLE_MUTANTS, SAMPLE_PROOF, SAMPLE_THEORY};

    fn sample_theory() -> Theory {
        parse_theory("sample", SAMPLE_THEORY).unwrap()
    }

    #[test]
    fn sample_proof_checks() {
        let p = parse_proof(SAMPLE_PROOF).unwrap();
        assert_eq!(p.lines.len(), 10);
        let v = check_proof(&sample_theory(), &p).unwrap();
        assert!(v.valid, "{v:?}");
        assert_eq!(v.conclusion, Some(parse_formula("(A p2 -> p2) -> A p2 -> p2").unwrap()));
    }

    #[test]
    fn mutants_are_rejected_at_the_corrupted_line() {
        let expected = [("swapped-mp", 3), ("forward-nec", 4), ("wrong-substitution", 7)];
        for ((name, text), (want, line)) in SAMPLE_MUTANTS.iter().zip(expected) {
            assert_eq!(*name, want);
            let v = check_proof(&sample_theory(), &parse_proof(text).unwrap()).unwrap();
            assert!(!v.valid);
            assert_eq!(v.first_bad_line, Some(line), "{name}: {v:?}");
        }
    }

    #[test]
    fn small_proofs() {
        let t = Theory::default();
        let one = parse_proof("1. (p1 -> p2) -> (p2 -> p3) -> p1 -> p3 ; axiom MTL1 [phi=p1, psi=p2, chi=p3]").unwrap();
        assert!(check_proof(&t, &one).unwrap().valid);

        let t = parse_theory("t", "p1").unwrap();
        let nec = parse_proof("1. p1 ; premise 1\n2. A p1 ; nec 1\n").unwrap();
        assert!(check_proof(&t, &nec).unwrap().valid);

        let extra = parse_proof("1. 0 -> p1 ; axiom MTL9 [phi=p1, psi=p2]").unwrap();
        assert_eq!(check_proof(&t, &extra).unwrap().first_bad_line, Some(1));
        let missing = parse_proof("1. 0 -> p1 ; axiom MTL9").unwrap();
        assert!(!check_proof(&t, &missing).unwrap().valid);
        let premise = parse_proof("1. p1 ; premise 2").unwrap();
        assert!(!check_proof(&t, &premise).unwrap().valid);
        assert!(check_proof(&t, &Proof::default()).is_err());
    }

    #[test]
    fn malformed_proofs() {
        for (text, line) in [
            ("1. p1 ; premise", 1),
            ("1. p1 ; guess 3", 1),
            ("1. p1 premise 1", 1),
            ("1. p1 ; premise 1\n3. p1 ; premise 1", 2),
            ("1. p1 ; axiom U1 [phi p1]", 1),
            ("1. p1 ; axiom U1 [rho=p1]", 1),
            ("1. p1 -> ; premise 1", 1),
            ("1. p1 ; mp 1 2 3", 1),
        ] {
            match parse_proof(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
