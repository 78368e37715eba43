//! Line-oriented text format for finite algebras.
//!
//! ```text
//! # comment
//! algebra <name>
//! elements <k> <lbl0> ... <lbl{k-1}>
//! bottom <lbl>
//! top <lbl>
//! order <lbl> <= <lbl>        (repeatable; reflexive-transitive closure taken)
//! mul                          (followed by k rows of k labels)
//! imp                          (followed by k rows of k labels)
//! forall <lbl0'> ... <lbl{k-1}'>   (optional)
//! end
//! ```

use std::fmt::Write as _;

use crate::algebra::{validate_nm, Elem, FiniteNmAlgebra, NmTables};
use crate::error::{Error, Result};
use crate::quantifier::{MonadicNmAlgebra, QuantifierMap};

/// Parsed but unvalidated contents of an algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub tables: NmTables,
    /// Image labels of the optional `forall` line.
    pub forall: Option<Vec<String>>,
}

struct Lines<'a> {
    inner: std::vec::IntoIter<(usize, Vec<&'a str>)>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    /// Non-blank lines with comments stripped, split into tokens.
    fn new(text: &'a str) -> Self {
        let lines: Vec<(usize, Vec<&'a str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                (
                    i + 1,
                    l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>(),
                )
            })
            .filter(|(_, toks)| !toks.is_empty())
            .collect();
        Lines {
            inner: lines.into_iter(),
            last_line: text.lines().count().max(1),
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        self.inner.next()
    }
}

fn index(labels: &[String], tok: &str, line: usize) -> Result<Elem> {
    labels
        .iter()
        .position(|l| l == tok)
        .ok_or_else(|| Error::parse(line, 1, format!("unknown label {tok:?}")))
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let mut lines = Lines::new(text);
    let mut name: Option<String> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut bottom = None;
    let mut top = None;
    let mut order: Vec<(Elem, Elem)> = Vec::new();
    let mut mul = None;
    let mut imp = None;
    let mut forall = None;
    let mut ended = false;

    let need_labels = |labels: &Option<Vec<String>>, line: usize| -> Result<Vec<String>> {
        labels
            .clone()
            .ok_or_else(|| Error::parse(line, 1, "`elements` must come before this line"))
    };

    while let Some((ln, toks)) = lines.next() {
        if ended {
            return Err(Error::parse(ln, 1, "content after `end`"));
        }
        match toks[0] {
            "algebra" => {
                if toks.len() != 2 {
                    return Err(Error::parse(ln, 1, "expected `algebra <name>`"));
                }
                name = Some(toks[1].to_string());
            }
            "elements" => {
                let k: usize = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(ln, 1, "expected `elements <k> <labels...>`"))?;
                if toks.len() != k + 2 {
                    return Err(Error::parse(
                        ln,
                        1,
                        format!("expected {k} labels, found {}", toks.len() - 2),
                    ));
                }
                labels = Some(toks[2..].iter().map(|s| s.to_string()).collect());
            }
            "bottom" | "top" => {
                let ls = need_labels(&labels, ln)?;
                if toks.len() != 2 {
                    return Err(Error::parse(ln, 1, format!("expected `{} <label>`", toks[0])));
                }
                let x = index(&ls, toks[1], ln)?;
                if toks[0] == "bottom" {
                    bottom = Some(x);
                } else {
                    top = Some(x);
                }
            }
            "order" => {
                let ls = need_labels(&labels, ln)?;
                if toks.len() != 4 || toks[2] != "<=" {
                    return Err(Error::parse(ln, 1, "expected `order <label> <= <label>`"));
                }
                order.push((index(&ls, toks[1], ln)?, index(&ls, toks[3], ln)?));
            }
            "mul" | "imp" => {
                let ls = need_labels(&labels, ln)?;
                if toks.len() != 1 {
                    return Err(Error::parse(ln, 1, format!("`{}` stands alone on its line", toks[0])));
                }
                let mut rows = Vec::with_capacity(ls.len());
                for r in 0..ls.len() {
                    let (rl, row) = lines.next().ok_or_else(|| {
                        Error::parse(lines.last_line, 1, format!("{} table ends after {r} rows", toks[0]))
                    })?;
                    if row.len() != ls.len() {
                        return Err(Error::parse(
                            rl,
                            1,
                            format!("row has {} entries, expected {}", row.len(), ls.len()),
                        ));
                    }
                    rows.push(row.iter().map(|t| index(&ls, t, rl)).collect::<Result<Vec<_>>>()?);
                }
                if toks[0] == "mul" {
                    mul = Some(rows);
                } else {
                    imp = Some(rows);
                }
            }
            "forall" => {
                let ls = need_labels(&labels, ln)?;
                if toks.len() != ls.len() + 1 {
                    return Err(Error::parse(ln, 1, format!("forall needs {} images", ls.len())));
                }
                for t in &toks[1..] {
                    index(&ls, t, ln)?;
                }
                forall = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            }
            "end" => ended = true,
            other => return Err(Error::parse(ln, 1, format!("unknown directive {other:?}"))),
        }
    }
    let end_line = lines.last_line;
    let missing = |what: &str| Error::parse(end_line, 1, format!("missing `{what}`"));
    if !ended {
        return Err(missing("end"));
    }
    let labels = labels.ok_or_else(|| missing("elements"))?;
    let n = labels.len();
    let mut leq = vec![vec![false; n]; n];
    for (x, row) in leq.iter_mut().enumerate() {
        row[x] = true;
    }
    for (x, y) in order {
        leq[x][y] = true;
    }
    // Warshall closure; the indices are clearer than iterators here
    #[allow(clippy::needless_range_loop)]
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    Ok(AlgebraFile {
        tables: NmTables {
            name: name.ok_or_else(|| missing("algebra"))?,
            names: labels,
            bottom: bottom.ok_or_else(|| missing("bottom"))?,
            top: top.ok_or_else(|| missing("top"))?,
            leq,
            mul: mul.ok_or_else(|| missing("mul"))?,
            imp: imp.ok_or_else(|| missing("imp"))?,
        },
        forall,
    })
}

/// Resolves quantifier image labels against a validated algebra.
pub fn resolve_forall(a: &FiniteNmAlgebra, images: &[String]) -> Result<QuantifierMap> {
    let image = images.iter().map(|l| a.element(l)).collect::<Result<Vec<_>>>()?;
    QuantifierMap::new(a, image)
}

/// Parses and validates; the quantifier, if present, is checked against the
/// quantifier axioms too.
pub fn load_algebra(text: &str) -> Result<(FiniteNmAlgebra, Option<MonadicNmAlgebra>)> {
    let file = parse_algebra_file(text)?;
    let a = validate_nm(&file.tables)?;
    let m = match &file.forall {
        Some(images) => Some(MonadicNmAlgebra::new(a.clone(), resolve_forall(&a, images)?)?),
        None => None,
    };
    Ok((a, m))
}

/// Parses a stand-alone quantifier file: a single `forall <labels...>` line.
pub fn parse_forall_file(text: &str, a: &FiniteNmAlgebra) -> Result<QuantifierMap> {
    let mut lines = Lines::new(text);
    let (ln, toks) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty quantifier file"))?;
    if toks[0] != "forall" {
        return Err(Error::parse(ln, 1, "expected a `forall` line"));
    }
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(extra, 1, "a quantifier file holds a single `forall` line"));
    }
    if toks.len() != a.size() + 1 {
        return Err(Error::parse(ln, 1, format!("forall needs {} images", a.size())));
    }
    let images: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
    resolve_forall(a, &images)
}

/// Covering pairs `x ⋖ y` of the order.
pub fn covers(leq: &[Vec<bool>]) -> Vec<(Elem, Elem)> {
    let n = leq.len();
    let lt = |x: Elem, y: Elem| x != y && leq[x][y];
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Writes tables in the file format; order lines list covering pairs.
pub fn write_tables(t: &NmTables, forall: Option<&[Elem]>) -> String {
    let width = t.names.iter().map(String::len).max().unwrap_or(1);
    let row = |cells: &[Elem]| -> String {
        cells
            .iter()
            .map(|&c| format!("{:>width$}", t.names[c]))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = String::new();
    let _ = writeln!(s, "algebra {}", t.name);
    let _ = writeln!(s, "elements {} {}", t.names.len(), t.names.join(" "));
    let _ = writeln!(s, "bottom {}", t.names[t.bottom]);
    let _ = writeln!(s, "top {}", t.names[t.top]);
    for (x, y) in covers(&t.leq) {
        let _ = writeln!(s, "order {} <= {}", t.names[x], t.names[y]);
    }
    s.push_str("mul\n");
    for r in &t.mul {
        let _ = writeln!(s, "{}", row(r));
    }
    s.push_str("imp\n");
    for r in &t.imp {
        let _ = writeln!(s, "{}", row(r));
    }
    if let Some(q) = forall {
        let labels: Vec<&str> = q.iter().map(|&x| t.names[x].as_str()).collect();
        let _ = writeln!(s, "forall {}", labels.join(" "));
    }
    s.push_str("end\n");
    s
}

pub fn write_algebra(a: &FiniteNmAlgebra, forall: Option<&QuantifierMap>) -> String {
    write_tables(&a.to_tables(), forall.map(QuantifierMap::image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture_six_element, nm_chain};

    #[test]
    fn round_trip_through_text() {
        let e = fixture_six_element();
        let m = e.monadic(0).unwrap();
        let text = write_algebra(m.algebra(), Some(m.forall_map()));
        let (a, mm) = load_algebra(&text).unwrap();
        assert_eq!(a.to_tables(), m.algebra().to_tables());
        assert_eq!(mm.unwrap().forall_map(), m.forall_map());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_algebra_file("algebra x\nelements 2 0 1\nbottom 0\ntop 1\nmul\n0 0\n0 q\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 7),
            other => panic!("{other:?}"),
        }
        assert!(parse_algebra_file("algebra x\nfrobnicate\n").is_err());
        assert!(parse_algebra_file("algebra x\nelements 2 0 1\nend\n").is_err());
    }

    #[test]
    fn separate_quantifier_file() {
        let a = nm_chain(3).unwrap();
        let q = parse_forall_file("# zero-one\nforall 0 0 1\n", &a).unwrap();
        assert_eq!(q.image(), &[0, 0, 2]);
        assert!(parse_forall_file("forall 0 0\n", &a).is_err());
    }
}
