use super::Formula;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Forall,
    Exists,
    Not,
    Amp,
    Meet,
    Join,
    Arrow,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(v) => format!("variable `{v}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Forall => "`A`".into(),
            Tok::Exists => "`E`".into(),
            Tok::Not => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Meet => "`/\\`".into(),
            Tok::Join => "`\\/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

/// Tokens with their 1-based column.
fn lex(text: &str, line: usize, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = match word.as_str() {
                "A" => Tok::Forall,
                "E" => Tok::Exists,
                "0" => Tok::Zero,
                "1" => Tok::One,
                w if w.starts_with(|c: char| c.is_ascii_digit()) => {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("unknown token `{w}`; only 0 and 1 are constants"),
                    ))
                }
                w => Tok::Ident(w.to_string()),
            };
            out.push((tok, col));
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        let (tok, len) = if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("/\\") {
            (Tok::Meet, 2)
        } else if rest.starts_with("\\/") {
            (Tok::Join, 2)
        } else {
            match c {
                '&' => (Tok::Amp, 1),
                '~' => (Tok::Not, 1),
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                _ => return Err(Error::parse(line, col, format!("unknown token `{c}`"))),
            }
        };
        out.push((tok, col));
        i += len;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(_, c)| c)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> Error {
        let found = self.peek().map_or("end of input".to_string(), Tok::describe);
        Error::parse(self.line, self.col(), format!("expected {expected}, found {found}"))
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut f = self.imp()?;
        while self.eat(&Tok::Iff) {
            f = Formula::iff(f, self.imp()?);
        }
        Ok(f)
    }

    fn imp(&mut self) -> Result<Formula> {
        let f = self.left_assoc(0)?;
        if self.eat(&Tok::Arrow) {
            return Ok(Formula::imp(f, self.imp()?));
        }
        Ok(f)
    }

    /// Levels 0, 1, 2 are `\/`, `/\`, `&`.
    fn left_assoc(&mut self, level: usize) -> Result<Formula> {
        if level == 3 {
            return self.unary();
        }
        let (tok, build): (Tok, fn(Formula, Formula) -> Formula) = match level {
            0 => (Tok::Join, Formula::max),
            1 => (Tok::Meet, Formula::min),
            _ => (Tok::Amp, Formula::conj),
        };
        let mut f = self.left_assoc(level + 1)?;
        while self.eat(&tok) {
            f = build(f, self.left_assoc(level + 1)?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Forall) {
            return Ok(Formula::forall(self.unary()?));
        }
        if self.eat(&Tok::Exists) {
            return Ok(Formula::exists(self.unary()?));
        }
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        let f = match self.peek().cloned() {
            Some(Tok::Ident(v)) => Formula::Var(v),
            Some(Tok::Zero) => Formula::Zero,
            Some(Tok::One) => Formula::One,
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("`)`"));
                }
                return Ok(f);
            }
            _ => return Err(self.error("a formula")),
        };
        self.pos += 1;
        Ok(f)
    }
}

/// Parses `text` as it appears at `line`, starting `offset` characters in.
pub(crate) fn parse_formula_at(text: &str, line: usize, offset: usize) -> Result<Formula> {
    let toks = lex(text, line, offset)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_col: offset + text.chars().count() + 1,
    };
    let f = p.iff()?;
    if p.pos != p.toks.len() {
        return Err(p.error("end of input"));
    }
    Ok(f)
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    parse_formula_at(text, 1, 0)
}

/// A named list of formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Theory {
    pub name: String,
    pub formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(name: impl Into<String>, formulas: Vec<Formula>) -> Self {
        Theory {
            name: name.into(),
            formulas,
        }
    }
}

/// One formula per line; blank lines and `#` comments are skipped.
pub fn parse_theory(name: &str, text: &str) -> Result<Theory> {
    let formulas = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_formula_at(l, i + 1, 0))
        .collect::<Result<Vec<_>>>()?;
    Ok(Theory::new(name, formulas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Formula {
        Formula::var(s)
    }

    #[test]
    fn forall_binds_tighter_than_implication() {
        assert_eq!(
            parse_formula("A p1 -> p1").unwrap(),
            Formula::imp(Formula::forall(v("p1")), v("p1"))
        );
    }

    #[test]
    fn weak_nilpotent_minimum_shape() {
        let f = parse_formula("((p1 -> 0) & p2) \\/ ((p1 /\\ p2) -> (p1 & p2))").unwrap();
        let expected = Formula::max(
            Formula::conj(Formula::not(v("p1")), v("p2")),
            Formula::imp(Formula::min(v("p1"), v("p2")), Formula::conj(v("p1"), v("p2"))),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn sugar_is_expanded() {
        assert_eq!(
            parse_formula("E p1").unwrap(),
            Formula::not(Formula::forall(Formula::not(v("p1"))))
        );
        assert_eq!(parse_formula("~p1").unwrap(), Formula::imp(v("p1"), Formula::Zero));
        assert_eq!(parse_formula("p1 <-> p2").unwrap(), Formula::iff(v("p1"), v("p2")));
    }

    #[test]
    fn precedence_ladder() {
        let f = parse_formula("p1 & p2 /\\ p3 \\/ p4 -> p5 -> p6").unwrap();
        let expected = Formula::imp(
            Formula::max(Formula::min(Formula::conj(v("p1"), v("p2")), v("p3")), v("p4")),
            Formula::imp(v("p5"), v("p6")),
        );
        assert_eq!(f, expected);
        assert_eq!(parse_formula("A(p1)").unwrap(), parse_formula("A p1").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_formula("p1 -> ") {
            Err(Error::Parse { line: 1, column: 7, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_formula("p1 $ p2") {
            Err(Error::Parse { column: 4, message, .. }) => assert!(message.contains('$')),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("(p1").is_err());
        assert!(parse_formula("p1 p2").is_err());
        assert!(parse_formula("2").is_err());
    }

    #[test]
    fn theory_files() {
        let t = parse_theory("t", "# premises\np1\n\nA p1 -> p2\n").unwrap();
        assert_eq!(t.formulas.len(), 2);
        match parse_theory("t", "p1\np1 &&\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            (1..4usize).prop_map(|i| Formula::var(format!("p{i}"))),
            Just(Formula::Zero),
            Just(Formula::One),
        ];
        leaf.prop_recursive(6, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::forall),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::min(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::max(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::conj(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(f in arb_formula()) {
            prop_assert!(f.depth() <= 6);
            prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
        }
    }
}
