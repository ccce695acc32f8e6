//! A small expression language for webs.
//!
//! `;` stacks left to right, bottom to top: `a ; b` is `a` followed by `b`.
//! `*` places factors side by side and binds tighter than `;`. A
//! parenthesised scalar directly in front of a factor scales it.

use std::fmt;

use a2spider::braiding::{elementary, Polarity};
use a2spider::clasp::{clasp, ClaspDescriptor};
use a2spider::web::Generator;
use a2spider::{Morphism, RingScalar, Sign, SignSeq};
use thiserror::Error;

#[derive(Clone, Debug)]
pub enum Expr {
    Identity(SignSeq),
    Atom(Generator),
    Scale(RingScalar, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    /// The byte offset of the `;` is kept for shape errors.
    Compose(Box<Expr>, Box<Expr>, usize),
    ClaspRef(ClaspDescriptor),
    CrossRef { first: Sign, second: Sign, inverse: bool },
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use Expr::*;
        match (self, other) {
            (Identity(a), Identity(b)) => a == b,
            (Atom(a), Atom(b)) => a == b,
            (Scale(s, a), Scale(t, b)) => s == t && a == b,
            (Tensor(a, b), Tensor(c, d)) => a == c && b == d,
            (Compose(a, b, _), Compose(c, d, _)) => a == c && b == d,
            (ClaspRef(a), ClaspRef(b)) => a == b,
            (CrossRef { first: a, second: b, inverse: i }, CrossRef { first: c, second: d, inverse: j }) => {
                a == c && b == d && i == j
            }
            _ => false,
        }
    }
}

#[derive(Debug, Error)]
pub enum DslError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("shape error at line {line}, column {col}: cannot stack {below} under {above}")]
    Shape { line: usize, col: usize, below: SignSeq, above: SignSeq },
    #[error("term budget exceeded: {terms} terms, limit {limit}")]
    Resource { terms: usize, limit: usize },
    #[error(transparent)]
    Engine(#[from] a2spider::Error),
}

fn line_col(src: &str, pos: usize) -> (usize, usize) {
    let before = &src[..pos.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.len(), |i| before.len() - i - 1) + 1;
    (line, col)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> DslError {
        let (line, col) = line_col(self.src, pos);
        DslError::Syntax { line, col, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.term()?;
        while self.peek() == Some(';') {
            let at = self.pos;
            self.pos += 1;
            acc = Expr::Compose(Box::new(acc), Box::new(self.term()?), at);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = Expr::Tensor(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    /// Index just past the `)` matching the `(` at `open`.
    fn matching(&self, open: usize) -> Result<usize, DslError> {
        let mut depth = 0usize;
        for (i, c) in self.src[open..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(open + i + 1);
                    }
                }
                _ => {}
            }
        }
        Err(self.err(open, "unbalanced '('"))
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        match self.peek() {
            Some('(') => {
                let open = self.pos;
                let close = self.matching(open)?;
                let next = self.src[close..].trim_start().chars().next();
                if next.is_some_and(|c| c == '(' || c.is_ascii_alphabetic()) {
                    let text = &self.src[open + 1..close - 1];
                    let s: RingScalar = text.parse().map_err(|e| match e {
                        a2spider::Error::Parse { pos, msg } => self.err(open + 1 + pos, format!("bad scalar: {msg}")),
                        other => self.err(open + 1, other.to_string()),
                    })?;
                    self.pos = close;
                    Ok(Expr::Scale(s, Box::new(self.factor()?)))
                } else {
                    self.pos = open + 1;
                    let e = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.err(self.pos, "expected ')'"));
                    }
                    self.pos += 1;
                    Ok(e)
                }
            }
            Some(c) if c.is_ascii_alphabetic() => self.atom(),
            Some(c) => Err(self.err(self.pos, format!("unexpected '{c}'"))),
            None => Err(self.err(self.pos, "unexpected end of input")),
        }
    }

    /// Text from `self.pos` through the closing delimiter.
    fn delimited(&mut self, open: char, close: char) -> Result<(usize, String), DslError> {
        self.skip_ws();
        let start = self.pos;
        if !self.src[start..].starts_with(open) {
            return Err(self.err(start, format!("expected '{open}'")));
        }
        let end = self.src[start..].find(close).ok_or_else(|| self.err(start, format!("missing '{close}'")))?;
        self.pos = start + end + 1;
        Ok((start, self.src[start..self.pos].chars().filter(|c| !c.is_whitespace()).collect()))
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let start = self.pos;
        let name_len = self.src[start..].find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(self.src.len() - start);
        let name = &self.src[start..start + name_len];
        self.pos += name_len;
        let engine = |p: &Parser, at: usize, e: a2spider::Error| p.err(at, e.to_string());
        match name {
            "id" => {
                let (at, text) = self.delimited('(', ')')?;
                let inner = &text[1..text.len() - 1];
                let eps: SignSeq = inner.parse().map_err(|e| engine(self, at, e))?;
                Ok(Expr::Identity(eps))
            }
            "t" | "b" | "d" | "H" => {
                let (at, text) = self.delimited('[', ']')?;
                let full = format!("{name}{text}");
                let g: Generator = full.parse().map_err(|e| engine(self, at, e))?;
                Ok(Expr::Atom(g))
            }
            "P" | "T" | "I" => {
                let (at, text) = self.delimited('[', ']')?;
                let full = format!("{name}{text}");
                let d: ClaspDescriptor = full.parse().map_err(|e| engine(self, at, e))?;
                Ok(Expr::ClaspRef(d))
            }
            "c" | "ci" => {
                let (at, text) = self.delimited('[', ']')?;
                let inner = &text[1..text.len() - 1];
                let signs: Vec<Option<Sign>> = inner.split(',').map(|p| p.chars().next().and_then(Sign::from_char).filter(|_| p.len() == 1)).collect();
                match signs[..] {
                    [Some(first), Some(second)] => Ok(Expr::CrossRef { first, second, inverse: name == "ci" }),
                    _ => Err(self.err(at, "crossing takes two signs, as in c[+,-]")),
                }
            }
            _ => Err(self.err(start, format!("unknown atom '{name}'"))),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

fn needs_parens_as_factor(e: &Expr) -> bool {
    matches!(e, Expr::Tensor(..) | Expr::Compose(..))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Identity(eps) => write!(f, "id({eps})"),
            Expr::Atom(g) => write!(f, "{g}"),
            Expr::ClaspRef(d) => write!(f, "{d}"),
            Expr::CrossRef { first, second, inverse } => {
                write!(f, "{}[{},{}]", if *inverse { "ci" } else { "c" }, first.as_char(), second.as_char())
            }
            Expr::Scale(s, e) if needs_parens_as_factor(e) => write!(f, "({s}) ({e})"),
            Expr::Scale(s, e) => write!(f, "({s}) {e}"),
            Expr::Tensor(a, b) => {
                match **a {
                    Expr::Compose(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                f.write_str(" * ")?;
                if needs_parens_as_factor(b) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Expr::Compose(a, b, _) => match **b {
                Expr::Compose(..) => write!(f, "{a} ; ({b})"),
                _ => write!(f, "{a} ; {b}"),
            },
        }
    }
}

/// Evaluates an expression to a reduced morphism. `limit` bounds the
/// number of terms of every intermediate result.
pub fn elaborate(e: &Expr, src: &str, limit: Option<usize>) -> Result<Morphism, DslError> {
    let m = match e {
        Expr::Identity(eps) => Morphism::identity(eps),
        Expr::Atom(g) => Morphism::generator(*g),
        Expr::ClaspRef(d) => (*clasp(d)?).clone(),
        Expr::CrossRef { first, second, inverse } => {
            let polarity = if *inverse { Polarity::Negative } else { Polarity::Positive };
            elementary(*first, *second, polarity)
        }
        Expr::Scale(s, inner) => elaborate(inner, src, limit)?.scale(s),
        Expr::Tensor(a, b) => elaborate(a, src, limit)?.tensor(&elaborate(b, src, limit)?),
        Expr::Compose(a, b, at) => {
            let (x, y) = (elaborate(a, src, limit)?, elaborate(b, src, limit)?);
            if x.cod() != y.dom() {
                let (line, col) = line_col(src, *at);
                return Err(DslError::Shape { line, col, below: x.cod().clone(), above: y.dom().clone() });
            }
            x.compose(&y)?
        }
    };
    if let Some(limit) = limit {
        if m.num_terms() > limit {
            return Err(DslError::Resource { terms: m.num_terms(), limit });
        }
    }
    Ok(m)
}

pub fn evaluate(src: &str, limit: Option<usize>) -> Result<Morphism, DslError> {
    elaborate(&parse(src)?, src, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use a2spider::qint;

    #[test]
    fn cup_then_cap_is_three() {
        let m = evaluate("b[+-] ; d[+-]", None).unwrap();
        assert_eq!(m, Morphism::identity(&SignSeq::empty()).scale(&qint(3)));
    }

    #[test]
    fn scaled_circle_is_one() {
        let m = evaluate("(1/(v^6+1+v^-6)) b[+-] ; d[+-]", None).unwrap();
        assert_eq!(m, Morphism::identity(&SignSeq::empty()));
    }

    #[test]
    fn identities_tensor() {
        assert_eq!(evaluate("id(+) * id(-)", None).unwrap(), Morphism::identity(&"+-".into()));
    }

    #[test]
    fn shape_errors_report_both_words() {
        match evaluate("id(+)\n ; d[+-]", None) {
            Err(DslError::Shape { line, col, below, above }) => {
                assert_eq!((line, col), (2, 2));
                assert_eq!(below.to_string(), "+");
                assert_eq!(above.to_string(), "+-");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("id(+) * q[+]") {
            Err(DslError::Syntax { line: 1, col: 9, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn printing_round_trips() {
        for src in ["(2) t[+;--] ; t[--;+]", "id(+) * (b[+-] ; d[+-])", "P[++] * c[+,-] ; ci[-,+] * id(+)", "((v^3 + v^-3)) (H[+-;-+] ; H[-+;+-])"] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{src} printed as {e}");
        }
    }

    #[test]
    fn term_budget_is_enforced() {
        assert!(matches!(evaluate("P[+++]", Some(2)), Err(DslError::Resource { .. })));
    }
}
