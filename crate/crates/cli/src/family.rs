//! Family expressions such as `K2+3*K1`, `(K1+K2)vE3` or `K5-e`.
//!
//! ```text
//! expr   := term { "+" term }
//! term   := factor { "v" factor }
//! factor := [ int "*" ] atom
//! atom   := base [ "-e" ] | "(" expr ")"
//! base   := "K" int { "," int } | "P" int | "C" int | "E" int
//! ```
//!
//! `+` is disjoint union and `v` is join; both are left-associative and `v`
//! binds tighter. Whitespace between tokens is ignored.

use cospec::graph::{self, Graph};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyExpr {
    /// `K n` for one part, complete multipartite otherwise.
    Complete(Vec<usize>),
    /// `K n-e`.
    CompleteMinusEdge(usize),
    Path(usize),
    Cycle(usize),
    Empty(usize),
    Copies(usize, Box<FamilyExpr>),
    Union(Box<FamilyExpr>, Box<FamilyExpr>),
    Join(Box<FamilyExpr>, Box<FamilyExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset, message: message.into() })
    }

    fn skip_space(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_space();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_space();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.text.get(start) {
                Some(b'-') => self.error(start, "sizes must be positive"),
                _ => self.error(start, "expected a size"),
            };
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        match digits.parse::<usize>() {
            Ok(0) => self.error(start, "sizes must be positive"),
            Ok(v) => Ok(v),
            Err(_) => self.error(start, "size is too large"),
        }
    }

    fn expr(&mut self) -> Result<FamilyExpr, ParseError> {
        let mut left = self.term()?;
        while self.eat(b'+') {
            left = FamilyExpr::Union(Box::new(left), Box::new(self.term()?));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<FamilyExpr, ParseError> {
        let mut left = self.factor()?;
        while self.eat(b'v') {
            left = FamilyExpr::Join(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<FamilyExpr, ParseError> {
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let t = self.int()?;
            if !self.eat(b'*') {
                return self.error(self.pos, "expected '*' after a copy count");
            }
            return Ok(FamilyExpr::Copies(t, Box::new(self.atom()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<FamilyExpr, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.error(self.pos, "expected ')'");
                }
                Ok(inner)
            }
            Some(letter @ (b'K' | b'P' | b'C' | b'E')) => {
                self.pos += 1;
                let first = self.int()?;
                let base = match letter {
                    b'K' => {
                        let mut parts = vec![first];
                        while self.eat(b',') {
                            parts.push(self.int()?);
                        }
                        FamilyExpr::Complete(parts)
                    }
                    b'P' => FamilyExpr::Path(first),
                    b'C' => FamilyExpr::Cycle(first),
                    _ => FamilyExpr::Empty(first),
                };
                let minus = self.pos;
                if self.text[self.pos..].starts_with(b"-e") {
                    self.pos += 2;
                    return match base {
                        FamilyExpr::Complete(parts) if parts.len() == 1 && parts[0] >= 2 => {
                            Ok(FamilyExpr::CompleteMinusEdge(parts[0]))
                        }
                        _ => self.error(minus, "'-e' needs a complete graph K n with n >= 2"),
                    };
                }
                Ok(base)
            }
            Some(b')') => self.error(start, "unbalanced ')'"),
            Some(other) => self.error(self.pos, format!("unknown atom {:?}", other as char)),
            None => self.error(self.pos, "unexpected end of input"),
        }
    }
}

/// Parses a family expression.
pub fn parse_family(text: &str) -> Result<FamilyExpr, ParseError> {
    let mut parser = Parser { text: text.as_bytes(), pos: 0 };
    let expr = parser.expr()?;
    match parser.peek() {
        None => Ok(expr),
        Some(b')') => parser.error(parser.pos, "unbalanced ')'"),
        Some(_) => parser.error(parser.pos, "unexpected trailing input"),
    }
}

impl FamilyExpr {
    pub fn graph(&self) -> cospec::Result<Graph> {
        Ok(match self {
            FamilyExpr::Complete(parts) if parts.len() == 1 => {
                check_order(parts[0])?;
                graph::complete(parts[0])
            }
            FamilyExpr::Complete(parts) => graph::complete_multipartite(parts)?,
            FamilyExpr::CompleteMinusEdge(n) => graph::complete_minus_edge(*n)?,
            FamilyExpr::Path(n) => {
                check_order(*n)?;
                graph::path(*n)
            }
            FamilyExpr::Cycle(n) => graph::cycle(*n)?,
            FamilyExpr::Empty(n) => {
                check_order(*n)?;
                graph::empty(*n)
            }
            FamilyExpr::Copies(t, inner) => graph::copies(&inner.graph()?, *t)?,
            FamilyExpr::Union(a, b) => graph::disjoint_union(&a.graph()?, &b.graph()?)?,
            FamilyExpr::Join(a, b) => graph::join(&a.graph()?, &b.graph()?)?,
        })
    }

    fn is_atom(&self) -> bool {
        !matches!(self, FamilyExpr::Union(..) | FamilyExpr::Join(..) | FamilyExpr::Copies(..))
    }
}

fn check_order(n: usize) -> cospec::Result<()> {
    if n > graph::MAX_ORDER {
        Err(cospec::Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyExpr::Complete(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "K{}", parts.join(","))
            }
            FamilyExpr::CompleteMinusEdge(n) => write!(f, "K{n}-e"),
            FamilyExpr::Path(n) => write!(f, "P{n}"),
            FamilyExpr::Cycle(n) => write!(f, "C{n}"),
            FamilyExpr::Empty(n) => write!(f, "E{n}"),
            FamilyExpr::Copies(t, inner) if inner.is_atom() => write!(f, "{t}*{inner}"),
            FamilyExpr::Copies(t, inner) => write!(f, "{t}*({inner})"),
            FamilyExpr::Union(a, b) => match **b {
                FamilyExpr::Union(..) => write!(f, "{a}+({b})"),
                _ => write!(f, "{a}+{b}"),
            },
            FamilyExpr::Join(a, b) => {
                let wrap = |e: &FamilyExpr, right: bool| match e {
                    FamilyExpr::Union(..) => format!("({e})"),
                    FamilyExpr::Join(..) if right => format!("({e})"),
                    _ => e.to_string(),
                };
                write!(f, "{}v{}", wrap(a, false), wrap(b, true))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cospec::graph::*;

    fn eval(text: &str) -> Graph {
        parse_family(text).unwrap().graph().unwrap()
    }

    #[test]
    fn examples() {
        let g = eval("K2+3*K1");
        assert_eq!((g.order(), g.edge_count()), (5, 1));
        let theorem_family = join(&add_isolated(&complete(2), 1).unwrap(), &empty(3)).unwrap();
        assert!(is_isomorphic(&eval("(K1+K2)vE3"), &theorem_family));
        assert!(is_isomorphic(&eval("K5-e"), &complete_minus_edge(5).unwrap()));
        assert_eq!(eval("K3,4"), complete_multipartite(&[3, 4]).unwrap());
        assert_eq!(eval(" C4 + K1 "), add_isolated(&cycle(4).unwrap(), 1).unwrap());
    }

    #[test]
    fn precedence() {
        // v binds tighter than +
        assert_eq!(eval("K1+K1vK1").edge_count(), 1);
        assert_eq!(eval("(K1+K1)vK1").edge_count(), 2);
        assert_eq!(eval("2*K2vK1").edge_count(), 2 + 4);
        assert_eq!(
            parse_family("K1vK2vK3").unwrap(),
            parse_family("(K1vK2)vK3").unwrap()
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let cases = [
            ("X3", 0),
            ("K0", 1),
            ("K-2", 1),
            ("K2,2-e", 4),
            ("P3-e", 2),
            ("(K1+K2", 6),
            ("K1)", 2),
            ("K1 K2", 3),
            ("3K1", 1),
            ("", 0),
            ("K1+", 3),
        ];
        for (text, offset) in cases {
            let err = parse_family(text).unwrap_err();
            assert_eq!(err.offset, offset, "{text:?}: {err}");
        }
        assert!(parse_family("K1-e").is_err());
        assert!(parse_family("C2").unwrap().graph().is_err());
        assert!(parse_family("K70").unwrap().graph().is_err());
    }

    #[test]
    fn display_round_trips() {
        let texts = [
            "K2+3*K1",
            "(K1+K2)vE3",
            "K5-e",
            "K3,4",
            "2*(K1vK2)+P3",
            "K2v(K1vK2)",
            "(K2+K1)v(C4+E2)",
            "3*C5",
            "K1+(K2+K3)",
            "K2,2,3vP4",
        ];
        for text in texts {
            let expr = parse_family(text).unwrap();
            let printed = expr.to_string();
            let again = parse_family(&printed).unwrap();
            assert_eq!(again, expr, "{text} -> {printed}");
            assert!(is_isomorphic(&again.graph().unwrap(), &expr.graph().unwrap()));
        }
    }
}
