//! Recursive-descent parser for terms and equations.
//!
//! Binding, loosest first: `->` (right associative), `\/`, `/\`, `+`, `*`,
//! prefix `~` and `n.`, postfix `^n`. So `3.x^3` is `3.(x^3)` and `~x^2`
//! is `~(x^2)`.

use super::{Equation, Term, TermError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Int(u32),
    Dot,
    Caret,
    Star,
    Arrow,
    Meet,
    Join,
    Tilde,
    Plus,
    LParen,
    RParen,
    Eq,
    Le,
}

fn syntax(offset: usize, message: impl Into<String>) -> TermError {
    TermError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i]
                    .parse::<u32>()
                    .map_err(|_| syntax(start, "integer too large"))?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &src[start..i];
                let tok = match word {
                    "T" => Tok::Top,
                    "F" => Tok::Bot,
                    w if w.starts_with(|c: char| c.is_ascii_lowercase() || c == '_') => {
                        Tok::Ident(w.to_string())
                    }
                    w => return Err(syntax(start, format!("unknown constant `{w}`"))),
                };
                out.push((start, tok));
                continue;
            }
            b'.' => Tok::Dot,
            b'^' => Tok::Caret,
            b'*' => Tok::Star,
            b'~' => Tok::Tilde,
            b'+' => Tok::Plus,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Eq,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'=') => {
                i += 1;
                Tok::Le
            }
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                i += 1;
                Tok::Meet
            }
            b'\\' if bytes.get(i + 1) == Some(&b'/') => {
                i += 1;
                Tok::Join
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_int(&mut self, after: &str) -> Result<u32, TermError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(syntax(self.offset(), format!("expected an integer after `{after}`"))),
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        let lhs = self.disj()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.term()?;
            return Ok(lhs.arrow(rhs));
        }
        Ok(lhs)
    }

    fn left_assoc(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Term, TermError>,
        build: fn(Term, Term) -> Term,
    ) -> Result<Term, TermError> {
        let mut acc = next(self)?;
        while self.eat(&op) {
            let rhs = next(self)?;
            acc = build(acc, rhs);
        }
        Ok(acc)
    }

    fn disj(&mut self) -> Result<Term, TermError> {
        self.left_assoc(Tok::Join, Self::conj, Term::join)
    }

    fn conj(&mut self) -> Result<Term, TermError> {
        self.left_assoc(Tok::Meet, Self::sum, Term::meet)
    }

    fn sum(&mut self) -> Result<Term, TermError> {
        self.left_assoc(Tok::Plus, Self::prod, Term::plus)
    }

    fn prod(&mut self) -> Result<Term, TermError> {
        self.left_assoc(Tok::Star, Self::unary, Term::mult)
    }

    fn unary(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                if !self.eat(&Tok::Dot) {
                    return Err(syntax(self.offset(), format!("expected `.` after multiplier {n}")));
                }
                Ok(self.unary()?.times(n))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Term, TermError> {
        let mut t = self.atom()?;
        while self.eat(&Tok::Caret) {
            t = t.pow(self.expect_int("^")?);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        let off = self.offset();
        let tok = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        match tok {
            Some(Tok::Ident(v)) => Ok(Term::Var(v)),
            Some(Tok::Top) => Ok(Term::Top),
            Some(Tok::Bot) => Ok(Term::Bot),
            Some(Tok::LParen) => {
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                Ok(t)
            }
            Some(t) => Err(syntax(off, format!("unexpected token {t:?}"))),
            None => Err(syntax(off, "unexpected end of input")),
        }
    }

    fn finish(&self) -> Result<(), TermError> {
        if self.pos < self.toks.len() {
            return Err(syntax(self.offset(), "trailing input"));
        }
        Ok(())
    }
}

fn parser(src: &str) -> Result<Parser, TermError> {
    Ok(Parser {
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    })
}

pub fn parse_term(src: &str) -> Result<Term, TermError> {
    let mut p = parser(src)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// `lhs = rhs` or `lhs <= rhs`.
pub fn parse_equation(src: &str) -> Result<Equation, TermError> {
    let mut p = parser(src)?;
    let lhs = p.term()?;
    let eq = if p.eat(&Tok::Eq) {
        let rhs = p.term()?;
        Equation::new(lhs, rhs)
    } else if p.eat(&Tok::Le) {
        let rhs = p.term()?;
        Equation::below(lhs, rhs)
    } else {
        return Err(syntax(p.offset(), "expected `=` or `<=`"));
    };
    p.finish()?;
    Ok(eq)
}
