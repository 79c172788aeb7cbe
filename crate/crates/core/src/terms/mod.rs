//! Terms over the signature `{*, ->, /\, \/, T, F}` with the usual sugar.
//!
//! `~t` is `t -> F`, `s + t` is `~(~s * ~t)`, `t^n` is the `n`-fold product
//! (`t^0 = T`) and `n.t` the `n`-fold sum (`0.t = F`). The sugar nodes are kept
//! in the tree so that terms print back the way they were written;
//! [`Term::expand`] rewrites them into the basic operations.

mod eval;
mod parse;
mod predicates;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use eval::{check_identity, eval, term_function, CompiledTerm, IdentityResult, Interpretation};
pub use parse::{parse_equation, parse_term};
pub use predicates::{
    family_term, find_term_in_family, gap_certificate, gap_equation, is_boolean_retraction_term,
    is_boolean_term, is_radical_term, BoolTermFailure, BoolTermReport, Branch, RetractionReport,
    TermPredicate,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("expected a unary term, found {0} variable(s)")]
    NotUnary(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Top,
    Bot,
    Mult(Box<Term>, Box<Term>),
    Arrow(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Plus(Box<Term>, Box<Term>),
    Pow(Box<Term>, u32),
    Mul(u32, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn mult(self, rhs: Term) -> Term {
        Term::Mult(Box::new(self), Box::new(rhs))
    }

    pub fn arrow(self, rhs: Term) -> Term {
        Term::Arrow(Box::new(self), Box::new(rhs))
    }

    pub fn meet(self, rhs: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(rhs))
    }

    pub fn join(self, rhs: Term) -> Term {
        Term::Join(Box::new(self), Box::new(rhs))
    }

    pub fn plus(self, rhs: Term) -> Term {
        Term::Plus(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Term {
        Term::Neg(Box::new(self))
    }

    pub fn pow(self, n: u32) -> Term {
        Term::Pow(Box::new(self), n)
    }

    /// `n.self`
    pub fn times(self, n: u32) -> Term {
        Term::Mul(n, Box::new(self))
    }

    /// Variables in name order.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Top | Term::Bot => {}
            Term::Mult(a, b)
            | Term::Arrow(a, b)
            | Term::Meet(a, b)
            | Term::Join(a, b)
            | Term::Plus(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Neg(a) | Term::Pow(a, _) | Term::Mul(_, a) => a.collect_vars(out),
        }
    }

    /// Exactly one variable.
    pub fn is_unary(&self) -> bool {
        self.vars().len() == 1
    }

    /// Replaces every occurrence of variable `name` by `by`.
    pub fn substitute(&self, name: &str, by: &Term) -> Term {
        let s = |t: &Term| Box::new(t.substitute(name, by));
        match self {
            Term::Var(v) if v == name => by.clone(),
            Term::Var(_) | Term::Top | Term::Bot => self.clone(),
            Term::Mult(a, b) => Term::Mult(s(a), s(b)),
            Term::Arrow(a, b) => Term::Arrow(s(a), s(b)),
            Term::Meet(a, b) => Term::Meet(s(a), s(b)),
            Term::Join(a, b) => Term::Join(s(a), s(b)),
            Term::Plus(a, b) => Term::Plus(s(a), s(b)),
            Term::Neg(a) => Term::Neg(s(a)),
            Term::Pow(a, n) => Term::Pow(s(a), *n),
            Term::Mul(n, a) => Term::Mul(*n, s(a)),
        }
    }

    /// Rewrites all sugar into `*`, `->`, `/\`, `\/`, `T`, `F`.
    pub fn expand(&self) -> Term {
        match self {
            Term::Var(_) | Term::Top | Term::Bot => self.clone(),
            Term::Mult(a, b) => a.expand().mult(b.expand()),
            Term::Arrow(a, b) => a.expand().arrow(b.expand()),
            Term::Meet(a, b) => a.expand().meet(b.expand()),
            Term::Join(a, b) => a.expand().join(b.expand()),
            Term::Neg(a) => a.expand().arrow(Term::Bot),
            Term::Plus(a, b) => {
                let na = a.expand().arrow(Term::Bot);
                let nb = b.expand().arrow(Term::Bot);
                na.mult(nb).arrow(Term::Bot)
            }
            Term::Pow(a, n) => {
                let base = a.expand();
                (0..*n).fold(Term::Top, |acc, _| base.clone().mult(acc))
            }
            Term::Mul(n, a) => {
                let base = a.expand();
                (0..*n).fold(Term::Bot, |acc, _| {
                    let na = base.clone().arrow(Term::Bot);
                    let nacc = acc.arrow(Term::Bot);
                    na.mult(nacc).arrow(Term::Bot)
                })
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Term::Arrow(..) => 1,
            Term::Join(..) => 2,
            Term::Meet(..) => 3,
            Term::Plus(..) => 4,
            Term::Mult(..) => 5,
            Term::Neg(_) | Term::Mul(..) => 6,
            Term::Pow(..) => 7,
            Term::Var(_) | Term::Top | Term::Bot => 8,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        let bin = |f: &mut fmt::Formatter<'_>, a: &Term, op: &str, b: &Term, l: u8, r: u8| {
            a.fmt_at(f, l)?;
            write!(f, " {op} ")?;
            b.fmt_at(f, r)
        };
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Top => write!(f, "T"),
            Term::Bot => write!(f, "F"),
            Term::Arrow(a, b) => bin(f, a, "->", b, 2, 1),
            Term::Join(a, b) => bin(f, a, "\\/", b, 2, 3),
            Term::Meet(a, b) => bin(f, a, "/\\", b, 3, 4),
            Term::Plus(a, b) => bin(f, a, "+", b, 4, 5),
            Term::Mult(a, b) => bin(f, a, "*", b, 5, 6),
            Term::Neg(a) => {
                write!(f, "~")?;
                a.fmt_at(f, 6)
            }
            Term::Mul(n, a) => {
                write!(f, "{n}.")?;
                a.fmt_at(f, 6)
            }
            Term::Pow(a, n) => {
                a.fmt_at(f, 7)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// `lhs = rhs`. The text form `lhs <= rhs` parses to `lhs -> rhs = T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    /// `lhs <= rhs`, i.e. `lhs -> rhs = T`.
    pub fn below(lhs: Term, rhs: Term) -> Self {
        Equation::new(lhs.arrow(rhs), Term::Top)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.lhs.vars();
        v.extend(self.rhs.vars());
        v
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
