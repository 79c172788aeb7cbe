//! Boolean, radical and Boolean-retraction terms, and the `k.x^r` family searches.

use serde::Serialize;

use super::{check_identity, term_function, Equation, Term, TermError};
use crate::algebra::{Elem, FiniteBrl};
use crate::filters::radical;
use crate::set::ElemSet;
use crate::structure::boolean_skeleton;

/// Which of `b(T) = T` or `~b(T) = T` a Boolean term satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    TopToTop,
    TopToBot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoolTermFailure {
    /// `t(at) = value` is not a Boolean element.
    NotBoolean { at: Elem, value: Elem },
    /// `t(T) = t(F)`.
    Constant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoolTermReport {
    pub is_boolean: bool,
    pub branch: Option<Branch>,
    pub failure: Option<BoolTermFailure>,
}

fn check_unary(t: &Term) -> Result<(), TermError> {
    let n = t.vars().len();
    if n == 1 {
        Ok(())
    } else {
        Err(TermError::NotUnary(n))
    }
}

/// Boolean-term test on a precomputed term function.
fn boolean_function_report(alg: &FiniteBrl, f: &[Elem], skeleton: &ElemSet) -> BoolTermReport {
    let failure = match alg.elements().find(|&a| !skeleton.contains(f[a])) {
        Some(at) => Some(BoolTermFailure::NotBoolean { at, value: f[at] }),
        None if f[alg.top()] == f[alg.bot()] => Some(BoolTermFailure::Constant),
        None => None,
    };
    let is_boolean = failure.is_none();
    let branch = if !is_boolean {
        None
    } else if f[alg.top()] == alg.top() {
        Some(Branch::TopToTop)
    } else if alg.neg(f[alg.top()]) == alg.top() {
        Some(Branch::TopToBot)
    } else {
        None
    };
    BoolTermReport {
        is_boolean,
        branch,
        failure,
    }
}

/// `t(a)` is Boolean for every `a`, and `t(T) != t(F)`.
pub fn is_boolean_term(alg: &FiniteBrl, t: &Term) -> Result<BoolTermReport, TermError> {
    check_unary(t)?;
    let f = term_function(alg, t)?;
    Ok(boolean_function_report(alg, &f, &boolean_skeleton(alg)))
}

/// `{a : t(a) = T}` is exactly the radical.
pub fn is_radical_term(alg: &FiniteBrl, t: &Term) -> Result<bool, TermError> {
    check_unary(t)?;
    let f = term_function(alg, t)?;
    Ok(cuts_out_radical(alg, &f, radical(alg).members()))
}

fn cuts_out_radical(alg: &FiniteBrl, f: &[Elem], rad: &ElemSet) -> bool {
    alg.elements().all(|a| (f[a] == alg.top()) == rad.contains(a))
}

/// The four properties a retraction onto the Boolean skeleton may be asked
/// to have, reported separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RetractionReport {
    pub values_in_b: bool,
    pub fixes_b: bool,
    pub idempotent: bool,
    /// Preserves `*`, `->`, `/\`, `\/`, `T` and `F`.
    pub is_homomorphism: bool,
}

impl RetractionReport {
    pub fn verdict(&self) -> bool {
        self.values_in_b && self.fixes_b && self.idempotent && self.is_homomorphism
    }
}

pub fn is_boolean_retraction_term(alg: &FiniteBrl, t: &Term) -> Result<RetractionReport, TermError> {
    check_unary(t)?;
    let f = term_function(alg, t)?;
    let b = boolean_skeleton(alg);
    let pairs = || alg.elements().flat_map(|x| alg.elements().map(move |y| (x, y)));
    let preserves = |op: fn(&FiniteBrl, Elem, Elem) -> Elem| {
        pairs().all(|(x, y)| f[op(alg, x, y)] == op(alg, f[x], f[y]))
    };
    let fixes_b = b.iter().all(|x| f[x] == x);
    Ok(RetractionReport {
        values_in_b: alg.elements().all(|a| b.contains(f[a])),
        fixes_b,
        idempotent: alg.elements().all(|a| f[f[a]] == f[a]),
        is_homomorphism: f[alg.top()] == alg.top()
            && f[alg.bot()] == alg.bot()
            && preserves(FiniteBrl::mult)
            && preserves(FiniteBrl::arrow)
            && preserves(FiniteBrl::meet)
            && preserves(FiniteBrl::join),
    })
}

/// `k.x^r`.
pub fn family_term(k: u32, r: u32) -> Term {
    Term::var("x").pow(r).times(k)
}

/// `(x^k -> b) * (b -> k.x) = T` with `b` substituted for the term.
pub fn gap_equation(k: u32, b: &Term) -> Equation {
    let x = Term::var("x");
    let lhs = x.clone().pow(k).arrow(b.clone()).mult(b.clone().arrow(x.times(k)));
    Equation::new(lhs, Term::Top)
}

/// Least `(k, r)` in lexicographic order such that `b(x) = k.x^r` is a Boolean
/// term for `alg` and `(x^k -> b(x)) * (b(x) -> k.x) = T` holds.
pub fn gap_certificate(alg: &FiniteBrl, max_k: usize, max_r: usize) -> Option<(usize, usize)> {
    let skeleton = boolean_skeleton(alg);
    for k in 1..=max_k {
        for r in 1..=max_r {
            let b = family_term(k as u32, r as u32);
            let f = term_function(alg, &b).expect("family terms are unary");
            if !boolean_function_report(alg, &f, &skeleton).is_boolean {
                continue;
            }
            if check_identity(alg, &gap_equation(k as u32, &b)).holds() {
                return Some((k, r));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TermPredicate {
    Boolean,
    Radical,
    Both,
}

/// All `(k, r)` with `1 <= k <= max_k`, `1 <= r <= max_r` whose `k.x^r`
/// satisfies `pred`, in lexicographic order.
pub fn find_term_in_family(
    alg: &FiniteBrl,
    pred: TermPredicate,
    max_k: usize,
    max_r: usize,
) -> Vec<(usize, usize)> {
    let skeleton = boolean_skeleton(alg);
    let rad = radical(alg);
    let mut out = Vec::new();
    for k in 1..=max_k {
        for r in 1..=max_r {
            let f = term_function(alg, &family_term(k as u32, r as u32)).expect("unary");
            let boolean = || boolean_function_report(alg, &f, &skeleton).is_boolean;
            let radical = || cuts_out_radical(alg, &f, rad.members());
            let ok = match pred {
                TermPredicate::Boolean => boolean(),
                TermPredicate::Radical => radical(),
                TermPredicate::Both => boolean() && radical(),
            };
            if ok {
                out.push((k, r));
            }
        }
    }
    out
}
