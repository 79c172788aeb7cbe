use std::collections::HashMap;

use serde::Serialize;

use super::{Equation, Term, TermError};
use crate::algebra::{Elem, FiniteBrl};

/// Anything terms can be evaluated in.
pub trait Interpretation {
    type Value: Copy + Eq;

    fn top(&self) -> Self::Value;
    fn bot(&self) -> Self::Value;
    fn mult(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn arrow(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn meet(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn join(&self, a: Self::Value, b: Self::Value) -> Self::Value;

    fn neg(&self, a: Self::Value) -> Self::Value {
        self.arrow(a, self.bot())
    }

    fn plus(&self, a: Self::Value, b: Self::Value) -> Self::Value {
        self.neg(self.mult(self.neg(a), self.neg(b)))
    }

    fn power(&self, a: Self::Value, n: u32) -> Self::Value {
        (0..n).fold(self.top(), |acc, _| self.mult(a, acc))
    }

    fn multiple(&self, n: u32, a: Self::Value) -> Self::Value {
        (0..n).fold(self.bot(), |acc, _| self.plus(a, acc))
    }
}

impl Interpretation for FiniteBrl {
    type Value = Elem;

    fn top(&self) -> Elem {
        FiniteBrl::top(self)
    }
    fn bot(&self) -> Elem {
        FiniteBrl::bot(self)
    }
    fn mult(&self, a: Elem, b: Elem) -> Elem {
        FiniteBrl::mult(self, a, b)
    }
    fn arrow(&self, a: Elem, b: Elem) -> Elem {
        FiniteBrl::arrow(self, a, b)
    }
    fn meet(&self, a: Elem, b: Elem) -> Elem {
        FiniteBrl::meet(self, a, b)
    }
    fn join(&self, a: Elem, b: Elem) -> Elem {
        FiniteBrl::join(self, a, b)
    }
    fn power(&self, a: Elem, n: u32) -> Elem {
        FiniteBrl::power(self, a, n as usize)
    }
    fn multiple(&self, n: u32, a: Elem) -> Elem {
        FiniteBrl::multiple(self, n as usize, a)
    }
}

impl Term {
    /// Structural evaluation in any interpretation.
    pub fn eval_in<I: Interpretation>(
        &self,
        alg: &I,
        env: &dyn Fn(&str) -> Option<I::Value>,
    ) -> Result<I::Value, TermError> {
        let go = |t: &Term| t.eval_in(alg, env);
        Ok(match self {
            Term::Var(v) => env(v).ok_or_else(|| TermError::UnboundVariable(v.clone()))?,
            Term::Top => alg.top(),
            Term::Bot => alg.bot(),
            Term::Mult(a, b) => alg.mult(go(a)?, go(b)?),
            Term::Arrow(a, b) => alg.arrow(go(a)?, go(b)?),
            Term::Meet(a, b) => alg.meet(go(a)?, go(b)?),
            Term::Join(a, b) => alg.join(go(a)?, go(b)?),
            Term::Plus(a, b) => alg.plus(go(a)?, go(b)?),
            Term::Neg(a) => alg.neg(go(a)?),
            Term::Pow(a, n) => alg.power(go(a)?, *n),
            Term::Mul(n, a) => alg.multiple(*n, go(a)?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    Top,
    Bot,
    Mult(usize, usize),
    Arrow(usize, usize),
    Meet(usize, usize),
    Join(usize, usize),
    Plus(usize, usize),
    Neg(usize),
    Pow(usize, u32),
    Mul(u32, usize),
}

/// A term flattened into a hash-consed DAG: shared subterms are evaluated once.
#[derive(Clone, Debug)]
pub struct CompiledTerm {
    nodes: Vec<Node>,
    vars: Vec<String>,
}

impl CompiledTerm {
    /// Compiles `t`; variables are numbered in the order of `vars`.
    pub fn new(t: &Term, vars: &[String]) -> Result<Self, TermError> {
        let mut c = Compiler {
            nodes: Vec::new(),
            memo: HashMap::new(),
            vars,
        };
        c.compile(t)?;
        Ok(CompiledTerm {
            nodes: c.nodes,
            vars: vars.to_vec(),
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// `assignment[i]` is the value of `vars()[i]`.
    pub fn eval(&self, alg: &FiniteBrl, assignment: &[Elem]) -> Elem {
        let mut vals = vec![0; self.nodes.len()];
        self.eval_into(alg, assignment, &mut vals)
    }

    fn eval_into(&self, alg: &FiniteBrl, assignment: &[Elem], vals: &mut [Elem]) -> Elem {
        for (i, node) in self.nodes.iter().enumerate() {
            vals[i] = match *node {
                Node::Var(v) => assignment[v],
                Node::Top => alg.top(),
                Node::Bot => alg.bot(),
                Node::Mult(a, b) => alg.mult(vals[a], vals[b]),
                Node::Arrow(a, b) => alg.arrow(vals[a], vals[b]),
                Node::Meet(a, b) => alg.meet(vals[a], vals[b]),
                Node::Join(a, b) => alg.join(vals[a], vals[b]),
                Node::Plus(a, b) => alg.plus(vals[a], vals[b]),
                Node::Neg(a) => alg.neg(vals[a]),
                Node::Pow(a, n) => alg.power(vals[a], n as usize),
                Node::Mul(n, a) => alg.multiple(n as usize, vals[a]),
            };
        }
        vals[self.nodes.len() - 1]
    }
}

struct Compiler<'a> {
    nodes: Vec<Node>,
    memo: HashMap<Node, usize>,
    vars: &'a [String],
}

impl Compiler<'_> {
    fn intern(&mut self, node: Node) -> usize {
        if let Some(&i) = self.memo.get(&node) {
            return i;
        }
        self.nodes.push(node);
        self.memo.insert(node, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    fn compile(&mut self, t: &Term) -> Result<usize, TermError> {
        let node = match t {
            Term::Var(v) => Node::Var(
                self.vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| TermError::UnboundVariable(v.clone()))?,
            ),
            Term::Top => Node::Top,
            Term::Bot => Node::Bot,
            Term::Mult(a, b) => Node::Mult(self.compile(a)?, self.compile(b)?),
            Term::Arrow(a, b) => Node::Arrow(self.compile(a)?, self.compile(b)?),
            Term::Meet(a, b) => Node::Meet(self.compile(a)?, self.compile(b)?),
            Term::Join(a, b) => Node::Join(self.compile(a)?, self.compile(b)?),
            Term::Plus(a, b) => Node::Plus(self.compile(a)?, self.compile(b)?),
            Term::Neg(a) => Node::Neg(self.compile(a)?),
            Term::Pow(a, n) => Node::Pow(self.compile(a)?, *n),
            Term::Mul(n, a) => Node::Mul(*n, self.compile(a)?),
        };
        Ok(self.intern(node))
    }
}

/// Evaluates `t` under a name-keyed environment.
pub fn eval(alg: &FiniteBrl, t: &Term, env: &HashMap<String, Elem>) -> Result<Elem, TermError> {
    let vars: Vec<String> = t.vars().into_iter().collect();
    let assignment = vars
        .iter()
        .map(|v| env.get(v).copied().ok_or_else(|| TermError::UnboundVariable(v.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let c = CompiledTerm::new(t, &vars)?;
    Ok(c.eval(alg, &assignment))
}

/// The function `a |-> t(a)` of a unary term, indexed by element.
pub fn term_function(alg: &FiniteBrl, t: &Term) -> Result<Vec<Elem>, TermError> {
    let vars: Vec<String> = t.vars().into_iter().collect();
    if vars.len() != 1 {
        return Err(TermError::NotUnary(vars.len()));
    }
    let c = CompiledTerm::new(t, &vars)?;
    let mut scratch = vec![0; c.node_count()];
    Ok(alg.elements().map(|a| c.eval_into(alg, &[a], &mut scratch)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityResult {
    Holds,
    /// First failing assignment in lexicographic element order, variables by name.
    Counterexample(Vec<(String, Elem)>),
}

impl IdentityResult {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityResult::Holds)
    }
}

/// Exhaustive check of `e` over all assignments.
pub fn check_identity(alg: &FiniteBrl, e: &Equation) -> IdentityResult {
    let vars: Vec<String> = e.vars().into_iter().collect();
    let lhs = CompiledTerm::new(&e.lhs, &vars).expect("variables collected from the equation");
    let rhs = CompiledTerm::new(&e.rhs, &vars).expect("variables collected from the equation");
    let n = alg.len();
    let mut assignment = vec![0; vars.len()];
    let mut sl = vec![0; lhs.node_count()];
    let mut sr = vec![0; rhs.node_count()];
    loop {
        if lhs.eval_into(alg, &assignment, &mut sl) != rhs.eval_into(alg, &assignment, &mut sr) {
            return IdentityResult::Counterexample(vars.into_iter().zip(assignment).collect());
        }
        // odometer, last variable fastest
        let mut i = vars.len();
        loop {
            if i == 0 {
                return IdentityResult::Holds;
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < n {
                break;
            }
            assignment[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_lukasiewicz, make_nogap5, make_w9};
    use crate::terms::{parse_equation, parse_term};

    fn at(alg: &FiniteBrl, src: &str, x: &str) -> String {
        let t = parse_term(src).unwrap();
        let env = HashMap::from([("x".to_string(), alg.index_of(x).unwrap())]);
        alg.elem_name(eval(alg, &t, &env).unwrap()).to_string()
    }

    #[test]
    fn w9_values() {
        let w9 = make_w9();
        assert_eq!(at(&w9, "3.x^3", "4"), "bot");
        assert_eq!(at(&w9, "3.x^3", "1"), "top");
        for a in w9.names() {
            assert_eq!(at(&w9, "x -> x", a), "top");
        }
    }

    #[test]
    fn compiled_matches_structural_and_expanded() {
        let w9 = make_w9();
        let t = parse_term("(x^3 -> 3.x^3) * (3.x^3 -> 3.x) \\/ ~x + x^2").unwrap();
        let expanded = t.expand();
        let f = term_function(&w9, &t).unwrap();
        for a in w9.elements() {
            let env = |_: &str| Some(a);
            assert_eq!(t.eval_in(&w9, &env).unwrap(), f[a]);
            assert_eq!(expanded.eval_in(&w9, &env).unwrap(), f[a]);
        }
    }

    #[test]
    fn hash_consing_shares_subterms() {
        let t = parse_term("3.x^3 * 3.x^3").unwrap();
        let c = CompiledTerm::new(&t, &["x".to_string()]).unwrap();
        // x, x^3, 3.x^3, product
        assert_eq!(c.node_count(), 4);
    }

    #[test]
    fn unbound_variable() {
        let t = parse_term("x * y").unwrap();
        let env = HashMap::from([("x".to_string(), 0)]);
        assert_eq!(
            eval(&make_w9(), &t, &env),
            Err(TermError::UnboundVariable("y".into()))
        );
    }

    #[test]
    fn identities() {
        let l3 = make_lukasiewicz(2);
        assert!(check_identity(&l3, &parse_equation("2.x \\/ 2.~x = T").unwrap()).holds());
        assert!(check_identity(&make_w9(), &parse_equation("x = x").unwrap()).holds());
        let ng = make_nogap5();
        let a = ng.index_of("a").unwrap();
        for k in 1..=10 {
            let e = parse_equation(&format!("{k}.x \\/ {k}.~x = T")).unwrap();
            assert_eq!(
                check_identity(&ng, &e),
                IdentityResult::Counterexample(vec![("x".into(), a)])
            );
        }
    }

    #[test]
    fn counterexample_is_lexicographically_first() {
        let l3 = make_lukasiewicz(2);
        // x * y = x fails first at x=1 (index 1), y=0
        let e = parse_equation("x * y = x").unwrap();
        assert_eq!(
            check_identity(&l3, &e),
            IdentityResult::Counterexample(vec![("x".into(), 1), ("y".into(), 0)])
        );
    }
}
