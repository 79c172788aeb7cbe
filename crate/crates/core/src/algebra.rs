//! Finite bounded residuated lattices given by operation tables.
//!
//! Elements are identified by their index `0..n`; names are only used for
//! display and for the text format. The monoid table and the order are the
//! primary data. Meet and join are always derived from the order, and the
//! residuum is either supplied (and cross-checked) or derived as
//! `b -> c = max { a : a * b <= c }`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::set::ElemSet;

/// Index of an element inside its algebra.
pub type Elem = usize;

/// How the lattice order is supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    /// Full `n x n` relation, `leq[a][b]` meaning `a <= b`.
    Leq(Vec<Vec<bool>>),
    /// Hasse cover pairs `(a, b)` meaning `a < b`; closed reflexively and transitively at load.
    Covers(Vec<(Elem, Elem)>),
}

/// Raw input for building an algebra.
#[derive(Clone, Debug)]
pub struct Tables {
    pub name: String,
    pub names: Vec<String>,
    pub top: Elem,
    pub bot: Elem,
    pub mult: Vec<Vec<Elem>>,
    pub order: Order,
    pub arrow: Option<Vec<Vec<Elem>>>,
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("table `{table}` must be {expected}x{expected}")]
    BadShape { table: &'static str, expected: usize },
    #[error("table `{table}` entry ({row},{col}) is out of range")]
    IndexOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
    },
    #[error("order is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("order is not a lattice: elements {0} and {1} lack a meet or a join")]
    NotALattice(Elem, Elem),
    #[error("not residuated: {{a : a * {0} <= {1}}} has no maximum")]
    NotResiduated(Elem, Elem),
    #[error("given arrow({b},{c}) = {given} but the residuum is {derived}")]
    ArrowMismatch {
        b: Elem,
        c: Elem,
        given: Elem,
        derived: Elem,
    },
    #[error("axioms violated:\n{0}")]
    AxiomsFailed(AxiomReport),
}

/// The defining laws checked by [`FiniteBrl::verify_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Commutativity,
    Identity,
    PartialOrder,
    Lattice,
    Bounds,
    Residuation,
    Integrality,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Associativity,
        Axiom::Commutativity,
        Axiom::Identity,
        Axiom::PartialOrder,
        Axiom::Lattice,
        Axiom::Bounds,
        Axiom::Residuation,
        Axiom::Integrality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "mult associative",
            Axiom::Commutativity => "mult commutative",
            Axiom::Identity => "top is the mult identity",
            Axiom::PartialOrder => "order is a partial order",
            Axiom::Lattice => "order has all binary meets and joins",
            Axiom::Bounds => "bot least, top greatest",
            Axiom::Residuation => "a*b <= c iff a <= b->c",
            Axiom::Integrality => "a*b <= a",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub holds: bool,
    /// Offending elements, in the order the law quantifies them.
    pub counterexample: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub names: Vec<String>,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is reported")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<40} {}", c.axiom.name(), if c.holds { "ok" } else { "FAIL" })?;
            if let Some(w) = &c.counterexample {
                let names: Vec<&str> = w.iter().map(|&e| self.names[e].as_str()).collect();
                write!(f, "  witness ({})", names.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Values of `a^0, a^1, ...` (or `0.a, 1.a, ...`) until they stop changing.
#[derive(Clone, Debug)]
struct Chain {
    values: Vec<Elem>,
    stable: bool,
}

/// A finite integral bounded residuated lattice.
///
/// All tables are immutable after construction, so the type is freely
/// shareable across threads.
#[derive(Clone, Debug)]
pub struct FiniteBrl {
    name: String,
    names: Vec<String>,
    top: Elem,
    bot: Elem,
    n: usize,
    mult: Vec<Elem>,
    arrow: Vec<Elem>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    powers: Vec<Chain>,
    multiples: Vec<Chain>,
}

impl FiniteBrl {
    /// Builds and fully validates an algebra: the order must be a lattice, a
    /// supplied arrow must equal the derived residuum, and every axiom must hold.
    pub fn new(tables: Tables) -> Result<Self, BuildError> {
        let a = Self::assemble(tables, true)?;
        let report = a.verify_axioms();
        if !report.all_hold() {
            return Err(BuildError::AxiomsFailed(report));
        }
        Ok(a)
    }

    /// Builds an algebra without checking the BRL axioms.
    ///
    /// The order must still be a lattice (meet and join are derived from it).
    /// A supplied arrow is taken verbatim; otherwise it is derived. Use
    /// [`FiniteBrl::verify_axioms`] to inspect the result. Structural analyses
    /// assume a valid BRL and may panic on their internal cross-checks otherwise.
    pub fn new_unchecked(tables: Tables) -> Result<Self, BuildError> {
        Self::assemble(tables, false)
    }

    fn assemble(t: Tables, cross_check: bool) -> Result<Self, BuildError> {
        let n = t.names.len();
        if n == 0 {
            return Err(BuildError::Empty);
        }
        let mut seen = HashMap::new();
        for (i, nm) in t.names.iter().enumerate() {
            if seen.insert(nm.clone(), i).is_some() {
                return Err(BuildError::DuplicateName(nm.clone()));
            }
        }
        if t.top >= n || t.bot >= n {
            return Err(BuildError::IndexOutOfRange {
                table: "constants",
                row: t.top,
                col: t.bot,
            });
        }
        let mult = flatten("mult", n, &t.mult)?;
        let leq = match &t.order {
            Order::Leq(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(BuildError::BadShape {
                        table: "leq",
                        expected: n,
                    });
                }
                rows.iter().flatten().copied().collect::<Vec<bool>>()
            }
            Order::Covers(pairs) => close_covers(n, pairs)?,
        };
        check_partial_order(n, &leq)?;
        let (meet, join) = derive_lattice_flat(n, &leq)?;
        let arrow = match &t.arrow {
            Some(rows) if !cross_check => flatten("arrow", n, rows)?,
            Some(rows) => {
                let given = flatten("arrow", n, rows)?;
                let derived = derive_arrow_flat(n, &mult, &leq)?;
                if let Some(i) = (0..n * n).find(|&i| given[i] != derived[i]) {
                    return Err(BuildError::ArrowMismatch {
                        b: i / n,
                        c: i % n,
                        given: given[i],
                        derived: derived[i],
                    });
                }
                derived
            }
            None => derive_arrow_flat(n, &mult, &leq)?,
        };
        let mut a = FiniteBrl {
            name: t.name,
            names: t.names,
            top: t.top,
            bot: t.bot,
            n,
            mult,
            arrow,
            leq,
            meet,
            join,
            powers: Vec::new(),
            multiples: Vec::new(),
        };
        a.powers = (0..n).map(|e| a.build_chain(e, a.top, |a, e, v| a.mult(e, v))).collect();
        a.multiples = (0..n).map(|e| a.build_chain(e, a.bot, |a, e, v| a.plus(e, v))).collect();
        Ok(a)
    }

    fn build_chain(&self, e: Elem, start: Elem, step: impl Fn(&Self, Elem, Elem) -> Elem) -> Chain {
        let mut values = vec![start];
        loop {
            let last = *values.last().unwrap();
            let next = step(self, e, last);
            if next == last && values.len() > 1 {
                return Chain { values, stable: true };
            }
            values.push(next);
            if values.len() > self.n + 2 {
                return Chain { values, stable: false };
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_name(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The one-element algebra (`top == bot`).
    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn mult(&self, a: Elem, b: Elem) -> Elem {
        self.mult[a * self.n + b]
    }

    pub fn arrow(&self, a: Elem, b: Elem) -> Elem {
        self.arrow[a * self.n + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.n + b]
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    /// `~a = a -> bot`.
    pub fn neg(&self, a: Elem) -> Elem {
        self.arrow(a, self.bot)
    }

    /// `a + b = ~(~a * ~b)`.
    pub fn plus(&self, a: Elem, b: Elem) -> Elem {
        self.neg(self.mult(self.neg(a), self.neg(b)))
    }

    /// `a^0 = top`, `a^(k+1) = a * a^k`.
    pub fn power(&self, a: Elem, k: usize) -> Elem {
        chain_lookup(&self.powers[a], k, |v| self.mult(a, v))
    }

    /// `0.a = bot`, `(k+1).a = a + k.a`.
    pub fn multiple(&self, k: usize, a: Elem) -> Elem {
        chain_lookup(&self.multiples[a], k, |v| self.plus(a, v))
    }

    pub fn mult_table(&self) -> Vec<Vec<Elem>> {
        self.mult.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    pub fn arrow_table(&self) -> Vec<Vec<Elem>> {
        self.arrow.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    pub fn leq_table(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }

    /// Hasse cover pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.lt(a, b) && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Upper set of `a` as a bitset.
    pub fn up_set(&self, a: Elem) -> ElemSet {
        ElemSet::from_elems(self.n, self.elements().filter(|&b| self.leq(a, b)))
    }

    /// Checks every defining law exhaustively. Violations are data, not errors.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.n;
        let all = || 0..n;
        let triples = || {
            all().flat_map(move |a| all().flat_map(move |b| all().map(move |c| (a, b, c))))
        };
        let pairs = || all().flat_map(move |a| all().map(move |b| (a, b)));

        let assoc = triples()
            .find(|&(a, b, c)| self.mult(self.mult(a, b), c) != self.mult(a, self.mult(b, c)))
            .map(|(a, b, c)| vec![a, b, c]);
        let comm = pairs()
            .find(|&(a, b)| self.mult(a, b) != self.mult(b, a))
            .map(|(a, b)| vec![a, b]);
        let ident = all()
            .find(|&a| self.mult(self.top, a) != a || self.mult(a, self.top) != a)
            .map(|a| vec![a]);
        let porder = check_partial_order(n, &self.leq).err().map(|_| {
            // locate a concrete witness
            all()
                .find(|&a| !self.leq(a, a))
                .map(|a| vec![a])
                .or_else(|| {
                    pairs()
                        .find(|&(a, b)| a != b && self.leq(a, b) && self.leq(b, a))
                        .map(|(a, b)| vec![a, b])
                })
                .or_else(|| {
                    triples()
                        .find(|&(a, b, c)| self.leq(a, b) && self.leq(b, c) && !self.leq(a, c))
                        .map(|(a, b, c)| vec![a, b, c])
                })
                .unwrap_or_default()
        });
        let lattice = pairs()
            .find(|&(a, b)| {
                let m = self.meet(a, b);
                let j = self.join(a, b);
                !(self.leq(m, a)
                    && self.leq(m, b)
                    && self.leq(a, j)
                    && self.leq(b, j)
                    && all().all(|c| {
                        (!(self.leq(c, a) && self.leq(c, b)) || self.leq(c, m))
                            && (!(self.leq(a, c) && self.leq(b, c)) || self.leq(j, c))
                    }))
            })
            .map(|(a, b)| vec![a, b]);
        let bounds = all()
            .find(|&a| !self.leq(self.bot, a) || !self.leq(a, self.top))
            .map(|a| vec![a]);
        let resid = triples()
            .find(|&(a, b, c)| self.leq(self.mult(a, b), c) != self.leq(a, self.arrow(b, c)))
            .map(|(a, b, c)| vec![a, b, c]);
        let integral = pairs()
            .find(|&(a, b)| !self.leq(self.mult(a, b), a))
            .map(|(a, b)| vec![a, b]);

        let results = [assoc, comm, ident, porder, lattice, bounds, resid, integral];
        AxiomReport {
            names: self.names.clone(),
            checks: Axiom::ALL
                .iter()
                .zip(results)
                .map(|(&axiom, cex)| AxiomCheck {
                    axiom,
                    holds: cex.is_none(),
                    counterexample: cex,
                })
                .collect(),
        }
    }
}

fn chain_lookup(chain: &Chain, k: usize, step: impl Fn(Elem) -> Elem) -> Elem {
    if k < chain.values.len() {
        return chain.values[k];
    }
    let last = *chain.values.last().unwrap();
    if chain.stable {
        return last;
    }
    let mut v = last;
    for _ in chain.values.len()..=k {
        v = step(v);
    }
    v
}

fn flatten(table: &'static str, n: usize, rows: &[Vec<Elem>]) -> Result<Vec<Elem>, BuildError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(BuildError::BadShape { table, expected: n });
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(BuildError::IndexOutOfRange { table, row: i, col: j });
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// Reflexive-transitive closure of cover pairs (Warshall).
fn close_covers(n: usize, pairs: &[(Elem, Elem)]) -> Result<Vec<bool>, BuildError> {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for &(a, b) in pairs {
        if a >= n || b >= n {
            return Err(BuildError::IndexOutOfRange {
                table: "covers",
                row: a,
                col: b,
            });
        }
        leq[a * n + b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    Ok(leq)
}

fn check_partial_order(n: usize, leq: &[bool]) -> Result<(), BuildError> {
    for a in 0..n {
        if !leq[a * n + a] {
            return Err(BuildError::NotAPartialOrder(format!("{a} <= {a} fails")));
        }
        for b in 0..n {
            if a != b && leq[a * n + b] && leq[b * n + a] {
                return Err(BuildError::NotAPartialOrder(format!(
                    "{a} and {b} are distinct but mutually below each other"
                )));
            }
            if leq[a * n + b] {
                for c in 0..n {
                    if leq[b * n + c] && !leq[a * n + c] {
                        return Err(BuildError::NotAPartialOrder(format!(
                            "{a} <= {b} <= {c} but not {a} <= {c}"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

fn derive_lattice_flat(n: usize, leq: &[bool]) -> Result<(Vec<Elem>, Vec<Elem>), BuildError> {
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<Elem> = (0..n).filter(|&c| leq[c * n + a] && leq[c * n + b]).collect();
            let upper: Vec<Elem> = (0..n).filter(|&c| leq[a * n + c] && leq[b * n + c]).collect();
            let glb = lower.iter().copied().find(|&m| lower.iter().all(|&c| leq[c * n + m]));
            let lub = upper.iter().copied().find(|&j| upper.iter().all(|&c| leq[j * n + c]));
            match (glb, lub) {
                (Some(m), Some(j)) => {
                    meet[a * n + b] = m;
                    join[a * n + b] = j;
                }
                _ => return Err(BuildError::NotALattice(a, b)),
            }
        }
    }
    Ok((meet, join))
}

fn derive_arrow_flat(n: usize, mult: &[Elem], leq: &[bool]) -> Result<Vec<Elem>, BuildError> {
    let mut arrow = vec![0; n * n];
    for b in 0..n {
        for c in 0..n {
            let cands: Vec<Elem> = (0..n).filter(|&a| leq[mult[a * n + b] * n + c]).collect();
            let max = cands.iter().copied().find(|&m| cands.iter().all(|&a| leq[a * n + m]));
            arrow[b * n + c] = max.ok_or(BuildError::NotResiduated(b, c))?;
        }
    }
    Ok(arrow)
}

/// Meet and join tables of a lattice order given as a full relation.
pub fn derive_lattice(leq: &[Vec<bool>]) -> Result<(Vec<Vec<Elem>>, Vec<Vec<Elem>>), BuildError> {
    let n = leq.len();
    if leq.iter().any(|r| r.len() != n) {
        return Err(BuildError::BadShape { table: "leq", expected: n });
    }
    let flat: Vec<bool> = leq.iter().flatten().copied().collect();
    check_partial_order(n, &flat)?;
    let (m, j) = derive_lattice_flat(n, &flat)?;
    Ok((unflatten(n, &m), unflatten(n, &j)))
}

/// Residuum `b -> c = max { a : a * b <= c }` of a monoid table over an order.
pub fn derive_arrow(mult: &[Vec<Elem>], leq: &[Vec<bool>]) -> Result<Vec<Vec<Elem>>, BuildError> {
    let n = mult.len();
    let m = flatten("mult", n, mult)?;
    if leq.len() != n || leq.iter().any(|r| r.len() != n) {
        return Err(BuildError::BadShape { table: "leq", expected: n });
    }
    let l: Vec<bool> = leq.iter().flatten().copied().collect();
    Ok(unflatten(n, &derive_arrow_flat(n, &m, &l)?))
}

fn unflatten<T: Copy>(n: usize, flat: &[T]) -> Vec<Vec<T>> {
    flat.chunks(n).map(<[T]>::to_vec).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// bot < a, b < top with mult = meet.
    fn diamond() -> FiniteBrl {
        // indices: 0 bot, 1 a, 2 b, 3 top
        let leq = Order::Covers(vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let meet = vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]];
        FiniteBrl::new(Tables {
            name: "diamond".into(),
            names: names(&["bot", "a", "b", "top"]),
            top: 3,
            bot: 0,
            mult: meet,
            order: leq,
            arrow: None,
        })
        .unwrap()
    }

    #[test]
    fn diamond_arrow_a_bot_is_b() {
        let d = diamond();
        // oracle: largest z with z /\ a = bot, by enumeration
        let cands: Vec<Elem> = d.elements().filter(|&z| d.meet(z, 1) == 0).collect();
        assert_eq!(cands, vec![0, 2]);
        assert_eq!(d.arrow(1, 0), 2);
        assert_eq!(d.neg(1), 2);
    }

    #[test]
    fn top_arrow_is_identity() {
        let d = diamond();
        for c in d.elements() {
            assert_eq!(d.arrow(d.top(), c), c);
        }
    }

    #[test]
    fn trivial_algebra_is_valid() {
        let t = FiniteBrl::new(Tables {
            name: "one".into(),
            names: names(&["0"]),
            top: 0,
            bot: 0,
            mult: vec![vec![0]],
            order: Order::Covers(vec![]),
            arrow: None,
        })
        .unwrap();
        assert!(t.verify_axioms().all_hold());
        assert_eq!(t.verify_axioms().checks.len(), Axiom::ALL.len());
        assert_eq!(t.power(0, 0), 0);
        assert_eq!(t.multiple(5, 0), 0);
    }

    #[test]
    fn chain_lattice_is_min_max() {
        let leq: Vec<Vec<bool>> = (0..4).map(|i| (0..4).map(|j| i <= j).collect()).collect();
        let (meet, join) = derive_lattice(&leq).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(meet[i][j], i.min(j));
                assert_eq!(join[i][j], i.max(j));
            }
        }
    }

    #[test]
    fn missing_lub_is_not_a_lattice() {
        // bot < a, b < c, d : two maximal elements, no top
        let mut leq = vec![vec![false; 5]; 5];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for x in 1..5 {
            leq[0][x] = true;
        }
        for lo in [1, 2] {
            for hi in [3, 4] {
                leq[lo][hi] = true;
            }
        }
        assert!(matches!(derive_lattice(&leq), Err(BuildError::NotALattice(_, _))));
    }

    #[test]
    fn not_residuated_is_reported() {
        // all products below top are bot, so {z : z * a <= bot} = {bot, a, b} has no maximum
        let leq = vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ];
        let mut mult = vec![vec![0; 4]; 4];
        for x in 0..4 {
            mult[3][x] = x;
            mult[x][3] = x;
        }
        assert!(matches!(derive_arrow(&mult, &leq), Err(BuildError::NotResiduated(1, 0))));
    }

    #[test]
    fn arrow_mismatch_is_a_load_error() {
        let d = diamond();
        let mut arrow = d.arrow_table();
        arrow[1][0] = 0;
        let err = FiniteBrl::new(Tables {
            name: "x".into(),
            names: d.names().to_vec(),
            top: 3,
            bot: 0,
            mult: d.mult_table(),
            order: Order::Leq(d.leq_table()),
            arrow: Some(arrow),
        })
        .unwrap_err();
        assert!(matches!(err, BuildError::ArrowMismatch { b: 1, c: 0, given: 0, derived: 2 }));
    }

    #[test]
    fn cyclic_covers_rejected() {
        let err = FiniteBrl::new(Tables {
            name: "x".into(),
            names: names(&["a", "b"]),
            top: 1,
            bot: 0,
            mult: vec![vec![0, 0], vec![0, 1]],
            order: Order::Covers(vec![(0, 1), (1, 0)]),
            arrow: None,
        })
        .unwrap_err();
        assert!(matches!(err, BuildError::NotAPartialOrder(_)));
    }

    #[test]
    fn covers_recovers_hasse_diagram() {
        let d = diamond();
        assert_eq!(d.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }
}
