//! Implicative filters, their congruences and quotients, prime and maximal
//! filters, the radical, and Stone (ultra)filters.
//!
//! In a finite algebra every filter is principal, `<a> = { b : a^n <= b }`,
//! so [`all_filters`] only generates one filter per element. The exhaustive
//! subset scan in [`all_filters_exhaustive`] is kept as an independent check.

use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::algebra::{Elem, FiniteBrl, Order, Tables};
use crate::set::ElemSet;
use crate::structure::boolean_skeleton;

/// Largest algebra the subset scan accepts.
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("subset scan limited to {limit} elements, algebra has {size}")]
pub struct TooLarge {
    pub size: usize,
    pub limit: usize,
}

/// An implicative filter: contains top, upward closed, closed under `*`.
#[derive(Clone, Debug)]
pub struct Filter {
    members: ElemSet,
    generator: Option<Elem>,
}

impl PartialEq for Filter {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Filter {}

impl Hash for Filter {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Filter {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// An element generating the filter, when one is known.
    pub fn generator(&self) -> Option<Elem> {
        self.generator
    }

    /// `bot` is not a member.
    pub fn is_proper(&self, alg: &FiniteBrl) -> bool {
        !self.contains(alg.bot())
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn names(&self, alg: &FiniteBrl) -> Vec<String> {
        self.members.iter().map(|e| alg.elem_name(e).to_string()).collect()
    }
}

/// Smallest filter containing `gens`: the upward closure of all finite
/// products of generators. `<{}> = {T}`.
pub fn generate_filter(alg: &FiniteBrl, gens: &[Elem]) -> Filter {
    let n = alg.len();
    let mut products = ElemSet::from_elems(n, [alg.top()]);
    let mut frontier = vec![alg.top()];
    while let Some(p) = frontier.pop() {
        for &g in gens {
            let q = alg.mult(p, g);
            if products.insert(q) {
                frontier.push(q);
            }
        }
    }
    let members = ElemSet::from_elems(
        n,
        alg.elements().filter(|&b| products.iter().any(|p| alg.leq(p, b))),
    );
    let mut generator = match gens {
        [g] => Some(*g),
        _ => None,
    };
    if gens.is_empty() {
        generator = Some(alg.top());
    }
    Filter { members, generator }
}

pub fn principal_filter(alg: &FiniteBrl, a: Elem) -> Filter {
    generate_filter(alg, &[a])
}

/// Every filter, as `{<a> : a in A}` without repeats, ordered by size and
/// then by least generator. Each filter records its least generator.
pub fn all_filters(alg: &FiniteBrl) -> Vec<Filter> {
    let mut out: Vec<Filter> = Vec::new();
    for a in alg.elements() {
        let f = principal_filter(alg, a);
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out.sort_by_key(|f| (f.len(), f.generator));
    out
}

/// Checks the three filter conditions on an arbitrary subset.
pub fn is_filter(alg: &FiniteBrl, s: &ElemSet) -> bool {
    s.contains(alg.top())
        && s.iter().all(|a| alg.elements().all(|b| !alg.leq(a, b) || s.contains(b)))
        && s.iter().all(|a| s.iter().all(|b| s.contains(alg.mult(a, b))))
}

/// Every filter found by scanning all subsets containing top. Only for
/// algebras with at most [`EXHAUSTIVE_LIMIT`] elements.
pub fn all_filters_exhaustive(alg: &FiniteBrl) -> Result<Vec<Filter>, TooLarge> {
    let n = alg.len();
    if n > EXHAUSTIVE_LIMIT {
        return Err(TooLarge {
            size: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let others: Vec<Elem> = alg.elements().filter(|&e| e != alg.top()).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut s = ElemSet::from_elems(n, [alg.top()]);
        for (i, &e) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(e);
            }
        }
        if is_filter(alg, &s) {
            out.push(Filter {
                members: s,
                generator: None,
            });
        }
    }
    Ok(out)
}

/// A partition of the universe compatible with the operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    /// Classes ordered by least member; each class sorted.
    pub classes: Vec<Vec<Elem>>,
    pub class_of: Vec<usize>,
}

impl Congruence {
    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Inclusion of the relations.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| other.related(c[0], x)))
    }
}

/// `x ~ y` iff `x -> y` and `y -> x` are both in the filter.
pub fn congruence_of(alg: &FiniteBrl, f: &Filter) -> Congruence {
    let n = alg.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for a in alg.elements() {
        if class_of[a] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let class: Vec<Elem> = alg
            .elements()
            .filter(|&b| f.contains(alg.arrow(a, b)) && f.contains(alg.arrow(b, a)))
            .collect();
        for &b in &class {
            assert_eq!(class_of[b], usize::MAX, "filter relation is not transitive");
            class_of[b] = idx;
        }
        classes.push(class);
    }
    let cong = Congruence { classes, class_of };
    let ops: [fn(&FiniteBrl, Elem, Elem) -> Elem; 4] =
        [FiniteBrl::mult, FiniteBrl::arrow, FiniteBrl::meet, FiniteBrl::join];
    for op in ops {
        for a in alg.elements() {
            for b in alg.elements() {
                for c in &cong.classes[cong.class_of[a]] {
                    assert!(
                        cong.related(op(alg, a, b), op(alg, *c, b)),
                        "relation induced by a filter is not a congruence"
                    );
                }
            }
        }
    }
    assert!(
        cong.classes[cong.class_of[alg.top()]].iter().copied().eq(f.members.iter()),
        "class of top differs from the filter"
    );
    cong
}

/// `A/F` together with the projection `a |-> a/F`. Classes are named after
/// their least-index member.
pub fn quotient(alg: &FiniteBrl, f: &Filter) -> (FiniteBrl, Vec<Elem>) {
    let cong = congruence_of(alg, f);
    let reps: Vec<Elem> = cong.classes.iter().map(|c| c[0]).collect();
    let m = reps.len();
    let table = |op: fn(&FiniteBrl, Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        reps.iter()
            .map(|&x| reps.iter().map(|&y| cong.class_of[op(alg, x, y)]).collect())
            .collect()
    };
    let leq: Vec<Vec<bool>> = reps
        .iter()
        .map(|&x| reps.iter().map(|&y| f.contains(alg.arrow(x, y))).collect())
        .collect();
    let gen_name = match f.generator {
        Some(g) => alg.elem_name(g).to_string(),
        None => format!("{{{}}}", f.names(alg).join(",")),
    };
    let q = FiniteBrl::new(Tables {
        name: format!("{}/<{}>", alg.name(), gen_name),
        names: reps.iter().map(|&r| alg.elem_name(r).to_string()).collect(),
        top: cong.class_of[alg.top()],
        bot: cong.class_of[alg.bot()],
        mult: table(FiniteBrl::mult),
        order: Order::Leq(leq),
        arrow: Some(table(FiniteBrl::arrow)),
    })
    .unwrap_or_else(|e| panic!("quotient by a filter is not a BRL: {e}"));
    debug_assert_eq!(q.len(), m);
    (q, cong.class_of)
}

/// `a \/ b = T` forces `a = T` or `b = T`.
pub fn top_join_irreducible(alg: &FiniteBrl) -> bool {
    let t = alg.top();
    alg.elements()
        .all(|a| alg.elements().all(|b| alg.join(a, b) != t || a == t || b == t))
}

/// Proper, and `a \/ b` in F forces `a` or `b` in F.
pub fn is_prime(alg: &FiniteBrl, f: &Filter) -> bool {
    f.is_proper(alg)
        && alg.elements().all(|a| {
            alg.elements()
                .all(|b| !f.contains(alg.join(a, b)) || f.contains(a) || f.contains(b))
        })
}

/// Proper, and no proper filter lies strictly above it.
pub fn is_maximal_by_definition(alg: &FiniteBrl, f: &Filter) -> bool {
    f.is_proper(alg)
        && !all_filters(alg)
            .iter()
            .any(|g| g.is_proper(alg) && g != f && f.is_subset(g))
}

/// `a` is outside F iff `~(a^n)` is in F for some `n > 0`.
pub fn is_maximal_by_mx(alg: &FiniteBrl, f: &Filter) -> bool {
    f.is_proper(alg)
        && alg.elements().all(|a| {
            let witness = (1..=alg.len()).any(|n| f.contains(alg.neg(alg.power(a, n))));
            !f.contains(a) == witness
        })
}

/// Maximality, computed both ways; the two must agree.
pub fn is_maximal(alg: &FiniteBrl, f: &Filter) -> bool {
    let by_def = is_maximal_by_definition(alg, f);
    let by_mx = is_maximal_by_mx(alg, f);
    assert_eq!(by_def, by_mx, "maximality tests disagree on {:?}", f.members);
    by_def
}

pub fn prime_filters(alg: &FiniteBrl) -> Vec<Filter> {
    all_filters(alg).into_iter().filter(|f| is_prime(alg, f)).collect()
}

pub fn maximal_filters(alg: &FiniteBrl) -> Vec<Filter> {
    all_filters(alg).into_iter().filter(|f| is_maximal(alg, f)).collect()
}

/// Minimal elements of the poset of prime filters. Their intersection is
/// `{T}` in a non-trivial algebra.
pub fn minimal_primes(alg: &FiniteBrl) -> Vec<Filter> {
    let primes = prime_filters(alg);
    let minimal: Vec<Filter> = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect();
    if !alg.is_trivial() {
        let meet = intersect_all(alg, &minimal);
        assert!(
            meet.len() == 1 && meet.contains(alg.top()),
            "minimal primes do not intersect to {{T}}"
        );
    }
    minimal
}

fn intersect_all(alg: &FiniteBrl, fs: &[Filter]) -> ElemSet {
    fs.iter()
        .fold(ElemSet::full(alg.len()), |acc, f| acc.intersection(&f.members))
}

/// Intersection of the maximal filters (the whole algebra when it is trivial).
pub fn radical(alg: &FiniteBrl) -> Filter {
    let members = intersect_all(alg, &maximal_filters(alg));
    Filter {
        members,
        generator: None,
    }
}

/// `{ a : for all n >= 0 there is k > 0 with k.a^n = T }`, with `n` and `k`
/// bounded by `|A|` (both sequences are stable from there on).
pub fn radical_by_formula(alg: &FiniteBrl) -> ElemSet {
    let n = alg.len();
    ElemSet::from_elems(
        n,
        alg.elements().filter(|&a| {
            (0..=n).all(|e| (1..=n).any(|k| alg.multiple(k, alg.power(a, e)) == alg.top()))
        }),
    )
}

pub fn radical_formula_check(alg: &FiniteBrl) -> bool {
    radical_by_formula(alg) == *radical(alg).members()
}

/// The radical equals `{ a : k.a^n = T for all n > 0 }`.
pub fn is_k_radical(alg: &FiniteBrl, k: usize) -> bool {
    let n = alg.len();
    let set = ElemSet::from_elems(
        n,
        alg.elements()
            .filter(|&a| (1..=n).all(|e| alg.multiple(k, alg.power(a, e)) == alg.top())),
    );
    set == *radical(alg).members()
}

/// Filters generated by lattice filters of the Boolean skeleton. In a finite
/// Boolean algebra every lattice filter is `{ c : b <= c }` for some `b`, and
/// it generates the same filter as `b` alone.
pub fn stone_filters(alg: &FiniteBrl) -> Vec<Filter> {
    let skel = boolean_skeleton(alg);
    let mut out: Vec<Filter> = Vec::new();
    for b in skel.iter() {
        let upper: Vec<Elem> = skel.iter().filter(|&c| alg.leq(b, c)).collect();
        let mut f = generate_filter(alg, &upper);
        f.generator = Some(b);
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out.sort_by_key(|f| (f.len(), f.generator));
    out
}

/// Stone filters whose Boolean part is an ultrafilter of the skeleton,
/// i.e. those generated by atoms of the skeleton.
pub fn stone_ultrafilters(alg: &FiniteBrl) -> Vec<Filter> {
    let skel = boolean_skeleton(alg);
    let bot = alg.bot();
    let atoms: Vec<Elem> = skel
        .iter()
        .filter(|&b| b != bot && !skel.iter().any(|c| c != bot && alg.lt(c, b)))
        .collect();
    let out: Vec<Filter> = stone_filters(alg)
        .into_iter()
        .filter(|f| f.generator.is_some_and(|g| atoms.contains(&g)))
        .collect();
    if !alg.is_trivial() {
        let meet = intersect_all(alg, &out);
        assert!(
            meet.iter().all(|e| e == alg.top()),
            "Stone ultrafilters intersect above {{T}}"
        );
    }
    out
}

/// `F = <F meet B(A)>`.
pub fn is_stone_filter(alg: &FiniteBrl, f: &Filter) -> bool {
    let skel = boolean_skeleton(alg);
    let part: Vec<Elem> = skel.iter().filter(|&b| f.contains(b)).collect();
    generate_filter(alg, &part) == *f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        direct_product, is_isomorphic, make_lukasiewicz, make_nogap5, make_trivial, make_w9,
    };

    fn set(alg: &FiniteBrl, names: &[&str]) -> ElemSet {
        ElemSet::from_elems(alg.len(), names.iter().map(|n| alg.index_of(n).unwrap()))
    }

    #[test]
    fn w9_generated_filters() {
        let w9 = make_w9();
        assert_eq!(*principal_filter(&w9, 1).members(), set(&w9, &["top", "1", "2", "3"]));
        assert!(principal_filter(&w9, 4).members().is_full());
        assert_eq!(principal_filter(&w9, w9.top()).len(), 1);
        assert_eq!(generate_filter(&w9, &[]).len(), 1);
    }

    #[test]
    fn w9_filter_inventory() {
        let w9 = make_w9();
        let fs = all_filters(&w9);
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0].len(), 1);
        assert_eq!(*fs[1].members(), set(&w9, &["top", "1", "2", "3"]));
        assert!(fs[2].members().is_full());
        assert_eq!(fs[1].generator(), Some(1));
    }

    #[test]
    fn chains_are_simple() {
        for n in 1..=6 {
            let l = make_lukasiewicz(n);
            assert_eq!(all_filters(&l).len(), 2);
            assert_eq!(all_filters_exhaustive(&l).unwrap().len(), 2);
        }
        assert_eq!(all_filters(&make_trivial()).len(), 1);
    }

    #[test]
    fn exhaustive_limit() {
        let big = direct_product(&make_w9(), &make_lukasiewicz(2));
        assert_eq!(
            all_filters_exhaustive(&big).unwrap_err(),
            TooLarge { size: 27, limit: 12 }
        );
    }

    #[test]
    fn quotients_of_w9() {
        let w9 = make_w9();
        let rad = radical(&w9);
        let (q, proj) = quotient(&w9, &rad);
        assert_eq!(q.len(), 3);
        assert!(is_isomorphic(&q, &make_lukasiewicz(2)).is_some());
        assert_eq!(proj[1], proj[w9.top()]);

        let (same, _) = quotient(&w9, &principal_filter(&w9, w9.top()));
        assert!(is_isomorphic(&same, &w9).is_some());
        let (one, _) = quotient(&w9, &principal_filter(&w9, w9.bot()));
        assert!(one.is_trivial());
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let w9 = make_w9();
        for f in all_filters(&w9) {
            let (q, p) = quotient(&w9, &f);
            for a in w9.elements() {
                for b in w9.elements() {
                    assert_eq!(p[w9.mult(a, b)], q.mult(p[a], p[b]));
                    assert_eq!(p[w9.arrow(a, b)], q.arrow(p[a], p[b]));
                    assert_eq!(p[w9.meet(a, b)], q.meet(p[a], p[b]));
                    assert_eq!(p[w9.join(a, b)], q.join(p[a], p[b]));
                }
            }
            // class of top is the filter
            let top_class: Vec<Elem> = w9.elements().filter(|&a| p[a] == q.top()).collect();
            assert_eq!(top_class, f.members().to_vec());
        }
    }

    #[test]
    fn maximal_and_prime() {
        let w9 = make_w9();
        let maxes = maximal_filters(&w9);
        assert_eq!(maxes.len(), 1);
        assert_eq!(*maxes[0].members(), set(&w9, &["top", "1", "2", "3"]));

        let ng = make_nogap5();
        let maxes = maximal_filters(&ng);
        let got: Vec<ElemSet> = maxes.iter().map(|f| f.members().clone()).collect();
        assert_eq!(got, vec![set(&ng, &["a", "c", "top"]), set(&ng, &["b", "c", "top"])]);
        assert!(maxes.iter().all(|m| is_prime(&ng, m)));

        let l2 = make_lukasiewicz(1);
        assert!(is_maximal(&l2, &principal_filter(&l2, l2.top())));
        // improper filters are neither
        assert!(!is_prime(&l2, &principal_filter(&l2, l2.bot())));
        assert!(!is_maximal(&l2, &principal_filter(&l2, l2.bot())));
    }

    #[test]
    fn nogap5_minimal_primes() {
        // top is join irreducible (c is the only coatom), so {T} is prime
        let ng = make_nogap5();
        assert_eq!(prime_filters(&ng).len(), 3);
        let mp = minimal_primes(&ng);
        assert_eq!(mp.len(), 1);
        assert_eq!(mp[0].len(), 1);
        assert!(top_join_irreducible(&ng));
    }

    #[test]
    fn radicals() {
        let w9 = make_w9();
        assert_eq!(*radical(&w9).members(), set(&w9, &["top", "1", "2", "3"]));
        assert!(radical_formula_check(&w9));
        assert!(is_k_radical(&make_lukasiewicz(3), 3));
        let l2 = make_lukasiewicz(1);
        assert_eq!(radical(&l2).len(), 1);
        let t = make_trivial();
        assert!(radical(&t).members().is_full());
    }

    #[test]
    fn stone_ultrafilter_inventory() {
        let w9 = make_w9();
        let u = stone_ultrafilters(&w9);
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].len(), 1);

        let l2 = make_lukasiewicz(1);
        let sq = direct_product(&l2, &l2);
        assert_eq!(stone_ultrafilters(&sq).len(), 2);

        assert!(stone_ultrafilters(&make_trivial()).is_empty());
    }

    #[test]
    fn stone_filters_match_definition() {
        for alg in [make_w9(), make_nogap5(), direct_product(&make_lukasiewicz(1), &make_lukasiewicz(2))] {
            let by_def: Vec<Filter> =
                all_filters(&alg).into_iter().filter(|f| is_stone_filter(&alg, f)).collect();
            let st = stone_filters(&alg);
            assert_eq!(by_def.len(), st.len());
            assert!(st.iter().all(|f| by_def.contains(f)));
        }
    }
}
