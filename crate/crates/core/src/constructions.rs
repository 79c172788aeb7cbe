//! Example algebras and the class operators: products, subalgebras,
//! homomorphic images, and isomorphism testing.

use crate::algebra::{Elem, FiniteBrl, Order, Tables};
use crate::filters::{all_filters, quotient, TooLarge};
use crate::set::ElemSet;

/// Largest algebra [`all_subuniverses`] scans.
pub const SUBUNIVERSE_LIMIT: usize = 20;

/// The Łukasiewicz chain with `n + 1` elements `0 < 1 < ... < n`.
///
/// # Panics
/// If `n == 0`.
pub fn make_lukasiewicz(n: usize) -> FiniteBrl {
    assert!(n >= 1, "Lukasiewicz chain needs n >= 1");
    let els = 0..=n;
    let mult = els.clone().map(|a| els.clone().map(|b| (a + b).saturating_sub(n)).collect()).collect();
    let arrow = els.clone().map(|a| els.clone().map(|b| (n + b - a).min(n)).collect()).collect();
    let leq = els.clone().map(|a| els.clone().map(|b| a <= b).collect()).collect();
    FiniteBrl::new(Tables {
        name: format!("L{}", n + 1),
        names: els.map(|a| a.to_string()).collect(),
        top: n,
        bot: 0,
        mult,
        order: Order::Leq(leq),
        arrow: Some(arrow),
    })
    .expect("Lukasiewicz chains are BRLs")
}

const T: Elem = 0;
const B: Elem = 8;

/// Element names of W9, in index order.
pub const W9_NAMES: [&str; 9] = ["top", "1", "2", "3", "4", "5", "6", "7", "bot"];

/// Product table of W9. The entry `6*6` is `7`: with `6*6 = bot` the set
/// `{a : a*6 = bot}` contains the incomparable `3` and `6` and has no maximum.
#[rustfmt::skip]
pub const W9_MULT: [[Elem; 9]; 9] = [
    [T, 1, 2, 3, 4, 5, 6, 7, B],
    [1, 3, 3, 3, 5, 5, 7, B, B],
    [2, 3, 3, 3, 5, 5, 7, B, B],
    [3, 3, 3, 3, 5, 5, B, B, B],
    [4, 5, 5, 5, 7, B, 7, B, B],
    [5, 5, 5, 5, B, B, B, B, B],
    [6, 7, 7, B, 7, B, 7, B, B],
    [7, B, B, B, B, B, B, B, B],
    [B, B, B, B, B, B, B, B, B],
];

#[rustfmt::skip]
pub const W9_ARROW: [[Elem; 9]; 9] = [
    [T, 1, 2, 3, 4, 5, 6, 7, B],
    [T, T, 1, 1, 4, 4, 6, 6, 7],
    [T, T, T, 1, 4, 4, 6, 6, 7],
    [T, T, T, T, 4, 4, 6, 6, 6],
    [T, T, 1, 1, T, 1, 4, 4, 5],
    [T, T, T, T, T, T, 4, 4, 4],
    [T, T, 1, 1, T, 1, T, 1, 3],
    [T, T, T, T, T, T, T, T, 1],
    [T, T, T, T, T, T, T, T, T],
];

/// Hasse diagram of W9 as `(lower, upper)` pairs.
pub const W9_COVERS: [(Elem, Elem); 10] = [
    (B, 7),
    (7, 5),
    (7, 6),
    (5, 3),
    (5, 4),
    (6, 4),
    (3, 2),
    (2, 1),
    (4, 1),
    (1, T),
];

pub fn w9_tables() -> Tables {
    Tables {
        name: "W9".into(),
        names: W9_NAMES.iter().map(|s| s.to_string()).collect(),
        top: T,
        bot: B,
        mult: W9_MULT.iter().map(|r| r.to_vec()).collect(),
        order: Order::Covers(W9_COVERS.to_vec()),
        arrow: Some(W9_ARROW.iter().map(|r| r.to_vec()).collect()),
    }
}

/// The nine-element algebra W9. Loading cross-checks the stored arrow table
/// against the residuum of the stored product and order.
pub fn make_w9() -> FiniteBrl {
    FiniteBrl::new(w9_tables()).expect("W9 tables are consistent")
}

/// Five-element Heyting algebra `bot < a, b < c < top` with `a /\ b = bot`.
/// It is directly indecomposable but has two maximal filters.
pub fn make_nogap5() -> FiniteBrl {
    let covers = vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)];
    let mut leq = vec![vec![false; 5]; 5];
    for (a, row) in leq.iter_mut().enumerate() {
        row[a] = true;
    }
    // bot below everything, everything below top, a and b below c
    for x in 0..5 {
        leq[0][x] = true;
        leq[x][4] = true;
    }
    leq[1][3] = true;
    leq[2][3] = true;
    let (meet, _) = crate::algebra::derive_lattice(&leq).expect("a lattice");
    FiniteBrl::new(Tables {
        name: "nogap5".into(),
        names: ["bot", "a", "b", "c", "top"].map(String::from).to_vec(),
        top: 4,
        bot: 0,
        mult: meet,
        order: Order::Covers(covers),
        arrow: None,
    })
    .expect("finite distributive lattices are Heyting algebras")
}

/// The one-element algebra.
pub fn make_trivial() -> FiniteBrl {
    FiniteBrl::new(Tables {
        name: "trivial".into(),
        names: vec!["top".into()],
        top: 0,
        bot: 0,
        mult: vec![vec![0]],
        order: Order::Leq(vec![vec![true]]),
        arrow: None,
    })
    .expect("trivial algebra")
}

/// Componentwise product; `(x, y)` has index `x * |B| + y`.
pub fn direct_product(a: &FiniteBrl, b: &FiniteBrl) -> FiniteBrl {
    let nb = b.len();
    let pairs: Vec<(Elem, Elem)> = a.elements().flat_map(|x| b.elements().map(move |y| (x, y))).collect();
    let idx = |(x, y): (Elem, Elem)| x * nb + y;
    let table = |fa: fn(&FiniteBrl, Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        pairs
            .iter()
            .map(|&(x, y)| pairs.iter().map(|&(u, v)| idx((fa(a, x, u), fa(b, y, v)))).collect())
            .collect()
    };
    FiniteBrl::new(Tables {
        name: format!("{}x{}", a.name(), b.name()),
        names: pairs
            .iter()
            .map(|&(x, y)| format!("({},{})", a.elem_name(x), b.elem_name(y)))
            .collect(),
        top: idx((a.top(), b.top())),
        bot: idx((a.bot(), b.bot())),
        mult: table(FiniteBrl::mult),
        order: Order::Leq(
            pairs
                .iter()
                .map(|&(x, y)| pairs.iter().map(|&(u, v)| a.leq(x, u) && b.leq(y, v)).collect())
                .collect(),
        ),
        arrow: Some(table(FiniteBrl::arrow)),
    })
    .expect("products of BRLs are BRLs")
}

/// Contains `T`, `F` and is closed under `*`, `->`, `/\`, `\/`.
pub fn is_subuniverse(alg: &FiniteBrl, s: &ElemSet) -> bool {
    s.contains(alg.top())
        && s.contains(alg.bot())
        && s.iter().all(|x| {
            s.iter().all(|y| {
                s.contains(alg.mult(x, y))
                    && s.contains(alg.arrow(x, y))
                    && s.contains(alg.meet(x, y))
                    && s.contains(alg.join(x, y))
            })
        })
}

/// Least subuniverse containing `gens`.
pub fn subuniverse_generated(alg: &FiniteBrl, gens: &[Elem]) -> ElemSet {
    let mut s = ElemSet::from_elems(alg.len(), gens.iter().copied().chain([alg.top(), alg.bot()]));
    loop {
        let cur = s.to_vec();
        let mut grew = false;
        for &x in &cur {
            for &y in &cur {
                for v in [alg.mult(x, y), alg.arrow(x, y), alg.meet(x, y), alg.join(x, y)] {
                    grew |= s.insert(v);
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

/// The subalgebra on a subuniverse, keeping element names, with the
/// embedding into `alg`.
///
/// # Panics
/// If `s` is not a subuniverse.
pub fn subalgebra_on(alg: &FiniteBrl, s: &ElemSet, name: impl Into<String>) -> (FiniteBrl, Vec<Elem>) {
    assert!(is_subuniverse(alg, s), "not a subuniverse");
    let emb = s.to_vec();
    let pos = |e: Elem| emb.binary_search(&e).expect("closed");
    let table = |op: fn(&FiniteBrl, Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        emb.iter().map(|&x| emb.iter().map(|&y| pos(op(alg, x, y))).collect()).collect()
    };
    let sub = FiniteBrl::new(Tables {
        name: name.into(),
        names: emb.iter().map(|&e| alg.elem_name(e).to_string()).collect(),
        top: pos(alg.top()),
        bot: pos(alg.bot()),
        mult: table(FiniteBrl::mult),
        order: Order::Leq(emb.iter().map(|&x| emb.iter().map(|&y| alg.leq(x, y)).collect()).collect()),
        arrow: Some(table(FiniteBrl::arrow)),
    })
    .expect("subalgebras of BRLs are BRLs");
    (sub, emb)
}

pub fn subalgebra_generated(alg: &FiniteBrl, gens: &[Elem]) -> (FiniteBrl, Vec<Elem>) {
    let s = subuniverse_generated(alg, gens);
    let label: Vec<&str> = gens.iter().map(|&g| alg.elem_name(g)).collect();
    subalgebra_on(alg, &s, format!("Sg_{}({})", alg.name(), label.join(",")))
}

/// Every subuniverse, found by scanning all subsets that contain `T` and `F`.
/// Ordered by size, then by membership bits.
pub fn all_subuniverses(alg: &FiniteBrl) -> Result<Vec<ElemSet>, TooLarge> {
    let n = alg.len();
    if n > SUBUNIVERSE_LIMIT {
        return Err(TooLarge {
            size: n,
            limit: SUBUNIVERSE_LIMIT,
        });
    }
    let fixed = [alg.top(), alg.bot()];
    let free: Vec<Elem> = alg.elements().filter(|e| !fixed.contains(e)).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let s = ElemSet::from_elems(
            n,
            fixed
                .iter()
                .copied()
                .chain(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)),
        );
        if is_subuniverse(alg, &s) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.len());
    Ok(out)
}

/// Subalgebras up to isomorphism, smallest first.
pub fn subalgebras_up_to_iso(alg: &FiniteBrl) -> Result<Vec<FiniteBrl>, TooLarge> {
    let mut out: Vec<FiniteBrl> = Vec::new();
    for (i, s) in all_subuniverses(alg)?.iter().enumerate() {
        let (sub, _) = subalgebra_on(alg, s, format!("{}_sub{}", alg.name(), i));
        if !out.iter().any(|o| is_isomorphic(o, &sub).is_some()) {
            out.push(sub);
        }
    }
    Ok(out)
}

/// Quotients by all filters, up to isomorphism, in [`all_filters`] order.
pub fn homomorphic_images(alg: &FiniteBrl) -> Vec<FiniteBrl> {
    let mut out: Vec<FiniteBrl> = Vec::new();
    for f in all_filters(alg) {
        let (q, _) = quotient(alg, &f);
        if !out.iter().any(|o| is_isomorphic(o, &q).is_some()) {
            out.push(q);
        }
    }
    out
}

type Invariant = (usize, usize, bool, usize, bool);

fn invariants(alg: &FiniteBrl) -> Vec<Invariant> {
    alg.elements()
        .map(|a| {
            (
                alg.elements().filter(|&b| alg.leq(b, a)).count(),
                alg.elements().filter(|&b| alg.leq(a, b)).count(),
                alg.mult(a, a) == a,
                alg.elements().filter(|&b| alg.mult(a, b) == alg.bot()).count(),
                alg.join(a, alg.neg(a)) == alg.top(),
            )
        })
        .collect()
}

/// A bijection `f` with `f(a op b) = f(a) op f(b)` for `*`, `->` and the
/// order, if there is one. The search assigns elements of `a` in index order
/// and tries targets in index order, so the answer is deterministic.
pub fn is_isomorphic(a: &FiniteBrl, b: &FiniteBrl) -> Option<Vec<Elem>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let (ia, ib) = (invariants(a), invariants(b));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.top()] = b.top();
    used[b.top()] = true;
    if map[a.bot()] == usize::MAX {
        map[a.bot()] = b.bot();
        used[b.bot()] = true;
    } else if b.top() != b.bot() {
        return None;
    }
    let order: Vec<Elem> = a.elements().filter(|&e| e != a.top() && e != a.bot()).collect();
    if !consistent_all(a, b, &map) {
        return None;
    }
    if extend(a, b, &ia, &ib, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn consistent_all(a: &FiniteBrl, b: &FiniteBrl, map: &[Elem]) -> bool {
    a.elements()
        .filter(|&x| map[x] != usize::MAX)
        .all(|x| consistent(a, b, map, x))
}

/// Checks every relation between the newly mapped `x` and the mapped elements.
fn consistent(a: &FiniteBrl, b: &FiniteBrl, map: &[Elem], x: Elem) -> bool {
    let y = map[x];
    a.elements().filter(|&u| map[u] != usize::MAX).all(|u| {
        let v = map[u];
        let ok_op = |ra: Elem, rb: Elem| map[ra] == usize::MAX || map[ra] == rb;
        a.leq(x, u) == b.leq(y, v)
            && a.leq(u, x) == b.leq(v, y)
            && ok_op(a.mult(x, u), b.mult(y, v))
            && ok_op(a.arrow(x, u), b.arrow(y, v))
            && ok_op(a.arrow(u, x), b.arrow(v, y))
    })
}

fn extend(
    a: &FiniteBrl,
    b: &FiniteBrl,
    ia: &[Invariant],
    ib: &[Invariant],
    order: &[Elem],
    i: usize,
    map: &mut [Elem],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        return consistent_all(a, b, map);
    }
    let x = order[i];
    for y in b.elements() {
        if used[y] || ia[x] != ib[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map, x) && extend(a, b, ia, ib, order, i + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::derive_arrow;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chains() {
        let l2 = make_lukasiewicz(1);
        assert_eq!(l2.len(), 2);
        assert_eq!(l2.neg(l2.top()), l2.bot());
        let l3 = make_lukasiewicz(2);
        assert_eq!(l3.mult(1, 1), 0);
        assert_eq!(l3.arrow(2, 1), 1);
    }

    #[test]
    fn w9_entries() {
        let w9 = make_w9();
        assert_eq!(w9.mult(1, 4), 5);
        assert_eq!(w9.arrow(4, 5), 1);
        assert!(w9.verify_axioms().all_hold());
        let derived = derive_arrow(&w9.mult_table(), &w9.leq_table()).unwrap();
        let printed: Vec<Vec<Elem>> = W9_ARROW.iter().map(|r| r.to_vec()).collect();
        assert_eq!(derived, printed);
    }

    #[test]
    fn w9_with_six_squared_bot_is_not_residuated() {
        let mut t = w9_tables();
        t.mult[6][6] = B;
        assert!(matches!(
            FiniteBrl::new(t),
            Err(crate::algebra::BuildError::NotResiduated(6, B))
        ));
    }

    #[test]
    fn w9_with_a_corrupted_arrow_entry_is_rejected() {
        let mut t = w9_tables();
        t.arrow.as_mut().unwrap()[4][5] = 2;
        assert!(FiniteBrl::new(t).is_err());
    }

    #[test]
    fn nogap5_basics() {
        let ng = make_nogap5();
        let (a, b, c) = (1, 2, 3);
        assert_eq!(ng.neg(a), b);
        assert_eq!(ng.join(a, b), c);
        assert_eq!(ng.arrow(c, a), a);
    }

    #[test]
    fn product_of_boolean_algebras() {
        let l2 = make_lukasiewicz(1);
        let sq = direct_product(&l2, &l2);
        assert_eq!(sq.len(), 4);
        assert!(sq.index_of("(1,0)").is_some());
        assert!(sq.elements().all(|x| sq.join(x, sq.neg(x)) == sq.top()));
    }

    #[test]
    fn w9_printed_subuniverses_are_closed() {
        let w9 = make_w9();
        let named = |ns: &[&str]| ElemSet::from_elems(9, ns.iter().map(|n| w9.index_of(n).unwrap()));
        for s in [
            named(&["top", "1", "3", "4", "5", "6", "7", "bot"]),
            named(&["top", "1", "2", "3", "6", "7", "bot"]),
            named(&["top", "1", "3", "6", "7", "bot"]),
            named(&["top", "bot"]),
            ElemSet::full(9),
        ] {
            assert!(is_subuniverse(&w9, &s), "{s:?}");
        }
    }

    #[test]
    fn generated_subalgebra() {
        let w9 = make_w9();
        let (sub, emb) = subalgebra_generated(&w9, &[]);
        assert_eq!(sub.len(), 2);
        assert_eq!(emb, vec![w9.top(), w9.bot()]);
        let (sub, _) = subalgebra_generated(&w9, &[4]);
        assert!(sub.verify_axioms().all_hold());
        assert!(sub.len() >= 3);
    }

    #[test]
    fn w9_images() {
        let imgs = homomorphic_images(&make_w9());
        let sizes: Vec<usize> = imgs.iter().map(FiniteBrl::len).collect();
        assert_eq!(sizes, vec![9, 3, 1]);
        assert!(is_isomorphic(&imgs[1], &make_lukasiewicz(2)).is_some());
    }

    #[test]
    fn iso_rejects() {
        assert!(is_isomorphic(&make_lukasiewicz(2), &make_lukasiewicz(3)).is_none());
        let l2 = make_lukasiewicz(1);
        let l3 = make_lukasiewicz(2);
        // same size, different structure
        assert!(is_isomorphic(&direct_product(&l2, &l2), &make_lukasiewicz(3)).is_none());
        assert!(is_isomorphic(&direct_product(&l2, &l3), &direct_product(&l3, &l2)).is_some());
    }

    /// Relabels `alg` by a permutation: new index `perm[i]` carries old `i`.
    pub(crate) fn permuted(alg: &FiniteBrl, perm: &[Elem]) -> FiniteBrl {
        let n = alg.len();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = |op: fn(&FiniteBrl, Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
            (0..n).map(|x| (0..n).map(|y| perm[op(alg, inv[x], inv[y])]).collect()).collect()
        };
        FiniteBrl::new(Tables {
            name: format!("{}_perm", alg.name()),
            names: (0..n).map(|x| alg.elem_name(inv[x]).to_string()).collect(),
            top: perm[alg.top()],
            bot: perm[alg.bot()],
            mult: table(FiniteBrl::mult),
            order: Order::Leq((0..n).map(|x| (0..n).map(|y| alg.leq(inv[x], inv[y])).collect()).collect()),
            arrow: Some(table(FiniteBrl::arrow)),
        })
        .unwrap()
    }

    #[test]
    fn iso_recovers_random_permutations() {
        let w9 = make_w9();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let mut perm: Vec<Elem> = (0..9).collect();
            perm.shuffle(&mut rng);
            let p = permuted(&w9, &perm);
            let f = is_isomorphic(&w9, &p).expect("isomorphic");
            for x in w9.elements() {
                for y in w9.elements() {
                    assert_eq!(f[w9.mult(x, y)], p.mult(f[x], f[y]));
                    assert_eq!(f[w9.arrow(x, y)], p.arrow(f[x], f[y]));
                }
            }
        }
    }
}
