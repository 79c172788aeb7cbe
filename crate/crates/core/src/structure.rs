//! Boolean skeleton, direct indecomposability, locality, GAP and BLP, and the
//! numeric class indices.
//!
//! Powers `a^k` form a descending chain and multiples `k.a` an ascending one,
//! so both are stable after `|A|` steps. Every search below that ranges over
//! exponents or multipliers is therefore bounded by `|A|` without loss.

use crate::algebra::{Elem, FiniteBrl};
use crate::filters::{all_filters, maximal_filters, quotient, radical, stone_ultrafilters, Filter};
use crate::set::ElemSet;
use crate::terms::gap_certificate;

/// `{ b : b \/ ~b = T }`, checked to be a Boolean subalgebra on which `*` is
/// meet and `+` is join.
pub fn boolean_skeleton(alg: &FiniteBrl) -> ElemSet {
    let skel = ElemSet::from_elems(
        alg.len(),
        alg.elements().filter(|&b| alg.join(b, alg.neg(b)) == alg.top()),
    );
    for b in skel.iter() {
        assert_eq!(alg.neg(alg.neg(b)), b, "~~b != b for Boolean {}", alg.elem_name(b));
        for a in alg.elements() {
            assert_eq!(alg.mult(b, a), alg.meet(b, a), "b*a != b/\\a");
            assert_eq!(alg.arrow(b, a), alg.join(alg.neg(b), a), "b->a != ~b\\/a");
        }
        for c in skel.iter() {
            assert_eq!(alg.join(b, c), alg.plus(b, c), "b\\/c != b+c on the skeleton");
            for v in [alg.meet(b, c), alg.join(b, c), alg.arrow(b, c)] {
                assert!(skel.contains(v), "Boolean elements not closed");
            }
        }
    }
    skel
}

/// `B(A)` has exactly two elements.
pub fn is_directly_indecomposable(alg: &FiniteBrl) -> bool {
    alg.len() >= 2 && boolean_skeleton(alg).len() == 2
}

/// F is proper and `a \/ ~a` in F forces `a` or `~a` in F.
pub fn di_condition(alg: &FiniteBrl, f: &Filter) -> bool {
    f.is_proper(alg)
        && alg.elements().all(|a| {
            let na = alg.neg(a);
            !f.contains(alg.join(a, na)) || f.contains(a) || f.contains(na)
        })
}

/// [`di_condition`], cross-checked against indecomposability of `A/F`.
pub fn is_di_filter(alg: &FiniteBrl, f: &Filter) -> bool {
    let by_condition = di_condition(alg, f);
    let (q, _) = quotient(alg, f);
    assert_eq!(
        by_condition,
        is_directly_indecomposable(&q),
        "(di) disagrees with the quotient on {:?}",
        f.members()
    );
    by_condition
}

/// Exactly one maximal filter.
pub fn is_local(alg: &FiniteBrl) -> bool {
    maximal_filters(alg).len() == 1
}

fn unique_maximal_above(f: &Filter, maxes: &[Filter]) -> bool {
    maxes.iter().filter(|m| f.is_subset(m)).count() == 1
}

/// Every proper filter with an indecomposable quotient lies below exactly one
/// maximal filter. `{T}` is among the filters considered.
pub fn has_gap_by_quotients(alg: &FiniteBrl) -> bool {
    let maxes = maximal_filters(alg);
    all_filters(alg)
        .iter()
        .filter(|f| di_condition(alg, f))
        .all(|f| unique_maximal_above(f, &maxes))
}

/// Every Stone ultrafilter lies below exactly one maximal filter.
pub fn has_gap_by_stone_ultrafilters(alg: &FiniteBrl) -> bool {
    let maxes = maximal_filters(alg);
    stone_ultrafilters(alg)
        .iter()
        .all(|f| unique_maximal_above(f, &maxes))
}

/// GAP by both filter forms; they must agree.
pub fn has_gap_definitional(alg: &FiniteBrl) -> bool {
    let by_quotients = has_gap_by_quotients(alg);
    let by_stone = has_gap_by_stone_ultrafilters(alg);
    assert_eq!(by_quotients, by_stone, "GAP forms disagree on {}", alg.name());
    by_quotients
}

/// A sandwich `a^k <= b <= k.a` with `b` Boolean.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub a: Elem,
    pub b: Elem,
    pub k: usize,
}

/// One witness per element (least `k`, then least `b`), or the first element
/// that has none.
pub fn gap_elementwise_witnesses(alg: &FiniteBrl) -> Result<Vec<GapWitness>, Elem> {
    let skel = boolean_skeleton(alg);
    alg.elements()
        .map(|a| {
            (1..=alg.len())
                .find_map(|k| {
                    let (lo, hi) = (alg.power(a, k), alg.multiple(k, a));
                    skel.iter()
                        .find(|&b| alg.leq(lo, b) && alg.leq(b, hi))
                        .map(|b| GapWitness { a, b, k })
                })
                .ok_or(a)
        })
        .collect()
}

pub fn has_gap_elementwise(alg: &FiniteBrl) -> bool {
    gap_elementwise_witnesses(alg).is_ok()
}

/// First filter F (in [`all_filters`] order) with `B(A/F)` different from the
/// image of `B(A)`.
pub fn blp_failure(alg: &FiniteBrl) -> Option<Filter> {
    let skel = boolean_skeleton(alg);
    all_filters(alg).into_iter().find(|f| {
        let (q, proj) = quotient(alg, f);
        let image = ElemSet::from_elems(q.len(), skel.iter().map(|b| proj[b]));
        boolean_skeleton(&q) != image
    })
}

/// Boolean lifting for every filter, cross-checked against GAP.
pub fn has_blp(alg: &FiniteBrl) -> bool {
    let blp = blp_failure(alg).is_none();
    assert_eq!(blp, has_gap_definitional(alg), "BLP and GAP disagree on {}", alg.name());
    blp
}

/// Least `m >= 1` with `x^m = x^(m+1)`.
pub fn contractivity_index(alg: &FiniteBrl) -> usize {
    (1..=alg.len())
        .find(|&m| alg.elements().all(|a| alg.power(a, m) == alg.power(a, m + 1)))
        .expect("powers stabilise within |A| steps")
}

/// Least `k <= |A|` with `k.x \/ k.~x = T`.
pub fn wl_index(alg: &FiniteBrl) -> Option<usize> {
    (1..=alg.len()).find(|&k| {
        alg.elements()
            .all(|a| alg.join(alg.multiple(k, a), alg.multiple(k, alg.neg(a))) == alg.top())
    })
}

/// Least `m <= |A|` with `x \/ ~(x^m) = T`.
pub fn em_index(alg: &FiniteBrl) -> Option<usize> {
    (1..=alg.len()).find(|&m| {
        alg.elements()
            .all(|a| alg.join(a, alg.neg(alg.power(a, m))) == alg.top())
    })
}

/// Exactly two filters.
pub fn is_simple(alg: &FiniteBrl) -> bool {
    all_filters(alg).len() == 2
}

/// The radical is `{T}`.
pub fn is_semisimple(alg: &FiniteBrl) -> bool {
    radical(alg).len() == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub boolean_skeleton: ElemSet,
    pub is_di: bool,
    pub is_local: bool,
    pub has_gap: bool,
    pub has_blp: bool,
    pub is_simple: bool,
    pub is_semisimple: bool,
    pub contractivity_index: usize,
    pub wl_index: Option<usize>,
    pub em_index: Option<usize>,
    pub gap_certificate: Option<(usize, usize)>,
}

/// All flags; GAP is computed three ways and the answers must agree.
pub fn analyze_structure(alg: &FiniteBrl) -> StructureFlags {
    let has_gap = has_gap_definitional(alg);
    assert_eq!(has_gap, has_gap_elementwise(alg), "elementwise GAP disagrees on {}", alg.name());
    let flags = StructureFlags {
        boolean_skeleton: boolean_skeleton(alg),
        is_di: is_directly_indecomposable(alg),
        is_local: is_local(alg),
        has_gap,
        has_blp: has_blp(alg),
        is_simple: is_simple(alg),
        is_semisimple: is_semisimple(alg),
        contractivity_index: contractivity_index(alg),
        wl_index: wl_index(alg),
        em_index: em_index(alg),
        gap_certificate: gap_certificate(alg, alg.len(), alg.len()),
    };
    assert!(!flags.is_simple || flags.is_local, "simple but not local");
    assert!(!flags.is_local || flags.is_di, "local but not indecomposable");
    flags
}
