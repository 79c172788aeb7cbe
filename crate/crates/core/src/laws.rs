//! Per-algebra law harness.
//!
//! Each law compares two independently computed sides and reports a witness
//! on failure. Laws are evaluated with the non-asserting variants of the
//! analyses; a panic inside a law is caught and reported as a failure.

use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use crate::algebra::{Elem, FiniteBrl};
use crate::filters::{
    all_filters, all_filters_exhaustive, congruence_of, is_k_radical, is_maximal_by_definition,
    is_maximal_by_mx, is_prime, quotient, radical, radical_by_formula, stone_ultrafilters,
    top_join_irreducible, Filter, EXHAUSTIVE_LIMIT,
};
use crate::set::ElemSet;
use crate::structure::{
    boolean_skeleton, contractivity_index, di_condition, em_index, gap_elementwise_witnesses,
    has_gap_by_quotients, has_gap_by_stone_ultrafilters, blp_failure, is_directly_indecomposable,
    wl_index,
};
use crate::terms::{
    check_identity, family_term, gap_certificate, is_boolean_retraction_term, is_boolean_term,
    term_function, Equation, IdentityResult, Term, TermPredicate, find_term_in_family,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum LawStatus {
    Pass,
    Fail(String),
    /// The law's hypothesis does not hold for this algebra.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: &'static str,
    #[serde(flatten)]
    pub status: LawStatus,
}

impl LawOutcome {
    pub fn failed(&self) -> bool {
        matches!(self.status, LawStatus::Fail(_))
    }
}

type LawFn = fn(&Ctx) -> LawStatus;

const LAWS: &[(&str, LawFn)] = &[
    ("axioms", law_axioms),
    ("principal_filters_complete", law_principal_filters),
    ("filter_congruence_order_iso", law_filter_congruence),
    ("maximal_definition_vs_mx", law_maximal_two_ways),
    ("prime_iff_quotient_fsi", law_prime_quotient),
    ("maximal_iff_quotient_simple", law_maximal_quotient),
    ("radical_intersection_vs_formula", law_radical_formula),
    ("radical_image_in_quotient_radical", law_radical_quotient),
    ("contractive_index_is_radical_bound", law_k_radical),
    ("skeleton_meets_radical_at_top", law_skeleton_radical),
    ("di_condition_vs_quotient", law_di_condition),
    ("prime_quotients_di", law_prime_di),
    ("stone_ultrafilter_quotients_di", law_stone_ultra_di),
    ("di_quotients_fsi_iff_ultrafilters_are_minimal_primes", law_di_fsi),
    ("gap_quotients_vs_stone_ultrafilters", law_gap_forms),
    ("gap_vs_elementwise", law_gap_elementwise),
    ("gap_vs_blp", law_gap_blp),
    ("simple_local_di_chain", law_simple_local_di),
    ("power_boolean_term_iff_em", law_em_boolean_power),
    ("semisimple_iff_em", law_semisimple_em),
    ("wl_implies_gap", law_wl_gap),
    ("certificate_implies_wl_and_gap", law_certificate),
    ("retraction_identity_implies_retraction", law_retraction),
    ("contractive_di_local_iff_mxm_boolean", law_local_mxm),
    ("boolean_radical_terms_agree", law_terms_agree),
];

/// Law names in evaluation order.
pub fn law_names() -> Vec<&'static str> {
    LAWS.iter().map(|(n, _)| *n).collect()
}

struct Ctx<'a> {
    alg: &'a FiniteBrl,
    filters: Vec<Filter>,
}

impl Ctx<'_> {
    fn set(&self, s: &ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|e| self.alg.elem_name(e)).collect();
        format!("{{{}}}", names.join(","))
    }

    fn el(&self, e: Elem) -> &str {
        self.alg.elem_name(e)
    }

    fn maximal(&self) -> Vec<&Filter> {
        self.filters
            .iter()
            .filter(|f| is_maximal_by_definition(self.alg, f))
            .collect()
    }
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> LawStatus {
    if ok {
        LawStatus::Pass
    } else {
        LawStatus::Fail(witness())
    }
}

fn first_fail<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(&T) -> Option<String>) -> LawStatus {
    for it in items {
        if let Some(w) = f(&it) {
            return LawStatus::Fail(w);
        }
    }
    LawStatus::Pass
}

/// Evaluates every law on `alg`, in [`law_names`] order.
pub fn run_laws(alg: &FiniteBrl) -> Vec<LawOutcome> {
    let report = alg.verify_axioms();
    if !report.all_hold() {
        let mut out = vec![LawOutcome {
            law: LAWS[0].0,
            status: LawStatus::Fail(report.to_string()),
        }];
        out.extend(LAWS[1..].iter().map(|(law, _)| LawOutcome {
            law,
            status: LawStatus::NotApplicable,
        }));
        return out;
    }
    let ctx = Ctx {
        alg,
        filters: all_filters(alg),
    };
    LAWS.iter()
        .map(|(law, f)| {
            let status = catch_unwind(AssertUnwindSafe(|| f(&ctx))).unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                LawStatus::Fail(format!("panicked: {msg}"))
            });
            LawOutcome { law, status }
        })
        .collect()
}

fn law_axioms(c: &Ctx) -> LawStatus {
    let r = c.alg.verify_axioms();
    check(r.all_hold(), || r.to_string())
}

fn law_principal_filters(c: &Ctx) -> LawStatus {
    if c.alg.len() > EXHAUSTIVE_LIMIT {
        return LawStatus::NotApplicable;
    }
    let scan = all_filters_exhaustive(c.alg).expect("within limit");
    if let Some(f) = scan.iter().find(|f| !c.filters.contains(f)) {
        return LawStatus::Fail(format!("non-principal filter {}", c.set(f.members())));
    }
    check(scan.len() == c.filters.len(), || {
        format!("{} principal vs {} scanned", c.filters.len(), scan.len())
    })
}

fn law_filter_congruence(c: &Ctx) -> LawStatus {
    let congs: Vec<_> = c.filters.iter().map(|f| congruence_of(c.alg, f)).collect();
    let idx: Vec<usize> = (0..c.filters.len()).collect();
    first_fail(idx.iter().flat_map(|&i| idx.iter().map(move |&j| (i, j))), |&(i, j)| {
        let (f, g) = (&c.filters[i], &c.filters[j]);
        (f.is_subset(g) != congs[i].is_finer_than(&congs[j]))
            .then(|| format!("F={} G={}", c.set(f.members()), c.set(g.members())))
    })
}

fn law_maximal_two_ways(c: &Ctx) -> LawStatus {
    first_fail(&c.filters, |f| {
        let (d, m) = (is_maximal_by_definition(c.alg, f), is_maximal_by_mx(c.alg, f));
        (d != m).then(|| format!("{}: definition {d}, (Mx) {m}", c.set(f.members())))
    })
}

fn law_prime_quotient(c: &Ctx) -> LawStatus {
    first_fail(&c.filters, |f| {
        let (q, _) = quotient(c.alg, f);
        let fsi = !q.is_trivial() && top_join_irreducible(&q);
        (is_prime(c.alg, f) != fsi).then(|| c.set(f.members()))
    })
}

fn law_maximal_quotient(c: &Ctx) -> LawStatus {
    first_fail(&c.filters, |f| {
        let (q, _) = quotient(c.alg, f);
        let simple = all_filters(&q).len() == 2;
        (is_maximal_by_definition(c.alg, f) != simple).then(|| c.set(f.members()))
    })
}

fn law_radical_formula(c: &Ctx) -> LawStatus {
    let (r, formula) = (radical(c.alg), radical_by_formula(c.alg));
    check(*r.members() == formula, || {
        format!("intersection {} vs formula {}", c.set(r.members()), c.set(&formula))
    })
}

fn law_radical_quotient(c: &Ctx) -> LawStatus {
    let rad = radical(c.alg);
    first_fail(&c.filters, |f| {
        let (q, p) = quotient(c.alg, f);
        let qrad = radical(&q);
        rad.members()
            .iter()
            .find(|&a| !qrad.contains(p[a]))
            .map(|a| format!("F={}, a={}", c.set(f.members()), c.el(a)))
    })
}

fn law_k_radical(c: &Ctx) -> LawStatus {
    let m = contractivity_index(c.alg);
    check(c.alg.is_trivial() || is_k_radical(c.alg, m), || format!("m={m}"))
}

fn law_skeleton_radical(c: &Ctx) -> LawStatus {
    if c.alg.is_trivial() {
        return LawStatus::NotApplicable;
    }
    let meet = boolean_skeleton(c.alg).intersection(radical(c.alg).members());
    check(meet.len() == 1 && meet.contains(c.alg.top()), || c.set(&meet))
}

fn law_di_condition(c: &Ctx) -> LawStatus {
    first_fail(&c.filters, |f| {
        let (q, _) = quotient(c.alg, f);
        (di_condition(c.alg, f) != is_directly_indecomposable(&q)).then(|| c.set(f.members()))
    })
}

fn law_prime_di(c: &Ctx) -> LawStatus {
    first_fail(c.filters.iter().filter(|f| is_prime(c.alg, f)), |f| {
        let (q, _) = quotient(c.alg, f);
        (!is_directly_indecomposable(&q)).then(|| c.set(f.members()))
    })
}

fn law_stone_ultra_di(c: &Ctx) -> LawStatus {
    first_fail(stone_ultrafilters(c.alg), |f| {
        let (q, _) = quotient(c.alg, f);
        (!is_directly_indecomposable(&q)).then(|| c.set(f.members()))
    })
}

/// Over the quotients of A: every indecomposable quotient has `T` join
/// irreducible iff every quotient's Stone ultrafilters are exactly its
/// minimal prime filters.
fn law_di_fsi(c: &Ctx) -> LawStatus {
    let quotients: Vec<FiniteBrl> = c.filters.iter().map(|f| quotient(c.alg, f).0).collect();
    let di_fsi = quotients
        .iter()
        .filter(|q| is_directly_indecomposable(q))
        .all(top_join_irreducible);
    let u_spm = quotients.iter().all(|q| {
        let primes: Vec<Filter> = all_filters(q).into_iter().filter(|f| is_prime(q, f)).collect();
        let mut spm: Vec<ElemSet> = primes
            .iter()
            .filter(|p| !primes.iter().any(|r| r != *p && r.is_subset(p)))
            .map(|p| p.members().clone())
            .collect();
        let mut u: Vec<ElemSet> = stone_ultrafilters(q).iter().map(|f| f.members().clone()).collect();
        spm.sort_by_key(|s| s.to_vec());
        u.sort_by_key(|s| s.to_vec());
        spm == u
    });
    check(di_fsi == u_spm, || format!("DI quotients FSI: {di_fsi}, U = Spm on quotients: {u_spm}"))
}

fn law_gap_forms(c: &Ctx) -> LawStatus {
    let (q, s) = (has_gap_by_quotients(c.alg), has_gap_by_stone_ultrafilters(c.alg));
    check(q == s, || format!("quotient form {q}, Stone form {s}"))
}

fn law_gap_elementwise(c: &Ctx) -> LawStatus {
    let g = has_gap_by_quotients(c.alg);
    let e = gap_elementwise_witnesses(c.alg);
    check(g == e.is_ok(), || match e {
        Err(a) => format!("no sandwich for {} but GAP holds", c.el(a)),
        Ok(_) => "every element sandwiched but GAP fails".into(),
    })
}

fn law_gap_blp(c: &Ctx) -> LawStatus {
    let g = has_gap_by_quotients(c.alg);
    let b = blp_failure(c.alg);
    check(g == b.is_none(), || match b {
        Some(f) => format!("lifting fails at {} but GAP holds", c.set(f.members())),
        None => "lifting holds but GAP fails".into(),
    })
}

fn law_simple_local_di(c: &Ctx) -> LawStatus {
    let maxes = c.maximal().len();
    let simple = c.filters.len() == 2;
    let local = maxes == 1;
    let di = is_directly_indecomposable(c.alg);
    check((!simple || local) && (!local || di), || {
        format!("simple {simple}, local {local}, di {di}")
    })
}

fn em_identity(m: u32) -> Equation {
    let x = Term::var("x");
    Equation::new(x.clone().join(x.pow(m).neg()), Term::Top)
}

fn law_em_boolean_power(c: &Ctx) -> LawStatus {
    if c.alg.is_trivial() {
        return LawStatus::NotApplicable;
    }
    first_fail(1..=c.alg.len() as u32, |&m| {
        let em = check_identity(c.alg, &em_identity(m)).holds();
        let bt = is_boolean_term(c.alg, &Term::var("x").pow(m)).expect("unary").is_boolean;
        (em != bt).then(|| format!("m={m}: identity {em}, x^m Boolean {bt}"))
    })
}

fn law_semisimple_em(c: &Ctx) -> LawStatus {
    let ss = radical(c.alg).len() == 1;
    let em = em_index(c.alg);
    check(ss == em.is_some(), || format!("semisimple {ss}, em index {em:?}"))
}

fn law_wl_gap(c: &Ctx) -> LawStatus {
    match wl_index(c.alg) {
        None => LawStatus::NotApplicable,
        Some(k) => check(has_gap_by_quotients(c.alg), || format!("WL_{k} without GAP")),
    }
}

fn wl_identity(k: u32) -> Equation {
    let x = Term::var("x");
    Equation::new(x.clone().times(k).join(x.neg().times(k)), Term::Top)
}

fn law_certificate(c: &Ctx) -> LawStatus {
    let n = c.alg.len();
    match gap_certificate(c.alg, n, n) {
        None => LawStatus::NotApplicable,
        Some((k, r)) => {
            if let IdentityResult::Counterexample(w) = check_identity(c.alg, &wl_identity(k as u32)) {
                return LawStatus::Fail(format!("({k},{r}) but WL_{k} fails at x={}", c.el(w[0].1)));
            }
            check(has_gap_by_quotients(c.alg), || format!("({k},{r}) but no GAP"))
        }
    }
}

fn law_retraction(c: &Ctx) -> LawStatus {
    let x = Term::var("x");
    let mut applicable = false;
    for k in 1..=c.alg.len() as u32 {
        let lhs = x.clone().pow(k).times(k).join(x.clone().neg().pow(k).times(k));
        if !check_identity(c.alg, &Equation::new(lhs, Term::Top)).holds() {
            continue;
        }
        applicable = true;
        let r = is_boolean_retraction_term(c.alg, &family_term(k, k)).expect("unary");
        if !r.verdict() {
            return LawStatus::Fail(format!("k={k}: {r:?}"));
        }
    }
    if applicable {
        LawStatus::Pass
    } else {
        LawStatus::NotApplicable
    }
}

fn law_local_mxm(c: &Ctx) -> LawStatus {
    if !is_directly_indecomposable(c.alg) {
        return LawStatus::NotApplicable;
    }
    let local = c.maximal().len() == 1;
    first_fail(contractivity_index(c.alg)..=c.alg.len(), |&m| {
        let bt = is_boolean_term(c.alg, &family_term(m as u32, m as u32))
            .expect("unary")
            .is_boolean;
        (bt != local).then(|| format!("m={m}: local {local}, m.x^m Boolean {bt}"))
    })
}

fn law_terms_agree(c: &Ctx) -> LawStatus {
    if !is_directly_indecomposable(c.alg) {
        return LawStatus::NotApplicable;
    }
    let n = c.alg.len();
    let found = find_term_in_family(c.alg, TermPredicate::Both, n, n);
    let Some(&(k0, r0)) = found.first() else {
        return LawStatus::NotApplicable;
    };
    let f0 = term_function(c.alg, &family_term(k0 as u32, r0 as u32)).expect("unary");
    first_fail(&found[1..], |&&(k, r)| {
        let f = term_function(c.alg, &family_term(k as u32, r as u32)).expect("unary");
        (f != f0).then(|| format!("{k0}.x^{r0} and {k}.x^{r} differ"))
    })
}
