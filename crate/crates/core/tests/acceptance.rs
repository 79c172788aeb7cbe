//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.
//!
//! All checks are exact; there are no tolerances.

use std::process::ExitCode;

use brl_core::algebra::{derive_arrow, Elem, FiniteBrl};
use brl_core::constructions::{
    all_subuniverses, direct_product, homomorphic_images, is_isomorphic, is_subuniverse,
    make_lukasiewicz, make_nogap5, make_w9, subalgebra_on, W9_ARROW, W9_MULT,
};
use brl_core::filters::{all_filters, all_filters_exhaustive, maximal_filters, radical, Filter};
use brl_core::laws::run_laws;
use brl_core::lex::{lex_multiple, lex_neg, lex_power, LexElement};
use brl_core::structure::{
    has_blp, has_gap_definitional, has_gap_elementwise, is_directly_indecomposable, is_local,
    wl_index,
};
use brl_core::terms::{
    gap_certificate, is_boolean_term, is_radical_term, parse_term, BoolTermFailure,
};
use brl_core::ElemSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn named(alg: &FiniteBrl, names: &[&str]) -> ElemSet {
    ElemSet::from_elems(alg.len(), names.iter().map(|n| alg.index_of(n).expect(n)))
}

/// Filters found by scanning all subsets; independent of principality.
fn scanned_filters(alg: &FiniteBrl) -> Vec<ElemSet> {
    let mut v: Vec<ElemSet> = all_filters_exhaustive(alg)
        .expect("small algebra")
        .iter()
        .map(|f| f.members().clone())
        .collect();
    v.sort_by_key(ElemSet::to_vec);
    v
}

/// Maximal proper members of a family of filters.
fn maximal_of(alg: &FiniteBrl, fs: &[ElemSet]) -> Vec<ElemSet> {
    let proper: Vec<&ElemSet> = fs.iter().filter(|f| !f.contains(alg.bot())).collect();
    let mut out: Vec<ElemSet> = proper
        .iter()
        .filter(|f| !proper.iter().any(|g| g != *f && f.is_subset(g)))
        .map(|f| (*f).clone())
        .collect();
    out.sort_by_key(ElemSet::to_vec);
    out
}

fn c1_w9_regression() -> Outcome {
    let w9 = make_w9();
    let report = w9.verify_axioms();
    ensure!(report.all_hold(), "axioms: {report}");
    let derived = derive_arrow(&w9.mult_table(), &w9.leq_table()).map_err(|e| e.to_string())?;
    let mut mismatches = 0;
    for b in 0..9 {
        for c in 0..9 {
            if derived[b][c] != W9_ARROW[b][c] {
                mismatches += 1;
            }
        }
    }
    ensure!(mismatches == 0, "{mismatches} of 81 arrow entries differ");
    let rad = named(&w9, &["top", "1", "2", "3"]);
    ensure!(*radical(&w9).members() == rad, "Rad = {:?}", radical(&w9).members());
    let scan = scanned_filters(&w9);
    let nontrivial_proper: Vec<&ElemSet> =
        scan.iter().filter(|f| f.len() > 1 && !f.contains(w9.bot())).collect();
    ensure!(nontrivial_proper == vec![&rad], "proper nontrivial filters {nontrivial_proper:?}");
    let flags = [
        is_local(&w9),
        is_directly_indecomposable(&w9),
        has_gap_definitional(&w9),
        has_blp(&w9),
    ];
    ensure!(flags == [true; 4], "local/di/gap/blp = {flags:?}");
    Ok("81/81 arrow entries, Rad = {top,1,2,3}, 3 filters by subset scan".into())
}

/// `3.x^m` at `a`, straight from the stored tables.
fn three_x_pow(a: Elem, m: usize) -> Elem {
    let (top, bot) = (0, 8);
    let neg = |x: Elem| W9_ARROW[x][bot];
    let mut p = top;
    for _ in 0..m {
        p = W9_MULT[a][p];
    }
    let np = neg(p);
    neg(W9_MULT[np][W9_MULT[np][np]])
}

fn c2_w9_terms() -> Outcome {
    let w9 = make_w9();
    let rad = radical(&w9);
    for n in [2, 3, 4] {
        let t = parse_term(&format!("3.x^{n}")).unwrap();
        ensure!(is_radical_term(&w9, &t).unwrap(), "3.x^{n} not radical");
        for a in w9.elements() {
            ensure!((three_x_pow(a, n) == 0) == rad.contains(a), "oracle: 3.x^{n} at {a}");
        }
    }
    for m in [3, 4, 5] {
        let t = parse_term(&format!("3.x^{m}")).unwrap();
        ensure!(is_boolean_term(&w9, &t).unwrap().is_boolean, "3.x^{m} not Boolean");
        for a in w9.elements() {
            ensure!([0, 8].contains(&three_x_pow(a, m)), "oracle: 3.x^{m} at {a}");
        }
    }
    let r = is_boolean_term(&w9, &parse_term("3.x^2").unwrap()).unwrap();
    ensure!(!r.is_boolean, "3.x^2 reported Boolean");
    let at = match r.failure {
        Some(BoolTermFailure::NotBoolean { at, .. }) => at,
        other => return Err(format!("3.x^2 failure {other:?}")),
    };
    ensure!(w9.elem_name(at) == "4", "3.x^2 witness x:={}", w9.elem_name(at));
    ensure!(![0, 8].contains(&three_x_pow(4, 2)), "oracle: 3.4^2 is Boolean");
    let cert = gap_certificate(&w9, 9, 9);
    ensure!(cert == Some((3, 3)), "certificate {cert:?}");
    Ok("3.x^{2,3,4} radical, 3.x^{3,4,5} Boolean, 3.x^2 fails at x:=4, certificate (3,3)".into())
}

fn c3_w9_hsp() -> Outcome {
    let w9 = make_w9();
    let printed: [&[&str]; 5] = [
        &["top", "1", "2", "3", "4", "5", "6", "7", "bot"],
        &["top", "1", "3", "4", "5", "6", "7", "bot"],
        &["top", "1", "2", "3", "6", "7", "bot"],
        &["top", "1", "3", "6", "7", "bot"],
        &["top", "bot"],
    ];
    for names in printed {
        let s = named(&w9, names);
        ensure!(is_subuniverse(&w9, &s), "{names:?} not closed");
        // table-level closure, independent of is_subuniverse
        for x in s.iter() {
            for y in s.iter() {
                ensure!(s.contains(W9_MULT[x][y]) && s.contains(W9_ARROW[x][y]), "{names:?}");
            }
        }
    }
    let imgs = homomorphic_images(&w9);
    let sizes: Vec<usize> = imgs.iter().map(FiniteBrl::len).collect();
    ensure!(sizes.len() == 3, "{} images up to iso", sizes.len());
    let mut found = [false; 3];
    for q in &imgs {
        found[0] |= q.len() == 1;
        found[1] |= is_isomorphic(q, &make_lukasiewicz(2)).is_some();
        found[2] |= is_isomorphic(q, &w9).is_some();
    }
    ensure!(found == [true; 3], "images trivial/L3/W9 found = {found:?}");
    let subs = all_subuniverses(&w9).map_err(|e| e.to_string())?;
    let mut classes: Vec<FiniteBrl> = Vec::new();
    for (i, s) in subs.iter().enumerate() {
        let (a, _) = subalgebra_on(&w9, s, format!("s{i}"));
        if !classes.iter().any(|c| is_isomorphic(c, &a).is_some()) {
            classes.push(a);
        }
    }
    let class_sizes: Vec<usize> = classes.iter().map(FiniteBrl::len).collect();
    Ok(format!(
        "5 printed universes closed; images {{trivial, L3, W9}}; scan: {} subuniverses, {} iso classes of sizes {:?}",
        subs.len(),
        classes.len(),
        class_sizes
    ))
}

fn sample(n: i64, rng: &mut ChaCha8Rng) -> LexElement {
    let a = rng.gen_range(0..=n);
    let r = rng.gen_range(-25i64..=25);
    let r = if a == 0 {
        r.abs()
    } else if a == n {
        -r.abs()
    } else {
        r
    };
    LexElement::new(a, r)
}

fn c4_lex() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e7);
    for n in [2i64, 3, 4] {
        let w = lex_power(n, LexElement::new(n - 1, 1), n as u32).map_err(|e| e.to_string())?;
        let w2 = lex_multiple(n, 2, w).map_err(|e| e.to_string())?;
        ensure!(w2 == LexElement::new(0, 2 * n), "n={n}: 2.(n-1,1)^n = {w2}");
        ensure!(w2 != LexElement::new(0, 0), "n={n}: witness is bot");
        let (bot, top) = (LexElement::new(0, 0), LexElement::new(n, 0));
        for _ in 0..200 {
            let p = sample(n, &mut rng);
            let back = lex_neg(n, lex_neg(n, p).unwrap()).unwrap();
            ensure!(back == p, "n={n}: ~~{p} = {back}");
            for m in (n + 1)..=(n + 3) {
                let v = lex_multiple(n, 2, lex_power(n, p, m as u32).unwrap()).unwrap();
                ensure!(v == bot || v == top, "n={n}: 2.{p}^{m} = {v}");
            }
        }
    }
    Ok("witnesses (0,4), (0,6), (0,8); 600 samples involutive and Boolean for m = n+1..n+3".into())
}

fn c5_nogap5() -> Outcome {
    let ng = make_nogap5();
    ensure!(ng.verify_axioms().all_hold(), "axioms");
    ensure!(is_directly_indecomposable(&ng), "not DI");
    let scan = scanned_filters(&ng);
    ensure!(scan.len() == 5, "{} filters by subset scan", scan.len());
    let oracle = maximal_of(&ng, &scan);
    let mut got: Vec<ElemSet> = maximal_filters(&ng).iter().map(|f| f.members().clone()).collect();
    got.sort_by_key(ElemSet::to_vec);
    ensure!(oracle.len() == 2 && got == oracle, "maximal {got:?} vs scan {oracle:?}");
    ensure!(!has_gap_definitional(&ng), "has GAP");
    ensure!(!has_gap_elementwise(&ng), "elementwise GAP");
    ensure!(!has_blp(&ng), "has BLP");
    ensure!(wl_index(&ng).is_none(), "wl_index {:?}", wl_index(&ng));
    let cert = gap_certificate(&ng, 5, 5);
    ensure!(cert.is_none(), "certificate {cert:?}");
    Ok("2 maximal filters of 5 scanned; GAP, BLP, WL_k, certificate all absent".into())
}

fn corpus() -> Vec<FiniteBrl> {
    let mut c: Vec<FiniteBrl> = (1..=5).map(make_lukasiewicz).collect();
    let w9 = make_w9();
    c.push(w9.clone());
    c.push(make_nogap5());
    c.push(direct_product(&w9, &make_lukasiewicz(2)));
    c.push(direct_product(&make_lukasiewicz(2), &make_lukasiewicz(2)));
    for (i, s) in all_subuniverses(&w9).expect("W9 is small").iter().enumerate() {
        c.push(subalgebra_on(&w9, s, format!("W9_sub{i}")).0);
    }
    c
}

fn c6_theorem_harness() -> Outcome {
    let corpus = corpus();
    let mut runs = 0;
    let mut failures = Vec::new();
    for alg in &corpus {
        for o in run_laws(alg) {
            runs += 1;
            if o.failed() {
                failures.push(format!("{} / {}: {:?}", alg.name(), o.law, o.status));
            }
        }
    }
    ensure!(failures.is_empty(), "{} failures: {}", failures.len(), failures.join("; "));
    Ok(format!("{} algebras, {runs} law checks, 0 failures", corpus.len()))
}

fn c7_principality() -> Outcome {
    let mut checked = 0;
    for alg in corpus().iter().filter(|a| a.len() <= 12) {
        let mut principal: Vec<ElemSet> =
            all_filters(alg).iter().map(Filter::members).cloned().collect();
        principal.sort_by_key(ElemSet::to_vec);
        let scan = scanned_filters(alg);
        ensure!(principal == scan, "{}: {} principal vs {} scanned", alg.name(), principal.len(), scan.len());
        checked += 1;
    }
    Ok(format!("{checked} algebras with |A| <= 12 agree"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 W9 regression", c1_w9_regression),
        ("2 W9 terms", c2_w9_terms),
        ("3 W9 HSP inventory", c3_w9_hsp),
        ("4 lex MV chain", c4_lex),
        ("5 non-GAP witness", c5_nogap5),
        ("6 theorem harness", c6_theorem_harness),
        ("7 principality", c7_principality),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS  criterion {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  criterion {name}: panicked");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
