//! Machine-readable analysis of one algebra.
//!
//! Field order in the structs is the key order in the JSON output, and
//! every collection is emitted in a fixed order, so reports are
//! byte-identical across runs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::FiniteBrl;
use crate::filters::{
    all_filters, is_maximal, is_prime, is_stone_filter, radical, stone_ultrafilters,
};
use crate::set::ElemSet;
use crate::structure::analyze_structure;
use crate::terms::{find_term_in_family, TermPredicate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraInfo {
    pub name: String,
    pub size: usize,
    pub elements: Vec<String>,
    pub top: String,
    pub bot: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagsReport {
    pub boolean_skeleton: Vec<String>,
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

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub elements: Vec<String>,
    pub generator: String,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub stone: bool,
    pub stone_ultra: bool,
}

/// `(k, r)` pairs whose `k.x^r` has the property, for `k, r <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermSearch {
    pub bound: usize,
    pub boolean: Vec<(usize, usize)>,
    pub radical: Vec<(usize, usize)>,
    pub both: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub algebra: AlgebraInfo,
    pub flags: FlagsReport,
    pub filters: Vec<FilterReport>,
    pub radical: Vec<String>,
    pub terms: TermSearch,
}

fn names(alg: &FiniteBrl, s: &ElemSet) -> Vec<String> {
    s.iter().map(|e| alg.elem_name(e).to_string()).collect()
}

/// Term searches run up to `min(|A|, term_bound)`.
pub fn analyze(alg: &FiniteBrl, term_bound: usize) -> AnalysisReport {
    let flags = analyze_structure(alg);
    let ultras = stone_ultrafilters(alg);
    let filters = all_filters(alg)
        .iter()
        .map(|f| FilterReport {
            elements: names(alg, f.members()),
            generator: alg
                .elem_name(f.generator().expect("principal filters record a generator"))
                .to_string(),
            proper: f.is_proper(alg),
            prime: is_prime(alg, f),
            maximal: is_maximal(alg, f),
            stone: is_stone_filter(alg, f),
            stone_ultra: ultras.contains(f),
        })
        .collect();
    let bound = alg.len().min(term_bound);
    let search = |p| find_term_in_family(alg, p, bound, bound);
    AnalysisReport {
        algebra: AlgebraInfo {
            name: alg.name().to_string(),
            size: alg.len(),
            elements: alg.names().to_vec(),
            top: alg.elem_name(alg.top()).to_string(),
            bot: alg.elem_name(alg.bot()).to_string(),
        },
        flags: FlagsReport {
            boolean_skeleton: names(alg, &flags.boolean_skeleton),
            is_di: flags.is_di,
            is_local: flags.is_local,
            has_gap: flags.has_gap,
            has_blp: flags.has_blp,
            is_simple: flags.is_simple,
            is_semisimple: flags.is_semisimple,
            contractivity_index: flags.contractivity_index,
            wl_index: flags.wl_index,
            em_index: flags.em_index,
            gap_certificate: flags.gap_certificate,
        },
        filters,
        radical: names(alg, radical(alg).members()),
        terms: TermSearch {
            bound,
            boolean: search(TermPredicate::Boolean),
            radical: search(TermPredicate::Radical),
            both: search(TermPredicate::Both),
        },
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let a = &self.algebra;
        let f = &self.flags;
        let opt = |v: Option<usize>| v.map_or("none".to_string(), |k| k.to_string());
        let _ = writeln!(o, "algebra {} ({} elements)", a.name, a.size);
        let _ = writeln!(o, "  boolean skeleton  {{{}}}", f.boolean_skeleton.join(","));
        let _ = writeln!(o, "  radical           {{{}}}", self.radical.join(","));
        for (label, v) in [
            ("directly indec.", f.is_di),
            ("local", f.is_local),
            ("gap", f.has_gap),
            ("blp", f.has_blp),
            ("simple", f.is_simple),
            ("semisimple", f.is_semisimple),
        ] {
            let _ = writeln!(o, "  {label:<17} {v}");
        }
        let _ = writeln!(o, "  contractivity     {}", f.contractivity_index);
        let _ = writeln!(o, "  wl index          {}", opt(f.wl_index));
        let _ = writeln!(o, "  em index          {}", opt(f.em_index));
        let cert = f
            .gap_certificate
            .map_or("none".to_string(), |(k, r)| format!("{k}.x^{r}"));
        let _ = writeln!(o, "  gap certificate   {cert}");
        let _ = writeln!(o, "filters");
        for fr in &self.filters {
            let mut tags = Vec::new();
            for (t, on) in [
                ("proper", fr.proper),
                ("prime", fr.prime),
                ("maximal", fr.maximal),
                ("stone", fr.stone),
                ("stone-ultra", fr.stone_ultra),
            ] {
                if on {
                    tags.push(t);
                }
            }
            let _ = writeln!(
                o,
                "  <{}> = {{{}}} {}",
                fr.generator,
                fr.elements.join(","),
                tags.join(" ")
            );
        }
        let pairs = |v: &[(usize, usize)]| {
            v.iter().map(|(k, r)| format!("{k}.x^{r}")).collect::<Vec<_>>().join(" ")
        };
        let _ = writeln!(o, "terms k.x^r with k,r <= {}", self.terms.bound);
        let _ = writeln!(o, "  boolean  {}", pairs(&self.terms.boolean));
        let _ = writeln!(o, "  radical  {}", pairs(&self.terms.radical));
        let _ = writeln!(o, "  both     {}", pairs(&self.terms.both));
        o
    }
}
