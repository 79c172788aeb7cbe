//! Line-oriented text format for finite algebras.
//!
//! ```text
//! # comment
//! algebra L3
//! elements 0 1 2
//! top 2
//! bot 0
//! covers
//! 0 < 1
//! 1 < 2
//! mult
//! 0 0 0
//! 0 0 1
//! 0 1 2
//! arrow        # optional
//! 2 2 2
//! 1 2 2
//! 0 1 2
//! end
//! ```
//!
//! Instead of `covers`, a `leq` section may give the full `n x n` 0/1 order
//! matrix. Table entries are element names.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::algebra::{AxiomReport, BuildError, Elem, FiniteBrl, Order, Tables};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}`")]
    Missing(&'static str),
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

impl LoadError {
    /// The failed-axiom report, when loading stopped on the axioms.
    pub fn axiom_report(&self) -> Option<&AxiomReport> {
        match self {
            LoadError::Build(BuildError::AxiomsFailed(r)) => Some(r),
            _ => None,
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Covers,
    Leq,
    Mult,
    Arrow,
    Done,
}

/// Parses the text into raw tables without building the algebra.
pub fn parse_spec(text: &str) -> Result<Tables, FormatError> {
    let mut name = None;
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, Elem> = HashMap::new();
    let (mut top, mut bot) = (None, None);
    let mut covers: Option<Vec<(Elem, Elem)>> = None;
    let mut leq: Option<Vec<Vec<bool>>> = None;
    let mut mult: Option<Vec<Vec<Elem>>> = None;
    let mut arrow: Option<Vec<Vec<Elem>>> = None;
    let mut section = Section::Header;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if section == Section::Done {
            return Err(err(line_no, "content after `end`"));
        }
        let lookup = |t: &str| {
            index
                .get(t)
                .copied()
                .ok_or_else(|| err(line_no, format!("unknown element `{t}`")))
        };
        let need_elements = || {
            names
                .as_ref()
                .map(Vec::len)
                .ok_or_else(|| err(line_no, "`elements` must come before tables"))
        };
        match toks[0] {
            "algebra" if toks.len() == 2 => name = Some(toks[1].to_string()),
            "elements" if toks.len() >= 2 => {
                let ns: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                index.clear();
                for (k, nm) in ns.iter().enumerate() {
                    if index.insert(nm.clone(), k).is_some() {
                        return Err(err(line_no, format!("duplicate element `{nm}`")));
                    }
                }
                names = Some(ns);
            }
            "top" if toks.len() == 2 => top = Some(lookup(toks[1])?),
            "bot" if toks.len() == 2 => bot = Some(lookup(toks[1])?),
            "covers" if toks.len() == 1 => {
                need_elements()?;
                section = Section::Covers;
                covers = Some(Vec::new());
            }
            "leq" if toks.len() == 1 => {
                need_elements()?;
                section = Section::Leq;
                leq = Some(Vec::new());
            }
            "mult" if toks.len() == 1 => {
                need_elements()?;
                section = Section::Mult;
                mult = Some(Vec::new());
            }
            "arrow" if toks.len() == 1 => {
                need_elements()?;
                section = Section::Arrow;
                arrow = Some(Vec::new());
            }
            "end" if toks.len() == 1 => section = Section::Done,
            _ => {
                let n = need_elements()?;
                match section {
                    Section::Header | Section::Done => {
                        return Err(err(line_no, format!("unexpected `{line}`")));
                    }
                    Section::Covers => {
                        if toks.len() != 3 || toks[1] != "<" {
                            return Err(err(line_no, "expected `a < b`"));
                        }
                        let pair = (lookup(toks[0])?, lookup(toks[2])?);
                        covers.as_mut().unwrap().push(pair);
                    }
                    Section::Leq => {
                        if toks.len() != n {
                            return Err(err(line_no, format!("expected {n} entries")));
                        }
                        let row = toks
                            .iter()
                            .map(|t| match *t {
                                "0" => Ok(false),
                                "1" => Ok(true),
                                other => Err(err(line_no, format!("expected 0 or 1, got `{other}`"))),
                            })
                            .collect::<Result<Vec<bool>, _>>()?;
                        leq.as_mut().unwrap().push(row);
                    }
                    Section::Mult | Section::Arrow => {
                        if toks.len() != n {
                            return Err(err(line_no, format!("expected {n} entries")));
                        }
                        let row = toks.iter().map(|t| lookup(t)).collect::<Result<Vec<Elem>, _>>()?;
                        let table = if section == Section::Mult { &mut mult } else { &mut arrow };
                        let table = table.as_mut().unwrap();
                        if table.len() == n {
                            return Err(err(line_no, format!("table has more than {n} rows")));
                        }
                        table.push(row);
                    }
                }
            }
        }
    }

    if section != Section::Done {
        return Err(FormatError::Missing("end"));
    }
    let order = match (covers, leq) {
        (Some(_), Some(_)) => {
            return Err(err(0, "give either `covers` or `leq`, not both"));
        }
        (Some(c), None) => Order::Covers(c),
        (None, Some(l)) => Order::Leq(l),
        (None, None) => return Err(FormatError::Missing("covers or leq")),
    };
    Ok(Tables {
        name: name.ok_or(FormatError::Missing("algebra"))?,
        names: names.ok_or(FormatError::Missing("elements"))?,
        top: top.ok_or(FormatError::Missing("top"))?,
        bot: bot.ok_or(FormatError::Missing("bot"))?,
        mult: mult.ok_or(FormatError::Missing("mult"))?,
        order,
        arrow,
    })
}

/// Parses and fully validates.
pub fn load_spec(text: &str) -> Result<FiniteBrl, LoadError> {
    Ok(FiniteBrl::new(parse_spec(text)?)?)
}

/// Parses and builds without the axiom check; a given arrow is used as is.
pub fn load_spec_unchecked(text: &str) -> Result<FiniteBrl, LoadError> {
    Ok(FiniteBrl::new_unchecked(parse_spec(text)?)?)
}

fn read(path: &Path) -> Result<String, LoadError> {
    std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_spec_file(path: impl AsRef<Path>) -> Result<FiniteBrl, LoadError> {
    load_spec(&read(path.as_ref())?)
}

pub fn load_spec_file_unchecked(path: impl AsRef<Path>) -> Result<FiniteBrl, LoadError> {
    load_spec_unchecked(&read(path.as_ref())?)
}

/// Writes `covers`, `mult` and `arrow`. Names are padded so columns line up.
pub fn write_spec(alg: &FiniteBrl) -> String {
    let width = alg.names().iter().map(String::len).max().unwrap_or(1);
    let row = |out: &mut String, vals: &[Elem]| {
        let cells: Vec<String> = vals
            .iter()
            .map(|&v| format!("{:>width$}", alg.elem_name(v)))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" ").trim_end());
    };
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", alg.name());
    let _ = writeln!(out, "elements {}", alg.names().join(" "));
    let _ = writeln!(out, "top {}", alg.elem_name(alg.top()));
    let _ = writeln!(out, "bot {}", alg.elem_name(alg.bot()));
    out.push_str("covers\n");
    for (a, b) in alg.covers() {
        let _ = writeln!(out, "{} < {}", alg.elem_name(a), alg.elem_name(b));
    }
    out.push_str("mult\n");
    for r in alg.mult_table() {
        row(&mut out, &r);
    }
    out.push_str("arrow\n");
    for r in alg.arrow_table() {
        row(&mut out, &r);
    }
    out.push_str("end\n");
    out
}
