//! `brl`: command line front end for finite bounded residuated lattices.
//!
//! Exit codes: 0 ok, 1 a property fails or a counterexample was found,
//! 2 bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use brl_core::constructions::{
    direct_product, is_isomorphic, make_lukasiewicz, make_nogap5, make_trivial, make_w9,
    subalgebra_generated,
};
use brl_core::filters::{principal_filter, quotient};
use brl_core::format::{load_spec_file, load_spec_file_unchecked, write_spec, LoadError};
use brl_core::laws::{run_laws, LawStatus};
use brl_core::lex::{LexChain, LexElement};
use brl_core::report::analyze;
use brl_core::structure::has_gap_definitional;
use brl_core::terms::{check_identity, gap_certificate, parse_equation, parse_term, IdentityResult};
use brl_core::{Elem, FiniteBrl};

#[derive(Parser)]
#[command(name = "brl", version, about = "Finite bounded residuated lattice toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// `ALG` arguments are spec files, or one of the builtins `w9`, `nogap5`,
/// `trivial`, `L<k>` (the k-element Lukasiewicz chain).
#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms and print the report.
    Verify { alg: String },
    /// Structure flags, filters, radical and term search.
    Analyze {
        alg: String,
        #[arg(long)]
        json: bool,
        /// Bound on k and r in the k.x^r search.
        #[arg(long, default_value_t = 10)]
        term_bound: usize,
    },
    /// Check an equation such as `x \/ ~x = T` over all assignments.
    CheckId { alg: String, equation: String },
    /// GAP verdict and the least certificate k.x^r.
    Gap {
        alg: String,
        #[arg(long, default_value_t = 10)]
        max_k: usize,
        #[arg(long, default_value_t = 10)]
        max_r: usize,
    },
    /// Write a builtin algebra: `lukasiewicz N`, `w9` or `nogap5`.
    Gen {
        name: String,
        n: Option<usize>,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Direct product of two algebras.
    Product {
        left: String,
        right: String,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Subalgebra generated by the named elements.
    Sub {
        alg: String,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Quotient by the principal filter of an element.
    Quotient {
        alg: String,
        #[arg(long)]
        generator: String,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Find an isomorphism between two algebras.
    Iso { left: String, right: String },
    /// Evaluate a term over pair literals `(a,r)` in the lex MV-chain with ambient n.
    Lexmv {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        expr: String,
    },
    /// Run the law harness over every spec file in a directory.
    Laws { dir: PathBuf },
}

/// A failed command: `Fails` exits 1, `Input` exits 2.
enum Stop {
    Fails,
    Input(String),
}

type Run = Result<(), Stop>;

impl From<LoadError> for Stop {
    fn from(e: LoadError) -> Self {
        Stop::Input(e.to_string())
    }
}

fn builtin(name: &str) -> Option<FiniteBrl> {
    match name {
        "w9" | "W9" => Some(make_w9()),
        "nogap5" => Some(make_nogap5()),
        "trivial" => Some(make_trivial()),
        _ => {
            let k: usize = name.strip_prefix('L')?.parse().ok()?;
            (k >= 2).then(|| make_lukasiewicz(k - 1))
        }
    }
}

fn load(arg: &str) -> Result<FiniteBrl, Stop> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(a) = builtin(arg) {
            return Ok(a);
        }
    }
    Ok(load_spec_file(path)?)
}

fn elem(alg: &FiniteBrl, name: &str) -> Result<Elem, Stop> {
    alg.index_of(name)
        .ok_or_else(|| Stop::Input(format!("no element `{name}` in {}", alg.name())))
}

fn emit(alg: &FiniteBrl, out: Option<&Path>) -> Run {
    let text = write_spec(alg);
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Stop::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(arg: &str) -> Run {
    let alg = match builtin(arg).filter(|_| !Path::new(arg).exists()) {
        Some(a) => a,
        None => load_spec_file_unchecked(arg)?,
    };
    let report = alg.verify_axioms();
    print!("{report}");
    if report.all_hold() {
        Ok(())
    } else {
        Err(Stop::Fails)
    }
}

fn check_id(arg: &str, equation: &str) -> Run {
    let alg = load(arg)?;
    let eq = parse_equation(equation).map_err(|e| Stop::Input(e.to_string()))?;
    match check_identity(&alg, &eq) {
        IdentityResult::Holds => {
            println!("holds");
            Ok(())
        }
        IdentityResult::Counterexample(assign) => {
            let parts: Vec<String> = assign
                .iter()
                .map(|(v, e)| format!("{v}:={}", alg.elem_name(*e)))
                .collect();
            println!("counterexample {}", parts.join(" "));
            Err(Stop::Fails)
        }
    }
}

fn gap(arg: &str, max_k: usize, max_r: usize) -> Run {
    let alg = load(arg)?;
    let has = has_gap_definitional(&alg);
    println!("gap {has}");
    match gap_certificate(&alg, max_k, max_r) {
        Some((k, r)) => println!("certificate {k}.x^{r} (k={k}, r={r})"),
        None => println!("certificate none (k <= {max_k}, r <= {max_r})"),
    }
    if has {
        Ok(())
    } else {
        Err(Stop::Fails)
    }
}

fn gen(name: &str, n: Option<usize>, out: Option<&Path>) -> Run {
    let alg = match (name, n) {
        ("lukasiewicz", Some(n)) if n >= 1 => make_lukasiewicz(n),
        ("lukasiewicz", _) => return Err(Stop::Input("lukasiewicz needs N >= 1".into())),
        ("w9", None) => make_w9(),
        ("nogap5", None) => make_nogap5(),
        _ => return Err(Stop::Input(format!("unknown generator `{name}`"))),
    };
    emit(&alg, out)
}

fn iso(left: &str, right: &str) -> Run {
    let (a, b) = (load(left)?, load(right)?);
    match is_isomorphic(&a, &b) {
        Some(map) => {
            for (x, y) in map.iter().enumerate() {
                println!("{} -> {}", a.elem_name(x), b.elem_name(*y));
            }
            Ok(())
        }
        None => {
            println!("not isomorphic");
            Err(Stop::Fails)
        }
    }
}

/// Replaces each `(a,r)` literal by a fresh variable `pair{i}`.
fn extract_pairs(expr: &str) -> (String, Vec<LexElement>) {
    let mut out = String::new();
    let mut pairs = Vec::new();
    let mut rest = expr;
    while let Some(open) = rest.find('(') {
        out.push_str(&rest[..open]);
        let tail = &rest[open + 1..];
        let literal = tail.find(')').and_then(|close| {
            let (a, r) = tail[..close].split_once(',')?;
            let p = LexElement::new(a.trim().parse().ok()?, r.trim().parse().ok()?);
            Some((p, close))
        });
        match literal {
            Some((p, close)) => {
                out.push_str(&format!("pair{}", pairs.len()));
                pairs.push(p);
                rest = &tail[close + 1..];
            }
            None => {
                out.push('(');
                rest = tail;
            }
        }
    }
    out.push_str(rest);
    (out, pairs)
}

fn lexmv(n: i64, expr: &str) -> Run {
    let chain = LexChain::new(n).map_err(|e| Stop::Input(e.to_string()))?;
    let (text, pairs) = extract_pairs(expr);
    for &p in &pairs {
        chain.check(p).map_err(|e| Stop::Input(e.to_string()))?;
    }
    let term = parse_term(&text).map_err(|e| Stop::Input(e.to_string()))?;
    let env = |v: &str| {
        let i: usize = v.strip_prefix("pair")?.parse().ok()?;
        pairs.get(i).copied()
    };
    let value = term
        .eval_in(&chain, &env)
        .map_err(|e| Stop::Input(e.to_string()))?;
    println!("{value}");
    Ok(())
}

fn laws(dir: &Path) -> Run {
    let entries = std::fs::read_dir(dir).map_err(|e| Stop::Input(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    // workers fan out per file; printing follows the sorted file order
    let results: Vec<_> = files
        .par_iter()
        .map(|p| load_spec_file(p).map(|alg| run_laws(&alg)))
        .collect();
    let (mut failed, mut broken, mut checks) = (0, 0, 0);
    for (path, res) in files.iter().zip(results) {
        let file = path.file_name().unwrap_or_default().to_string_lossy();
        match res {
            Err(e) => {
                broken += 1;
                println!("{file}  LOAD ERROR  {e}");
            }
            Ok(outcomes) => {
                for o in outcomes {
                    checks += 1;
                    let cell = match &o.status {
                        LawStatus::Pass => "pass".to_string(),
                        LawStatus::NotApplicable => "n/a".to_string(),
                        LawStatus::Fail(w) => {
                            failed += 1;
                            format!("FAIL  {w}")
                        }
                    };
                    println!("{file}  {:<52} {cell}", o.law);
                }
            }
        }
    }
    println!(
        "{} files, {checks} checks, {failed} failed, {broken} unreadable",
        files.len()
    );
    if failed > 0 {
        Err(Stop::Fails)
    } else if broken > 0 {
        Err(Stop::Input(format!("{broken} file(s) failed to load")))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Run {
    match cli.cmd {
        Cmd::Verify { alg } => verify(&alg),
        Cmd::Analyze {
            alg,
            json,
            term_bound,
        } => {
            let report = analyze(&load(&alg)?, term_bound);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(())
        }
        Cmd::CheckId { alg, equation } => check_id(&alg, &equation),
        Cmd::Gap { alg, max_k, max_r } => gap(&alg, max_k, max_r),
        Cmd::Gen { name, n, out } => gen(&name, n, out.as_deref()),
        Cmd::Product { left, right, out } => {
            emit(&direct_product(&load(&left)?, &load(&right)?), out.as_deref())
        }
        Cmd::Sub { alg, gens, out } => {
            let a = load(&alg)?;
            let gens = gens.iter().map(|g| elem(&a, g)).collect::<Result<Vec<_>, _>>()?;
            emit(&subalgebra_generated(&a, &gens).0, out.as_deref())
        }
        Cmd::Quotient {
            alg,
            generator,
            out,
        } => {
            let a = load(&alg)?;
            let g = elem(&a, &generator)?;
            emit(&quotient(&a, &principal_filter(&a, g)).0, out.as_deref())
        }
        Cmd::Iso { left, right } => iso(&left, &right),
        Cmd::Lexmv { n, expr } => lexmv(n, &expr),
        Cmd::Laws { dir } => laws(&dir),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Stop::Fails) => ExitCode::from(1),
        Err(Stop::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
