//! Command-line front end. `run` is the whole program; `main` only prints.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{convert, Basis, Expr, TensorExpr};
use crate::composition::{strong_leq, weak_leq, DottedComposition};
use crate::error::Error;
use crate::hopf::{antipode, coproduct, multiply, verify_hopf, AntipodeRoute};
use crate::realize::realize_expr;
use crate::shuffles::{fundamental_paths, overlapping_shuffles, Step};
use crate::superschur::{dot_standard_tableaux, schur_to_l, Superpartition};

#[derive(Parser, Debug)]
#[command(name = "sqsym", version, about = "Quasisymmetric functions in superspace")]
struct Cli {
    /// Output format (verify defaults to json, everything else to plain).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    M,
    L,
    Lbar,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::L => Basis::L,
            BasisArg::Lbar => Basis::Lbar,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Via {
    Columns,
    Monomial,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of two basis elements or expressions.
    Product {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "m", ignore_case = true)]
        basis: BasisArg,
        /// List the shuffle paths behind the product.
        #[arg(long)]
        trace: bool,
    },
    /// Coproduct.
    Coproduct {
        a: String,
        #[arg(long, value_enum, default_value = "m", ignore_case = true)]
        basis: BasisArg,
    },
    /// Antipode.
    Antipode {
        a: String,
        #[arg(long, value_enum, default_value = "m", ignore_case = true)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "columns")]
        via: Via,
    },
    /// Change of basis.
    Convert {
        a: String,
        #[arg(long, value_enum, ignore_case = true)]
        from: BasisArg,
        #[arg(long, value_enum, ignore_case = true)]
        to: BasisArg,
    },
    /// Compare two compositions in both refinement orders.
    Orders { a: String, b: String },
    /// Fundamental expansion of a superspace Schur function.
    Schur {
        lambda: String,
        #[arg(long)]
        skew: Option<String>,
        #[arg(long)]
        show_tableaux: bool,
    },
    /// Expand an expression as a polynomial in N commuting and N anticommuting variables.
    Realize {
        expr: String,
        #[arg(long)]
        vars: usize,
    },
    /// Machine-check the Hopf structure on a finite universe.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, default_value_t = 2)]
        max_fermionic: u32,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad input text, with the offending argument for the caret line.
    Parse(String, Error),
    Domain(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn parse_with<T, F>(src: &str, f: F) -> CliResult<T>
where
    F: FnOnce(&str) -> crate::error::Result<T>,
{
    f(src).map_err(|e| match e {
        Error::Parse { .. } => Failure::Parse(src.to_string(), e),
        other => Failure::Domain(other),
    })
}

fn composition(src: &str) -> CliResult<DottedComposition> {
    parse_with(src, str::parse)
}

/// A bare composition `[..]` names a basis element; anything else is an expression.
fn operand(src: &str, basis: Basis) -> CliResult<Expr> {
    if src.trim_start().starts_with('[') {
        return Ok(Expr::basis_element(basis, composition(src)?));
    }
    let e: Expr = parse_with(src, str::parse)?;
    if e.basis() != basis && !e.is_zero() {
        return Err(Failure::Domain(Error::BasisMismatch {
            left: e.basis(),
            right: basis,
        }));
    }
    Ok(e)
}

fn render_expr(e: &Expr, f: Format) -> String {
    match f {
        Format::Plain => e.to_plain(),
        Format::Latex => e.to_latex(),
        Format::Json => e.to_json().to_string(),
    }
}

fn render_tensor(t: &TensorExpr, f: Format) -> String {
    match f {
        Format::Plain => t.to_plain(),
        Format::Latex => t.to_latex(),
        Format::Json => t.to_json().to_string(),
    }
}

fn steps_plain(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| match s {
            Step::Horizontal => "H".to_string(),
            Step::Vertical => "V".to_string(),
            Step::Diagonal => "D".to_string(),
            Step::RowDiagonal { rows } => format!("R{rows}"),
            Step::ColumnDiagonal { cols } => format!("C{cols}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn sign_char(s: i8) -> char {
    if s < 0 {
        '-'
    } else {
        '+'
    }
}

fn product(a: &str, b: &str, basis: Basis, trace: bool, f: Format) -> CliResult<String> {
    let x = operand(a, basis)?;
    let y = operand(b, basis)?;
    let result = multiply(&x, &y)?;
    if !trace {
        return Ok(render_expr(&result, f));
    }
    let (ca, cb) = match (a.trim_start().starts_with('['), b.trim_start().starts_with('[')) {
        (true, true) => (composition(a)?, composition(b)?),
        _ => {
            return Err(Failure::Domain(Error::UnsupportedBasis {
                op: "trace of a non-basis operand",
                basis,
            }))
        }
    };
    let (paths_json, paths_plain): (Vec<Value>, Vec<String>) = match basis {
        Basis::M => overlapping_shuffles(&ca, &cb)
            .into_iter()
            .map(|p| {
                let line = format!("{} {} -> {}", sign_char(p.sign), steps_plain(&p.steps), p.comp);
                (serde_json::to_value(&p).expect("serializable"), line)
            })
            .unzip(),
        Basis::L => fundamental_paths(&ca, &cb)
            .into_iter()
            .map(|p| {
                let line = format!(
                    "{} {} : {} -> {}",
                    sign_char(p.sign),
                    steps_plain(&p.steps),
                    p.word,
                    p.comp
                );
                (serde_json::to_value(&p).expect("serializable"), line)
            })
            .unzip(),
        Basis::Lbar => {
            return Err(Failure::Domain(Error::UnsupportedBasis {
                op: "product",
                basis,
            }))
        }
    };
    Ok(match f {
        Format::Json => json!({ "result": result.to_json(), "paths": paths_json }).to_string(),
        _ => {
            let mut out = paths_plain.join("\n");
            let _ = write!(out, "\n= {}", render_expr(&result, f));
            out
        }
    })
}

fn orders(a: &str, b: &str, f: Format) -> CliResult<String> {
    let x = composition(a)?;
    let y = composition(b)?;
    let sets = |c: &DottedComposition| {
        let s = c.def_sets();
        json!({ "comp": c.to_string(), "D": s.d, "E": s.e, "F": s.f })
    };
    let verdicts = [
        ("strong", "≼", "\\preccurlyeq", strong_leq(&x, &y), strong_leq(&y, &x)),
        ("weak", "⊴", "\\trianglelefteq", weak_leq(&x, &y), weak_leq(&y, &x)),
    ];
    Ok(match f {
        Format::Json => {
            let mut v = json!({ "a": sets(&x), "b": sets(&y) });
            for (name, _, _, ab, ba) in verdicts {
                v[name] = json!({ "a_leq_b": ab, "b_leq_a": ba });
            }
            v.to_string()
        }
        Format::Plain | Format::Latex => {
            let latex = f == Format::Latex;
            let show = |c: &DottedComposition| if latex { c.to_latex() } else { c.to_string() };
            let mut lines = Vec::new();
            for (_, sym, tex, ab, ba) in verdicts {
                let op = if latex { tex } else { sym };
                lines.push(format!("{} {op} {}: {ab}", show(&x), show(&y)));
                lines.push(format!("{} {op} {}: {ba}", show(&y), show(&x)));
            }
            for c in [&x, &y] {
                let s = c.def_sets();
                lines.push(format!("{}: D={:?} E={:?} F={:?}", show(c), s.d, s.e, s.f));
            }
            lines.join("\n")
        }
    })
}

fn schur(lambda: &str, skew: Option<&str>, show: bool, f: Format) -> CliResult<String> {
    let l: Superpartition = parse_with(lambda, str::parse)?;
    let o = match skew {
        Some(s) => parse_with(s, str::parse)?,
        None => Superpartition::empty(),
    };
    let e = schur_to_l(&l, &o)?;
    if !show {
        return Ok(render_expr(&e, f));
    }
    let tableaux = dot_standard_tableaux(&l, &o);
    Ok(match f {
        Format::Json => {
            let list: Vec<Value> = tableaux
                .iter()
                .map(|t| {
                    json!({
                        "diagram": t.render(),
                        "weight": t.weight().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "inv": t.inv(),
                        "comp": t.comp().map(|c| c.to_string()).unwrap_or_default(),
                    })
                })
                .collect();
            json!({ "result": e.to_json(), "tableaux": list }).to_string()
        }
        _ => {
            let mut out = String::new();
            for t in &tableaux {
                let comp = t.comp().map(|c| c.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{}\n  {}L{comp}\n", t.render(), sign_char(t.inv_sign()));
            }
            out.push_str(&render_expr(&e, f));
            out
        }
    })
}

fn dispatch(cli: Cli) -> CliResult<String> {
    let f = cli.format;
    let fmt = f.unwrap_or(Format::Plain);
    match cli.command {
        Command::Product { a, b, basis, trace } => product(&a, &b, basis.into(), trace, fmt),
        Command::Coproduct { a, basis } => {
            let t = coproduct(&operand(&a, basis.into())?)?;
            Ok(render_tensor(&t, fmt))
        }
        Command::Antipode { a, basis, via } => {
            let route = match via {
                Via::Columns => AntipodeRoute::Columns,
                Via::Monomial => AntipodeRoute::Monomial,
            };
            Ok(render_expr(&antipode(&operand(&a, basis.into())?, route)?, fmt))
        }
        Command::Convert { a, from, to } => {
            Ok(render_expr(&convert(&operand(&a, from.into())?, to.into())?, fmt))
        }
        Command::Orders { a, b } => orders(&a, &b, fmt),
        Command::Schur {
            lambda,
            skew,
            show_tableaux,
        } => schur(&lambda, skew.as_deref(), show_tableaux, fmt),
        Command::Realize { expr, vars } => {
            let e: Expr = parse_with(&expr, str::parse)?;
            let p = realize_expr(&e, vars);
            Ok(match fmt {
                Format::Plain => p.to_plain(),
                Format::Latex => p.to_latex(),
                Format::Json => p.to_json().to_string(),
            })
        }
        Command::Verify {
            max_degree,
            max_fermionic,
        } => {
            let report = verify_hopf(max_degree, max_fermionic)?;
            let text = match f.unwrap_or(Format::Json) {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
                _ => report
                    .checks
                    .iter()
                    .map(|c| {
                        let status = if c.counterexample.is_none() { "PASS" } else { "FAIL" };
                        let mut line = format!("{status} {} ({} cases, {})", c.name, c.cases, c.universe);
                        if let Some(ce) = &c.counterexample {
                            let _ = write!(line, ": {ce}");
                        }
                        line
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Verify(text))
            }
        }
    }
}

fn caret(src: &str, e: &Error) -> String {
    match e {
        Error::Parse { position, .. } => {
            let col = src[..(*position).min(src.len())].chars().count();
            format!("error: {e}\n  {src}\n  {}^", " ".repeat(col))
        }
        _ => format!("error: {e}"),
    }
}

/// Runs one invocation. Exit codes: 0 ok, 1 domain error, 2 parse or usage error, 3 verification failure.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let done = |code, stdout: String, stderr: String| Outcome { code, stdout, stderr };
    match dispatch(cli) {
        Ok(out) => done(0, out + "\n", String::new()),
        Err(Failure::Parse(src, e)) => done(2, String::new(), caret(&src, &e) + "\n"),
        Err(Failure::Domain(e)) => done(1, String::new(), format!("error: {e}\n")),
        Err(Failure::Verify(report)) => done(3, report + "\n", "error: verification failed\n".into()),
    }
}
