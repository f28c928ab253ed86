//! Command-line surface. Exit codes: 0 success, 1 a check ran and failed,
//! 2 the input could not be read or parsed.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::antisym::to_antisymmetric;
use crate::basis::{dimension, graded_basis, BasisBuilder};
use crate::fixture::counterexample_r4_14;
use crate::invariance::translate_expand;
use crate::io::{read_polynomial, write_polynomial, write_raw, Meta};
use crate::poly::SymmetricPolynomial;
use crate::report::{scan, verify_paper};
use crate::squeeze::{is_haldane, lex_maxima_set, support_poset, CellAnalysis};

#[derive(Debug, Parser)]
#[command(
    name = "haldane",
    version,
    about = "Translation-invariant symmetric polynomials and the squeezing order"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print dim R_n^d.
    Dim { n: usize, d: u32 },
    /// Emit the w_lambda basis of R_n^d, one JSON polynomial per line.
    Basis { n: usize, d: u32 },
    /// Emit the fully reduced echelon basis of R_n^d, one JSON polynomial per line.
    SpecialBasis { n: usize, d: u32 },
    /// Print the set L_n^d of lex-leading monomials of R_n^d.
    Lexmax { n: usize, d: u32 },
    /// Decide whether the polynomial in FILE has a squeezing maximum (exit 1 if not).
    HaldaneCheck { file: PathBuf },
    /// Decide whether the polynomial in FILE is translation invariant (exit 1 if not).
    InvarianceCheck { file: PathBuf },
    /// Build a non-Haldane element of R_n^d (exit 1 if L_n^d is linearly ordered).
    Counterexample { n: usize, d: u32 },
    /// Print the Hasse diagram of the support poset of FILE.
    Hasse {
        file: PathBuf,
        /// Emit Graphviz DOT instead of a cover list.
        #[arg(long)]
        dot: bool,
    },
    /// Analyze every cell n_min <= n <= n_max, 0 <= d <= d_max; one JSON object per line.
    Scan {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        d_max: u32,
    },
    /// Run every check on the shipped degree-14 counterexample (exit 1 on any failure).
    VerifyPaper,
    /// Print the shipped degree-14 counterexample as JSON.
    Fixture,
    /// Multiply the polynomial in FILE by the Vandermonde product; raw JSON output.
    Antisymmetrize { file: PathBuf },
}

/// Captured result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn check(passed: bool, stdout: String) -> Self {
        Outcome {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn malformed(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn load(path: &PathBuf) -> Result<SymmetricPolynomial, Outcome> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Outcome::malformed(format!("{}: {e}", path.display())))?;
    read_polynomial(&text).map_err(Outcome::malformed)
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut acc, l| {
        acc.push_str(&l);
        acc.push('\n');
        acc
    })
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dim { n, d } => Outcome::ok(format!("{}\n", dimension(n as u32, d))),
        Command::Basis { n, d } => {
            if n < 2 {
                return Outcome::malformed("basis needs n >= 2");
            }
            let basis = graded_basis(n, d);
            Outcome::ok(lines(basis.labels.iter().zip(&basis.elements).map(|(l, p)| {
                write_polynomial(
                    p,
                    Some(Meta {
                        degree: Some(d),
                        provenance: Some(format!("w{l}")),
                        haldane: None,
                    }),
                )
            })))
        }
        Command::SpecialBasis { n, d } => {
            let mut builder = BasisBuilder::new(n);
            let echelon = crate::basis::echelonize(&builder.graded_basis(d));
            Outcome::ok(lines(echelon.rows.iter().zip(&echelon.leading).map(|(p, l)| {
                write_polynomial(
                    p,
                    Some(Meta {
                        degree: Some(d),
                        provenance: Some(format!("pivot {l}")),
                        haldane: is_haldane(p).ok(),
                    }),
                )
            })))
        }
        Command::Lexmax { n, d } => {
            let set = lex_maxima_set(n, d);
            let items: Vec<String> = set.maxima.iter().map(ToString::to_string).collect();
            Outcome::ok(format!("{{{}}}\n", items.join(",")))
        }
        Command::HaldaneCheck { file } => {
            let p = match load(&file) {
                Ok(p) => p,
                Err(o) => return o,
            };
            match support_poset(&p) {
                Ok(poset) => {
                    let maxima = poset.maximal_elements();
                    let items: Vec<String> = maxima.iter().map(ToString::to_string).collect();
                    let haldane = maxima.len() == 1;
                    Outcome::check(
                        haldane,
                        format!(
                            "haldane: {}\nmaximal: {{{}}}\n",
                            if haldane { "yes" } else { "no" },
                            items.join(",")
                        ),
                    )
                }
                Err(e) => Outcome::malformed(e),
            }
        }
        Command::InvarianceCheck { file } => {
            let p = match load(&file) {
                Ok(p) => p,
                Err(o) => return o,
            };
            let expansion = translate_expand(&p);
            let nonzero: Vec<usize> = expansion
                .pieces()
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, q)| !q.is_zero())
                .map(|(i, _)| i)
                .collect();
            let invariant = nonzero.is_empty();
            let mut out = format!("translation-invariant: {}\n", if invariant { "yes" } else { "no" });
            if !invariant {
                writeln!(out, "nonzero pieces: {nonzero:?}").unwrap();
            }
            Outcome::check(invariant, out)
        }
        Command::Counterexample { n, d } => {
            let cell = CellAnalysis::compute(n, d);
            match cell.counterexample() {
                Some(q) => Outcome::ok(format!(
                    "{}\n",
                    write_polynomial(
                        &q,
                        Some(Meta {
                            degree: Some(d),
                            provenance: Some(format!("constructed counterexample n={n} d={d}")),
                            haldane: Some(false),
                        }),
                    )
                )),
                None => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!(
                        "no incomparable pair in L_{n}^{d} (status: {})\n",
                        cell.status.verdict().as_str()
                    ),
                },
            }
        }
        Command::Hasse { file, dot } => {
            let p = match load(&file) {
                Ok(p) => p,
                Err(o) => return o,
            };
            let poset = match support_poset(&p) {
                Ok(poset) => poset,
                Err(e) => return Outcome::malformed(e),
            };
            if dot {
                Outcome::ok(poset.to_dot())
            } else {
                let mut out = String::new();
                for m in poset.nodes() {
                    writeln!(out, "node {m}").unwrap();
                }
                for (a, b) in poset.covers() {
                    writeln!(out, "{a} -> {b}").unwrap();
                }
                Outcome::ok(out)
            }
        }
        Command::Scan { n_min, n_max, d_max } => {
            if n_max < 2 || n_min > n_max {
                return Outcome::malformed("scan needs 2 <= n_max and n_min <= n_max");
            }
            Outcome::ok(lines(scan(n_min, n_max, d_max).iter().map(|r| r.to_json())))
        }
        Command::VerifyPaper => {
            let report = verify_paper();
            Outcome::check(report.passed(), report.to_string())
        }
        Command::Fixture => Outcome::ok(format!(
            "{}\n",
            write_polynomial(
                &counterexample_r4_14(),
                Some(Meta {
                    degree: Some(14),
                    provenance: Some("explicit non-Haldane element of R_4^14".to_string()),
                    haldane: Some(false),
                }),
            )
        )),
        Command::Antisymmetrize { file } => {
            let p = match load(&file) {
                Ok(p) => p,
                Err(o) => return o,
            };
            Outcome::ok(format!("{}\n", write_raw(to_antisymmetric(&p).as_raw())))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Argument errors map to exit code 2, `--help`/`--version` to 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
