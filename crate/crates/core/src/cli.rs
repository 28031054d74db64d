//! Command-line front end. Exit codes: 0 success, 1 mathematical
//! violation or certificate failure, 2 I/O or parse error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::LeibnizAlgebra;
use crate::error::Error;
use crate::exactlin::Subspace;
use crate::faithful::{build_faithful, PipelineOptions};
use crate::fixtures;
use crate::io::{emit_faithful_result, parse_algebra, parse_module, parse_module_document};
use crate::rep::{check_module_axioms, check_patsourakos_sampled, rep_kernel};
use crate::sample::DEFAULT_SEED;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "leibrep", version, about = "Faithful modules for Leibniz algebras over the rationals")]
pub struct Cli {
    /// Use the splitting construction even when the centre is zero.
    #[arg(long, global = true)]
    pub force_construction: bool,

    /// Seed for the sampled identity checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the left Leibniz identity on every basis triple.
    Check { file: PathBuf },
    /// Print the Leibniz kernel, centre, left annihilator and lower central series.
    Invariants { file: PathBuf },
    /// Build and certify a faithful module of dimension at most dim + 1.
    Faithful {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a module document against an algebra document.
    Verify { alg: PathBuf, module: PathBuf },
    /// Run check, invariants, faithful and verify over the built-in corpus.
    Corpus {
        /// Skip the built-in fixtures.
        #[arg(long)]
        empty: bool,
        /// Extra algebra documents to append to the corpus.
        #[arg(long = "include")]
        include: Vec<PathBuf>,
    },
}

impl Cli {
    fn options(&self) -> PipelineOptions {
        PipelineOptions {
            force_construction: self.force_construction,
            seed: self.seed,
            ..PipelineOptions::default()
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let opts = cli.options();
    let code = match &cli.command {
        Command::Check { file } => run_check(file, out, err),
        Command::Invariants { file } => run_invariants(file, out, err),
        Command::Faithful { file, out: target } => run_faithful(file, target.as_deref(), &opts, out, err),
        Command::Verify { alg, module } => run_verify(alg, module, opts.seed, out, err),
        Command::Corpus { empty, include } => {
            let mut algebras = if *empty { Vec::new() } else { fixtures::corpus() };
            for path in include {
                match load_algebra(path) {
                    Ok(a) => algebras.push(a),
                    Err(e) => {
                        let _ = writeln!(err, "{}: {e}", path.display());
                        return EXIT_INPUT;
                    }
                }
            }
            run_corpus(&algebras, &opts, out)
        }
    };
    let _ = out.flush();
    code
}

fn load_algebra(path: &Path) -> Result<LeibnizAlgebra, Error> {
    parse_algebra(&fs::read_to_string(path)?)
}

fn label(alg: &LeibnizAlgebra) -> &str {
    alg.name().filter(|n| !n.is_empty()).unwrap_or("<unnamed>")
}

/// Loads an algebra, reporting failures on `err`; `Err` carries the exit code.
fn load_or_report(path: &Path, err: &mut dyn Write) -> Result<LeibnizAlgebra, i32> {
    load_algebra(path).map_err(|e| {
        let _ = writeln!(err, "{}: {e}", path.display());
        EXIT_INPUT
    })
}

fn report_leibniz(alg: &LeibnizAlgebra, out: &mut dyn Write) -> bool {
    let violations = alg.check_leibniz();
    for v in &violations {
        let residual: Vec<String> = v.residual.iter().map(crate::exactlin::format_rational).collect();
        let _ = writeln!(
            out,
            "violation at ({}, {}, {}): residual [{}]",
            v.i,
            v.j,
            v.k,
            residual.join(", ")
        );
    }
    violations.is_empty()
}

pub fn run_check(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let alg = match load_or_report(path, err) {
        Ok(a) => a,
        Err(code) => return code,
    };
    if report_leibniz(&alg, out) {
        let _ = writeln!(out, "{}: left Leibniz identity holds (dim {})", label(&alg), alg.dim());
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn describe(name: &str, s: &Subspace) -> String {
    format!("{name}: dim {} {s}", s.dim())
}

pub fn run_invariants(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let alg = match load_or_report(path, err) {
        Ok(a) => a,
        Err(code) => return code,
    };
    if !report_leibniz(&alg, out) {
        return EXIT_VIOLATION;
    }
    let series = alg.lower_central_series();
    let dims: Vec<String> = series.iter().map(|s| s.dim().to_string()).collect();
    let _ = writeln!(out, "algebra: {} (dim {})", label(&alg), alg.dim());
    let _ = writeln!(out, "{}", describe("Leib(L)", &alg.leibniz_kernel()));
    let _ = writeln!(out, "{}", describe("Z(L)", &alg.centre()));
    let _ = writeln!(out, "{}", describe("Ann(L)", &alg.left_annihilator()));
    let _ = writeln!(
        out,
        "lower central series: length {} dims [{}]",
        series.len(),
        dims.join(", ")
    );
    let _ = writeln!(out, "nilpotent: {}", alg.is_nilpotent_algebra());
    EXIT_OK
}

pub fn run_faithful(
    path: &Path,
    target: Option<&Path>,
    opts: &PipelineOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let alg = match load_or_report(path, err) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let result = match build_faithful(&alg, opts) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", label(&alg));
            return EXIT_VIOLATION;
        }
    };
    let doc = emit_faithful_result(&result);
    match target {
        Some(p) => {
            if let Err(e) = fs::write(p, &doc) {
                let _ = writeln!(err, "{}: {e}", p.display());
                return EXIT_INPUT;
            }
            let _ = writeln!(
                out,
                "{}: wrote {} module of dim {} to {}",
                label(&alg),
                result.branch,
                result.dim_v,
                p.display()
            );
        }
        None => {
            let _ = out.write_all(doc.as_bytes());
        }
    }
    if result.certificate.passes() {
        EXIT_OK
    } else {
        let _ = writeln!(err, "certificate failed: {:?}", result.certificate);
        EXIT_VIOLATION
    }
}

pub fn run_verify(alg_path: &Path, mod_path: &Path, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let alg = match load_or_report(alg_path, err) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let module = match fs::read_to_string(mod_path).map_err(Error::from).and_then(|t| parse_module(&t)) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", mod_path.display());
            return EXIT_INPUT;
        }
    };
    let violations = match check_module_axioms(&alg, &module) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return EXIT_INPUT;
        }
    };
    for v in &violations {
        let _ = writeln!(out, "axiom {} fails at ({}, {}): residual\n{}", v.axiom, v.i, v.j, v.residual);
    }
    let kernel = rep_kernel(&alg, &module).expect("dimensions checked");
    let pats = check_patsourakos_sampled(&module, module.mod_dim() as u32 + 1, 100, seed);
    let _ = writeln!(out, "axiom violations: {}", violations.len());
    let _ = writeln!(out, "kernel dim: {}", kernel.dim());
    let _ = writeln!(out, "power identity: {}", if pats.holds() { "holds" } else { "fails" });
    if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

/// One corpus entry end to end; returns the report line and success flag.
fn corpus_entry(alg: &LeibnizAlgebra, opts: &PipelineOptions) -> (String, bool) {
    let name = label(alg);
    let violations = alg.check_leibniz();
    if !violations.is_empty() {
        return (format!("FAIL {name}: {} Leibniz identity violations", violations.len()), false);
    }
    let series_len = alg.lower_central_series().len();
    let invariants = format!(
        "Leib {} Z {} Ann {} lcs {}",
        alg.leibniz_kernel().dim(),
        alg.centre().dim(),
        alg.left_annihilator().dim(),
        series_len
    );
    let result = match build_faithful(alg, opts) {
        Ok(r) => r,
        Err(e) => return (format!("FAIL {name}: {e}"), false),
    };
    // Re-read the emitted document, as `verify` would.
    let reread = parse_module_document(&emit_faithful_result(&result));
    let verified = match &reread {
        Ok((m, Some(_))) => {
            m == &result.module
                && check_module_axioms(alg, m).map_or(false, |v| v.is_empty())
                && rep_kernel(alg, m).map_or(false, |k| k.is_zero())
        }
        _ => false,
    };
    let ok = result.certificate.passes() && verified;
    (
        format!(
            "{} {name}: dim {} -> {} module of dim {} ({invariants})",
            if ok { "ok  " } else { "FAIL" },
            alg.dim(),
            result.branch,
            result.dim_v
        ),
        ok,
    )
}

pub fn run_corpus(algebras: &[LeibnizAlgebra], opts: &PipelineOptions, out: &mut dyn Write) -> i32 {
    let mut all_ok = true;
    for alg in algebras {
        let (line, ok) = corpus_entry(alg, opts);
        let _ = writeln!(out, "{line}");
        all_ok &= ok;
    }
    let _ = writeln!(out, "{} algebras, {}", algebras.len(), if all_ok { "all certified" } else { "failures" });
    if all_ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}
