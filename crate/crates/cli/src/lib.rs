//! Command-line front end for `blockmat`: JSON documents in, documents and
//! structure trees out.
//!
//! Exit status is 0 on success, 1 when an operation reports a singular
//! input, 2 for usage, parse, shape and I/O errors.

pub mod document;
pub mod fixtures;
pub mod selftest;

use std::io::Write;
use std::path::{Path, PathBuf};

use blockmat::{
    herm_trans, inv_traced, is_unit_lower, is_upper, neg, plu_decomp, plus, times, BlockError, BlockMatrix, InvTrace,
};
use clap::{Parser, Subcommand};

pub use document::{parse_document, write_document, DocError};

#[derive(Parser, Debug)]
#[command(name = "blockmat", version, about = "Exact recursive block matrix operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the structure tree.
    Show { file: PathBuf },
    /// Sum of two matrices.
    Add { a: PathBuf, b: PathBuf },
    /// Product of two matrices.
    Mul { a: PathBuf, b: PathBuf },
    /// Negation.
    Neg { a: PathBuf },
    /// Conjugate transpose.
    Htrans { a: PathBuf },
    /// Inverse; `--verbose` reports the path taken on stderr.
    Inv {
        a: PathBuf,
        #[arg(long)]
        verbose: bool,
    },
    /// PLU factorization with a check of the result.
    Plu { a: PathBuf },
    /// Invert, multiply back and report whether the product is the identity.
    CheckInv { a: PathBuf },
    /// Run the built-in reproductions.
    Selftest,
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Doc(PathBuf, DocError),
    Block(BlockError),
}

impl From<BlockError> for Failure {
    fn from(e: BlockError) -> Self {
        Failure::Block(e)
    }
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Block(e) if e.is_singular() => 1,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(p, e) => format!("error: {}: {e}", p.display()),
            Failure::Doc(p, e) => format!("error: {}: {e}", p.display()),
            Failure::Block(e) if e.is_singular() => e.to_string(),
            Failure::Block(e) => format!("error: {e}"),
        }
    }
}

fn load(path: &Path) -> Result<BlockMatrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    parse_document(&text).map_err(|e| Failure::Doc(path.to_path_buf(), e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(command: Command, out: &mut Vec<String>, diag: &mut Vec<String>) -> Result<i32, Failure> {
    let doc = |b: &BlockMatrix| write_document(b);
    match command {
        Command::Show { file } => out.push(load(&file)?.format_structure()),
        Command::Add { a, b } => out.push(doc(&plus(&load(&a)?, &load(&b)?)?)),
        Command::Mul { a, b } => out.push(doc(&times(&load(&a)?, &load(&b)?)?)),
        Command::Neg { a } => out.push(doc(&neg(&load(&a)?))),
        Command::Htrans { a } => out.push(doc(&herm_trans(&load(&a)?))),
        Command::Inv { a, verbose } => {
            let m = load(&a)?;
            let mut trace = InvTrace::default();
            let r = inv_traced(&m, &mut trace);
            if verbose {
                if trace.schur_failures > 0 {
                    diag.push("schur: FAIL".into());
                }
                if let Some(path) = trace.last_path {
                    diag.push(format!("path: {path}"));
                }
            }
            out.push(doc(&r?));
        }
        Command::Plu { a } => {
            let m = load(&a)?;
            let f = plu_decomp(&m)?;
            let lower = is_unit_lower(&f.l)?;
            let upper = is_upper(&f.u)?;
            let rebuilt = times(&times(&f.p, &f.l)?, &f.u)?.eq_elements(&m);
            out.push(format!("P: {}", doc(&f.p)));
            out.push(format!("L: {}", doc(&f.l)));
            out.push(format!("U: {}", doc(&f.u)));
            out.push(format!("L unit lower triangular: {}", yes_no(lower)));
            out.push(format!("U upper triangular: {}", yes_no(upper)));
            out.push(format!("P·L·U = M: {}", yes_no(rebuilt)));
            return Ok(if lower && upper && rebuilt { 0 } else { 1 });
        }
        Command::CheckInv { a } => {
            let m = load(&a)?;
            let mut trace = InvTrace::default();
            let r = inv_traced(&m, &mut trace)?;
            let product = times(&m, &r)?;
            let identity = product.eq_elements(&BlockMatrix::identity(m.er())?);
            out.push("M:".into());
            out.push(m.format_structure());
            if trace.schur_failures > 0 {
                out.push("schur: FAIL".into());
            }
            if let Some(path) = trace.last_path {
                out.push(format!("path: {path}"));
            }
            out.push("inverse:".into());
            out.push(r.format_structure());
            out.push(format!("inverse document: {}", doc(&r)));
            out.push("M·inverse:".into());
            out.push(product.format_structure());
            out.push(format!("identity: {}", yes_no(identity)));
            return Ok(if identity { 0 } else { 1 });
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            let passed = checks.iter().filter(|c| c.passed()).count();
            out.extend(checks.iter().map(selftest::Check::line));
            out.push(format!("selftest: {passed}/{} passed", checks.len()));
            return Ok(if passed == checks.len() { 0 } else { 1 });
        }
    }
    Ok(0)
}

/// Run one command line (including the program name) and return the exit
/// status. Output goes to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if informational { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return if informational { 0 } else { 2 };
        }
    };
    let (mut out, mut diag) = (Vec::new(), Vec::new());
    let status = match execute(cli.command, &mut out, &mut diag) {
        Ok(status) => status,
        Err(f) => {
            diag.push(f.message());
            f.status()
        }
    };
    for line in &out {
        let _ = writeln!(stdout, "{line}");
    }
    for line in &diag {
        let _ = writeln!(stderr, "{line}");
    }
    status
}
