//! Command-line front end.
//!
//! Exit codes are part of the contract:
//!
//! * 0 — success
//! * 1 — a file failed to parse or validate
//! * 2 — inputs disagree in shape or mode, or the requested method does
//!   not apply
//! * 3 — the matrix is singular
//! * 4 — a `check` found a discrepancy against the brute-force oracle

use crate::error::Error;
use crate::inverse::{self, KTridiagonal};
use crate::mdmatrix::{DenseMatrix, MdMatrix};
use crate::scalar::Mode;
use crate::{algebra, io, oracle};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_SINGULAR: u8 = 3;
pub const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "multidiag",
    version,
    about = "Products, powers, determinants and inverses of matrices with equally spaced diagonals"
)]
pub struct Cli {
    /// Arithmetic mode the inputs are required to be in.
    #[arg(long, value_enum, default_value_t = ModeArg::Exact, global = true)]
    pub mode: ModeArg,

    /// Comparison tolerance for float-mode checks.
    #[arg(long, default_value_t = 1e-10, global = true)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed form when it applies, block decomposition otherwise.
    Auto,
    /// Closed-form k-tridiagonal inverse; needs n+1 <= 2k.
    ClosedForm,
    /// Polynomial (Cayley-Hamilton) inverse; exact mode only.
    CayleyHamilton,
    /// Residue-block Gauss-Jordan inverse.
    General,
}

#[derive(Subcommand)]
pub enum Command {
    /// Multiply two matrix files.
    Mul {
        in1: PathBuf,
        in2: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print the determinant.
    Det { input: PathBuf },
    /// Invert a matrix file.
    Inv {
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Raise a matrix to a signed integer power.
    #[command(allow_negative_numbers = true)]
    Pow {
        input: PathBuf,
        exponent: i64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Re-verify a previously computed result against the dense oracle.
    Check {
        #[command(subcommand)]
        what: CheckTarget,
    },
}

#[derive(Subcommand)]
pub enum CheckTarget {
    /// Verify that `product` holds `a` times `b`.
    Product {
        a: PathBuf,
        b: PathBuf,
        product: PathBuf,
    },
    /// Verify that `inverse` holds the inverse of `a`.
    Inverse { a: PathBuf, inverse: PathBuf },
}

pub fn run(cli: Cli) -> u8 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(CmdError { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

struct CmdError {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> CmdError {
    CmdError {
        code,
        message: message.into(),
    }
}

/// Map library errors arising mid-operation to exit codes.
fn op_error(err: Error) -> CmdError {
    let code = match &err {
        Error::Singular(_) => EXIT_SINGULAR,
        Error::ShapeMismatch { .. } | Error::ModeMismatch(..) => EXIT_MISMATCH,
        Error::OutsideClosedFormRegime { .. }
        | Error::ExactModeRequired
        | Error::NotKTridiagonal { .. } => EXIT_MISMATCH,
        Error::Io(_) => EXIT_PARSE,
        _ => EXIT_PARSE,
    };
    fail(code, err.to_string())
}

fn load(path: &Path, required_mode: Mode) -> Result<MdMatrix, CmdError> {
    let m = io::read_matrix(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    if m.mode() != required_mode {
        return Err(fail(
            EXIT_MISMATCH,
            format!(
                "{}: matrix is in {} mode but {} mode was requested",
                path.display(),
                m.mode(),
                required_mode
            ),
        ));
    }
    Ok(m)
}

fn require_same_shape(a: &MdMatrix, b: &MdMatrix) -> Result<(), CmdError> {
    if !a.same_shape(b) {
        return Err(fail(
            EXIT_MISMATCH,
            format!(
                "shape mismatch: (n={}, k={}) vs (n={}, k={})",
                a.n(),
                a.k(),
                b.n(),
                b.k()
            ),
        ));
    }
    Ok(())
}

fn write_out(path: &Path, m: &MdMatrix) -> Result<(), CmdError> {
    io::write_matrix(path, m).map_err(|e| fail(EXIT_PARSE, e.to_string()))
}

fn dispatch(cli: Cli) -> Result<u8, CmdError> {
    let mode: Mode = cli.mode.into();
    match cli.command {
        Command::Mul { in1, in2, out } => {
            let a = load(&in1, mode)?;
            let b = load(&in2, mode)?;
            require_same_shape(&a, &b)?;
            let product = algebra::mul(&a, &b).map_err(op_error)?;
            write_out(&out, &product)?;
            Ok(EXIT_OK)
        }
        Command::Det { input } => {
            let a = load(&input, mode)?;
            let det = match KTridiagonal::from_matrix(&a) {
                Ok(view) => view.det(),
                Err(_) => oracle::dense_det(&a.to_dense()),
            };
            println!("{det}");
            Ok(EXIT_OK)
        }
        Command::Inv { input, out, method } => {
            let a = load(&input, mode)?;
            let inverse = invert(&a, method)?;
            write_out(&out, &inverse)?;
            Ok(EXIT_OK)
        }
        Command::Pow {
            input,
            exponent,
            out,
        } => {
            let a = load(&input, mode)?;
            let result = inverse::pow_signed(&a, exponent).map_err(op_error)?;
            write_out(&out, &result)?;
            Ok(EXIT_OK)
        }
        Command::Check { what } => check(what, mode, cli.tol),
    }
}

fn invert(a: &MdMatrix, method: Method) -> Result<MdMatrix, CmdError> {
    match method {
        Method::ClosedForm => {
            let view = KTridiagonal::from_matrix(a).map_err(op_error)?;
            view.closed_form_inverse().map_err(op_error)
        }
        Method::CayleyHamilton => inverse::inv_cayley_hamilton(a).map_err(op_error),
        Method::General => inverse::inv_general(a).map_err(op_error),
        Method::Auto => {
            // Closed form needs n+1 <= 2k and a k-tridiagonal input.
            let closed_form_applies =
                a.n() < 2 * a.k() && a.diags().all(|(p, _)| p.unsigned_abs() <= 1);
            if closed_form_applies {
                let view = KTridiagonal::from_matrix(a).map_err(op_error)?;
                view.closed_form_inverse().map_err(op_error)
            } else {
                inverse::inv_general(a).map_err(op_error)
            }
        }
    }
}

fn check(target: CheckTarget, mode: Mode, tol: f64) -> Result<u8, CmdError> {
    let (expected, actual) = match target {
        CheckTarget::Product { a, b, product } => {
            let a = load(&a, mode)?;
            let b = load(&b, mode)?;
            let claimed = load(&product, mode)?;
            require_same_shape(&a, &b)?;
            require_same_shape(&a, &claimed)?;
            let oracle_product =
                oracle::dense_mul(&a.to_dense(), &b.to_dense()).map_err(op_error)?;
            (oracle_product, claimed.to_dense())
        }
        CheckTarget::Inverse { a, inverse } => {
            let a = load(&a, mode)?;
            let claimed = load(&inverse, mode)?;
            require_same_shape(&a, &claimed)?;
            let product =
                oracle::dense_mul(&a.to_dense(), &claimed.to_dense()).map_err(op_error)?;
            let identity = DenseMatrix::identity(a.size(), a.mode());
            (identity, product)
        }
    };
    let agree = match mode {
        Mode::Exact => expected == actual,
        Mode::Float => expected.max_abs_diff(&actual).map_err(op_error)? <= tol,
    };
    if agree {
        println!("ok");
        Ok(EXIT_OK)
    } else {
        let discrepancy = expected.max_abs_diff(&actual).map_err(op_error)?;
        Err(fail(
            EXIT_CHECK_FAILED,
            format!("oracle disagrees: max discrepancy {discrepancy}"),
        ))
    }
}
