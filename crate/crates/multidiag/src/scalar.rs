//! Scalar arithmetic underlying every matrix type.
//!
//! A [`Scalar`] is either an exact Gaussian rational (a pair of
//! arbitrary-precision rationals for the real and imaginary parts) or a
//! double-precision complex number. The two modes share one interface;
//! a matrix fixes the mode once and all of its entries live in it.
//!
//! Exact rationals are kept in canonical reduced form with a positive
//! denominator, so equality of values is equality of representations.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Default absolute tolerance for float-mode zero tests.
pub const DEFAULT_ZERO_TOL: f64 = 1e-12;

/// Arithmetic mode of a scalar (and of every matrix built from them).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Arbitrary-precision Gaussian rationals; all identities hold exactly.
    Exact,
    /// Double-precision complex numbers with IEEE semantics.
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

/// A field element in one of the two arithmetic modes.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact { re: BigRational, im: BigRational },
    Float(Complex64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact { .. } => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn zero(mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Exact {
                re: BigRational::zero(),
                im: BigRational::zero(),
            },
            Mode::Float => Scalar::Float(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(mode: Mode) -> Scalar {
        Scalar::int(1, mode)
    }

    pub fn int(v: i64, mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Exact {
                re: BigRational::from_integer(BigInt::from(v)),
                im: BigRational::zero(),
            },
            Mode::Float => Scalar::Float(Complex64::new(v as f64, 0.0)),
        }
    }

    /// Exact rational `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar::Exact {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    pub fn exact(re: BigRational, im: BigRational) -> Scalar {
        Scalar::Exact { re, im }
    }

    pub fn float(re: f64) -> Scalar {
        Scalar::Float(Complex64::new(re, 0.0))
    }

    pub fn complex(re: f64, im: f64) -> Scalar {
        Scalar::Float(Complex64::new(re, im))
    }

    /// Zero test with the default absolute tolerance in float mode;
    /// exact mode tests the numerators.
    pub fn is_zero(&self) -> bool {
        self.is_zero_with(DEFAULT_ZERO_TOL, None)
    }

    /// Zero test with an explicit tolerance. When `scale` is given the
    /// test is relative (`|a| <= tol * scale`), otherwise absolute.
    /// Exact mode ignores both.
    pub fn is_zero_with(&self, tol: f64, scale: Option<f64>) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Float(c) => {
                let threshold = match scale {
                    Some(s) => tol * s,
                    None => tol,
                };
                c.norm() <= threshold
            }
        }
    }

    /// Bit-for-bit zero test; no tolerance in either mode. Used for
    /// structural checks (trailing-zero padding, canonical form).
    pub fn is_exactly_zero(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Float(c) => c.re == 0.0 && c.im == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_one() && im.is_zero(),
            Scalar::Float(c) => c.re == 1.0 && c.im == 0.0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => Ok(Scalar::Exact {
                re: a + c,
                im: b + d,
            }),
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x + y)),
            _ => Err(Error::ModeMismatch(self.mode(), other.mode())),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => Ok(Scalar::Exact {
                re: a - c,
                im: b - d,
            }),
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x - y)),
            _ => Err(Error::ModeMismatch(self.mode(), other.mode())),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => Ok(Scalar::Exact {
                re: a * c - b * d,
                im: a * d + b * c,
            }),
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x * y)),
            _ => Err(Error::ModeMismatch(self.mode(), other.mode())),
        }
    }

    /// Division; rejects divisors that are zero (exactly, or within the
    /// default zero tolerance in float mode) instead of producing
    /// infinities.
    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if self.mode() != other.mode() {
            return Err(Error::ModeMismatch(self.mode(), other.mode()));
        }
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => {
                // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
                let norm = c * c + d * d;
                Ok(Scalar::Exact {
                    re: (a * c + b * d) / &norm,
                    im: (b * c - a * d) / &norm,
                })
            }
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x / y)),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: -re,
                im: -im,
            },
            Scalar::Float(c) => Scalar::Float(-c),
        }
    }

    /// Modulus as an `f64` (approximate in exact mode; used for norms
    /// and discrepancy reports only, never for exact decisions).
    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Exact { re, im } => {
                let r = re.to_f64().unwrap_or(f64::NAN);
                let i = im.to_f64().unwrap_or(f64::NAN);
                r.hypot(i)
            }
            Scalar::Float(c) => c.norm(),
        }
    }

    /// Parse a scalar from its text form in the given mode.
    ///
    /// Accepted forms: `3`, `-5/7`, `1/2+2/3i`, `-i`, `2.5` and, in float
    /// mode, anything `f64` parsing accepts plus `p/q` quotients.
    pub fn parse(text: &str, mode: Mode) -> Result<Scalar> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let (re_text, im_text) = split_complex(s);
        match mode {
            Mode::Exact => {
                let re = match re_text {
                    Some(t) => parse_rational(t)?,
                    None => BigRational::zero(),
                };
                let im = match im_text {
                    Some(t) => parse_rational_coefficient(t)?,
                    None => BigRational::zero(),
                };
                Ok(Scalar::Exact { re, im })
            }
            Mode::Float => {
                let re = match re_text {
                    Some(t) => parse_f64(t)?,
                    None => 0.0,
                };
                let im = match im_text {
                    Some(t) => parse_f64_coefficient(t)?,
                    None => 0.0,
                };
                Ok(Scalar::Float(Complex64::new(re, im)))
            }
        }
    }
}

/// Split `re+imi` into real and imaginary source fragments. The
/// imaginary fragment keeps its sign and drops the trailing `i`.
fn split_complex(s: &str) -> (Option<&str>, Option<&str>) {
    if !s.ends_with('i') && !s.ends_with('I') {
        return (Some(s), None);
    }
    let body = &s[..s.len() - 1];
    // Find a '+' or '-' separating the two parts: not at the start and
    // not an exponent sign.
    let bytes = body.as_bytes();
    let mut split_at = None;
    for idx in (1..bytes.len()).rev() {
        let b = bytes[idx];
        if b == b'+' || b == b'-' {
            let prev = bytes[idx - 1];
            if prev == b'e' || prev == b'E' {
                continue;
            }
            split_at = Some(idx);
            break;
        }
    }
    match split_at {
        Some(idx) => (Some(&body[..idx]), Some(&body[idx..])),
        None => (None, Some(body)),
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    if let Some((p, q)) = s.split_once('/') {
        let num = parse_bigint(p)?;
        let den = parse_bigint(q)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid decimal `{s}`")));
        }
        let negative = int_part.starts_with('-');
        let int_val = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            parse_bigint(int_part)?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac_val = parse_bigint(frac_part)?;
        let magnitude = int_val.abs() * &scale + frac_val;
        let signed = if negative { -magnitude } else { magnitude };
        return Ok(BigRational::new(signed, scale));
    }
    Ok(BigRational::from_integer(parse_bigint(s)?))
}

/// Imaginary coefficient: empty or a bare sign means +/-1.
fn parse_rational_coefficient(s: &str) -> Result<BigRational> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        other => parse_rational(other),
    }
}

fn parse_f64(s: &str) -> Result<f64> {
    if let Some((p, q)) = s.split_once('/') {
        let num = parse_f64(p)?;
        let den = parse_f64(q)?;
        if den == 0.0 {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(num / den);
    }
    let v = s
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("invalid number `{s}`")))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("non-finite number `{s}`")));
    }
    Ok(v)
}

fn parse_f64_coefficient(s: &str) -> Result<f64> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        other => parse_f64(other),
    }
}

fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}

impl fmt::Display for Scalar {
    /// Canonical text form: reduced `p/q` (`/q` omitted when `q = 1`),
    /// `re+imi` when the imaginary part is nonzero, shortest round-trip
    /// decimals in float mode.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact { re, im } => {
                if im.is_zero() {
                    write!(f, "{re}")
                } else if im.is_negative() {
                    write!(f, "{re}-{}i", -im)
                } else {
                    write!(f, "{re}+{im}i")
                }
            }
            Scalar::Float(c) => {
                if c.im == 0.0 {
                    write!(f, "{}", fmt_f64(c.re))
                } else if c.im < 0.0 {
                    write!(f, "{}-{}i", fmt_f64(c.re), fmt_f64(-c.im))
                } else {
                    write!(f, "{}+{}i", fmt_f64(c.re), fmt_f64(c.im))
                }
            }
        }
    }
}
