//! Determinants, nonsingularity tests and inverses.
//!
//! Four inverse routes live here, each with a different purpose:
//!
//! * [`KTridiagonal::closed_form_inverse`] — explicit entry formulas for
//!   a k-tridiagonal matrix in the wide-band regime `n + 1 <= 2k`, where
//!   the inverse is again k-tridiagonal.
//! * [`inv_cayley_hamilton`] — the inverse as a polynomial in the matrix
//!   itself, evaluated with structured products only. Every intermediate
//!   stays in the diagonal class, which makes the closure of the class
//!   under inversion a checked runtime fact rather than a promise. Exact
//!   mode only.
//! * [`inv_general`] — the production path: grouping indices by residue
//!   mod k turns the matrix into k independent banded blocks which are
//!   inverted densely and reassembled.
//! * [`crate::oracle::dense_inv`] — brute force, for cross-checks.

use crate::algebra;
use crate::diagvec::DiagVec;
use crate::error::{Error, Result};
use crate::mdmatrix::{DenseMatrix, MdMatrix};
use crate::oracle;
use crate::scalar::{Mode, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// First violated nonsingularity condition of the closed-form test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularWitness {
    /// A main-diagonal entry in the middle range is zero: `b_j = 0`.
    MainEntryZero { j: usize },
    /// A coupled 2x2 determinant vanishes: `b_j b_{j+k} - a_j c_j = 0`.
    PairDetZero { j: usize, k: usize },
}

impl fmt::Display for SingularWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularWitness::MainEntryZero { j } => write!(f, "b_{j} = 0"),
            SingularWitness::PairDetZero { j, k } => {
                write!(f, "b_{} b_{} - a_{} c_{} = 0", j, j + k, j, j)
            }
        }
    }
}

/// View of a matrix populated only at offsets `0, -k, +k`: subdiagonal
/// `a`, main diagonal `b`, superdiagonal `c` (indexed by `min(i, j)`,
/// like every diagonal in this crate).
#[derive(Debug, Clone, PartialEq)]
pub struct KTridiagonal {
    n: usize,
    k: usize,
    mode: Mode,
    a: DiagVec,
    b: DiagVec,
    c: DiagVec,
}

impl KTridiagonal {
    pub fn new(n: usize, k: usize, a: DiagVec, b: DiagVec, c: DiagVec) -> Result<KTridiagonal> {
        let mut diags = BTreeMap::new();
        diags.insert(-1, a);
        diags.insert(0, b);
        diags.insert(1, c);
        // Reuse the matrix validator for lengths, modes and padding,
        // then keep the vectors (zero diagonals included) for indexing.
        MdMatrix::new(n, k, diags[&0].mode(), diags.clone())?;
        Ok(KTridiagonal {
            n,
            k,
            mode: diags[&0].mode(),
            a: diags.remove(&-1).unwrap(),
            b: diags.remove(&0).unwrap(),
            c: diags.remove(&1).unwrap(),
        })
    }

    /// Reinterpret a matrix whose populated offsets are within `0, +-1`
    /// (in units of `k`).
    pub fn from_matrix(m: &MdMatrix) -> Result<KTridiagonal> {
        for (p, _) in m.diags() {
            if p.unsigned_abs() > 1 {
                return Err(Error::NotKTridiagonal { p });
            }
        }
        let zero = || DiagVec::zeros(m.n(), m.mode());
        Ok(KTridiagonal {
            n: m.n(),
            k: m.k(),
            mode: m.mode(),
            a: m.diag(-1).cloned().unwrap_or_else(zero),
            b: m.diag(0).cloned().unwrap_or_else(zero),
            c: m.diag(1).cloned().unwrap_or_else(zero),
        })
    }

    pub fn to_matrix(&self) -> MdMatrix {
        let mut diags = BTreeMap::new();
        diags.insert(-1, self.a.clone());
        diags.insert(0, self.b.clone());
        diags.insert(1, self.c.clone());
        MdMatrix::new(self.n, self.k, self.mode, diags).expect("validated at construction")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn a(&self, j: usize) -> Scalar {
        self.a.get_ext(j as isize)
    }

    fn b(&self, j: usize) -> Scalar {
        self.b.get_ext(j as isize)
    }

    fn c(&self, j: usize) -> Scalar {
        self.c.get_ext(j as isize)
    }

    /// Determinant, division-free.
    ///
    /// Grouping indices by residue mod k splits the matrix into
    /// independent ordinary tridiagonal chains; each chain determinant
    /// follows the three-term recurrence
    /// `g_t = b_t * g_{t-1} - a_{t-1} c_{t-1} * g_{t-2}`, and the full
    /// determinant is the product over chains. Equivalent to the
    /// quotient-pivot product where that is defined, and still valid
    /// when leading pivots vanish.
    pub fn det(&self) -> Scalar {
        let mode = self.mode;
        let mut det = Scalar::one(mode);
        for r in 0..self.k {
            let mut g_prev = Scalar::one(mode);
            let mut g = self.b(r);
            let mut t = r + self.k;
            while t <= self.n {
                let ac = self
                    .a(t - self.k)
                    .mul(&self.c(t - self.k))
                    .expect("uniform mode");
                let next = self
                    .b(t)
                    .mul(&g)
                    .and_then(|x| x.sub(&ac.mul(&g_prev).expect("uniform mode")))
                    .expect("uniform mode");
                g_prev = g;
                g = next;
                t += self.k;
            }
            det = det.mul(&g).expect("uniform mode");
        }
        det
    }

    /// Determinant as the product of elimination pivots
    /// `f_j = b_j - a_{j-k} c_{j-k} / f_{j-k}`. Returns `None` when a
    /// pivot needed as a divisor is zero; [`KTridiagonal::det`] covers
    /// those cases.
    pub fn det_pivot_product(&self) -> Option<Scalar> {
        let mode = self.mode;
        let mut pivots: Vec<Scalar> = Vec::with_capacity(self.n + 1);
        for j in 0..=self.n {
            let fj = if j < self.k {
                self.b(j)
            } else {
                let prev = &pivots[j - self.k];
                if prev.is_zero() {
                    return None;
                }
                let ac = self
                    .a(j - self.k)
                    .mul(&self.c(j - self.k))
                    .expect("uniform mode");
                self.b(j)
                    .sub(&ac.div(prev).expect("checked nonzero"))
                    .expect("uniform mode")
            };
            pivots.push(fj);
        }
        Some(
            pivots
                .into_iter()
                .fold(Scalar::one(mode), |acc, f| acc.mul(&f).expect("uniform mode")),
        )
    }

    /// Closed-form nonsingularity test, valid in the regime
    /// `n + 1 <= 2k`. Returns `None` when nonsingular, otherwise the
    /// first violated condition: some `b_j = 0` for
    /// `j = n+1-k .. k-1` (a range that is empty when `n + 1 = 2k`), or
    /// some `b_j b_{j+k} - a_j c_j = 0` for `j = 0 .. n-k`.
    pub fn singular_witness(&self) -> Result<Option<SingularWitness>> {
        if self.n + 1 > 2 * self.k {
            return Err(Error::OutsideClosedFormRegime {
                n: self.n,
                k: self.k,
            });
        }
        for j in (self.n + 1 - self.k)..self.k {
            if self.b(j).is_zero() {
                return Ok(Some(SingularWitness::MainEntryZero { j }));
            }
        }
        for j in 0..=(self.n - self.k) {
            if self.pair_det(j).is_zero() {
                return Ok(Some(SingularWitness::PairDetZero { j, k: self.k }));
            }
        }
        Ok(None)
    }

    fn pair_det(&self, j: usize) -> Scalar {
        self.b(j)
            .mul(&self.b(j + self.k))
            .and_then(|x| x.sub(&self.a(j).mul(&self.c(j)).expect("uniform mode")))
            .expect("uniform mode")
    }

    /// Closed-form inverse in the regime `n + 1 <= 2k`; the result is
    /// again k-tridiagonal:
    ///
    /// ```text
    /// x_j = -a_j / d_j      y_j     = b_{j+k} / d_j   (j = 0..n-k)
    /// z_j = -c_j / d_j      y_{j+k} = b_j / d_j       (j = 0..n-k)
    ///                       y_j     = 1 / b_j         (j = n+1-k..k-1)
    /// ```
    ///
    /// with `d_j = b_j b_{j+k} - a_j c_j`. The formulas hold even when
    /// `b_{j+k} = 0` (the pair determinant then degenerates to
    /// `-a_j c_j`). In exact mode the product with the input is the
    /// identity exactly.
    pub fn closed_form_inverse(&self) -> Result<MdMatrix> {
        if let Some(witness) = self.singular_witness()? {
            return Err(Error::Singular(Some(witness)));
        }
        let mode = self.mode;
        let (n, k) = (self.n, self.k);
        let mut x = vec![Scalar::zero(mode); n + 1];
        let mut y = vec![Scalar::zero(mode); n + 1];
        let mut z = vec![Scalar::zero(mode); n + 1];
        for j in 0..=(n - k) {
            let d = self.pair_det(j);
            x[j] = self.a(j).neg().div(&d)?;
            z[j] = self.c(j).neg().div(&d)?;
            y[j] = self.b(j + k).div(&d)?;
            y[j + k] = self.b(j).div(&d)?;
        }
        #[allow(clippy::needless_range_loop)] // the index window is the point
        for j in (n + 1 - k)..k {
            y[j] = Scalar::one(mode).div(&self.b(j))?;
        }
        let mut diags = BTreeMap::new();
        diags.insert(-1, DiagVec::new(x)?);
        diags.insert(0, DiagVec::new(y)?);
        diags.insert(1, DiagVec::new(z)?);
        MdMatrix::new(n, k, mode, diags)
    }
}

/// Coefficients of `Det(V - lambda E)` in ascending powers of lambda:
/// `coeffs[0]` is the determinant, `coeffs[n+1]` is `(-1)^(n+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<Scalar>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Scalar {
        &self.coeffs[j]
    }

    /// Constant coefficient, i.e. the determinant.
    pub fn det(&self) -> &Scalar {
        &self.coeffs[0]
    }
}

/// Characteristic polynomial via the Faddeev-LeVerrier trace iteration
/// (`M_1 = V`, `c_m = -trace(M_m)/m`, `M_{m+1} = V (M_m + c_m E)`),
/// carried out entirely with structured products. Exact mode only: the
/// iteration is numerically unstable in floating point, and its uses
/// here (determinants, the polynomial inverse) are exactness witnesses.
pub fn char_poly(v: &MdMatrix) -> Result<CharPoly> {
    if v.mode() != Mode::Exact {
        return Err(Error::ExactModeRequired);
    }
    let size = v.n() + 1;
    let e = MdMatrix::identity(v.n(), v.k(), v.mode())?;
    // c[m] are the coefficients of Det(lambda E - V), monic in lambda^size.
    let mut c: Vec<Scalar> = vec![Scalar::one(v.mode())];
    let mut m_curr = v.clone();
    for m in 1..=size {
        if m > 1 {
            let shifted = m_curr.add(&e.scale(&c[m - 1])?)?;
            m_curr = algebra::mul(v, &shifted)?;
        }
        let cm = m_curr
            .trace()
            .neg()
            .div(&Scalar::int(m as i64, v.mode()))?;
        c.push(cm);
    }
    // Det(V - lambda E) = (-1)^size * Det(lambda E - V).
    let sign = if size.is_multiple_of(2) {
        Scalar::one(v.mode())
    } else {
        Scalar::int(-1, v.mode())
    };
    let coeffs = (0..=size)
        .map(|j| sign.mul(&c[size - j]))
        .collect::<Result<Vec<_>>>()?;
    Ok(CharPoly { coeffs })
}

/// Inverse as a polynomial in the matrix:
/// `V^{-1} = -(1/nu_0) (nu_1 E + nu_2 V + ... + nu_{n+1} V^n)`,
/// evaluated by Horner's rule over structured products, so every
/// intermediate stays in the diagonal class. Exact mode only.
pub fn inv_cayley_hamilton(v: &MdMatrix) -> Result<MdMatrix> {
    let cp = char_poly(v)?;
    let nu0 = cp.det();
    if nu0.is_zero() {
        return Err(Error::Singular(None));
    }
    let size = v.n() + 1;
    let e = MdMatrix::identity(v.n(), v.k(), v.mode())?;
    let mut acc = e.scale(cp.coeff(size))?;
    for j in (1..size).rev() {
        acc = algebra::mul(&acc, v)?.add(&e.scale(cp.coeff(j))?)?;
    }
    let factor = Scalar::int(-1, v.mode()).div(nu0)?;
    acc.scale(&factor)
}

/// General inverse by residue interleaving.
///
/// The permutation grouping indices by residue mod k is a similarity
/// that turns a spacing-k matrix into k independent banded blocks of
/// spacing 1 (block r collects indices r, r+k, r+2k, ...). Each block
/// is inverted densely — first-nonzero pivoting in exact mode, partial
/// pivoting in float mode — and the blocks are scattered back. The
/// reassembled inverse is fed through the lattice check, which must
/// accept it: off-block entries are never written.
pub fn inv_general(v: &MdMatrix) -> Result<MdMatrix> {
    let n = v.n();
    let k = v.k();
    let mut out = DenseMatrix::zero(n + 1, v.mode());
    for r in 0..k {
        let block_size = (n - r) / k + 1;
        let mut block = DenseMatrix::zero(block_size, v.mode());
        for u in 0..block_size {
            for t in 0..block_size {
                block.set(u, t, v.entry(r + u * k, r + t * k)?);
            }
        }
        let block_inv = oracle::dense_inv(&block)?;
        for u in 0..block_size {
            for t in 0..block_size {
                out.set(r + u * k, r + t * k, block_inv.get(u, t).clone());
            }
        }
    }
    MdMatrix::from_dense(&out, k)
}

/// `a^m` for signed `m`; negative exponents invert first.
pub fn pow_signed(a: &MdMatrix, m: i64) -> Result<MdMatrix> {
    if m >= 0 {
        algebra::pow(a, m as u64)
    } else {
        algebra::pow(&inv_general(a)?, m.unsigned_abs())
    }
}
