//! Matrices stored as a sparse set of equally spaced diagonals.
//!
//! An [`MdMatrix`] with parameters `(n, k)` is an `(n+1) x (n+1)` matrix
//! whose nonzero entries lie only at offsets `j - i = p*k` for
//! `p = -s..s`, `s = n / k`. Only the diagonals are stored, one
//! [`DiagVec`] per populated offset; absent offsets are zero diagonals,
//! so matrices with fewer populated bands embed without any special
//! casing.
//!
//! Entry convention, fixed once here and relied on everywhere else:
//! the diagonal at offset `p` is indexed by `min(i, j)`, i.e. by the
//! row for superdiagonals and by the column for subdiagonals. Under
//! this convention a diagonal at offset `|p| = l` carries exactly
//! `n + 1 - l*k` meaningful coordinates; the remaining padding must be
//! zero (validated at construction).

use crate::diagvec::DiagVec;
use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar};
use std::collections::BTreeMap;

/// Square matrix in diagonal storage, member of the class with spacing `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MdMatrix {
    n: usize,
    k: usize,
    mode: Mode,
    diags: BTreeMap<isize, DiagVec>,
}

impl MdMatrix {
    /// Validating constructor. Checks the spacing, every offset bound,
    /// diagonal lengths, uniform mode, and the trailing-zero padding;
    /// drops diagonals that are entirely zero so equal matrices have
    /// equal representations.
    pub fn new(
        n: usize,
        k: usize,
        mode: Mode,
        diags: BTreeMap<isize, DiagVec>,
    ) -> Result<MdMatrix> {
        if k < 1 || k > n {
            return Err(Error::InvalidSpacing { n, k });
        }
        let s = n / k;
        let mut kept = BTreeMap::new();
        for (p, d) in diags {
            if p.unsigned_abs() > s {
                return Err(Error::OffsetOutOfRange { p, s });
            }
            if d.len() != n + 1 {
                return Err(Error::DiagonalLength {
                    p,
                    len: d.len(),
                    expected: n + 1,
                });
            }
            if d.mode() != mode {
                return Err(Error::ModeMismatch(mode, d.mode()));
            }
            // Padding beyond the diagonal's true length must be zero.
            let live = n + 1 - p.unsigned_abs() * k;
            for (idx, c) in d.coords().iter().enumerate().skip(live) {
                if !c.is_exactly_zero() {
                    return Err(Error::TrailingZero { p, index: idx });
                }
            }
            if !d.is_exactly_zero() {
                kept.insert(p, d);
            }
        }
        Ok(MdMatrix {
            n,
            k,
            mode,
            diags: kept,
        })
    }

    pub fn zero(n: usize, k: usize, mode: Mode) -> Result<MdMatrix> {
        MdMatrix::new(n, k, mode, BTreeMap::new())
    }

    pub fn identity(n: usize, k: usize, mode: Mode) -> Result<MdMatrix> {
        let mut diags = BTreeMap::new();
        diags.insert(0, DiagVec::ones(n, mode));
        MdMatrix::new(n, k, mode, diags)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of sub- (equivalently super-) diagonal slots: `n / k`.
    pub fn s(&self) -> usize {
        self.n / self.k
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Stored diagonal at offset `p` (in units of `k`), if populated.
    pub fn diag(&self, p: isize) -> Option<&DiagVec> {
        self.diags.get(&p)
    }

    pub fn diags(&self) -> impl Iterator<Item = (isize, &DiagVec)> {
        self.diags.iter().map(|(&p, d)| (p, d))
    }

    pub fn same_shape(&self, other: &MdMatrix) -> bool {
        self.n == other.n && self.k == other.k
    }

    /// Matrix entry `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<Scalar> {
        if i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                size: self.n + 1,
            });
        }
        let d = j as isize - i as isize;
        let k = self.k as isize;
        if d % k != 0 {
            return Ok(Scalar::zero(self.mode));
        }
        match self.diags.get(&(d / k)) {
            Some(vec) => Ok(vec.get_ext(i.min(j) as isize)),
            None => Ok(Scalar::zero(self.mode)),
        }
    }

    /// Sum of the main-diagonal coordinates.
    pub fn trace(&self) -> Scalar {
        match self.diags.get(&0) {
            Some(d) => d
                .coords()
                .iter()
                .fold(Scalar::zero(self.mode), |acc, c| {
                    acc.add(c).expect("uniform mode by construction")
                }),
            None => Scalar::zero(self.mode),
        }
    }

    pub fn add(&self, other: &MdMatrix) -> Result<MdMatrix> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch {
                n1: self.n,
                k1: self.k,
                n2: other.n,
                k2: other.k,
            });
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(self.mode, other.mode));
        }
        let mut diags = self.diags.clone();
        for (&p, d) in &other.diags {
            match diags.remove(&p) {
                Some(existing) => {
                    diags.insert(p, existing.add(d)?);
                }
                None => {
                    diags.insert(p, d.clone());
                }
            }
        }
        MdMatrix::new(self.n, self.k, self.mode, diags)
    }

    pub fn scale(&self, factor: &Scalar) -> Result<MdMatrix> {
        if factor.mode() != self.mode {
            return Err(Error::ModeMismatch(self.mode, factor.mode()));
        }
        let mut diags = BTreeMap::new();
        for (&p, d) in &self.diags {
            diags.insert(p, d.scale(factor)?);
        }
        MdMatrix::new(self.n, self.k, self.mode, diags)
    }

    /// Expand to a full dense matrix.
    pub fn to_dense(&self) -> DenseMatrix {
        let size = self.n + 1;
        let mut entries = vec![Scalar::zero(self.mode); size * size];
        for (&p, d) in &self.diags {
            let dist = p.unsigned_abs() * self.k;
            for idx in 0..=(self.n - dist) {
                let (i, j) = if p >= 0 { (idx, idx + dist) } else { (idx + dist, idx) };
                entries[i * size + j] = d.get_ext(idx as isize);
            }
        }
        DenseMatrix { size, mode: self.mode, entries }
    }

    /// Extract diagonal storage from a dense matrix with spacing `k`.
    /// Entries off the lattice `|i - j| = l*k` must be zero (tested with
    /// the tolerant zero test in float mode).
    pub fn from_dense(m: &DenseMatrix, k: usize) -> Result<MdMatrix> {
        if m.size < 2 || k < 1 || k > m.size - 1 {
            return Err(Error::InvalidSpacing {
                n: m.size.saturating_sub(1),
                k,
            });
        }
        let n = m.size - 1;
        let s = n / k;
        for i in 0..=n {
            for j in 0..=n {
                if i.abs_diff(j) % k != 0 && !m.get(i, j).is_zero() {
                    return Err(Error::OffLatticeNonzero { i, j });
                }
            }
        }
        let mut diags = BTreeMap::new();
        for p in -(s as isize)..=(s as isize) {
            let dist = p.unsigned_abs() * k;
            let mut coords = vec![Scalar::zero(m.mode); n + 1];
            for (idx, slot) in coords.iter_mut().enumerate().take(n + 1 - dist) {
                let (i, j) = if p >= 0 { (idx, idx + dist) } else { (idx + dist, idx) };
                *slot = m.get(i, j).clone();
            }
            diags.insert(p, DiagVec::new(coords)?);
        }
        MdMatrix::new(n, k, m.mode, diags)
    }
}

/// Full `(n+1) x (n+1)` array, row-major. Reference-side representation
/// for the brute-force routines in [`crate::oracle`] and the CLI
/// cross-checks; the structured algorithms never materialize one.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    size: usize,
    mode: Mode,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn new(size: usize, entries: Vec<Scalar>) -> Result<DenseMatrix> {
        if size == 0 || entries.len() != size * size {
            return Err(Error::SizeMismatch(entries.len(), size * size));
        }
        let mode = entries[0].mode();
        for e in &entries[1..] {
            if e.mode() != mode {
                return Err(Error::ModeMismatch(mode, e.mode()));
            }
        }
        Ok(DenseMatrix { size, mode, entries })
    }

    pub fn zero(size: usize, mode: Mode) -> DenseMatrix {
        DenseMatrix {
            size,
            mode,
            entries: vec![Scalar::zero(mode); size * size],
        }
    }

    pub fn identity(size: usize, mode: Mode) -> DenseMatrix {
        let mut m = DenseMatrix::zero(size, mode);
        for i in 0..size {
            m.set(i, i, Scalar::one(mode));
        }
        m
    }

    /// Build from integer rows; test and fixture convenience.
    pub fn from_int_rows(rows: &[&[i64]], mode: Mode) -> DenseMatrix {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "rows must be square");
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Scalar::int(v, mode)))
            .collect();
        DenseMatrix { size, mode, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.size + j] = value;
    }

    /// Largest entrywise modulus of the difference, as `f64`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        let mut worst: f64 = 0.0;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            worst = worst.max(a.sub(b)?.abs_f64());
        }
        Ok(worst)
    }

    /// Induced infinity norm: maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).abs_f64()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}
