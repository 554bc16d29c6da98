//! Dense brute-force reference implementations: textbook
//! multiplication, fraction-free (Bareiss) determinants, LU
//! determinants, and Gauss-Jordan inversion.
//!
//! These exist to cross-check the structured algorithms, both in the
//! test suites and behind the CLI `check` subcommand. They are written
//! for clarity at test scale, not for speed.

use crate::error::{Error, Result};
use crate::mdmatrix::DenseMatrix;
use crate::scalar::{Mode, Scalar};

/// Triple-loop product.
pub fn dense_mul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    if a.mode() != b.mode() {
        return Err(Error::ModeMismatch(a.mode(), b.mode()));
    }
    let size = a.size();
    let mut out = DenseMatrix::zero(size, a.mode());
    for i in 0..size {
        for j in 0..size {
            let mut acc = Scalar::zero(a.mode());
            for m in 0..size {
                acc = acc.add(&a.get(i, m).mul(b.get(m, j))?)?;
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Determinant: Bareiss fraction-free elimination in exact mode, LU
/// with partial pivoting in float mode.
pub fn dense_det(a: &DenseMatrix) -> Scalar {
    match a.mode() {
        Mode::Exact => det_bareiss(a),
        Mode::Float => det_lu(a),
    }
}

fn det_bareiss(a: &DenseMatrix) -> Scalar {
    let size = a.size();
    let mode = a.mode();
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = Scalar::one(mode);
    for t in 0..size.saturating_sub(1) {
        // First nonzero pivot in column t at or below the diagonal.
        let pivot_row = match (t..size).find(|&r| !m.get(r, t).is_exactly_zero()) {
            Some(r) => r,
            None => return Scalar::zero(mode),
        };
        if pivot_row != t {
            swap_rows(&mut m, t, pivot_row);
            negate = !negate;
        }
        let pivot = m.get(t, t).clone();
        for i in (t + 1)..size {
            let lead = m.get(i, t).clone();
            for j in (t + 1)..size {
                let num = pivot
                    .mul(m.get(i, j))
                    .and_then(|x| x.sub(&lead.mul(m.get(t, j)).expect("uniform mode")))
                    .expect("uniform mode");
                let val = num.div(&prev).expect("previous pivot is nonzero");
                m.set(i, j, val);
            }
            m.set(i, t, Scalar::zero(mode));
        }
        prev = pivot;
    }
    let det = m.get(size - 1, size - 1).clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

fn det_lu(a: &DenseMatrix) -> Scalar {
    let size = a.size();
    let mode = a.mode();
    let mut m = a.clone();
    let mut det = Scalar::one(mode);
    for t in 0..size {
        // Partial pivoting: largest modulus in column t.
        let pivot_row = (t..size)
            .max_by(|&r1, &r2| {
                m.get(r1, t)
                    .abs_f64()
                    .total_cmp(&m.get(r2, t).abs_f64())
            })
            .expect("nonempty range");
        if m.get(pivot_row, t).is_exactly_zero() {
            return Scalar::zero(mode);
        }
        if pivot_row != t {
            swap_rows(&mut m, t, pivot_row);
            det = det.neg();
        }
        let pivot = m.get(t, t).clone();
        det = det.mul(&pivot).expect("uniform mode");
        for i in (t + 1)..size {
            let factor = m.get(i, t).div(&pivot).expect("pivot nonzero");
            for j in (t + 1)..size {
                let val = m
                    .get(i, j)
                    .sub(&factor.mul(m.get(t, j)).expect("uniform mode"))
                    .expect("uniform mode");
                m.set(i, j, val);
            }
            m.set(i, t, Scalar::zero(mode));
        }
    }
    det
}

/// Gauss-Jordan inverse. Exact mode picks the first nonzero pivot;
/// float mode uses partial pivoting and reports singularity when the
/// best pivot is below tolerance (relative to the matrix norm).
pub fn dense_inv(a: &DenseMatrix) -> Result<DenseMatrix> {
    let size = a.size();
    let mode = a.mode();
    let scale = match mode {
        Mode::Float => Some(a.inf_norm().max(1.0)),
        Mode::Exact => None,
    };
    let mut m = a.clone();
    let mut inv = DenseMatrix::identity(size, mode);
    for t in 0..size {
        let pivot_row = match mode {
            Mode::Exact => (t..size).find(|&r| !m.get(r, t).is_exactly_zero()),
            Mode::Float => (t..size).max_by(|&r1, &r2| {
                m.get(r1, t)
                    .abs_f64()
                    .total_cmp(&m.get(r2, t).abs_f64())
            }),
        };
        let pivot_row = match pivot_row {
            Some(r) if !m.get(r, t).is_zero_with(crate::scalar::DEFAULT_ZERO_TOL, scale) => r,
            _ => return Err(Error::Singular(None)),
        };
        if pivot_row != t {
            swap_rows(&mut m, t, pivot_row);
            swap_rows(&mut inv, t, pivot_row);
        }
        let pivot = m.get(t, t).clone();
        for j in 0..size {
            let v = m.get(t, j).div(&pivot)?;
            m.set(t, j, v);
            let w = inv.get(t, j).div(&pivot)?;
            inv.set(t, j, w);
        }
        for i in 0..size {
            if i == t || m.get(i, t).is_exactly_zero() {
                continue;
            }
            let factor = m.get(i, t).clone();
            for j in 0..size {
                let v = m.get(i, j).sub(&factor.mul(m.get(t, j))?)?;
                m.set(i, j, v);
                let w = inv.get(i, j).sub(&factor.mul(inv.get(t, j))?)?;
                inv.set(i, j, w);
            }
        }
    }
    Ok(inv)
}

fn swap_rows(m: &mut DenseMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..m.size() {
        let a = m.get(r1, j).clone();
        let b = m.get(r2, j).clone();
        m.set(r1, j, b);
        m.set(r2, j, a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_int_rows(rows, Mode::Exact)
    }

    #[test]
    fn textbook_product() {
        let prod = dense_mul(&m(&[&[1, 2], &[3, 4]]), &m(&[&[5, 6], &[7, 8]])).unwrap();
        assert_eq!(prod, m(&[&[19, 22], &[43, 50]]));
    }

    #[test]
    fn product_with_identity_and_zero() {
        let a = m(&[&[2, 0, 1], &[0, 3, 0], &[1, 0, 4]]);
        let e = DenseMatrix::identity(3, Mode::Exact);
        let z = DenseMatrix::zero(3, Mode::Exact);
        assert_eq!(dense_mul(&a, &e).unwrap(), a);
        assert_eq!(dense_mul(&a, &z).unwrap(), z);
    }

    #[test]
    fn determinant_by_hand() {
        // Cofactor expansion: 2*(12-0) - 0 + 1*(0-3) = 21.
        assert_eq!(
            dense_det(&m(&[&[2, 0, 1], &[0, 3, 0], &[1, 0, 4]])),
            Scalar::int(21, Mode::Exact)
        );
        assert_eq!(
            dense_det(&DenseMatrix::identity(4, Mode::Exact)),
            Scalar::one(Mode::Exact)
        );
        assert_eq!(
            dense_det(&m(&[&[1, 2], &[1, 2]])),
            Scalar::zero(Mode::Exact)
        );
    }

    #[test]
    fn determinant_with_zero_leading_pivot() {
        assert_eq!(
            dense_det(&m(&[&[0, 1], &[1, 0]])),
            Scalar::int(-1, Mode::Exact)
        );
    }

    #[test]
    fn float_determinant() {
        let a = DenseMatrix::from_int_rows(&[&[2, 0, 1], &[0, 3, 0], &[1, 0, 4]], Mode::Float);
        let d = dense_det(&a);
        assert!((d.abs_f64() - 21.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_of_diagonal() {
        let inv = dense_inv(&m(&[&[2, 0], &[0, 4]])).unwrap();
        let mut expected = DenseMatrix::zero(2, Mode::Exact);
        expected.set(0, 0, Scalar::ratio(1, 2));
        expected.set(1, 1, Scalar::ratio(1, 4));
        assert_eq!(inv, expected);
    }

    #[test]
    fn inverse_of_identity() {
        let e = DenseMatrix::identity(3, Mode::Exact);
        assert_eq!(dense_inv(&e).unwrap(), e);
    }

    #[test]
    fn singular_matrix_rejected() {
        assert_eq!(
            dense_inv(&m(&[&[1, 2], &[2, 4]])).unwrap_err(),
            Error::Singular(None)
        );
    }

    fn arb_dense(size: usize) -> impl Strategy<Value = DenseMatrix> {
        proptest::collection::vec((-9i64..=9, 1i64..=5), size * size).prop_map(move |v| {
            let entries = v.into_iter().map(|(p, q)| Scalar::ratio(p, q)).collect();
            DenseMatrix::new(size, entries).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn determinant_is_multiplicative(a in arb_dense(4), b in arb_dense(4)) {
            let lhs = dense_det(&dense_mul(&a, &b).unwrap());
            let rhs = dense_det(&a).mul(&dense_det(&b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_involutes(a in arb_dense(4)) {
            prop_assume!(!dense_det(&a).is_zero());
            let inv = dense_inv(&a).unwrap();
            prop_assert_eq!(dense_inv(&inv).unwrap(), a.clone());
            let e = DenseMatrix::identity(4, Mode::Exact);
            prop_assert_eq!(dense_mul(&a, &inv).unwrap(), e);
        }
    }
}
