//! Structured multiplication and nonnegative powers, computed entirely
//! in diagonal representation.
//!
//! The product of two matrices with spacing `k` again has spacing `k`.
//! Writing `V = sum_i N^{-ik} D(v_-i) + sum_i D(v_i) N^{ik}` (where `N`
//! is the elementary nilpotent shift and `D(.)` a diagonal matrix), the
//! cross terms regroup into one shifted star product per offset pair.
//! No dense intermediate is ever formed: the cost is
//! `O(s^2 * (n+1))` scalar multiplies for `s = n / k` populated bands.

use crate::diagvec::DiagVec;
use crate::error::{Error, Result};
use crate::mdmatrix::MdMatrix;
use std::collections::BTreeMap;

/// Structured product of two members of the same `(n, k)` class.
pub fn mul(v: &MdMatrix, w: &MdMatrix) -> Result<MdMatrix> {
    if !v.same_shape(w) {
        return Err(Error::ShapeMismatch {
            n1: v.n(),
            k1: v.k(),
            n2: w.n(),
            k2: w.k(),
        });
    }
    if v.mode() != w.mode() {
        return Err(Error::ModeMismatch(v.mode(), w.mode()));
    }
    let k = v.k() as isize;
    let s = v.s() as isize;
    let mut acc: BTreeMap<isize, DiagVec> = BTreeMap::new();

    // Both factors from the subdiagonal part: offset -(i+j).
    // Terms whose offset would leave the matrix are dropped.
    for i in 1..=s {
        for j in 1..=s {
            if i + j > s {
                continue;
            }
            if let (Some(vi), Some(wj)) = (v.diag(-i), w.diag(-j)) {
                let vec = vi.tau(j * k).star(wj)?;
                merge(&mut acc, -(i + j), vec)?;
            }
        }
    }
    // Sub times super: offset j - i, shift by the smaller distance.
    for i in 1..=s {
        for j in 0..=s {
            if let (Some(vi), Some(wj)) = (v.diag(-i), w.diag(j)) {
                let prod = vi.star(wj)?;
                let vec = if i <= j { prod.tau(-i * k) } else { prod.tau(-j * k) };
                merge(&mut acc, j - i, vec)?;
            }
        }
    }
    // Super times sub: offset i - j, the shift lands on one factor.
    for i in 0..=s {
        for j in 1..=s {
            if let (Some(vi), Some(wj)) = (v.diag(i), w.diag(-j)) {
                let vec = if i <= j {
                    vi.tau((j - i) * k).star(wj)?
                } else {
                    vi.star(&wj.tau((i - j) * k))?
                };
                merge(&mut acc, i - j, vec)?;
            }
        }
    }
    // Both from the superdiagonal part: offset i + j.
    for i in 0..=s {
        for j in 0..=s {
            if i + j > s {
                continue;
            }
            if let (Some(vi), Some(wj)) = (v.diag(i), w.diag(j)) {
                let vec = vi.star(&wj.tau(i * k))?;
                merge(&mut acc, i + j, vec)?;
            }
        }
    }
    MdMatrix::new(v.n(), v.k(), v.mode(), acc)
}

/// Like-offset contributions sum.
fn merge(acc: &mut BTreeMap<isize, DiagVec>, p: isize, vec: DiagVec) -> Result<()> {
    match acc.remove(&p) {
        Some(existing) => {
            acc.insert(p, existing.add(&vec)?);
        }
        None => {
            acc.insert(p, vec);
        }
    }
    Ok(())
}

/// `a^m` for `m >= 0` by repeated squaring; `a^0` is the identity.
pub fn pow(a: &MdMatrix, m: u64) -> Result<MdMatrix> {
    let mut result = MdMatrix::identity(a.n(), a.k(), a.mode())?;
    let mut base = a.clone();
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base)?;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mdmatrix::DenseMatrix;
    use crate::oracle;
    use crate::scalar::{Mode, Scalar};
    use proptest::prelude::*;

    fn dv(values: &[i64]) -> DiagVec {
        DiagVec::from_ints(values, Mode::Exact)
    }

    fn fixture() -> MdMatrix {
        let mut diags = BTreeMap::new();
        diags.insert(-1, dv(&[1, 0, 0]));
        diags.insert(0, dv(&[2, 3, 4]));
        diags.insert(1, dv(&[1, 0, 0]));
        MdMatrix::new(2, 2, Mode::Exact, diags).unwrap()
    }

    #[test]
    fn two_by_two_product_matches_hand_result() {
        let v = MdMatrix::from_dense(
            &DenseMatrix::from_int_rows(&[&[1, 2], &[3, 4]], Mode::Exact),
            1,
        )
        .unwrap();
        let w = MdMatrix::from_dense(
            &DenseMatrix::from_int_rows(&[&[5, 6], &[7, 8]], Mode::Exact),
            1,
        )
        .unwrap();
        let expected = DenseMatrix::from_int_rows(&[&[19, 22], &[43, 50]], Mode::Exact);
        assert_eq!(mul(&v, &w).unwrap().to_dense(), expected);
    }

    #[test]
    fn product_with_identity() {
        let a = fixture();
        let e = MdMatrix::identity(2, 2, Mode::Exact).unwrap();
        assert_eq!(mul(&a, &e).unwrap(), a);
        assert_eq!(mul(&e, &a).unwrap(), a);
    }

    #[test]
    fn fixture_squared() {
        let sq = mul(&fixture(), &fixture()).unwrap();
        let expected =
            DenseMatrix::from_int_rows(&[&[5, 0, 6], &[0, 9, 0], &[6, 0, 17]], Mode::Exact);
        assert_eq!(sq.to_dense(), expected);
        assert_eq!(sq.diag(0).unwrap(), &dv(&[5, 9, 17]));
        assert_eq!(sq.diag(1).unwrap(), &dv(&[6, 0, 0]));
        assert_eq!(sq.diag(-1).unwrap(), &dv(&[6, 0, 0]));
    }

    #[test]
    fn tridiagonal_product_is_pentadiagonal() {
        // Two spacing-1 tridiagonal factors at n = 3: the product fills
        // offsets up to distance 2 but the far corners stay zero.
        let mut d1 = BTreeMap::new();
        d1.insert(-1, dv(&[1, 2, 3, 0]));
        d1.insert(0, dv(&[4, 5, 6, 7]));
        d1.insert(1, dv(&[8, 9, 1, 0]));
        let v = MdMatrix::new(3, 1, Mode::Exact, d1).unwrap();
        let mut d2 = BTreeMap::new();
        d2.insert(-1, dv(&[2, 4, 6, 0]));
        d2.insert(0, dv(&[1, 3, 5, 7]));
        d2.insert(1, dv(&[9, 8, 7, 0]));
        let w = MdMatrix::new(3, 1, Mode::Exact, d2).unwrap();

        let prod = mul(&v, &w).unwrap();
        let dense = prod.to_dense();
        assert!(dense.get(0, 3).is_exactly_zero());
        assert!(dense.get(3, 0).is_exactly_zero());
        assert!(prod.diag(2).is_some());
        assert!(prod.diag(-2).is_some());
        let expected = oracle::dense_mul(&v.to_dense(), &w.to_dense()).unwrap();
        assert_eq!(dense, expected);
    }

    #[test]
    fn power_basics() {
        let a = fixture();
        let e = MdMatrix::identity(2, 2, Mode::Exact).unwrap();
        assert_eq!(pow(&a, 0).unwrap(), e);
        assert_eq!(pow(&a, 1).unwrap(), a);
        let cubed = mul(&mul(&a, &a).unwrap(), &a).unwrap();
        assert_eq!(pow(&a, 3).unwrap(), cubed);
    }

    #[test]
    fn shape_and_mode_mismatch_rejected() {
        let a = fixture();
        let b = MdMatrix::identity(2, 1, Mode::Exact).unwrap();
        assert!(matches!(
            mul(&a, &b).unwrap_err(),
            Error::ShapeMismatch { .. }
        ));
        let c = MdMatrix::identity(2, 2, Mode::Float).unwrap();
        assert!(matches!(mul(&a, &c).unwrap_err(), Error::ModeMismatch(..)));
    }

    prop_compose! {
        fn arb_shape()(n in 1usize..=9)(n in Just(n), k in 1usize..=n) -> (usize, usize) {
            (n, k)
        }
    }

    fn arb_matrix_with(n: usize, k: usize) -> impl Strategy<Value = MdMatrix> {
        let s = n / k;
        let offsets: Vec<isize> = (-(s as isize)..=(s as isize)).collect();
        let diag_strategies: Vec<_> = offsets
            .iter()
            .map(|&p| {
                let live = n + 1 - p.unsigned_abs() * k;
                proptest::collection::vec((-5i64..=5, 1i64..=5), live).prop_map(
                    move |coeffs| {
                        let mut coords: Vec<Scalar> =
                            coeffs.into_iter().map(|(p, q)| Scalar::ratio(p, q)).collect();
                        coords.resize(n + 1, Scalar::zero(Mode::Exact));
                        (p, DiagVec::new(coords).unwrap())
                    },
                )
            })
            .collect();
        diag_strategies.prop_map(move |pairs| {
            MdMatrix::new(n, k, Mode::Exact, pairs.into_iter().collect()).unwrap()
        })
    }

    fn arb_pair() -> impl Strategy<Value = (MdMatrix, MdMatrix)> {
        arb_shape().prop_flat_map(|(n, k)| (arb_matrix_with(n, k), arb_matrix_with(n, k)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_dense_oracle((v, w) in arb_pair()) {
            let structured = mul(&v, &w).unwrap();
            let dense = oracle::dense_mul(&v.to_dense(), &w.to_dense()).unwrap();
            prop_assert_eq!(structured.to_dense(), dense);
        }

        #[test]
        fn product_stays_on_lattice((v, w) in arb_pair()) {
            let d = mul(&v, &w).unwrap().to_dense();
            let k = v.k();
            for i in 0..d.size() {
                for j in 0..d.size() {
                    if i.abs_diff(j) % k != 0 {
                        prop_assert!(d.get(i, j).is_exactly_zero());
                    }
                }
            }
        }

        #[test]
        fn multiplication_associates((v, w) in arb_pair()) {
            let u = mul(&w, &v).unwrap();
            let left = mul(&mul(&v, &w).unwrap(), &u).unwrap();
            let right = mul(&v, &mul(&w, &u).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
