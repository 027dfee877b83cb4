//! Block inversion.
//!
//! [`try_inv`] inverts a 2×2 block matrix through the Schur complement of its
//! (1,1) block and therefore fails whenever that block is singular, even if
//! the whole matrix is invertible. [`inv_by_mtm`] computes `(M†M)⁻¹M†`; the
//! Gram matrix `M†M` of an invertible `M` is Hermitian positive definite, so
//! every leading block and every Schur complement met by `try_inv` on it is
//! invertible. [`inv`] tries the first and falls back to the second.
//!
//! A singular input yields [`BlockError::Singular`]; grids other than 1×1 and
//! 2×2, non-square inputs and non-square diagonal blocks yield
//! [`BlockError::Unsupported`].

use std::fmt;

use crate::block::{BlockMatrix, Payload};
use crate::error::{BlockError, Result};
use crate::grid::ElementGrid;
use crate::numeric::Scalar;
use crate::ring::{herm_trans, minus, neg, plus, times};

/// Which method produced an inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvPath {
    /// Direct Schur-complement inversion succeeded.
    Schur,
    /// The Schur attempt reported a singular pivot block; the Gram fallback ran.
    Gram,
}

impl fmt::Display for InvPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvPath::Schur => "schur",
            InvPath::Gram => "gram",
        })
    }
}

/// Instrumentation for [`inv_traced`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvTrace {
    pub schur_successes: usize,
    pub schur_failures: usize,
    pub gram_runs: usize,
    pub last_path: Option<InvPath>,
}

/// Schur complement of a pivot block together with the products used to
/// build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurComplement {
    /// `M[i',j'] − M[i',j]·M[i,j]⁻¹·M[i,j']`
    pub complement: BlockMatrix,
    /// `M[i',j]·M[i,j]⁻¹`
    pub left: BlockMatrix,
    /// `M[i,j]⁻¹·M[i,j']`
    pub right: BlockMatrix,
}

fn require_square(m: &BlockMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(BlockError::Unsupported(format!("cannot invert a {}×{} matrix", m.er(), m.ec())))
    }
}

/// Inverse assuming the (1,1) block, and recursively each pivot, is invertible.
pub fn try_inv(m: &BlockMatrix) -> Result<BlockMatrix> {
    require_square(m)?;
    match m.payload() {
        Payload::Zero => Err(BlockError::Singular),
        Payload::ScalarDiag(s) => {
            if s.is_zero() {
                Err(BlockError::Singular)
            } else {
                BlockMatrix::scalar(m.er(), s.inv()?)
            }
        }
        Payload::Leaf(g) => leaf_inverse(g).map(BlockMatrix::leaf),
        Payload::RBlock(_) => match m.block_dims() {
            (1, 1) => BlockMatrix::rblock_from_rows(vec![vec![try_inv(m.block(1, 1)?)?]]),
            (2, 2) => {
                let (a, d) = (m.block(1, 1)?, m.block(2, 2)?);
                if !a.is_square() || !d.is_square() {
                    return Err(BlockError::Unsupported("diagonal blocks must be square".into()));
                }
                let (a_inv, parts) = schur_parts(m, 1, 1, &try_inv)?;
                let s_inv = try_inv(&parts.complement)?;
                // A⁻¹B·S⁻¹ is shared by the two top blocks.
                let right_s = times(&parts.right, &s_inv)?;
                let top_left = plus(&a_inv, &times(&right_s, &parts.left)?)?;
                let top_right = neg(&right_s);
                let bottom_left = neg(&times(&s_inv, &parts.left)?);
                BlockMatrix::rblock_from_rows(vec![vec![top_left, top_right], vec![bottom_left, s_inv]])
            }
            (p, q) => Err(BlockError::Unsupported(format!("cannot invert a {p}×{q} block grid"))),
        },
    }
}

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each
/// column.
fn leaf_inverse(g: &ElementGrid) -> Result<ElementGrid> {
    let n = g.rows();
    let mut a: Vec<Vec<Scalar>> = g.iter_rows().map(<[Scalar]>::to_vec).collect();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(BlockError::Singular)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let da = &factor * &a[col][j];
                a[r][j] = &a[r][j] - &da;
                let di = &factor * &inv[col][j];
                inv[r][j] = &inv[r][j] - &di;
            }
        }
    }
    ElementGrid::new(n, n, inv.into_iter().flatten().collect())
}

/// `(M†M)⁻¹M†`.
pub fn inv_by_mtm(m: &BlockMatrix) -> Result<BlockMatrix> {
    require_square(m)?;
    let mh = herm_trans(m);
    let gram = times(&mh, m)?;
    times(&try_inv(&gram)?, &mh)
}

/// Inverse by [`try_inv`], falling back to [`inv_by_mtm`] when the former
/// reports a singular pivot.
pub fn inv(m: &BlockMatrix) -> Result<BlockMatrix> {
    inv_traced(m, &mut InvTrace::default())
}

/// [`inv`] that records the path taken in `trace`.
pub fn inv_traced(m: &BlockMatrix, trace: &mut InvTrace) -> Result<BlockMatrix> {
    match try_inv(m) {
        Ok(r) => {
            trace.schur_successes += 1;
            trace.last_path = Some(InvPath::Schur);
            Ok(r)
        }
        Err(BlockError::Singular) => {
            trace.schur_failures += 1;
            trace.gram_runs += 1;
            trace.last_path = Some(InvPath::Gram);
            inv_by_mtm(m)
        }
        Err(e) => Err(e),
    }
}

/// Schur complement of block `(i, j)` of a 2×2 block matrix, inverting the
/// pivot with `invf`.
pub fn schur_comp<F>(m: &BlockMatrix, i: usize, j: usize, invf: &F) -> Result<SchurComplement>
where
    F: Fn(&BlockMatrix) -> Result<BlockMatrix>,
{
    schur_parts(m, i, j, invf).map(|(_, parts)| parts)
}

fn schur_parts<F>(m: &BlockMatrix, i: usize, j: usize, invf: &F) -> Result<(BlockMatrix, SchurComplement)>
where
    F: Fn(&BlockMatrix) -> Result<BlockMatrix>,
{
    if m.kind() != crate::block::BlockKind::RBlock || m.block_dims() != (2, 2) {
        let (p, q) = m.block_dims();
        return Err(BlockError::Unsupported(format!(
            "Schur complement needs a 2×2 block grid, got {p}×{q} {}",
            m.kind()
        )));
    }
    if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
        return Err(BlockError::IndexOutOfRange { row: i, col: j, rows: 2, cols: 2 });
    }
    let (io, jo) = (3 - i, 3 - j);
    let pivot_inv = invf(m.block(i, j)?)?;
    let left = times(m.block(io, j)?, &pivot_inv)?;
    let right = times(&pivot_inv, m.block(i, jo)?)?;
    let complement = minus(m.block(io, jo)?, &times(&left, m.block(i, jo)?)?)?;
    Ok((pivot_inv, SchurComplement { complement, left, right }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(rows: &[&[i64]]) -> BlockMatrix {
        BlockMatrix::from_ints(rows).unwrap()
    }

    fn one_by_one_blocks(a: i64, b: i64, c: i64, d: i64) -> BlockMatrix {
        BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[a]]), leaf(&[&[b]])],
            vec![leaf(&[&[c]]), leaf(&[&[d]])],
        ])
        .unwrap()
    }

    fn is_identity(m: &BlockMatrix, r: &BlockMatrix) -> bool {
        let n = m.er();
        let id = BlockMatrix::identity(n).unwrap();
        times(m, r).unwrap().eq_elements(&id) && times(r, m).unwrap().eq_elements(&id)
    }

    #[test]
    fn schur_inverse_of_small_example() {
        let m = one_by_one_blocks(2, 1, 1, 1);
        let r = try_inv(&m).unwrap();
        assert_eq!(r.block_dims(), (2, 2));
        assert!(r.eq_elements(&leaf(&[&[1, -1], &[-1, 2]])));

        let s = schur_comp(&m, 1, 1, &try_inv).unwrap();
        let half = BlockMatrix::leaf(ElementGrid::from_rows(vec![vec![Scalar::ratio(1, 2)]]).unwrap());
        assert_eq!(s.complement, half);
        assert_eq!(s.left, half);
        assert_eq!(s.right, half);
        // (2,2) block of the inverse is the inverse of the complement.
        assert!(r.block(2, 2).unwrap().eq_elements(&try_inv(&s.complement).unwrap()));
    }

    #[test]
    fn schur_of_other_pivots() {
        let m = one_by_one_blocks(2, 1, 1, 1);
        // S_D = A − B·D⁻¹·C = 2 − 1 = 1
        let s = schur_comp(&m, 2, 2, &try_inv).unwrap();
        assert_eq!(s.complement, leaf(&[&[1]]));
        assert_eq!(s.left, leaf(&[&[1]]));
        let zero_b = BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[3, 1], &[1, 1]]), BlockMatrix::zero(2, 1).unwrap()],
            vec![leaf(&[&[5, 6]]), leaf(&[&[7]])],
        ])
        .unwrap();
        let s = schur_comp(&zero_b, 1, 1, &try_inv).unwrap();
        assert!(s.complement.eq_elements(&leaf(&[&[7]])));
        assert!(matches!(schur_comp(&zero_b, 3, 1, &try_inv), Err(BlockError::IndexOutOfRange { .. })));
        assert!(matches!(schur_comp(&leaf(&[&[1]]), 1, 1, &try_inv), Err(BlockError::Unsupported(_))));
        let singular_pivot = one_by_one_blocks(0, 1, 1, 0);
        assert_eq!(schur_comp(&singular_pivot, 1, 1, &try_inv).unwrap_err(), BlockError::Singular);
    }

    #[test]
    fn structureless_kinds() {
        assert_eq!(
            try_inv(&BlockMatrix::scalar(3, Scalar::int(2)).unwrap()).unwrap(),
            BlockMatrix::scalar(3, Scalar::ratio(1, 2)).unwrap()
        );
        assert_eq!(try_inv(&BlockMatrix::zero(2, 2).unwrap()).unwrap_err(), BlockError::Singular);
        assert_eq!(try_inv(&BlockMatrix::scalar(2, Scalar::zero()).unwrap()).unwrap_err(), BlockError::Singular);
        assert_eq!(
            inv_by_mtm(&BlockMatrix::scalar(2, Scalar::int(3)).unwrap()).unwrap(),
            BlockMatrix::scalar(2, Scalar::ratio(1, 3)).unwrap()
        );
        assert_eq!(inv_by_mtm(&BlockMatrix::zero(2, 2).unwrap()).unwrap_err(), BlockError::Singular);
        let c = BlockMatrix::scalar(2, Scalar::complex(0, 1)).unwrap();
        assert_eq!(inv_by_mtm(&c).unwrap(), BlockMatrix::scalar(2, Scalar::complex(0, -1)).unwrap());
    }

    #[test]
    fn leaf_inverse_pivots_past_zeros() {
        let m = leaf(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let r = try_inv(&m).unwrap();
        assert!(is_identity(&m, &r));
        assert_eq!(try_inv(&leaf(&[&[1, 2], &[2, 4]])).unwrap_err(), BlockError::Singular);
    }

    #[test]
    fn singular_pivot_falls_back_to_gram() {
        let m = one_by_one_blocks(0, 1, 1, 0);
        assert_eq!(try_inv(&m).unwrap_err(), BlockError::Singular);
        let mut trace = InvTrace::default();
        let r = inv_traced(&m, &mut trace).unwrap();
        assert_eq!(trace.last_path, Some(InvPath::Gram));
        assert_eq!((trace.schur_failures, trace.gram_runs), (1, 1));
        assert!(is_identity(&m, &r));

        let ok = one_by_one_blocks(2, 1, 1, 1);
        inv_traced(&ok, &mut trace).unwrap();
        assert_eq!(trace.last_path, Some(InvPath::Schur));
        assert_eq!(trace.schur_successes, 1);
    }

    #[test]
    fn singular_and_unsupported_are_distinct() {
        let dup = BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[1, 2]]), leaf(&[&[3]])],
            vec![leaf(&[&[1, 2], &[4, 5]]), leaf(&[&[3], &[6]])],
        ])
        .unwrap();
        assert_eq!(inv(&dup).unwrap_err(), BlockError::Unsupported("diagonal blocks must be square".into()));

        let dup = BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[1]]), leaf(&[&[2, 3]])],
            vec![leaf(&[&[1], &[4]]), leaf(&[&[2, 3], &[5, 6]])],
        ])
        .unwrap();
        assert_eq!(inv(&dup).unwrap_err(), BlockError::Singular);

        let one = |v| leaf(&[&[v]]);
        let three = BlockMatrix::rblock_from_rows(vec![
            vec![one(1), one(0), one(0)],
            vec![one(0), one(1), one(0)],
            vec![one(0), one(0), one(1)],
        ])
        .unwrap();
        assert!(matches!(inv(&three), Err(BlockError::Unsupported(_))));
        assert!(matches!(inv(&leaf(&[&[1, 2]])), Err(BlockError::Unsupported(_))));
    }

    #[test]
    fn one_by_one_grid_wraps() {
        let m = BlockMatrix::rblock_from_rows(vec![vec![leaf(&[&[2, 1], &[1, 1]])]]).unwrap();
        let r = try_inv(&m).unwrap();
        assert_eq!(r.block_dims(), (1, 1));
        assert!(is_identity(&m, &r));
    }
}
