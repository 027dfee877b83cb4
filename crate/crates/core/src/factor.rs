//! Recursive block PLU decomposition.
//!
//! For `M = [[A, B], [C, D]]` with nonsingular leading principal minors:
//!
//! ```text
//! P1, L1, U1 = plu(A)
//! X = C·U1⁻¹
//! Y = P1⁻¹·L1⁻¹·B
//! P2, L2, U2 = plu(D − X·Y)
//! P = [[P1, 0], [0, P2]]   L = [[L1, 0], [X, L2]]   U = [[U1, Y], [0, U2]]
//! ```
//!
//! Leaf blocks use Doolittle elimination without row exchanges, so every
//! permutation produced is an identity and a zero pivot is reported as
//! [`BlockError::Singular`].

use crate::block::{BlockMatrix, Payload};
use crate::error::{BlockError, Result};
use crate::grid::ElementGrid;
use crate::inverse::inv;
use crate::numeric::Scalar;
use crate::ring::{minus, times};

/// `M = P·L·U` with `L` unit lower triangular and `U` upper triangular,
/// element-wise and recursively within diagonal blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plu {
    pub p: BlockMatrix,
    pub l: BlockMatrix,
    pub u: BlockMatrix,
}

pub fn plu_decomp(m: &BlockMatrix) -> Result<Plu> {
    if !m.is_square() {
        return Err(BlockError::NotSquare { rows: m.er(), cols: m.ec() });
    }
    let n = m.er();
    match m.payload() {
        Payload::Zero => Err(BlockError::Singular),
        Payload::ScalarDiag(s) => {
            if s.is_zero() {
                return Err(BlockError::Singular);
            }
            Ok(Plu { p: BlockMatrix::identity(n)?, l: BlockMatrix::identity(n)?, u: m.clone() })
        }
        Payload::Leaf(g) => {
            let (l, u) = doolittle(g)?;
            Ok(Plu { p: BlockMatrix::identity(n)?, l: BlockMatrix::leaf(l), u: BlockMatrix::leaf(u) })
        }
        Payload::RBlock(_) => match m.block_dims() {
            (1, 1) => {
                let inner = plu_decomp(m.block(1, 1)?)?;
                let wrap = |b: BlockMatrix| BlockMatrix::rblock_from_rows(vec![vec![b]]);
                Ok(Plu { p: wrap(inner.p)?, l: wrap(inner.l)?, u: wrap(inner.u)? })
            }
            (2, 2) => plu_two_by_two(m),
            (p, q) => Err(BlockError::Unsupported(format!("cannot decompose a {p}×{q} block grid"))),
        },
    }
}

fn plu_two_by_two(m: &BlockMatrix) -> Result<Plu> {
    let (a, b) = (m.block(1, 1)?, m.block(1, 2)?);
    let (c, d) = (m.block(2, 1)?, m.block(2, 2)?);
    let (ra, ca) = a.dims();
    let (rb, cb) = b.dims();
    let (rc, cc) = c.dims();
    let (rd, cd) = d.dims();

    if !(ra == ca && rd == cd) {
        return Err(BlockError::BadShape("Principal block not square"));
    }
    if !(ra == rb && rc == rd && ca == cc && cb == cd) {
        return Err(BlockError::BadShape("Bad shape"));
    }
    let (n1, n2) = (ra, rd);

    let Plu { p: p1, l: l1, u: u1 } = plu_decomp(a)?;
    let l1inv = inv(&l1)?;
    let u1inv = inv(&u1)?;
    let x = times(c, &u1inv)?;
    let y = times(&l1inv, b)?;
    let y = times(&inv(&p1)?, &y)?;
    let t = minus(d, &times(&x, &y)?)?;
    let Plu { p: p2, l: l2, u: u2 } = plu_decomp(&t)?;

    let z12 = BlockMatrix::zero(n1, n2)?;
    let z21 = BlockMatrix::zero(n2, n1)?;
    Ok(Plu {
        p: BlockMatrix::rblock_from_rows(vec![vec![p1, z12.clone()], vec![z21.clone(), p2]])?,
        l: BlockMatrix::rblock_from_rows(vec![vec![l1, z12], vec![x, l2]])?,
        u: BlockMatrix::rblock_from_rows(vec![vec![u1, y], vec![z21, u2]])?,
    })
}

/// In-place elimination storing the multipliers: `L` collects them under a
/// unit diagonal, `U` is what remains of the working copy.
fn doolittle(g: &ElementGrid) -> Result<(ElementGrid, ElementGrid)> {
    let n = g.rows();
    let mut work: Vec<Scalar> = g.entries().to_vec();
    let mut lower = vec![Scalar::zero(); n * n];
    for k in 0..n {
        lower[k * n + k] = Scalar::one();
        let pivot = &work[k * n + k];
        if pivot.is_zero() {
            return Err(BlockError::Singular);
        }
        let pivot_inv = pivot.inv()?;
        for i in k + 1..n {
            let factor = &work[i * n + k] * &pivot_inv;
            if !factor.is_zero() {
                for j in k..n {
                    let d = &factor * &work[k * n + j];
                    work[i * n + j] = &work[i * n + j] - &d;
                }
            }
            lower[i * n + k] = factor;
        }
    }
    Ok((ElementGrid::new(n, n, lower)?, ElementGrid::new(n, n, work)?))
}

fn require_square(b: &BlockMatrix) -> Result<usize> {
    if b.is_square() {
        Ok(b.er())
    } else {
        Err(BlockError::NotSquare { rows: b.er(), cols: b.ec() })
    }
}

/// Zero above the diagonal and ones on it.
pub fn is_unit_lower(b: &BlockMatrix) -> Result<bool> {
    let n = require_square(b)?;
    Ok((1..=n).all(|i| {
        (i..=n).all(|j| {
            let e = b.elt(i, j).expect("in range");
            if i == j {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }))
}

/// Zero below the diagonal.
pub fn is_upper(b: &BlockMatrix) -> Result<bool> {
    let n = require_square(b)?;
    Ok((2..=n).all(|i| (1..i).all(|j| b.elt(i, j).expect("in range").is_zero())))
}
