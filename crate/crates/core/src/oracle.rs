//! Dense reference linear algebra over [`ElementGrid`].
//!
//! Used by tests and by the CLI's checks to verify block-structured results.
//! Nothing here calls into the ring, inverse or factor modules.

use crate::block::{BlockMatrix, Payload};
use crate::error::{BlockError, Result};
use crate::grid::ElementGrid;
use crate::numeric::Scalar;

/// Materialize a block matrix by placing each block at its offset.
pub fn flatten(b: &BlockMatrix) -> ElementGrid {
    let (rows, cols) = b.dims();
    let mut out = vec![Scalar::zero(); rows * cols];
    place(b, &mut out, cols, 0, 0);
    ElementGrid::new(rows, cols, out).expect("block matrix dims are positive")
}

fn place(b: &BlockMatrix, out: &mut [Scalar], stride: usize, r0: usize, c0: usize) {
    match b.payload() {
        Payload::Zero => {}
        Payload::ScalarDiag(s) => {
            for k in 0..b.er() {
                out[(r0 + k) * stride + c0 + k] = s.clone();
            }
        }
        Payload::Leaf(g) => {
            for (i, row) in g.iter_rows().enumerate() {
                out[(r0 + i) * stride + c0..][..row.len()].clone_from_slice(row);
            }
        }
        Payload::RBlock(g) => {
            let mut r = r0;
            for row in g.iter_rows() {
                let mut c = c0;
                for child in row {
                    place(child, out, stride, r, c);
                    c += child.ec();
                }
                r += row[0].er();
            }
        }
    }
}

pub fn identity(n: usize) -> ElementGrid {
    let entries = (0..n * n).map(|k| if k / n == k % n { Scalar::one() } else { Scalar::zero() }).collect();
    ElementGrid::new(n, n, entries).expect("n > 0")
}

fn same_dims(a: &ElementGrid, b: &ElementGrid) -> Result<()> {
    if a.dims() == b.dims() {
        Ok(())
    } else {
        Err(BlockError::DimensionMismatch { left: a.dims(), right: b.dims() })
    }
}

pub fn dense_add(a: &ElementGrid, b: &ElementGrid) -> Result<ElementGrid> {
    same_dims(a, b)?;
    let e = a.entries().iter().zip(b.entries()).map(|(x, y)| x + y).collect();
    ElementGrid::new(a.rows(), a.cols(), e)
}

pub fn dense_sub(a: &ElementGrid, b: &ElementGrid) -> Result<ElementGrid> {
    same_dims(a, b)?;
    let e = a.entries().iter().zip(b.entries()).map(|(x, y)| x - y).collect();
    ElementGrid::new(a.rows(), a.cols(), e)
}

pub fn dense_neg(a: &ElementGrid) -> ElementGrid {
    ElementGrid::new(a.rows(), a.cols(), a.entries().iter().map(|x| -x).collect()).expect("same dims")
}

pub fn dense_mul(a: &ElementGrid, b: &ElementGrid) -> Result<ElementGrid> {
    if a.cols() != b.rows() {
        return Err(BlockError::DimensionMismatch { left: a.dims(), right: b.dims() });
    }
    let mut e = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let dot = (0..a.cols()).fold(Scalar::zero(), |acc, k| &acc + &(&a[(i, k)] * &b[(k, j)]));
            e.push(dot);
        }
    }
    ElementGrid::new(a.rows(), b.cols(), e)
}

pub fn dense_herm_trans(a: &ElementGrid) -> ElementGrid {
    let mut e = Vec::with_capacity(a.rows() * a.cols());
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            e.push(a[(i, j)].conjugate());
        }
    }
    ElementGrid::new(a.cols(), a.rows(), e).expect("same dims")
}

fn square_rows(a: &ElementGrid) -> Result<Vec<Vec<Scalar>>> {
    if a.rows() != a.cols() {
        return Err(BlockError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(a.iter_rows().map(<[Scalar]>::to_vec).collect())
}

/// Determinant by row reduction to echelon form.
pub fn dense_det(a: &ElementGrid) -> Result<Scalar> {
    let mut m = square_rows(a)?;
    let n = m.len();
    let mut det = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(Scalar::zero());
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det = &det * &m[k][k];
        let pivot_inv = m[k][k].inv()?;
        for r in k + 1..n {
            let f = &m[r][k] * &pivot_inv;
            for c in k..n {
                let t = &f * &m[k][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
    }
    Ok(det)
}

/// Determinants of the leading `k×k` submatrices, `k = 1..=n`.
pub fn leading_minors(a: &ElementGrid) -> Result<Vec<Scalar>> {
    let m = square_rows(a)?;
    (1..=m.len())
        .map(|k| {
            let sub = ElementGrid::new(k, k, m[..k].iter().flat_map(|r| r[..k].iter().cloned()).collect())?;
            dense_det(&sub)
        })
        .collect()
}

/// Inverse by reducing the augmented matrix `[A | I]`; `Singular` iff
/// `det A = 0`.
pub fn dense_inv(a: &ElementGrid) -> Result<ElementGrid> {
    let n = a.rows();
    let mut aug: Vec<Vec<Scalar>> = square_rows(a)?
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !aug[r][k].is_zero()).ok_or(BlockError::Singular)?;
        aug.swap(p, k);
        let pivot_inv = aug[k][k].inv()?;
        aug[k].iter_mut().for_each(|x| *x = &*x * &pivot_inv);
        let pivot_row = aug[k].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * p);
            }
        }
    }
    let e = aug.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
    ElementGrid::new(n, n, e)
}

/// No-pivot Doolittle `A = L·U` via the explicit recurrences
/// `u[k][j] = a[k][j] − Σ l[k][s]·u[s][j]` and
/// `l[i][k] = (a[i][k] − Σ l[i][s]·u[s][k]) / u[k][k]`.
/// `Singular` on a zero `u[k][k]`.
pub fn dense_lu(a: &ElementGrid) -> Result<(ElementGrid, ElementGrid)> {
    let m = square_rows(a)?;
    let n = m.len();
    let mut l = vec![vec![Scalar::zero(); n]; n];
    let mut u = vec![vec![Scalar::zero(); n]; n];
    for k in 0..n {
        for j in k..n {
            let s = (0..k).fold(Scalar::zero(), |acc, s| &acc + &(&l[k][s] * &u[s][j]));
            u[k][j] = &m[k][j] - &s;
        }
        if u[k][k].is_zero() {
            return Err(BlockError::Singular);
        }
        l[k][k] = Scalar::one();
        let ukk_inv = u[k][k].inv()?;
        for i in k + 1..n {
            let s = (0..k).fold(Scalar::zero(), |acc, s| &acc + &(&l[i][s] * &u[s][k]));
            l[i][k] = &(&m[i][k] - &s) * &ukk_inv;
        }
    }
    let grid = |rows: Vec<Vec<Scalar>>| ElementGrid::new(n, n, rows.into_iter().flatten().collect());
    Ok((grid(l)?, grid(u)?))
}
