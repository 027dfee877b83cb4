//! Structure-preserving element-wise traversal.
//!
//! `map_bm` keeps the partition tree of its input; `zip_bm` requires both
//! operands to share one (modulo the structureless `Zero` and `ScalarDiag`
//! kinds, which adapt to the other side). The element functions must be pure:
//! implicit entries are evaluated once at 0 and the result reused.

use crate::block::{BlockGrid, BlockMatrix, Partition, Payload};
use crate::error::{BlockError, Result};
use crate::grid::ElementGrid;
use crate::numeric::Scalar;

/// `R(i,j) = f(A(i,j))`.
///
/// `Zero` stays `Zero` and `ScalarDiag s` becomes `ScalarDiag f(s)` when
/// `f(0) = 0`; otherwise both materialize as a `Leaf`.
pub fn map_bm<F>(f: &F, a: &BlockMatrix) -> BlockMatrix
where
    F: Fn(&Scalar) -> Scalar,
{
    let (er, ec) = a.dims();
    match a.payload() {
        Payload::Zero => {
            let f0 = f(&Scalar::zero());
            if f0.is_zero() {
                a.clone()
            } else {
                BlockMatrix::leaf(ElementGrid::from_fn(er, ec, |_, _| f0.clone()))
            }
        }
        Payload::ScalarDiag(s) => {
            let f0 = f(&Scalar::zero());
            let fs = f(s);
            if f0.is_zero() {
                BlockMatrix::from_raw(er, ec, Payload::ScalarDiag(fs))
            } else {
                BlockMatrix::leaf(diag_grid(er, &fs, &f0))
            }
        }
        Payload::Leaf(g) => BlockMatrix::leaf(ElementGrid::from_fn(er, ec, |i, j| f(&g[(i, j)]))),
        Payload::RBlock(g) => {
            let children = g.children().iter().map(|c| map_bm(f, c)).collect();
            let grid = BlockGrid::new(g.brows(), g.bcols(), children).expect("same grid shape");
            BlockMatrix::from_raw(er, ec, Payload::RBlock(grid))
        }
    }
}

fn diag_grid(n: usize, diag: &Scalar, off: &Scalar) -> ElementGrid {
    ElementGrid::from_fn(n, n, |i, j| if i == j { diag.clone() } else { off.clone() })
}

/// `R(i,j) = f(A(i,j), B(i,j))`.
///
/// Allowed kind pairs: `Zero` with anything, `ScalarDiag` with anything,
/// `Leaf` with `Leaf`, and `RBlock` with `RBlock` of identical partitions.
/// A `ScalarDiag` meeting an `RBlock` is first split to the `RBlock`'s
/// partition with [`conform`].
pub fn zip_bm<F>(f: &F, a: &BlockMatrix, b: &BlockMatrix) -> Result<BlockMatrix>
where
    F: Fn(&Scalar, &Scalar) -> Scalar,
{
    if a.dims() != b.dims() {
        return Err(BlockError::DimensionMismatch { left: a.dims(), right: b.dims() });
    }
    let zero = Scalar::zero();
    let (er, ec) = a.dims();
    match (a.payload(), b.payload()) {
        (Payload::Zero, _) => Ok(map_bm(&|y: &Scalar| f(&zero, y), b)),
        (_, Payload::Zero) => Ok(map_bm(&|x: &Scalar| f(x, &zero), a)),
        (Payload::ScalarDiag(s), Payload::ScalarDiag(t)) => {
            let f00 = f(&zero, &zero);
            let fst = f(s, t);
            if f00.is_zero() {
                Ok(BlockMatrix::from_raw(er, ec, Payload::ScalarDiag(fst)))
            } else {
                Ok(BlockMatrix::leaf(diag_grid(er, &fst, &f00)))
            }
        }
        (Payload::ScalarDiag(s), Payload::Leaf(g)) => Ok(BlockMatrix::leaf(ElementGrid::from_fn(
            er,
            ec,
            |i, j| f(if i == j { s } else { &zero }, &g[(i, j)]),
        ))),
        (Payload::Leaf(g), Payload::ScalarDiag(s)) => Ok(BlockMatrix::leaf(ElementGrid::from_fn(
            er,
            ec,
            |i, j| f(&g[(i, j)], if i == j { s } else { &zero }),
        ))),
        (Payload::ScalarDiag(_), Payload::RBlock(_)) => {
            let split = conform(a, &b.row_partition(), &b.col_partition())?;
            zip_bm(f, &split, b)
        }
        (Payload::RBlock(_), Payload::ScalarDiag(_)) => {
            let split = conform(b, &a.row_partition(), &a.col_partition())?;
            zip_bm(f, a, &split)
        }
        (Payload::Leaf(ga), Payload::Leaf(gb)) => Ok(BlockMatrix::leaf(ElementGrid::from_fn(
            er,
            ec,
            |i, j| f(&ga[(i, j)], &gb[(i, j)]),
        ))),
        (Payload::RBlock(ga), Payload::RBlock(gb)) => {
            if ga.row_partition() != gb.row_partition() || ga.col_partition() != gb.col_partition() {
                return Err(BlockError::StructureMismatch(format!(
                    "block partitions {:?}×{:?} and {:?}×{:?} differ",
                    ga.row_partition().sizes(),
                    ga.col_partition().sizes(),
                    gb.row_partition().sizes(),
                    gb.col_partition().sizes()
                )));
            }
            let children = ga
                .children()
                .iter()
                .zip(gb.children())
                .map(|(x, y)| zip_bm(f, x, y))
                .collect::<Result<Vec<_>>>()?;
            let grid = BlockGrid::new(ga.brows(), ga.bcols(), children)?;
            Ok(BlockMatrix::from_raw(er, ec, Payload::RBlock(grid)))
        }
        (Payload::Leaf(_), Payload::RBlock(_)) | (Payload::RBlock(_), Payload::Leaf(_)) => {
            Err(BlockError::StructureMismatch(format!(
                "cannot combine {} with {}",
                a.kind(),
                b.kind()
            )))
        }
    }
}

/// Split a `Zero` or `ScalarDiag` node into an `RBlock` with the given row
/// and column partitions, without changing any element.
///
/// A `Zero` with two singleton partitions is returned unchanged. A
/// `ScalarDiag` always becomes an `RBlock` (1×1 for singleton partitions)
/// with `ScalarDiag` diagonal children and `Zero` elsewhere, so its
/// partitions must be equal.
pub fn conform(b: &BlockMatrix, rows: &Partition, cols: &Partition) -> Result<BlockMatrix> {
    let kind = b.kind().name();
    if rows.total() != b.er() || cols.total() != b.ec() {
        return Err(BlockError::Conformability {
            kind,
            reason: format!(
                "partitions {:?}×{:?} do not sum to {}×{}",
                rows.sizes(),
                cols.sizes(),
                b.er(),
                b.ec()
            ),
        });
    }
    match b.payload() {
        Payload::Zero => {
            if rows.len() == 1 && cols.len() == 1 {
                return Ok(b.clone());
            }
            let grid = BlockGrid::from_fn(rows.len(), cols.len(), |i, j| {
                BlockMatrix::zero(rows.sizes()[i], cols.sizes()[j])
            })?;
            Ok(BlockMatrix::from_raw(b.er(), b.ec(), Payload::RBlock(grid)))
        }
        Payload::ScalarDiag(s) => {
            if rows != cols {
                return Err(BlockError::Conformability {
                    kind,
                    reason: format!(
                        "row partition {:?} differs from column partition {:?}",
                        rows.sizes(),
                        cols.sizes()
                    ),
                });
            }
            let grid = BlockGrid::from_fn(rows.len(), cols.len(), |i, j| {
                if i == j {
                    BlockMatrix::scalar(rows.sizes()[i], s.clone())
                } else {
                    BlockMatrix::zero(rows.sizes()[i], cols.sizes()[j])
                }
            })?;
            Ok(BlockMatrix::from_raw(b.er(), b.ec(), Payload::RBlock(grid)))
        }
        _ => Err(BlockError::Conformability {
            kind,
            reason: "only zero and scalar blocks can be conformed".into(),
        }),
    }
}
