//! Ring operations on block matrices: sum, difference, negation, classical
//! product and Hermitian transpose. Every result keeps the block structure of
//! its operands.

use crate::block::{BlockGrid, BlockMatrix, Payload};
use crate::error::{BlockError, Result};
use crate::grid::ElementGrid;
use crate::numeric::Scalar;
use crate::traverse::{map_bm, zip_bm};

pub fn plus(a: &BlockMatrix, b: &BlockMatrix) -> Result<BlockMatrix> {
    zip_bm(&|x: &Scalar, y: &Scalar| x + y, a, b)
}

pub fn minus(a: &BlockMatrix, b: &BlockMatrix) -> Result<BlockMatrix> {
    zip_bm(&|x: &Scalar, y: &Scalar| x - y, a, b)
}

pub fn neg(a: &BlockMatrix) -> BlockMatrix {
    map_bm(&|x: &Scalar| -x, a)
}

/// Multiply every element by `s`, keeping the structure of `a`.
pub fn scale(s: &Scalar, a: &BlockMatrix) -> BlockMatrix {
    map_bm(&|x: &Scalar| s * x, a)
}

/// Classical block product `A·B`.
///
/// A `Zero` operand gives `Zero(er(A), ec(B))`; a `ScalarDiag` operand scales
/// the other one; `Leaf·Leaf` is the triple loop; `RBlock·RBlock` needs A's
/// column partition to equal B's row partition and sums the block products
/// left to right, starting from the first one.
pub fn times(a: &BlockMatrix, b: &BlockMatrix) -> Result<BlockMatrix> {
    if a.ec() != b.er() {
        return Err(BlockError::DimensionMismatch { left: a.dims(), right: b.dims() });
    }
    match (a.payload(), b.payload()) {
        (Payload::Zero, _) | (_, Payload::Zero) => BlockMatrix::zero(a.er(), b.ec()),
        (Payload::ScalarDiag(s), _) => Ok(scale(s, b)),
        (_, Payload::ScalarDiag(s)) => Ok(map_bm(&|x: &Scalar| x * s, a)),
        (Payload::Leaf(ga), Payload::Leaf(gb)) => Ok(BlockMatrix::leaf(leaf_product(ga, gb))),
        (Payload::RBlock(ga), Payload::RBlock(gb)) => {
            let inner_a = ga.col_partition();
            let inner_b = gb.row_partition();
            if inner_a != inner_b {
                return Err(BlockError::InnerPartitionMismatch {
                    left: inner_a.sizes().to_vec(),
                    right: inner_b.sizes().to_vec(),
                });
            }
            let grid = BlockGrid::from_fn(ga.brows(), gb.bcols(), |i, k| {
                let mut acc = times(ga.get(i, 0).unwrap(), gb.get(0, k).unwrap())?;
                for j in 1..ga.bcols() {
                    let term = times(ga.get(i, j).unwrap(), gb.get(j, k).unwrap())?;
                    acc = plus(&acc, &term)?;
                }
                Ok(acc)
            })?;
            Ok(BlockMatrix::from_raw(a.er(), b.ec(), Payload::RBlock(grid)))
        }
        (Payload::Leaf(_), Payload::RBlock(_)) | (Payload::RBlock(_), Payload::Leaf(_)) => {
            Err(BlockError::StructureMismatch(format!(
                "cannot multiply {} by {}",
                a.kind(),
                b.kind()
            )))
        }
    }
}

fn leaf_product(a: &ElementGrid, b: &ElementGrid) -> ElementGrid {
    let (n, inner, m) = (a.rows(), a.cols(), b.cols());
    let mut out = vec![Scalar::zero(); n * m];
    for i in 0..n {
        for k in 0..inner {
            let aik = &a[(i, k)];
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                let t = aik * &b[(k, j)];
                out[i * m + j] = &out[i * m + j] + &t;
            }
        }
    }
    ElementGrid::new(n, m, out).expect("product dims are positive")
}

/// Conjugate transpose. Each block of the result has the kind of the
/// corresponding transposed block of `a`.
pub fn herm_trans(a: &BlockMatrix) -> BlockMatrix {
    let (er, ec) = a.dims();
    match a.payload() {
        Payload::Zero => BlockMatrix::zero(ec, er).expect("positive dims"),
        Payload::ScalarDiag(s) => BlockMatrix::from_raw(er, ec, Payload::ScalarDiag(s.conjugate())),
        Payload::Leaf(g) => {
            BlockMatrix::leaf(ElementGrid::from_fn(ec, er, |i, j| g[(j, i)].conjugate()))
        }
        Payload::RBlock(g) => {
            let grid = BlockGrid::from_fn(g.bcols(), g.brows(), |i, j| Ok(herm_trans(g.get(j, i).unwrap())))
                .expect("transposed grid");
            BlockMatrix::from_raw(ec, er, Payload::RBlock(grid))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::BlockKind;

    fn leaf(rows: &[&[i64]]) -> BlockMatrix {
        BlockMatrix::from_ints(rows).unwrap()
    }

    fn worked_example() -> BlockMatrix {
        BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[11, 12], &[13, 14]]), leaf(&[&[15, 16, 17], &[18, 19, 20]])],
            vec![leaf(&[&[21, 22]]), leaf(&[&[23, 24, 25]])],
        ])
        .unwrap()
    }

    #[test]
    fn sums_and_negation() {
        let a = worked_example();
        let z = BlockMatrix::zero(3, 5).unwrap();
        assert!(plus(&a, &z).unwrap().eq_elements(&a));
        assert!(minus(&a, &z).unwrap().eq_elements(&a));
        assert!(minus(&a, &a).unwrap().eq_elements(&z));
        assert!(plus(&a, &neg(&a)).unwrap().eq_elements(&z));
        assert!(neg(&neg(&a)).eq_elements(&a));

        let s = plus(&BlockMatrix::scalar(2, Scalar::int(3)).unwrap(), &BlockMatrix::scalar(2, Scalar::int(4)).unwrap())
            .unwrap();
        assert_eq!(s, BlockMatrix::scalar(2, Scalar::int(7)).unwrap());

        assert_eq!(neg(&BlockMatrix::zero(2, 2).unwrap()).kind(), BlockKind::Zero);
        assert_eq!(
            neg(&BlockMatrix::scalar(3, Scalar::ratio(1, 2)).unwrap()),
            BlockMatrix::scalar(3, Scalar::ratio(-1, 2)).unwrap()
        );
    }

    #[test]
    fn products_by_kind() {
        let x = worked_example();
        assert!(times(&BlockMatrix::identity(3).unwrap(), &x).unwrap().eq_elements(&x));
        assert!(times(&x, &BlockMatrix::identity(5).unwrap()).unwrap().eq_elements(&x));

        let any = BlockMatrix::leaf(ElementGrid::filled(3, 4, Scalar::int(5)).unwrap());
        let z = times(&BlockMatrix::zero(2, 3).unwrap(), &any).unwrap();
        assert_eq!((z.kind(), z.dims()), (BlockKind::Zero, (2, 4)));

        let scaled = times(&BlockMatrix::scalar(3, Scalar::int(2)).unwrap(), &x).unwrap();
        assert_eq!(scaled.kind(), BlockKind::RBlock);
        assert_eq!(scaled.row_partition(), x.row_partition());
        assert_eq!(scaled.block(2, 2).unwrap(), &leaf(&[&[46, 48, 50]]));

        let ones = BlockMatrix::leaf(ElementGrid::filled(5, 1, Scalar::one()).unwrap());
        let col = BlockMatrix::rblock_from_rows(vec![
            vec![BlockMatrix::leaf(ElementGrid::filled(2, 1, Scalar::one()).unwrap())],
            vec![BlockMatrix::leaf(ElementGrid::filled(3, 1, Scalar::one()).unwrap())],
        ])
        .unwrap();
        let sums = times(&x, &col).unwrap();
        assert!(sums.eq_elements(&leaf(&[&[71], &[84], &[115]])));
        assert!(matches!(times(&x, &ones), Err(BlockError::StructureMismatch(_))));
        assert!(matches!(times(&x, &x), Err(BlockError::DimensionMismatch { .. })));
    }

    #[test]
    fn inner_partition_must_match() {
        let a = BlockMatrix::rblock_from_rows(vec![vec![leaf(&[&[1]]), leaf(&[&[1, 1]])]]).unwrap();
        let b = BlockMatrix::rblock_from_rows(vec![vec![leaf(&[&[1], &[1]])], vec![leaf(&[&[1]])]]).unwrap();
        assert!(matches!(times(&a, &b), Err(BlockError::InnerPartitionMismatch { .. })));
    }

    #[test]
    fn hermitian_transpose() {
        let x = worked_example();
        let t = herm_trans(&x);
        assert_eq!(t.dims(), (5, 3));
        assert_eq!(t.block_dims(), (2, 2));
        assert_eq!(t.block(1, 2).unwrap(), &leaf(&[&[21], &[22]]));
        assert_eq!(herm_trans(&t), x);

        let c = BlockMatrix::scalar(2, Scalar::complex(1, 2)).unwrap();
        assert_eq!(herm_trans(&c), BlockMatrix::scalar(2, Scalar::complex(1, -2)).unwrap());
        let z = herm_trans(&BlockMatrix::zero(2, 3).unwrap());
        assert_eq!((z.kind(), z.dims()), (BlockKind::Zero, (3, 2)));

        let m = BlockMatrix::leaf(
            ElementGrid::from_rows(vec![vec![Scalar::complex(1, 1), Scalar::int(2)]]).unwrap(),
        );
        let mt = herm_trans(&m);
        assert_eq!(mt.elt(1, 1).unwrap(), Scalar::complex(1, -1));
        assert_eq!(mt.elt(2, 1).unwrap(), Scalar::int(2));
    }
}
