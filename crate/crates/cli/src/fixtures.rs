//! Fixed matrices used by `selftest` and the test suites.

use blockmat::{BlockMatrix, Entry, Scalar};

/// The 3×5 example split 2+1 by rows and 2+3 by columns.
pub fn worked_example() -> BlockMatrix {
    let leaf = |rows: &[&[i64]]| BlockMatrix::from_ints(rows).expect("rectangular");
    BlockMatrix::rblock_from_rows(vec![
        vec![leaf(&[&[11, 12], &[13, 14]]), leaf(&[&[15, 16, 17], &[18, 19, 20]])],
        vec![leaf(&[&[21, 22]]), leaf(&[&[23, 24, 25]])],
    ])
    .expect("consistent partition")
}

/// Flattened layout of [`worked_example`].
pub const WORKED_EXAMPLE_FLAT: [[i64; 5]; 3] =
    [[11, 12, 15, 16, 17], [13, 14, 18, 19, 20], [21, 22, 23, 24, 25]];

/// Invertible 4×4 matrix in 2×2 blocks, each block singular.
pub fn all_singular_blocks() -> BlockMatrix {
    let leaf = |rows: &[[i64; 2]; 2]| Entry::from(BlockMatrix::from_ints(rows).expect("rectangular"));
    BlockMatrix::bm(vec![
        vec![leaf(&[[1, 2], [2, 4]]), leaf(&[[0, 1], [0, 0]])],
        vec![leaf(&[[0, 0], [1, 1]]), leaf(&[[1, 0], [3, 0]])],
    ])
    .expect("consistent partition")
}

/// Mixed-kind 4×4 matrix whose leading minors are 2, 6, 30 and 90.
pub fn plu_example() -> BlockMatrix {
    BlockMatrix::bm(vec![
        vec![
            BlockMatrix::from_ints(&[[2, 1], [4, 5]]).expect("rectangular").into(),
            BlockMatrix::identity(2).expect("positive").into(),
        ],
        vec![
            BlockMatrix::from_ints(&[[0, 3], [1, 0]]).expect("rectangular").into(),
            BlockMatrix::scalar(2, Scalar::int(3)).expect("positive").into(),
        ],
    ])
    .expect("consistent partition")
}
