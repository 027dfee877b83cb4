//! Recursive block matrices over exact Gaussian rationals.
//!
//! A [`BlockMatrix`] is a tree whose nodes are implicit zero blocks, scalar
//! multiples of the identity, dense leaf grids, or grids of further block
//! matrices. Arithmetic, inversion and PLU decomposition all work block-wise
//! and return block matrices with the structure of their inputs, never
//! flattening along the way.
//!
//! ```
//! use blockmat::{times, inv, BlockMatrix};
//!
//! let leaf = |r: &[&[i64]]| BlockMatrix::from_ints(r).unwrap();
//! let m = BlockMatrix::rblock_from_rows(vec![
//!     vec![leaf(&[&[0]]), leaf(&[&[1]])],
//!     vec![leaf(&[&[1]]), leaf(&[&[0]])],
//! ])
//! .unwrap();
//! let r = inv(&m).unwrap();
//! assert!(times(&m, &r).unwrap().eq_elements(&BlockMatrix::identity(2).unwrap()));
//! ```

pub mod block;
pub mod error;
pub mod factor;
pub mod grid;
pub mod inverse;
pub mod numeric;
pub mod oracle;
pub mod ring;
pub mod traverse;

pub use block::{BlockGrid, BlockKind, BlockMatrix, Entry, Partition, Payload};
pub use error::{BlockError, Result};
pub use factor::{is_unit_lower, is_upper, plu_decomp, Plu};
pub use grid::ElementGrid;
pub use inverse::{inv, inv_by_mtm, inv_traced, schur_comp, try_inv, InvPath, InvTrace, SchurComplement};
pub use numeric::Scalar;
pub use ring::{herm_trans, minus, neg, plus, scale, times};
pub use traverse::{conform, map_bm, zip_bm};
