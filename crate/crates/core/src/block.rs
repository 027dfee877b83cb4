//! The recursive block matrix node and its constructors and accessors.
//!
//! A node records its element dimensions `er × ec` and one of four payloads:
//!
//! ```text
//! Zero        implicit all-zero er × ec block, nothing stored
//! ScalarDiag  s · I(er), requires er = ec
//! Leaf        dense er × ec grid of elements
//! RBlock      p × q grid of child block matrices
//! ```
//!
//! An `RBlock` is well formed when every child in a block row has the same
//! `er`, every child in a block column has the same `ec`, and those sizes sum
//! to the node's own `er` and `ec`. The public constructors only produce well
//! formed values; [`BlockMatrix::from_raw`] skips the checks and
//! [`BlockMatrix::validate`] re-establishes them.
//!
//! Block and element indices on this surface are 1-based.

use std::fmt::{self, Write as _};

use crate::error::{BlockError, Result};
use crate::grid::ElementGrid;
use crate::numeric::Scalar;

/// Node kind tag. The derived ordering is the serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    Zero,
    ScalarDiag,
    Leaf,
    RBlock,
}

impl BlockKind {
    /// Document name: `zero`, `scalar`, `matrix` or `rblock`.
    pub fn name(self) -> &'static str {
        match self {
            BlockKind::Zero => "zero",
            BlockKind::ScalarDiag => "scalar",
            BlockKind::Leaf => "matrix",
            BlockKind::RBlock => "rblock",
        }
    }

    /// Single-letter label used by [`BlockMatrix::format_structure`].
    pub fn symbol(self) -> char {
        match self {
            BlockKind::Zero => 'Z',
            BlockKind::ScalarDiag => 'S',
            BlockKind::Leaf => 'M',
            BlockKind::RBlock => 'R',
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sizes of consecutive row (or column) bands of a block matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(BlockError::Conformability {
                kind: "partition",
                reason: format!("sizes {sizes:?} must be non-empty and positive"),
            });
        }
        Ok(Partition(sizes))
    }

    pub fn singleton(n: usize) -> Self {
        Partition(vec![n])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Starting offset of each band.
    pub fn offsets(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().scan(0, |acc, &n| {
            let start = *acc;
            *acc += n;
            Some(start)
        })
    }

    /// Band index and local offset of a 0-based position.
    pub(crate) fn locate(&self, mut pos: usize) -> (usize, usize) {
        for (band, &n) in self.0.iter().enumerate() {
            if pos < n {
                return (band, pos);
            }
            pos -= n;
        }
        unreachable!("position beyond partition total")
    }
}

/// `brows × bcols` row-major grid of child block matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockGrid {
    brows: usize,
    bcols: usize,
    children: Vec<BlockMatrix>,
}

impl BlockGrid {
    pub fn new(brows: usize, bcols: usize, children: Vec<BlockMatrix>) -> Result<Self> {
        if brows == 0 || bcols == 0 {
            return Err(BlockError::InvalidDimension { rows: brows, cols: bcols });
        }
        if children.len() != brows * bcols {
            return Err(BlockError::EntryCount { expected: brows * bcols, got: children.len() });
        }
        Ok(BlockGrid { brows, bcols, children })
    }

    pub fn from_rows(rows: Vec<Vec<BlockMatrix>>) -> Result<Self> {
        let brows = rows.len();
        let bcols = rows.first().map_or(0, Vec::len);
        if brows == 0 || bcols == 0 {
            return Err(BlockError::InvalidDimension { rows: brows, cols: bcols });
        }
        let mut children = Vec::with_capacity(brows * bcols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != bcols {
                return Err(BlockError::Ragged { row: i + 1, expected: bcols, got: row.len() });
            }
            children.extend(row);
        }
        Ok(BlockGrid { brows, bcols, children })
    }

    pub(crate) fn from_fn(
        brows: usize,
        bcols: usize,
        mut f: impl FnMut(usize, usize) -> Result<BlockMatrix>,
    ) -> Result<Self> {
        let mut children = Vec::with_capacity(brows * bcols);
        for i in 0..brows {
            for j in 0..bcols {
                children.push(f(i, j)?);
            }
        }
        Ok(BlockGrid { brows, bcols, children })
    }

    pub fn brows(&self) -> usize {
        self.brows
    }

    pub fn bcols(&self) -> usize {
        self.bcols
    }

    pub fn children(&self) -> &[BlockMatrix] {
        &self.children
    }

    /// 0-based child access.
    pub fn get(&self, i: usize, j: usize) -> Option<&BlockMatrix> {
        (i < self.brows && j < self.bcols).then(|| &self.children[i * self.bcols + j])
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[BlockMatrix]> {
        self.children.chunks(self.bcols)
    }

    /// Row band sizes read off the first block column.
    pub fn row_partition(&self) -> Partition {
        Partition((0..self.brows).map(|i| self.children[i * self.bcols].er).collect())
    }

    /// Column band sizes read off the first block row.
    pub fn col_partition(&self) -> Partition {
        Partition(self.children[..self.bcols].iter().map(|c| c.ec).collect())
    }

    /// Checks block-row/block-column consistency and returns the summed
    /// element dimensions.
    fn consistent_dims(&self) -> Result<(usize, usize)> {
        for i in 0..self.brows {
            let er = self.children[i * self.bcols].er;
            for j in 0..self.bcols {
                let child = &self.children[i * self.bcols + j];
                if child.er != er {
                    return Err(BlockError::BlockShape {
                        row: i + 1,
                        col: j + 1,
                        reason: format!("er {} differs from block-row er {er}", child.er),
                    });
                }
                let ec = self.children[j].ec;
                if child.ec != ec {
                    return Err(BlockError::BlockShape {
                        row: i + 1,
                        col: j + 1,
                        reason: format!("ec {} differs from block-column ec {ec}", child.ec),
                    });
                }
            }
        }
        Ok((self.row_partition().total(), self.col_partition().total()))
    }
}

/// Kind-dependent payload of a node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Payload {
    Zero,
    ScalarDiag(Scalar),
    Leaf(ElementGrid),
    RBlock(BlockGrid),
}

/// A recursive block matrix node. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockMatrix {
    er: usize,
    ec: usize,
    payload: Payload,
}

/// Entry of the list-of-lists constructor [`BlockMatrix::bm`].
#[derive(Clone, Debug)]
pub enum Entry {
    Scalar(Scalar),
    Block(BlockMatrix),
}

impl From<Scalar> for Entry {
    fn from(s: Scalar) -> Self {
        Entry::Scalar(s)
    }
}

impl From<i64> for Entry {
    fn from(n: i64) -> Self {
        Entry::Scalar(Scalar::int(n))
    }
}

impl From<BlockMatrix> for Entry {
    fn from(b: BlockMatrix) -> Self {
        Entry::Block(b)
    }
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        Err(BlockError::InvalidDimension { rows, cols })
    } else {
        Ok(())
    }
}

impl BlockMatrix {
    pub fn zero(er: usize, ec: usize) -> Result<Self> {
        check_dims(er, ec)?;
        Ok(BlockMatrix { er, ec, payload: Payload::Zero })
    }

    /// `s · I(n)`.
    pub fn scalar(n: usize, s: Scalar) -> Result<Self> {
        check_dims(n, n)?;
        Ok(BlockMatrix { er: n, ec: n, payload: Payload::ScalarDiag(s) })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::scalar(n, Scalar::one())
    }

    pub fn leaf(grid: ElementGrid) -> Self {
        BlockMatrix { er: grid.rows(), ec: grid.cols(), payload: Payload::Leaf(grid) }
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        ElementGrid::from_ints(rows).map(Self::leaf)
    }

    pub fn rblock(grid: BlockGrid) -> Result<Self> {
        let (er, ec) = grid.consistent_dims()?;
        Ok(BlockMatrix { er, ec, payload: Payload::RBlock(grid) })
    }

    pub fn rblock_from_rows(rows: Vec<Vec<BlockMatrix>>) -> Result<Self> {
        Self::rblock(BlockGrid::from_rows(rows)?)
    }

    /// List-of-lists constructor: a `Leaf` when every entry is a scalar, an
    /// `RBlock` when every entry is a block matrix, an error otherwise.
    pub fn bm(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let all_blocks = rows.iter().flatten().all(|e| matches!(e, Entry::Block(_)));
        let all_scalars = rows.iter().flatten().all(|e| matches!(e, Entry::Scalar(_)));
        if all_blocks && !all_scalars {
            let rows = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|e| match e {
                            Entry::Block(b) => b,
                            Entry::Scalar(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            Self::rblock_from_rows(rows)
        } else if all_scalars {
            let rows = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|e| match e {
                            Entry::Scalar(s) => s,
                            Entry::Block(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            ElementGrid::from_rows(rows).map(Self::leaf)
        } else {
            Err(BlockError::MixedEntries)
        }
    }

    /// Assemble a node without any well-formedness checks. Intended for
    /// deserializers and tests; run [`validate`](Self::validate) afterwards.
    pub fn from_raw(er: usize, ec: usize, payload: Payload) -> Self {
        BlockMatrix { er, ec, payload }
    }

    pub fn kind(&self) -> BlockKind {
        match self.payload {
            Payload::Zero => BlockKind::Zero,
            Payload::ScalarDiag(_) => BlockKind::ScalarDiag,
            Payload::Leaf(_) => BlockKind::Leaf,
            Payload::RBlock(_) => BlockKind::RBlock,
        }
    }

    /// Low-level view of the payload, for traversals that need to dispatch on
    /// the representation.
    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn er(&self) -> usize {
        self.er
    }

    pub fn ec(&self) -> usize {
        self.ec
    }

    /// Element dimensions `(er, ec)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.er, self.ec)
    }

    pub fn is_square(&self) -> bool {
        self.er == self.ec
    }

    /// Block grid dimensions; `(1, 1)` for every kind but `RBlock`.
    pub fn block_dims(&self) -> (usize, usize) {
        match &self.payload {
            Payload::RBlock(g) => (g.brows, g.bcols),
            _ => (1, 1),
        }
    }

    pub fn row_partition(&self) -> Partition {
        match &self.payload {
            Payload::RBlock(g) => g.row_partition(),
            _ => Partition::singleton(self.er),
        }
    }

    pub fn col_partition(&self) -> Partition {
        match &self.payload {
            Payload::RBlock(g) => g.col_partition(),
            _ => Partition::singleton(self.ec),
        }
    }

    /// Block `(r, c)`, 1-based. Non-`RBlock` nodes are their own single block.
    pub fn block(&self, r: usize, c: usize) -> Result<&BlockMatrix> {
        let (brows, bcols) = self.block_dims();
        if r == 0 || c == 0 || r > brows || c > bcols {
            return Err(BlockError::IndexOutOfRange { row: r, col: c, rows: brows, cols: bcols });
        }
        match &self.payload {
            Payload::RBlock(g) => Ok(&g.children[(r - 1) * g.bcols + (c - 1)]),
            _ => Ok(self),
        }
    }

    /// Element `(r, c)` of the unpartitioned matrix, 1-based.
    pub fn elt(&self, r: usize, c: usize) -> Result<Scalar> {
        if r == 0 || c == 0 || r > self.er || c > self.ec {
            return Err(BlockError::IndexOutOfRange { row: r, col: c, rows: self.er, cols: self.ec });
        }
        Ok(self.elt0(r - 1, c - 1))
    }

    /// 0-based element read; caller guarantees the bounds.
    pub(crate) fn elt0(&self, i: usize, j: usize) -> Scalar {
        match &self.payload {
            Payload::Zero => Scalar::zero(),
            Payload::ScalarDiag(s) => {
                if i == j {
                    s.clone()
                } else {
                    Scalar::zero()
                }
            }
            Payload::Leaf(g) => g[(i, j)].clone(),
            Payload::RBlock(g) => {
                let (bi, li) = g.row_partition().locate(i);
                let (bj, lj) = g.col_partition().locate(j);
                g.children[bi * g.bcols + bj].elt0(li, lj)
            }
        }
    }

    /// Recursively check every well-formedness rule. The error names the
    /// path to the first violating node, e.g. `root/(2,1)/(1,1)`.
    pub fn validate(&self) -> Result<()> {
        self.validate_at("root")
    }

    fn validate_at(&self, path: &str) -> Result<()> {
        let fail = |reason: String| Err(BlockError::Malformed { path: path.to_string(), reason });
        if self.er == 0 || self.ec == 0 {
            return fail(format!("dimensions {}×{} must be positive", self.er, self.ec));
        }
        match &self.payload {
            Payload::Zero => Ok(()),
            Payload::ScalarDiag(_) if self.er != self.ec => {
                fail(format!("scalar block must be square, got {}×{}", self.er, self.ec))
            }
            Payload::ScalarDiag(_) => Ok(()),
            Payload::Leaf(g) if g.dims() != (self.er, self.ec) => fail(format!(
                "matrix payload is {}×{} but node is {}×{}",
                g.rows(),
                g.cols(),
                self.er,
                self.ec
            )),
            Payload::Leaf(_) => Ok(()),
            Payload::RBlock(g) => {
                if g.brows == 0 || g.bcols == 0 || g.children.len() != g.brows * g.bcols {
                    return fail("block grid is empty or has the wrong child count".into());
                }
                // Children first so the deepest offender is reported.
                for i in 0..g.brows {
                    for j in 0..g.bcols {
                        let child_path = format!("{path}/({},{})", i + 1, j + 1);
                        g.children[i * g.bcols + j].validate_at(&child_path)?;
                    }
                }
                let (er, ec) = match g.consistent_dims() {
                    Ok(d) => d,
                    Err(e) => return fail(e.to_string()),
                };
                if (er, ec) != (self.er, self.ec) {
                    return fail(format!(
                        "children sum to {er}×{ec} but node is {}×{}",
                        self.er, self.ec
                    ));
                }
                Ok(())
            }
        }
    }

    /// Indented tree of node labels, one node per line, children in row-major
    /// order:
    ///
    /// ```text
    /// R 3×5
    ///   M 2×2
    ///   M 2×3
    ///   M 1×2
    ///   M 1×3
    /// ```
    pub fn format_structure(&self) -> String {
        let mut out = String::new();
        self.write_structure(&mut out, 0);
        out.pop();
        out
    }

    fn write_structure(&self, out: &mut String, depth: usize) {
        let _ = writeln!(out, "{:indent$}{} {}×{}", "", self.kind().symbol(), self.er, self.ec, indent = 2 * depth);
        if let Payload::RBlock(g) = &self.payload {
            for child in &g.children {
                child.write_structure(out, depth + 1);
            }
        }
    }

    /// Element-wise equality that ignores block structure and kinds.
    pub fn eq_elements(&self, other: &BlockMatrix) -> bool {
        self.dims() == other.dims()
            && (0..self.er).all(|i| (0..self.ec).all(|j| self.elt0(i, j) == other.elt0(i, j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(rows: &[&[i64]]) -> BlockMatrix {
        BlockMatrix::from_ints(rows).unwrap()
    }

    /// 3×5 matrix split into blocks 2×2, 2×3 over 1×2, 1×3.
    fn worked_example() -> BlockMatrix {
        BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[11, 12], &[13, 14]]), leaf(&[&[15, 16, 17], &[18, 19, 20]])],
            vec![leaf(&[&[21, 22]]), leaf(&[&[23, 24, 25]])],
        ])
        .unwrap()
    }

    #[test]
    fn constructors() {
        let z = BlockMatrix::zero(2, 3).unwrap();
        assert_eq!((z.kind(), z.dims()), (BlockKind::Zero, (2, 3)));
        assert!(matches!(BlockMatrix::zero(0, 1), Err(BlockError::InvalidDimension { rows: 0, cols: 1 })));

        let s = BlockMatrix::scalar(3, Scalar::int(5)).unwrap();
        assert_eq!(s.dims(), (3, 3));
        assert_eq!(s.elt(2, 2).unwrap(), Scalar::int(5));
        assert_eq!(BlockMatrix::scalar(4, Scalar::int(7)).unwrap().elt(2, 3).unwrap(), Scalar::zero());
        assert!(BlockMatrix::scalar(0, Scalar::one()).is_err());
        let s0 = BlockMatrix::scalar(2, Scalar::zero()).unwrap();
        assert_eq!(s0.kind(), BlockKind::ScalarDiag);
        assert!(s0.eq_elements(&BlockMatrix::zero(2, 2).unwrap()));

        let m = leaf(&[&[11, 12], &[13, 14]]);
        assert_eq!((m.kind(), m.dims()), (BlockKind::Leaf, (2, 2)));
        assert_eq!(leaf(&[&[21, 22, 23]]).elt(1, 2).unwrap(), Scalar::int(22));
    }

    #[test]
    fn worked_example_dims_and_elements() {
        let b = worked_example();
        assert_eq!(b.kind(), BlockKind::RBlock);
        assert_eq!(b.dims(), (3, 5));
        assert_eq!(b.block_dims(), (2, 2));
        assert_eq!(b.elt(2, 3).unwrap(), Scalar::int(18));
        assert_eq!(b.elt(3, 5).unwrap(), Scalar::int(25));
        assert_eq!(b.block(2, 1).unwrap(), &leaf(&[&[21, 22]]));
        assert!(b.validate().is_ok());
        assert_eq!(b.row_partition().sizes(), &[2, 1]);
        assert_eq!(b.col_partition().sizes(), &[2, 3]);
    }

    #[test]
    fn rblock_of_zeros() {
        let z = |r, c| BlockMatrix::zero(r, c).unwrap();
        let b = BlockMatrix::rblock_from_rows(vec![vec![z(1, 1), z(1, 2)], vec![z(2, 1), z(2, 2)]]).unwrap();
        assert_eq!((b.kind(), b.dims()), (BlockKind::RBlock, (3, 3)));
    }

    #[test]
    fn rblock_shape_errors() {
        let err = BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[1, 2], &[3, 4]]), leaf(&[&[1, 2, 3]])],
            vec![leaf(&[&[1, 2]]), leaf(&[&[1, 2, 3]])],
        ])
        .unwrap_err();
        assert!(matches!(err, BlockError::BlockShape { row: 1, col: 2, .. }), "{err}");

        let err = BlockMatrix::rblock_from_rows(vec![
            vec![leaf(&[&[1, 2]]), leaf(&[&[1]])],
            vec![leaf(&[&[1]]), leaf(&[&[1]])],
        ])
        .unwrap_err();
        assert!(matches!(err, BlockError::BlockShape { row: 2, col: 1, .. }), "{err}");
    }

    #[test]
    fn bm_dispatch() {
        let m = BlockMatrix::bm(vec![vec![1.into(), 2.into()], vec![3.into(), 4.into()]]).unwrap();
        assert_eq!(m.kind(), BlockKind::Leaf);
        let a = leaf(&[&[1]]);
        let r = BlockMatrix::bm(vec![
            vec![a.clone().into(), a.clone().into()],
            vec![a.clone().into(), a.clone().into()],
        ])
        .unwrap();
        assert_eq!((r.kind(), r.dims()), (BlockKind::RBlock, (2, 2)));
        assert!(matches!(
            BlockMatrix::bm(vec![vec![1.into(), a.into()]]),
            Err(BlockError::MixedEntries)
        ));
    }

    #[test]
    fn accessors_on_structureless_kinds() {
        let m = leaf(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.block_dims(), (1, 1));
        assert_eq!(m.block(1, 1).unwrap(), &m);
        assert!(m.block(0, 1).is_err());
        assert!(m.block(1, 2).is_err());
        assert!(m.elt(3, 1).is_err());
        assert_eq!(BlockMatrix::zero(9, 9).unwrap().block_dims(), (1, 1));
        assert_eq!(BlockMatrix::zero(4, 1).unwrap().dims(), (4, 1));
        let s = BlockMatrix::scalar(2, Scalar::int(7)).unwrap();
        assert_eq!(s.payload(), &Payload::ScalarDiag(Scalar::int(7)));
    }

    #[test]
    fn validate_reports_violations() {
        let forged = BlockMatrix::from_raw(2, 3, Payload::ScalarDiag(Scalar::one()));
        assert!(matches!(forged.validate(), Err(BlockError::Malformed { ref path, .. }) if path == "root"));

        let ok = worked_example();
        let Payload::RBlock(g) = ok.payload().clone() else { unreachable!() };
        let wrong_total = BlockMatrix::from_raw(3, 6, Payload::RBlock(g.clone()));
        assert!(matches!(wrong_total.validate(), Err(BlockError::Malformed { ref path, .. }) if path == "root"));

        let mut children = g.children().to_vec();
        children[3] = BlockMatrix::from_raw(1, 3, Payload::Leaf(ElementGrid::from_ints(&[[1, 2]]).unwrap()));
        let bad_child = BlockMatrix::from_raw(3, 5, Payload::RBlock(BlockGrid::new(2, 2, children).unwrap()));
        let err = bad_child.validate().unwrap_err();
        assert!(matches!(err, BlockError::Malformed { ref path, .. } if path == "root/(2,2)"), "{err}");
    }

    #[test]
    fn structure_rendering() {
        assert_eq!(BlockMatrix::zero(2, 2).unwrap().format_structure(), "Z 2×2");
        assert_eq!(
            worked_example().format_structure(),
            "R 3×5\n  M 2×2\n  M 2×3\n  M 1×2\n  M 1×3"
        );
        let z = |n| BlockMatrix::zero(n, n).unwrap();
        let r = BlockMatrix::rblock_from_rows(vec![
            vec![z(2), BlockMatrix::scalar(2, Scalar::int(3)).unwrap()],
            vec![z(2), z(2)],
        ])
        .unwrap();
        assert_eq!(r.format_structure(), "R 4×4\n  Z 2×2\n  S 2×2\n  Z 2×2\n  Z 2×2");
        let deep = BlockMatrix::rblock_from_rows(vec![vec![r.clone()]]).unwrap();
        assert_eq!(deep.format_structure(), "R 4×4\n  R 4×4\n    Z 2×2\n    S 2×2\n    Z 2×2\n    Z 2×2");
    }

    #[test]
    fn element_equality() {
        assert!(BlockMatrix::zero(2, 2).unwrap().eq_elements(&leaf(&[&[0, 0], &[0, 0]])));
        assert!(BlockMatrix::identity(2).unwrap().eq_elements(&leaf(&[&[1, 0], &[0, 1]])));
        assert!(!BlockMatrix::identity(2).unwrap().eq_elements(&leaf(&[&[1, 0], &[1, 1]])));
        assert!(!BlockMatrix::zero(2, 3).unwrap().eq_elements(&BlockMatrix::zero(3, 2).unwrap()));
        let b = worked_example();
        assert!(b.eq_elements(&b));
    }
}
