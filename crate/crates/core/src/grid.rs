use std::ops::Index;

use crate::error::{BlockError, Result};
use crate::numeric::Scalar;

/// Dense row-major `rows × cols` array of scalars. Both counts are at least 1.
///
/// Indexing on the grid itself is 0-based (`grid[(i, j)]`); the block matrix
/// accessors are the 1-based public surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementGrid {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ElementGrid {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(BlockError::InvalidDimension { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(BlockError::EntryCount { expected: rows * cols, got: entries.len() });
        }
        Ok(ElementGrid { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(BlockError::InvalidDimension { rows: nrows, cols: ncols });
        }
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(BlockError::Ragged { row: i + 1, expected: ncols, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(ElementGrid { rows: nrows, cols: ncols, entries })
    }

    /// Convenience for literals in tests and examples.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter().map(|r| r.as_ref().iter().map(|&v| Scalar::int(v)).collect()).collect(),
        )
    }

    pub fn filled(rows: usize, cols: usize, value: Scalar) -> Result<Self> {
        Self::new(rows, cols, vec![value; rows * cols])
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ElementGrid { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        (i < self.rows && j < self.cols).then(|| &self.entries[i * self.cols + j])
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.cols)
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }
}

impl Index<(usize, usize)> for ElementGrid {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "grid index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }
}
