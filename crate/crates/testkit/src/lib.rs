//! Seeded random block matrices for tests.
//!
//! Shapes come from *levelled* partition trees: every leaf of a tree of depth
//! `d` sits at depth `d`. Two matrices built over trees of equal depth agree
//! on which positions are grids and which are dense, so sums and products of
//! conformable operands never hit a leaf-versus-grid mismatch. `Zero` nodes
//! may replace any position; `ScalarDiag` nodes only replace positions whose
//! row and column trees are identical.

use blockmat::oracle;
use blockmat::{BlockMatrix, ElementGrid, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};

/// Partition tree of one axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf(usize),
    Split(Vec<Tree>),
}

impl Tree {
    pub fn size(&self) -> usize {
        match self {
            Tree::Leaf(n) => *n,
            Tree::Split(parts) => parts.iter().map(Tree::size).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Split(parts) => 1 + parts[0].depth(),
        }
    }

    /// Top-level band sizes.
    pub fn top_sizes(&self) -> Vec<usize> {
        match self {
            Tree::Leaf(n) => vec![*n],
            Tree::Split(parts) => parts.iter().map(Tree::size).collect(),
        }
    }
}

/// Element distribution: `num/den` with `|num| ≤ max_num`, `1 ≤ den ≤ max_den`.
#[derive(Clone, Debug)]
pub struct EntryDist {
    pub max_num: i64,
    pub max_den: i64,
    /// Probability of an extra imaginary part drawn from the same range.
    pub complex_prob: f64,
    /// Probability of forcing an exact zero.
    pub zero_prob: f64,
}

impl EntryDist {
    /// Rationals with numerator and denominator bounded by 100.
    pub fn rational100() -> Self {
        EntryDist { max_num: 100, max_den: 100, complex_prob: 0.0, zero_prob: 0.1 }
    }

    /// Integers in `-2..=2` with many zeros; singular blocks are common.
    pub fn sparse_small() -> Self {
        EntryDist { max_num: 2, max_den: 1, complex_prob: 0.0, zero_prob: 0.4 }
    }

    pub fn with_complex(mut self, p: f64) -> Self {
        self.complex_prob = p;
        self
    }
}

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub zero_prob: f64,
    pub scalar_prob: f64,
    /// Upper bound on the number of bands a tree node splits into.
    pub max_parts: usize,
    pub entries: EntryDist,
}

impl GenConfig {
    /// All four kinds, grids up to 3×3.
    pub fn mixed(entries: EntryDist) -> Self {
        GenConfig { zero_prob: 0.15, scalar_prob: 0.15, max_parts: 3, entries }
    }

    /// Grids of at most 2×2, the shapes inversion and PLU handle.
    pub fn two_way(entries: EntryDist) -> Self {
        GenConfig { zero_prob: 0.1, scalar_prob: 0.1, max_parts: 2, entries }
    }
}

pub struct MatrixGen {
    rng: StdRng,
    pub cfg: GenConfig,
}

impl MatrixGen {
    pub fn new(seed: u64, cfg: GenConfig) -> Self {
        MatrixGen { rng: StdRng::seed_from_u64(seed), cfg }
    }

    pub fn rng(&mut self) -> &mut StdRng {
        &mut self.rng
    }

    fn rational(&mut self) -> BigRational {
        let d = &self.cfg.entries;
        let (max_num, max_den) = (d.max_num, d.max_den);
        let num = self.rng.gen_range(-max_num..=max_num);
        let den = self.rng.gen_range(1..=max_den);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn scalar(&mut self) -> Scalar {
        if self.rng.gen_bool(self.cfg.entries.zero_prob) {
            return Scalar::zero();
        }
        let re = self.rational();
        if self.rng.gen_bool(self.cfg.entries.complex_prob) {
            let im = self.rational();
            Scalar::new(re, im)
        } else {
            Scalar::real(re)
        }
    }

    pub fn grid(&mut self, rows: usize, cols: usize) -> ElementGrid {
        let entries = (0..rows * cols).map(|_| self.scalar()).collect();
        ElementGrid::new(rows, cols, entries).expect("positive dims")
    }

    /// Levelled tree of total size `n` and exactly `depth` split levels
    /// (a level may split into a single band).
    pub fn tree(&mut self, n: usize, depth: usize) -> Tree {
        if depth == 0 {
            return Tree::Leaf(n);
        }
        let k = self.rng.gen_range(1..=n.min(self.cfg.max_parts));
        let mut cuts: Vec<usize> = sample(&mut self.rng, n - 1, k - 1).into_iter().map(|c| c + 1).collect();
        cuts.sort_unstable();
        cuts.push(n);
        let mut prev = 0;
        let parts = cuts
            .into_iter()
            .map(|c| {
                let t = self.tree(c - prev, depth - 1);
                prev = c;
                t
            })
            .collect();
        Tree::Split(parts)
    }

    /// Random block matrix over the given row and column trees.
    pub fn matrix(&mut self, rows: &Tree, cols: &Tree) -> BlockMatrix {
        let u: f64 = self.rng.gen();
        if u < self.cfg.zero_prob {
            return BlockMatrix::zero(rows.size(), cols.size()).unwrap();
        }
        if rows == cols && u < self.cfg.zero_prob + self.cfg.scalar_prob {
            let s = self.scalar();
            return BlockMatrix::scalar(rows.size(), s).unwrap();
        }
        match (rows, cols) {
            (Tree::Leaf(r), Tree::Leaf(c)) => BlockMatrix::leaf(self.grid(*r, *c)),
            (Tree::Split(rs), Tree::Split(cs)) => {
                let children = rs.iter().map(|r| cs.iter().map(|c| self.matrix(r, c)).collect()).collect();
                BlockMatrix::rblock_from_rows(children).unwrap()
            }
            _ => panic!("row and column trees must have equal depth"),
        }
    }

    /// Square matrix with identical row and column trees.
    pub fn square(&mut self, n: usize, depth: usize) -> BlockMatrix {
        let t = self.tree(n, depth);
        self.matrix(&t, &t)
    }

    /// Square matrix whose root is a grid (`depth ≥ 1`, never `Zero` or
    /// `ScalarDiag` at the root).
    pub fn square_rblock(&mut self, n: usize, depth: usize) -> BlockMatrix {
        assert!(depth >= 1);
        loop {
            let m = self.square(n, depth);
            if m.kind() == blockmat::BlockKind::RBlock {
                return m;
            }
        }
    }

    /// Rejection-sample `make` until `accept` holds.
    pub fn until<T>(&mut self, mut make: impl FnMut(&mut Self) -> T, accept: impl Fn(&T) -> bool) -> T {
        loop {
            let v = make(self);
            if accept(&v) {
                return v;
            }
        }
    }
}

pub fn det(m: &BlockMatrix) -> Scalar {
    oracle::dense_det(&oracle::flatten(m)).expect("square")
}

pub fn is_invertible(m: &BlockMatrix) -> bool {
    m.is_square() && !det(m).is_zero()
}

/// All leading principal minors are nonzero.
pub fn has_regular_minors(m: &BlockMatrix) -> bool {
    m.is_square() && oracle::leading_minors(&oracle::flatten(m)).expect("square").iter().all(|d| !d.is_zero())
}
