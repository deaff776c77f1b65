use thiserror::Error;

use crate::partitions::{Cell, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotPartition(Vec<usize>),

    #[error("incomparable sizes: {0} vs {1}")]
    IncomparableSizes(usize, usize),

    #[error("cell {0} is not in the diagram of {1}")]
    CellOutside(Cell, Partition),

    #[error("cell {b} is not weakly southeast of {a}")]
    NotSoutheast { a: Cell, b: Cell },

    #[error("{0} is not k-bounded for k = {1}")]
    NotKBounded(Partition, usize),

    #[error("{0} is not a {1}-core")]
    NotCore(Partition, usize),

    #[error("{mu} is not dominated by {lambda}: prefix {index} sums to {mu_sum} > {lambda_sum}")]
    NotDominated {
        mu: Partition,
        lambda: Partition,
        index: usize,
        mu_sum: usize,
        lambda_sum: usize,
    },

    #[error("invalid tableau at cell {cell}: {reason}")]
    InvalidTableau { cell: Cell, reason: String },

    #[error("tableau shape {0} is not a partition")]
    ShapeNotPartition(String),

    #[error("residue exhaustion in row {row}: needed {needed} fresh residues, found {found}")]
    ResidueExhaustion { row: usize, needed: usize, found: usize },

    #[error("row filling invariant broken: {0}")]
    RowFill(String),

    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),

    #[error("not in basis span: residual {0}")]
    NotInSpan(String),

    #[error("expansion is not homogeneous")]
    NotHomogeneous,

    #[error("dominance incomparable keys {0} and {1}")]
    NoDominantKey(Partition, Partition),

    #[error("residue {0} out of range for k = {1}")]
    ResidueOutOfRange(usize, usize),

    #[error("invalid affine permutation window {0:?}: {1}")]
    InvalidWindow(Vec<i64>, &'static str),

    #[error("residue set is the full set {{0,...,{0}}}; not cyclically decreasing")]
    FullResidueSet(usize),

    #[error("invalid cylindric shape: {0}")]
    InvalidCylindric(String),

    #[error("cylindric inclusion violated at row {0}")]
    CylindricInclusion(usize),

    #[error("internal symmetry check failed: {0}")]
    Symmetry(String),

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("need n >= {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },
}
