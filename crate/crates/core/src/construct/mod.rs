//! Constructions: trivial and parity colorings, cylinder extension,
//! recoloring, partial-coloring extension, coloring partitions, the
//! composite coloring of `^ωω`, almost-disjoint families and minimization.

mod code;
mod descriptor;
mod family;
mod lazy;
mod minimize;
mod parity;
mod partial;
mod partition;
mod trivial;

use thiserror::Error;

use crate::analysis::AnalysisError;
use crate::perm::PermutationError;
use crate::point::{FinitePoint, PointError};
use crate::table::{Color, TableError};

pub use code::{
    fold, in_b, pair, rank_in_b, rank_in_b_with_budget, ColorCode, RankError, RANK_BUDGET,
};
pub use descriptor::{Descriptor, PieceDescriptor};
pub use family::{almost_disjoint_family, branch_family, disagreement_start};
pub use lazy::{materialize, Cylinder, LazyColoring, Materialized, TableColoring};
pub use minimize::{minimize, Minimized};
pub use parity::{parity_coloring, parity_table, ParityColoring};
pub use partial::extend_partial;
pub use partition::{
    composite_coloring, CompositeFamily, FinitePartition, Membership, PartitionColoring,
    PartitionViolation, Piece, PieceFamily,
};
pub use trivial::{cylinder_extend_table, recolor, trivial};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Point(#[from] PointError),
    #[error(transparent)]
    Permutation(#[from] PermutationError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error("the point has no coordinate {index}")]
    MissingCoordinate { index: usize },
    #[error("coordinate {index} is {value}, outside 0..{kappa}")]
    CoordinateOutOfRange {
        index: usize,
        value: u64,
        kappa: usize,
    },
    #[error("truncation m={0} must be even and positive")]
    OddTruncation(usize),
    #[error("trivial colorings need mu = kappa, got mu={mu}, kappa={kappa}")]
    MuNotKappa { mu: usize, kappa: usize },
    #[error("coordinate {coordinate} is not below lambda={lambda}")]
    CoordinateIndex { coordinate: usize, lambda: usize },
    #[error("a cylinder needs at least one coordinate")]
    EmptyCoordinates,
    #[error("coordinate list must be strictly increasing")]
    UnsortedCoordinates,
    #[error("color map has {found} entries for {expected} colors")]
    ColorMapLength { found: usize, expected: usize },
    #[error("partial coloring is not proper: {first} and {second} are totally different and share color {color}")]
    PartialNotProper {
        first: FinitePoint,
        second: FinitePoint,
        color: Color,
    },
    #[error("point {0} lies in no piece")]
    NoPiece(String),
    #[error("point {point} lies in pieces {first} and {second}")]
    Overlap {
        point: String,
        first: usize,
        second: usize,
    },
    #[error("piece {piece} produced code {code} outside its tag")]
    ForeignColor { piece: usize, code: ColorCode },
    #[error(transparent)]
    Partition(#[from] PartitionViolation),
    #[error("{t} branches requested but depth {m} only has {available}")]
    TooManyBranches { m: usize, t: usize, available: u128 },
    #[error("depth {0} is too large for 64-bit codes")]
    DepthTooLarge(usize),
    #[error("branch {index} has length {found}, expected {expected}")]
    BranchLength {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("branches {first} and {second} coincide")]
    DuplicateBranch { first: usize, second: usize },
    #[error("descriptor needs a space signature")]
    NeedsSignature,
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

/// Reads coordinate `index`, failing on points that are too short.
pub(crate) fn need(x: &dyn crate::point::PointView, index: usize) -> Result<u64, ConstructError> {
    x.coord(index)
        .ok_or(ConstructError::MissingCoordinate { index })
}
