//! Coloring partitions and their induced colorings.
//!
//! A piece pairs a decidable region `A_i` with a coloring `F_i` whose codes
//! carry the piece's tag, so the color sets `C_i` are the tag blocks and
//! are disjoint by construction. The induced coloring is `F_i` on `A_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::point::{Coord, PointView};

use super::{need, ColorCode, ConstructError, LazyColoring, ParityColoring};

pub type Membership = Arc<dyn Fn(&dyn PointView) -> Result<bool, ConstructError> + Send + Sync>;

#[derive(Clone)]
pub struct Piece {
    /// Tag of every code in `C_i`.
    pub tag: u64,
    pub contains: Membership,
    pub coloring: Arc<dyn LazyColoring>,
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Piece")
            .field("tag", &self.tag)
            .finish_non_exhaustive()
    }
}

impl Piece {
    /// The piece `{x : x(0) ∈ values}`.
    pub fn by_first_coordinate(
        tag: u64,
        values: BTreeSet<Coord>,
        coloring: Arc<dyn LazyColoring>,
    ) -> Piece {
        Piece {
            tag,
            contains: Arc::new(move |x| Ok(values.contains(&need(x, 0)?))),
            coloring,
        }
    }
}

/// An indexed family of pieces.
pub trait PieceFamily: Send + Sync {
    /// Indices of every piece that could contain `x`, ascending.
    fn candidates(&self, x: &dyn PointView) -> Result<Vec<usize>, ConstructError>;
    fn piece(&self, index: usize) -> Piece;
    /// Membership in every piece depends only on coordinates below this.
    fn membership_bound(&self) -> usize;
}

/// Finitely many pieces, all selected by `x(0)`.
#[derive(Clone, Debug)]
pub struct FinitePartition {
    pieces: Vec<Piece>,
}

impl FinitePartition {
    pub fn new(pieces: Vec<Piece>) -> Self {
        FinitePartition { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }
}

impl PieceFamily for FinitePartition {
    fn candidates(&self, _: &dyn PointView) -> Result<Vec<usize>, ConstructError> {
        Ok((0..self.pieces.len()).collect())
    }

    fn piece(&self, index: usize) -> Piece {
        self.pieces[index].clone()
    }

    fn membership_bound(&self) -> usize {
        1
    }
}

/// `A_i = {x : x(0) ∈ {2i, 2i+1}}` colored by the parity coloring of width
/// `2i+1` with tag `i`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompositeFamily;

impl PieceFamily for CompositeFamily {
    fn candidates(&self, x: &dyn PointView) -> Result<Vec<usize>, ConstructError> {
        Ok(vec![(need(x, 0)? / 2) as usize])
    }

    fn piece(&self, index: usize) -> Piece {
        let i = index as Coord;
        Piece {
            tag: i,
            contains: Arc::new(move |x| Ok(need(x, 0)? / 2 == i)),
            coloring: Arc::new(ParityColoring { k: index, tag: i }),
        }
    }

    fn membership_bound(&self) -> usize {
        1
    }
}

/// A failed coloring-partition property, found on a finite set of points.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(rename_all = "snake_case", tag = "property")]
pub enum PartitionViolation {
    #[error("point {point} lies in no piece")]
    Uncovered { point: String },
    #[error("point {point} lies in pieces {first} and {second}")]
    Overlapping {
        point: String,
        first: usize,
        second: usize,
    },
    #[error("piece {piece} colors {inside} inside and {outside} outside with the same color")]
    Split {
        piece: usize,
        inside: String,
        outside: String,
    },
    #[error("piece {piece} gives {point} a code outside its tag")]
    Foreign { piece: usize, point: String },
    #[error("pieces {first} and {second} share a color")]
    SharedColor { first: usize, second: usize },
}

/// The coloring induced by a partition.
pub struct PartitionColoring<F> {
    family: F,
}

impl<F: PieceFamily> PartitionColoring<F> {
    pub fn new(family: F) -> Self {
        PartitionColoring { family }
    }

    pub fn family(&self) -> &F {
        &self.family
    }

    /// The unique piece containing `x`.
    pub fn locate(&self, x: &dyn PointView) -> Result<usize, ConstructError> {
        let mut found = None;
        for i in self.family.candidates(x)? {
            if (self.family.piece(i).contains)(x)? {
                if let Some(first) = found {
                    return Err(ConstructError::Overlap {
                        point: show(x, self.family.membership_bound()),
                        first,
                        second: i,
                    });
                }
                found = Some(i);
            }
        }
        found.ok_or_else(|| ConstructError::NoPiece(show(x, self.family.membership_bound())))
    }

    /// Checks the partition properties on `points`: each lies in exactly one
    /// piece, no piece coloring puts one color both inside and outside its
    /// piece, codes keep their piece's tag, and traces are disjoint.
    pub fn verify_on<P: PointView + fmt::Display>(
        &self,
        points: &[P],
    ) -> Result<(), ConstructError> {
        let mut home = Vec::with_capacity(points.len());
        for x in points {
            let mut inside = Vec::new();
            for i in self.family.candidates(x)? {
                if (self.family.piece(i).contains)(x)? {
                    inside.push(i);
                }
            }
            match inside[..] {
                [] => {
                    return Err(PartitionViolation::Uncovered {
                        point: x.to_string(),
                    }
                    .into())
                }
                [i] => home.push(i),
                [first, second, ..] => {
                    return Err(PartitionViolation::Overlapping {
                        point: x.to_string(),
                        first,
                        second,
                    }
                    .into())
                }
            }
        }

        let used: BTreeSet<usize> = home.iter().copied().collect();
        let mut owner: BTreeMap<ColorCode, usize> = BTreeMap::new();
        for &i in &used {
            let piece = self.family.piece(i);
            // color of F_i -> a point of A_i carrying it
            let mut trace: BTreeMap<ColorCode, usize> = BTreeMap::new();
            let mut codes = Vec::with_capacity(points.len());
            for (p, x) in points.iter().enumerate() {
                let code = piece.coloring.color(x)?;
                if code.tag != piece.tag {
                    return Err(PartitionViolation::Foreign {
                        piece: i,
                        point: x.to_string(),
                    }
                    .into());
                }
                if home[p] == i {
                    trace.entry(code.clone()).or_insert(p);
                }
                codes.push(code);
            }
            for (p, code) in codes.iter().enumerate() {
                if home[p] != i {
                    if let Some(&q) = trace.get(code) {
                        return Err(PartitionViolation::Split {
                            piece: i,
                            inside: points[q].to_string(),
                            outside: points[p].to_string(),
                        }
                        .into());
                    }
                }
            }
            for code in trace.into_keys() {
                if let Some(&j) = owner.get(&code) {
                    return Err(PartitionViolation::SharedColor {
                        first: j,
                        second: i,
                    }
                    .into());
                }
                owner.insert(code, i);
            }
        }
        Ok(())
    }
}

fn show(x: &dyn PointView, upto: usize) -> String {
    let shown: Vec<String> = (0..upto)
        .map_while(|i| x.coord(i))
        .map(|v| v.to_string())
        .collect();
    format!("({},…)", shown.join(","))
}

impl<F: PieceFamily> LazyColoring for PartitionColoring<F> {
    fn color(&self, x: &dyn PointView) -> Result<ColorCode, ConstructError> {
        let i = self.locate(x)?;
        let piece = self.family.piece(i);
        let code = piece.coloring.color(x)?;
        if code.tag != piece.tag {
            return Err(ConstructError::ForeignColor { piece: i, code });
        }
        Ok(code)
    }

    fn dependency_bound(&self, x: &dyn PointView) -> Result<usize, ConstructError> {
        let i = self.locate(x)?;
        let inner = self.family.piece(i).coloring.dependency_bound(x)?;
        Ok(inner.max(self.family.membership_bound()))
    }
}

/// The composite coloring of `^ωω`: with `i = ⌊x(0)/2⌋`, the color is
/// `(i, (⌊x(0)/2⌋, …, ⌊x(2i)/2⌋, Σ_{j≤2i} x(j) mod 2))`, depending on the
/// first `2i+1` coordinates.
pub fn composite_coloring() -> PartitionColoring<CompositeFamily> {
    PartitionColoring::new(CompositeFamily)
}
