//! Points of function spaces and the difference relations between them.
//!
//! A [`FinitePoint`] is an element of `^λκ` for finite `λ`. A [`TailPoint`]
//! is an eventually constant element of `^ωω`, stored as a finite prefix and
//! a constant tail. On both, the difference set `Δ(x, y)` is exactly
//! computable: a plain finite set for finite points and a [`CoSet`] for tail
//! points.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A single coordinate value.
pub type Coord = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("points live in different spaces (lengths {left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} is outside the index set of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("coordinate {index} has value {value}, expected a value below {kappa}")]
    CoordinateOutOfRange {
        index: usize,
        value: Coord,
        kappa: Coord,
    },
    #[error("malformed point {0:?}")]
    Malformed(String),
}

/// Read access to the coordinates of a point, regardless of representation.
///
/// `coord` returns `None` past the end of a finite point.
pub trait PointView {
    fn coord(&self, index: usize) -> Option<Coord>;
}

/// How two points relate on an index set `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `Δ(x, y) ∩ A = ∅`. Reported for empty `A` as well.
    Coincide,
    /// `A ⊆ Δ(x, y)`.
    TotallyDifferentOn,
    Neither,
}

/// Operations shared by both point representations.
pub trait Point: Sized {
    /// The index-set type that `delta` produces and `relation_on` consumes.
    type IndexSet;

    /// The set of coordinates where `self` and `other` differ.
    fn delta(&self, other: &Self) -> Result<Self::IndexSet, PointError>;

    /// `Δ(x, y)` is the whole index set.
    fn totally_different(&self, other: &Self) -> Result<bool, PointError>;

    fn relation_on(&self, other: &Self, on: &Self::IndexSet) -> Result<Relation, PointError>;
}

/// An element of `^λκ` with `λ` finite.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinitePoint(Vec<Coord>);

impl FinitePoint {
    pub fn new(coords: Vec<Coord>) -> Self {
        FinitePoint(coords)
    }

    /// The constant function `c_α` on `λ` coordinates.
    pub fn constant(lambda: usize, value: Coord) -> Self {
        FinitePoint(vec![value; lambda])
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Coord> {
        self.0
    }

    /// The length `λ` of the index set.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Coord> {
        self.0.get(index).copied()
    }

    /// Checks that the point belongs to `^λκ`.
    pub fn check_space(&self, lambda: usize, kappa: Coord) -> Result<(), PointError> {
        if self.len() != lambda {
            return Err(PointError::LengthMismatch {
                left: self.len(),
                right: lambda,
            });
        }
        match self.0.iter().position(|&v| v >= kappa) {
            Some(index) => Err(PointError::CoordinateOutOfRange {
                index,
                value: self.0[index],
                kappa,
            }),
            None => Ok(()),
        }
    }

    /// The restriction `x|_X` re-indexed along `coords`.
    pub fn restrict(&self, coords: &[usize]) -> Result<FinitePoint, PointError> {
        coords
            .iter()
            .map(|&i| {
                self.get(i).ok_or(PointError::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(FinitePoint)
    }

    fn same_space(&self, other: &Self) -> Result<(), PointError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(PointError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            })
        }
    }
}

impl From<Vec<Coord>> for FinitePoint {
    fn from(coords: Vec<Coord>) -> Self {
        FinitePoint(coords)
    }
}

impl PointView for FinitePoint {
    fn coord(&self, index: usize) -> Option<Coord> {
        self.get(index)
    }
}

impl fmt::Display for FinitePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Point for FinitePoint {
    type IndexSet = BTreeSet<usize>;

    fn delta(&self, other: &Self) -> Result<BTreeSet<usize>, PointError> {
        self.same_space(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i)
            .collect())
    }

    fn totally_different(&self, other: &Self) -> Result<bool, PointError> {
        self.same_space(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a != b))
    }

    fn relation_on(&self, other: &Self, on: &BTreeSet<usize>) -> Result<Relation, PointError> {
        self.same_space(other)?;
        if let Some(&index) = on.iter().find(|&&i| i >= self.len()) {
            return Err(PointError::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        let differing = on.iter().filter(|&&i| self.0[i] != other.0[i]).count();
        Ok(if differing == 0 {
            Relation::Coincide
        } else if differing == on.len() {
            Relation::TotallyDifferentOn
        } else {
            Relation::Neither
        })
    }
}

/// An eventually constant element of `^ωω`: `x(i) = prefix[i]` below the
/// prefix length and `x(i) = tail` afterwards.
///
/// Always held in canonical form: the prefix never ends with the tail value,
/// so structural equality is functional equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TailPoint {
    prefix: Vec<Coord>,
    tail: Coord,
}

impl TailPoint {
    pub fn new(mut prefix: Vec<Coord>, tail: Coord) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        TailPoint { prefix, tail }
    }

    /// The constant function `c_α`.
    pub fn constant(value: Coord) -> Self {
        TailPoint {
            prefix: Vec::new(),
            tail: value,
        }
    }

    pub fn prefix(&self) -> &[Coord] {
        &self.prefix
    }

    pub fn tail(&self) -> Coord {
        self.tail
    }

    pub fn at(&self, index: usize) -> Coord {
        self.prefix.get(index).copied().unwrap_or(self.tail)
    }

    /// Returns a copy with coordinate `index` replaced by `value`.
    pub fn with_coord(&self, index: usize, value: Coord) -> TailPoint {
        let mut prefix = self.prefix.clone();
        if index >= prefix.len() {
            prefix.resize(index + 1, self.tail);
        }
        prefix[index] = value;
        TailPoint::new(prefix, self.tail)
    }

    /// The first `len` coordinates as a finite point.
    pub fn truncate(&self, len: usize) -> FinitePoint {
        FinitePoint((0..len).map(|i| self.at(i)).collect())
    }

    /// `x ≡* y`: the difference set is finite.
    pub fn almost_equal(&self, other: &TailPoint) -> bool {
        self.tail == other.tail
    }

    /// `x ≢* y`: the difference set is cofinite.
    pub fn almost_totally_different(&self, other: &TailPoint) -> bool {
        self.tail != other.tail
    }
}

impl PointView for TailPoint {
    fn coord(&self, index: usize) -> Option<Coord> {
        Some(self.at(index))
    }
}

impl fmt::Display for TailPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.prefix.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ";{}", self.tail)
    }
}

impl Point for TailPoint {
    type IndexSet = CoSet;

    fn delta(&self, other: &Self) -> Result<CoSet, PointError> {
        let span = self.prefix.len().max(other.prefix.len());
        if self.tail == other.tail {
            Ok(CoSet::finite(
                (0..span).filter(|&i| self.at(i) != other.at(i)),
            ))
        } else {
            Ok(CoSet::cofinite(
                (0..span).filter(|&i| self.at(i) == other.at(i)),
            ))
        }
    }

    fn totally_different(&self, other: &Self) -> Result<bool, PointError> {
        Ok(self.delta(other)?.is_everything())
    }

    fn relation_on(&self, other: &Self, on: &CoSet) -> Result<Relation, PointError> {
        let delta = self.delta(other)?;
        Ok(if delta.intersection(on).is_empty() {
            Relation::Coincide
        } else if on.is_subset(&delta) {
            Relation::TotallyDifferentOn
        } else {
            Relation::Neither
        })
    }
}

/// A finite or cofinite subset of `ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoSet {
    /// Exactly the listed indices.
    Finite(BTreeSet<usize>),
    /// Every index except the listed ones.
    Cofinite(BTreeSet<usize>),
}

impl CoSet {
    pub fn finite(indices: impl IntoIterator<Item = usize>) -> Self {
        CoSet::Finite(indices.into_iter().collect())
    }

    pub fn cofinite(exceptions: impl IntoIterator<Item = usize>) -> Self {
        CoSet::Cofinite(exceptions.into_iter().collect())
    }

    pub fn empty() -> Self {
        CoSet::Finite(BTreeSet::new())
    }

    pub fn everything() -> Self {
        CoSet::Cofinite(BTreeSet::new())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, CoSet::Finite(_))
    }

    pub fn exceptions(&self) -> &BTreeSet<usize> {
        match self {
            CoSet::Finite(s) | CoSet::Cofinite(s) => s,
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        match self {
            CoSet::Finite(s) => s.contains(&index),
            CoSet::Cofinite(s) => !s.contains(&index),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CoSet::Finite(s) if s.is_empty())
    }

    pub fn is_everything(&self) -> bool {
        matches!(self, CoSet::Cofinite(s) if s.is_empty())
    }

    pub fn intersection(&self, other: &CoSet) -> CoSet {
        use CoSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.intersection(b).copied().collect()),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => {
                Finite(a.difference(e).copied().collect())
            }
            (Cofinite(a), Cofinite(b)) => Cofinite(a.union(b).copied().collect()),
        }
    }

    pub fn complement(&self) -> CoSet {
        match self {
            CoSet::Finite(s) => CoSet::Cofinite(s.clone()),
            CoSet::Cofinite(s) => CoSet::Finite(s.clone()),
        }
    }

    pub fn is_subset(&self, other: &CoSet) -> bool {
        use CoSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.is_subset(b),
            (Finite(a), Cofinite(e)) => a.is_disjoint(e),
            (Cofinite(_), Finite(_)) => false,
            (Cofinite(a), Cofinite(b)) => b.is_subset(a),
        }
    }
}
