use std::collections::BTreeMap;
use std::sync::Arc;

use crate::point::{Coord, FinitePoint, PointView};
use crate::table::{ColoringTable, SpaceSig};

use super::{need, ColorCode, ConstructError};

/// A coloring evaluated on demand.
///
/// `dependency_bound(x) = d` promises that every `y` agreeing with `x` on
/// all coordinates below `d` gets the same color and the same bound.
pub trait LazyColoring: Send + Sync {
    fn color(&self, x: &dyn PointView) -> Result<ColorCode, ConstructError>;
    fn dependency_bound(&self, x: &dyn PointView) -> Result<usize, ConstructError>;
}

impl<T: LazyColoring + ?Sized> LazyColoring for Arc<T> {
    fn color(&self, x: &dyn PointView) -> Result<ColorCode, ConstructError> {
        (**self).color(x)
    }

    fn dependency_bound(&self, x: &dyn PointView) -> Result<usize, ConstructError> {
        (**self).dependency_bound(x)
    }
}

/// A lazy coloring evaluated on all of `^λκ` with codes relabeled densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Materialized {
    pub table: ColoringTable,
    /// `legend[c]` is the code behind table color `c`, in `int_code` order.
    pub legend: Vec<ColorCode>,
}

pub fn materialize(
    f: &dyn LazyColoring,
    lambda: usize,
    kappa: usize,
) -> Result<Materialized, ConstructError> {
    let sig = SpaceSig::new(lambda, kappa, 1)?;
    let codes = sig
        .points()
        .map(|x| f.color(&x))
        .collect::<Result<Vec<_>, _>>()?;
    let mut order: Vec<_> = codes.iter().map(|c| (c.int_code(), c.clone())).collect();
    order.sort();
    order.dedup();
    let legend: Vec<ColorCode> = order.into_iter().map(|(_, c)| c).collect();
    let index: BTreeMap<&ColorCode, usize> =
        legend.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let colors = codes.iter().map(|c| index[c]).collect();
    let table = ColoringTable::new(sig.with_mu(legend.len().max(1))?, colors)?;
    Ok(Materialized { table, legend })
}

/// `G(x) = F(x|X)` for a coloring `F` of the coordinates in `X`.
pub struct Cylinder {
    coordinates: Vec<usize>,
    base: Arc<dyn LazyColoring>,
}

impl Cylinder {
    /// `coordinates` must be strictly increasing and nonempty.
    pub fn new(
        coordinates: Vec<usize>,
        base: Arc<dyn LazyColoring>,
    ) -> Result<Self, ConstructError> {
        if coordinates.is_empty() {
            return Err(ConstructError::EmptyCoordinates);
        }
        if coordinates.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ConstructError::UnsortedCoordinates);
        }
        Ok(Cylinder { coordinates, base })
    }

    pub fn coordinates(&self) -> &[usize] {
        &self.coordinates
    }
}

struct Restricted<'a> {
    x: &'a dyn PointView,
    coordinates: &'a [usize],
}

impl PointView for Restricted<'_> {
    fn coord(&self, index: usize) -> Option<Coord> {
        self.x.coord(*self.coordinates.get(index)?)
    }
}

impl LazyColoring for Cylinder {
    fn color(&self, x: &dyn PointView) -> Result<ColorCode, ConstructError> {
        need(x, *self.coordinates.last().unwrap())?;
        self.base.color(&Restricted {
            x,
            coordinates: &self.coordinates,
        })
    }

    fn dependency_bound(&self, _: &dyn PointView) -> Result<usize, ConstructError> {
        Ok(self.coordinates.last().unwrap() + 1)
    }
}

/// A finite table read through the first `λ` coordinates, with colors
/// wrapped as `(tag, [F(x)])`.
#[derive(Debug, Clone)]
pub struct TableColoring {
    table: ColoringTable,
    tag: u64,
}

impl TableColoring {
    pub fn new(table: ColoringTable, tag: u64) -> Self {
        TableColoring { table, tag }
    }

    pub fn table(&self) -> &ColoringTable {
        &self.table
    }
}

impl LazyColoring for TableColoring {
    fn color(&self, x: &dyn PointView) -> Result<ColorCode, ConstructError> {
        let sig = self.table.sig();
        let coords = (0..sig.lambda())
            .map(|index| {
                let value = need(x, index)?;
                if value >= sig.kappa() as Coord {
                    return Err(ConstructError::CoordinateOutOfRange {
                        index,
                        value,
                        kappa: sig.kappa(),
                    });
                }
                Ok(value)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let c = self.table.eval(&FinitePoint::new(coords))?;
        Ok(ColorCode::new(self.tag, vec![c as u64]))
    }

    fn dependency_bound(&self, _: &dyn PointView) -> Result<usize, ConstructError> {
        Ok(self.table.sig().lambda())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::TailPoint;
    use crate::table::Color;

    fn first_coordinate(kappa: usize) -> ColoringTable {
        let sig = SpaceSig::new(1, kappa, kappa).unwrap();
        ColoringTable::from_fn(sig, |x| x.coords()[0] as Color).unwrap()
    }

    #[test]
    fn cylinder_reads_chosen_coordinates() {
        let base: Arc<dyn LazyColoring> = Arc::new(TableColoring::new(first_coordinate(3), 0));
        let g = Cylinder::new(vec![2], base).unwrap();
        let x = TailPoint::new(vec![9, 9, 1], 7);
        let y = TailPoint::new(vec![0, 4, 1], 0);
        assert_eq!(g.color(&x).unwrap(), ColorCode::new(0, vec![1]));
        assert_eq!(g.color(&x).unwrap(), g.color(&y).unwrap());
        assert_eq!(g.dependency_bound(&x).unwrap(), 3);
        assert!(matches!(
            g.color(&FinitePoint::new(vec![0, 0])),
            Err(ConstructError::MissingCoordinate { index: 2 })
        ));
        assert!(matches!(
            Cylinder::new(vec![], Arc::new(TableColoring::new(first_coordinate(2), 0))),
            Err(ConstructError::EmptyCoordinates)
        ));
    }

    #[test]
    fn table_coloring_rejects_large_coordinates() {
        let f = TableColoring::new(first_coordinate(2), 5);
        assert_eq!(
            f.color(&TailPoint::constant(1)).unwrap(),
            ColorCode::new(5, vec![1])
        );
        assert!(matches!(
            f.color(&TailPoint::constant(2)),
            Err(ConstructError::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn materialize_relabels_in_code_order() {
        let f = TableColoring::new(first_coordinate(3), 0);
        let m = materialize(&f, 2, 3).unwrap();
        assert_eq!(m.table.sig().mu(), 3);
        assert_eq!(m.table.colors(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert_eq!(m.legend[2], ColorCode::new(0, vec![2]));
    }
}
