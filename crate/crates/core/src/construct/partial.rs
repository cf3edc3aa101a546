use std::collections::{BTreeMap, BTreeSet};

use crate::point::{FinitePoint, Point};
use crate::table::{Color, ColoringTable, SpaceSig};

use super::ConstructError;

/// Extends a partial proper coloring `G` of `A ⊆ ^λκ` to a proper coloring
/// of the whole space.
///
/// With `block = max(|Ran G|, κ)` the result uses `2·block` colors: points
/// of `A` get `h₁(G(x)) < block` (the rank of `G(x)` in `Ran G`) and the
/// rest get `h₂(x(0)) = block + x(0)`. Two points of `A` share a color
/// exactly when they share a `G`-color.
pub fn extend_partial(
    lambda: usize,
    kappa: usize,
    partial: &BTreeMap<FinitePoint, Color>,
) -> Result<ColoringTable, ConstructError> {
    let probe = SpaceSig::new(lambda, kappa, 1)?;
    let mut by_index = BTreeMap::new();
    for (x, &c) in partial {
        by_index.insert(probe.encode(x)?, (x, c));
    }
    let members: Vec<_> = by_index.values().collect();
    for (i, (x, c)) in members.iter().enumerate() {
        for (y, d) in &members[i + 1..] {
            if c == d && x.totally_different(y)? {
                return Err(ConstructError::PartialNotProper {
                    first: (*x).clone(),
                    second: (*y).clone(),
                    color: *c,
                });
            }
        }
    }

    let range: BTreeSet<Color> = partial.values().copied().collect();
    let h1: BTreeMap<Color, Color> = range.iter().enumerate().map(|(r, &c)| (c, r)).collect();
    let block = range.len().max(kappa);
    let sig = SpaceSig::new(lambda, kappa, 2 * block)?;
    let colors = (0..sig.size())
        .map(|index| match by_index.get(&index) {
            Some((_, c)) => h1[c],
            None => block + index % kappa,
        })
        .collect();
    Ok(ColoringTable::new(sig, colors)?)
}
