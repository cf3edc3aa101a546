use crate::bitset::BitSet;
use crate::point::{FinitePoint, Point, PointError};
use crate::table::{ColoringTable, SpaceSig};

use super::graph::PowerGraph;
use super::AnalysisError;

/// The first pair `x <enc y` with `x ≢ y` and `F(x) = F(y)`.
pub fn proper_counterexample(t: &ColoringTable) -> Option<(FinitePoint, FinitePoint)> {
    let sig = t.sig();
    let g = PowerGraph::new(sig);
    let colors = t.colors();
    (0..g.size()).find_map(|x| {
        g.neighbors(x)
            .iter()
            .find(|&y| y > x && colors[y] == colors[x])
            .map(|y| (sig.decode(x).unwrap(), sig.decode(y).unwrap()))
    })
}

/// No two totally different points share a color.
pub fn is_proper(t: &ColoringTable) -> bool {
    proper_counterexample(t).is_none()
}

/// The first totally different pair inside `points`, in the given order.
pub fn lawful_counterexample(
    points: &[FinitePoint],
) -> Result<Option<(FinitePoint, FinitePoint)>, PointError> {
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            if x.totally_different(y)? {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// `points` contains no totally different pair.
pub fn is_lawful(points: &[FinitePoint]) -> Result<bool, PointError> {
    Ok(lawful_counterexample(points)?.is_none())
}

/// `points` is lawful and every point of the space outside it is totally
/// different from some member.
pub fn is_maximal_lawful(points: &[FinitePoint], sig: SpaceSig) -> Result<bool, AnalysisError> {
    let mut members = BitSet::new(sig.size());
    for x in points {
        members.insert(sig.encode(x)?);
    }
    Ok(maximal_lawful_mask(&PowerGraph::new(sig), &members))
}

pub(crate) fn maximal_lawful_mask(g: &PowerGraph, members: &BitSet) -> bool {
    (0..g.size()).all(|x| {
        let hit = !g.neighbors(x).is_disjoint(members);
        if members.contains(x) {
            !hit
        } else {
            hit
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Coord;

    fn fp(v: &[Coord]) -> FinitePoint {
        FinitePoint::new(v.to_vec())
    }

    #[test]
    fn trivial_coloring_is_proper() {
        let sig = SpaceSig::new(2, 3, 3).unwrap();
        let t = ColoringTable::from_fn(sig, |x| x.coords()[0] as usize).unwrap();
        assert!(is_proper(&t));
    }

    #[test]
    fn constant_coloring_fails_on_constants() {
        let sig = SpaceSig::new(2, 3, 3).unwrap();
        let t = ColoringTable::constant(sig, 0).unwrap();
        assert_eq!(
            proper_counterexample(&t),
            Some((FinitePoint::constant(2, 0), FinitePoint::constant(2, 1)))
        );
    }

    #[test]
    fn lawful_sets() {
        assert!(is_lawful(&[fp(&[0, 0]), fp(&[0, 1])]).unwrap());
        assert!(!is_lawful(&[fp(&[0, 0]), fp(&[1, 1])]).unwrap());
        assert!(is_lawful(&[fp(&[0]), fp(&[0, 1])]).is_err());
    }

    #[test]
    fn singletons_are_the_maximal_lawful_sets_of_one_coordinate() {
        let sig = SpaceSig::new(1, 3, 1).unwrap();
        let points: Vec<_> = sig.points().collect();
        let mut maximal = Vec::new();
        for mask in 0u32..8 {
            let subset: Vec<_> = (0..3)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| points[i].clone())
                .collect();
            if is_maximal_lawful(&subset, sig).unwrap() {
                maximal.push(subset);
            }
        }
        assert_eq!(
            maximal,
            vec![vec![fp(&[0])], vec![fp(&[1])], vec![fp(&[2])]]
        );
    }

    #[test]
    fn even_parity_set_is_maximal_lawful() {
        let even: Vec<_> = SpaceSig::new(3, 2, 1)
            .unwrap()
            .points()
            .filter(|x| x.coords().iter().sum::<Coord>() % 2 == 0)
            .collect();
        assert_eq!(even.len(), 4);
        assert!(is_maximal_lawful(&even, SpaceSig::new(3, 2, 1).unwrap()).unwrap());
        assert!(is_maximal_lawful(&even, SpaceSig::new(3, 3, 1).unwrap()).unwrap());
        // dropping a member breaks maximality
        assert!(!is_maximal_lawful(&even[1..], SpaceSig::new(3, 3, 1).unwrap()).unwrap());
    }
}
