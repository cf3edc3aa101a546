use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::point::FinitePoint;
use crate::table::{Color, ColoringTable, TableError};

use super::graph::{class_masks, PowerGraph};
use super::proper::maximal_lawful_mask;

/// A point `x` and a color `β` with no `y ≢ x` carrying `β`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessGap {
    pub point: FinitePoint,
    pub color: Color,
}

/// Points `x_0..x_{ν-1}` and a color `β` missed by all of them with no point
/// totally different from every `x_α` carrying `β`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuTightnessGap {
    pub points: Vec<FinitePoint>,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CTightViolation {
    /// A used color that lies outside `C`.
    ColorOutsideSet {
        point: FinitePoint,
        color: Color,
    },
    Gap(TightnessGap),
}

/// First `(x, β)` in `(enc x, β)` order violating tightness over `colors`.
fn first_gap(
    t: &ColoringTable,
    colors: impl Iterator<Item = Color> + Clone,
    skip: impl Fn(Color, Color) -> bool,
) -> Option<TightnessGap> {
    let g = PowerGraph::new(t.sig());
    let masks = class_masks(t);
    let empty = BitSet::new(t.sig().size());
    (0..g.size()).find_map(|x| {
        let fx = t.color_at(x);
        colors
            .clone()
            .filter(|&beta| !skip(fx, beta))
            .find(|&beta| {
                g.neighbors(x)
                    .is_disjoint(masks.get(beta).unwrap_or(&empty))
            })
            .map(|beta| TightnessGap {
                point: t.sig().decode(x).unwrap(),
                color: beta,
            })
    })
}

/// Every point can be "seen" in every other color `β < μ` by a totally
/// different point. Unused colors therefore make a table non-tight.
pub fn tight_counterexample(t: &ColoringTable) -> Option<TightnessGap> {
    first_gap(t, 0..t.sig().mu(), |fx, beta| fx == beta)
}

pub fn is_tight(t: &ColoringTable) -> bool {
    tight_counterexample(t).is_none()
}

/// Every class `F⁻¹(β)`, `β < μ`, is a maximal lawful set (empty classes
/// never are).
pub fn classes_maximal_lawful(t: &ColoringTable) -> bool {
    let g = PowerGraph::new(t.sig());
    class_masks(t)
        .iter()
        .all(|class| maximal_lawful_mask(&g, class))
}

/// Tightness over the color set `C`; requires `Ran(F) ⊆ C`.
pub fn c_tight_counterexample(
    t: &ColoringTable,
    colors: &BTreeSet<Color>,
) -> Option<CTightViolation> {
    if let Some((index, &color)) = t
        .colors()
        .iter()
        .enumerate()
        .find(|(_, c)| !colors.contains(c))
    {
        return Some(CTightViolation::ColorOutsideSet {
            point: t.sig().decode(index).unwrap(),
            color,
        });
    }
    first_gap(t, colors.iter().copied(), |fx, beta| fx == beta).map(CTightViolation::Gap)
}

pub fn is_c_tight(t: &ColoringTable, colors: &BTreeSet<Color>) -> bool {
    c_tight_counterexample(t, colors).is_none()
}

/// `F` cannot be lowered at a single point: every `β < F(x)` is carried by
/// some `y ≢ x`.
pub fn minimality_counterexample(t: &ColoringTable) -> Option<TightnessGap> {
    first_gap(t, 0..t.sig().mu(), |fx, beta| beta >= fx)
}

pub fn is_minimal(t: &ColoringTable) -> bool {
    minimality_counterexample(t).is_none()
}

/// The smallest color missed by every `x` in `points` and carried by no
/// point totally different from all of them.
pub fn unreachable_color(
    t: &ColoringTable,
    points: &[FinitePoint],
) -> Result<Option<Color>, TableError> {
    let sig = t.sig();
    let g = PowerGraph::new(sig);
    let masks = class_masks(t);
    let mut common = BitSet::full(sig.size());
    let mut used = BTreeSet::new();
    for x in points {
        let i = sig.encode(x)?;
        common.intersect_with(g.neighbors(i));
        used.insert(t.color_at(i));
    }
    Ok((0..sig.mu()).find(|beta| !used.contains(beta) && common.is_disjoint(&masks[*beta])))
}

/// ν-tightness with sequences of length `ν`, repetition allowed.
///
/// Sequences are scanned as non-decreasing index tuples in lexicographic
/// order; since the condition depends only on the underlying set this finds
/// the same first counterexample as a scan over all ordered tuples.
pub fn nu_tight_counterexample(t: &ColoringTable, nu: usize) -> Option<NuTightnessGap> {
    let sig = t.sig();
    let g = PowerGraph::new(sig);
    let masks = class_masks(t);
    let mut search = NuSearch {
        t,
        g: &g,
        masks: &masks,
        nu,
        tuple: Vec::with_capacity(nu),
    };
    search.descend(0, &BitSet::full(sig.size()))
}

pub fn is_nu_tight(t: &ColoringTable, nu: usize) -> bool {
    nu_tight_counterexample(t, nu).is_none()
}

struct NuSearch<'a> {
    t: &'a ColoringTable,
    g: &'a PowerGraph,
    masks: &'a [BitSet],
    nu: usize,
    tuple: Vec<usize>,
}

impl NuSearch<'_> {
    fn descend(&mut self, start: usize, common: &BitSet) -> Option<NuTightnessGap> {
        if self.tuple.len() == self.nu {
            let used: BTreeSet<Color> = self.tuple.iter().map(|&i| self.t.color_at(i)).collect();
            let sig = self.t.sig();
            return (0..sig.mu())
                .find(|beta| !used.contains(beta) && common.is_disjoint(&self.masks[*beta]))
                .map(|color| NuTightnessGap {
                    points: self.tuple.iter().map(|&i| sig.decode(i).unwrap()).collect(),
                    color,
                });
        }
        for x in start..self.g.size() {
            let mut next = common.clone();
            next.intersect_with(self.g.neighbors(x));
            self.tuple.push(x);
            let found = self.descend(x, &next);
            self.tuple.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Coord;
    use crate::table::SpaceSig;

    fn fp(v: &[Coord]) -> FinitePoint {
        FinitePoint::new(v.to_vec())
    }

    fn first_coordinate(lambda: usize, kappa: usize, mu: usize) -> ColoringTable {
        let sig = SpaceSig::new(lambda, kappa, mu).unwrap();
        ColoringTable::from_fn(sig, |x| x.coords()[0] as Color).unwrap()
    }

    #[test]
    fn trivial_coloring_is_tight() {
        let t = first_coordinate(2, 3, 3);
        assert!(is_tight(&t));
        assert!(classes_maximal_lawful(&t));
    }

    #[test]
    fn unused_color_breaks_tightness() {
        let t = first_coordinate(2, 3, 4);
        assert_eq!(
            tight_counterexample(&t),
            Some(TightnessGap {
                point: fp(&[0, 0]),
                color: 3
            })
        );
        assert!(!classes_maximal_lawful(&t));
        let c: BTreeSet<Color> = [0, 1, 2].into();
        assert!(is_c_tight(&t, &c));
        let c: BTreeSet<Color> = [0, 1].into();
        assert!(matches!(
            c_tight_counterexample(&t, &c),
            Some(CTightViolation::ColorOutsideSet { color: 2, .. })
        ));
        let all: BTreeSet<Color> = (0..4).collect();
        assert_eq!(is_c_tight(&t, &all), is_tight(&t));
    }

    #[test]
    fn single_color_is_vacuously_tight() {
        let sig = SpaceSig::new(2, 3, 1).unwrap();
        let t = ColoringTable::constant(sig, 0).unwrap();
        assert!(is_tight(&t));
        assert!(!crate::analysis::is_proper(&t));
    }

    #[test]
    fn two_tightness_of_first_coordinate() {
        let t = first_coordinate(2, 3, 3);
        assert_eq!(
            unreachable_color(&t, &[fp(&[0, 0]), fp(&[1, 0])]).unwrap(),
            None
        );
        assert!(is_nu_tight(&t, 2));
        // three points can exhaust coordinate 1 when κ = 3
        assert_eq!(
            nu_tight_counterexample(&t, 3),
            Some(NuTightnessGap {
                points: vec![fp(&[0, 0]), fp(&[0, 1]), fp(&[0, 2])],
                color: 1
            })
        );

        // the specific pair (c_0, c_1) is vacuous on ^2 2
        let t2 = first_coordinate(2, 2, 2);
        assert_eq!(
            unreachable_color(&t2, &[fp(&[0, 0]), fp(&[1, 1])]).unwrap(),
            None
        );
        assert!(is_tight(&t2));
        // ... but two points of one color leave no room for a common neighbor
        assert_eq!(
            nu_tight_counterexample(&t2, 2),
            Some(NuTightnessGap {
                points: vec![fp(&[0, 0]), fp(&[0, 1])],
                color: 1
            })
        );
    }

    #[test]
    fn mix_point_with_fresh_color_is_not_two_tight() {
        // F(x) = x(0) except z = (0,1) gets 2 and the x(0) = 2 column gets 3
        let sig = SpaceSig::new(2, 3, 4).unwrap();
        let t = ColoringTable::from_fn(sig, |x| match x.coords() {
            [0, 1] => 2,
            [2, _] => 3,
            c => c[0] as Color,
        })
        .unwrap();
        assert!(crate::analysis::is_proper(&t));
        assert_eq!(
            unreachable_color(&t, &[fp(&[0, 0]), fp(&[1, 1])]).unwrap(),
            Some(2)
        );
        assert!(!is_nu_tight(&t, 2));
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&first_coordinate(1, 2, 2)));
        let sig = SpaceSig::new(1, 2, 2).unwrap();
        let flipped = ColoringTable::from_fn(sig, |x| 1 - x.coords()[0] as Color).unwrap();
        assert!(is_minimal(&flipped));
        let sig = SpaceSig::new(1, 3, 4).unwrap();
        let shifted = ColoringTable::from_fn(sig, |x| x.coords()[0] as Color + 1).unwrap();
        assert_eq!(
            minimality_counterexample(&shifted),
            Some(TightnessGap {
                point: fp(&[0]),
                color: 0
            })
        );
    }

    #[test]
    fn nu_tightness_with_nu_zero_means_surjective() {
        assert!(is_nu_tight(&first_coordinate(2, 3, 3), 0));
        assert!(!is_nu_tight(&first_coordinate(2, 3, 4), 0));
    }
}
