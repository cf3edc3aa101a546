use crate::analysis::graph::PowerGraph;
use crate::analysis::require_proper;
use crate::bitset::BitSet;
use crate::table::ColoringTable;

use super::ConstructError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimized {
    pub table: ColoringTable,
    /// Entries whose color went down.
    pub lowered: usize,
}

/// Greedy descent to a minimal proper coloring `G ≤ F`.
///
/// First moves whole color classes, in ascending color order, into the
/// smallest lower class they stay lawful with. Then sweeps the points in
/// `enc` order, moving each to the smallest color not carried by a totally
/// different point, until a sweep changes nothing.
pub fn minimize(t: &ColoringTable) -> Result<Minimized, ConstructError> {
    require_proper(t)?;
    let sig = t.sig();
    let g = PowerGraph::new(sig);
    let mut colors = t.colors().to_vec();
    merge_classes(&g, &mut colors, sig.mu());
    let mut blocked = vec![false; sig.mu()];
    loop {
        let mut changed = false;
        for x in 0..colors.len() {
            let current = colors[x];
            blocked[..current].iter_mut().for_each(|b| *b = false);
            for y in g.neighbors(x).iter() {
                if colors[y] < current {
                    blocked[colors[y]] = true;
                }
            }
            if let Some(c) = blocked[..current].iter().position(|b| !b) {
                colors[x] = c;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let lowered = colors
        .iter()
        .zip(t.colors())
        .filter(|(a, b)| a != b)
        .count();
    Ok(Minimized {
        table: ColoringTable::new(sig, colors)?,
        lowered,
    })
}

fn merge_classes(g: &PowerGraph, colors: &mut [usize], mu: usize) {
    let mut classes: Vec<BitSet> = vec![BitSet::new(colors.len()); mu];
    for (x, &c) in colors.iter().enumerate() {
        classes[c].insert(x);
    }
    for beta in 1..mu {
        let target = (0..beta).find(|&gamma| {
            classes[beta]
                .iter()
                .all(|x| g.neighbors(x).is_disjoint(&classes[gamma]))
        });
        if let Some(gamma) = target {
            let moved = std::mem::replace(&mut classes[beta], BitSet::new(colors.len()));
            for x in moved.iter() {
                colors[x] = gamma;
                classes[gamma].insert(x);
            }
        }
    }
}
