use crate::bitset::BitSet;
use crate::table::{ColoringTable, SpaceSig};

/// The graph `(K_κ)^λ`: points joined when totally different.
pub(crate) struct PowerGraph {
    adj: Vec<BitSet>,
}

impl PowerGraph {
    pub fn new(sig: SpaceSig) -> Self {
        let n = sig.size();
        let lambda = sig.lambda();
        let kappa = sig.kappa();
        let mut powers = Vec::with_capacity(lambda);
        let mut p = 1usize;
        for _ in 0..lambda {
            powers.push(p);
            p = p.saturating_mul(kappa);
        }

        let mut adj = Vec::with_capacity(n);
        let mut digits = vec![0usize; lambda];
        for x in 0..n {
            let coords = sig.decode_coords(x);
            let mut set = BitSet::new(n);
            if kappa >= 2 {
                // Walk all digit vectors in (κ-1)^λ; digit d at coordinate i
                // stands for d if d < x(i), else d + 1.
                digits.iter_mut().for_each(|d| *d = 0);
                loop {
                    let y: usize = digits
                        .iter()
                        .zip(&coords)
                        .zip(&powers)
                        .map(|((&d, &xi), &pw)| {
                            let v = if d < xi as usize { d } else { d + 1 };
                            v * pw
                        })
                        .sum();
                    set.insert(y);
                    let Some(i) = digits.iter().position(|&d| d + 1 < kappa - 1) else {
                        break;
                    };
                    digits[i] += 1;
                    digits[..i].iter_mut().for_each(|d| *d = 0);
                }
            }
            adj.push(set);
        }
        PowerGraph { adj }
    }

    pub fn size(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, x: usize) -> &BitSet {
        &self.adj[x]
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }
}

/// One bit set per color `0..μ` holding its class.
pub(crate) fn class_masks(t: &ColoringTable) -> Vec<BitSet> {
    let n = t.sig().size();
    let mut masks = vec![BitSet::new(n); t.sig().mu()];
    for (i, &c) in t.colors().iter().enumerate() {
        masks[c].insert(i);
    }
    masks
}
