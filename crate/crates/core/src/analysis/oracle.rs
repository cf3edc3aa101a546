//! Backtracking generator of every proper coloring of a finite space.

use crate::table::{Color, ColoringTable, SpaceSig};

use super::graph::PowerGraph;
use super::AnalysisError;

/// Search steps allowed before [`ProperColorings`] gives up.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Yields each proper `F: ^λκ → μ` exactly once.
///
/// Points are colored in `enc` order and each point tries colors in
/// ascending order, so tables come out in lexicographic order of their color
/// arrays. A color is rejected as soon as an earlier neighbor carries it.
pub struct ProperColorings {
    sig: SpaceSig,
    graph: PowerGraph,
    // earlier neighbors of each point
    back: Vec<Vec<usize>>,
    colors: Vec<Color>,
    depth: usize,
    steps: u64,
    budget: u64,
    state: State,
}

#[derive(PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl ProperColorings {
    pub fn new(sig: SpaceSig) -> Self {
        let graph = PowerGraph::new(sig);
        let back = (0..graph.size())
            .map(|x| graph.neighbors(x).iter().take_while(|&y| y < x).collect())
            .collect();
        ProperColorings {
            sig,
            colors: vec![0; sig.size()],
            graph,
            back,
            depth: 0,
            steps: 0,
            budget: DEFAULT_BUDGET,
            state: State::Fresh,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Search steps spent so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn fits(&self, x: usize, c: Color) -> bool {
        self.back[x].iter().all(|&y| self.colors[y] != c)
    }

    /// Moves `colors[depth]` to the next admissible color at or above
    /// `from`, backtracking as needed. Returns false once the tree is spent.
    fn advance(&mut self, mut from: Color) -> Result<bool, AnalysisError> {
        let n = self.graph.size();
        let mu = self.sig.mu();
        loop {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(AnalysisError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let x = self.depth;
            match (from..mu).find(|&c| self.fits(x, c)) {
                Some(c) => {
                    self.colors[x] = c;
                    if x + 1 == n {
                        return Ok(true);
                    }
                    self.depth += 1;
                    from = 0;
                }
                None => {
                    if x == 0 {
                        return Ok(false);
                    }
                    self.depth -= 1;
                    from = self.colors[self.depth] + 1;
                }
            }
        }
    }
}

impl Iterator for ProperColorings {
    type Item = Result<ColoringTable, AnalysisError>;

    fn next(&mut self) -> Option<Self::Item> {
        let found = match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                self.advance(0)
            }
            State::Running => {
                let from = self.colors[self.depth] + 1;
                self.advance(from)
            }
        };
        match found {
            Ok(true) => {
                Some(Ok(ColoringTable::new(self.sig, self.colors.clone())
                    .expect("colors stay below mu")))
            }
            Ok(false) => {
                self.state = State::Done;
                None
            }
            Err(e) => {
                self.state = State::Done;
                Some(Err(e))
            }
        }
    }
}

/// Every proper coloring of `sig`, with the default step budget.
pub fn enumerate_proper(sig: SpaceSig) -> ProperColorings {
    ProperColorings::new(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_proper;

    fn count(l: usize, k: usize, m: usize) -> usize {
        let mut n = 0;
        for t in enumerate_proper(SpaceSig::new(l, k, m).unwrap()) {
            t.unwrap();
            n += 1;
        }
        n
    }

    /// Every table in `μ^(κ^λ)` filtered by the pair scan.
    fn brute(l: usize, k: usize, m: usize) -> Vec<Vec<Color>> {
        let sig = SpaceSig::new(l, k, m).unwrap();
        let n = sig.size();
        let mut out = Vec::new();
        let mut colors = vec![0; n];
        loop {
            let t = ColoringTable::new(sig, colors.clone()).unwrap();
            if is_proper(&t) {
                out.push(colors.clone());
            }
            let Some(i) = (0..n).rev().find(|&i| colors[i] + 1 < m) else {
                return out;
            };
            colors[i] += 1;
            colors[i + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(2, 3, 3), 12);
        assert_eq!(count(1, 2, 2), 2);
        assert_eq!(count(1, 1, 1), 1);
        assert_eq!(count(1, 3, 2), 0);
    }

    #[test]
    fn matches_brute_force_in_order() {
        for (l, k, m) in [
            (1, 2, 2),
            (2, 2, 2),
            (2, 2, 3),
            (1, 3, 3),
            (2, 3, 3),
            (3, 2, 2),
        ] {
            let got: Vec<Vec<Color>> = enumerate_proper(SpaceSig::new(l, k, m).unwrap())
                .map(|t| t.unwrap().colors().to_vec())
                .collect();
            assert_eq!(got, brute(l, k, m), "sig ({l},{k},{m})");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let mut it = enumerate_proper(SpaceSig::new(2, 3, 3).unwrap()).with_budget(5);
        assert!(matches!(
            it.next(),
            Some(Err(AnalysisError::BudgetExceeded { budget: 5 }))
        ));
        assert!(it.next().is_none());
    }
}
