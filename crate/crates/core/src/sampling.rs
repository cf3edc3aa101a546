//! Seeded random checks for lazy colorings of `^ωω`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{ConstructError, LazyColoring};
use crate::point::{Coord, Point, TailPoint};

/// Draws eventually constant points with short prefixes and small values.
pub struct TailSampler {
    rng: ChaCha8Rng,
    max_prefix: usize,
    max_value: Coord,
}

impl TailSampler {
    /// Values are drawn from `0..max_value` (at least 2 are needed for
    /// totally different partners).
    pub fn new(seed: u64, max_prefix: usize, max_value: Coord) -> Self {
        TailSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_prefix,
            max_value: max_value.max(2),
        }
    }

    fn value(&mut self) -> Coord {
        self.rng.gen_range(0..self.max_value)
    }

    fn other_than(&mut self, v: Coord) -> Coord {
        let w = self.rng.gen_range(0..self.max_value - 1);
        if w >= v {
            w + 1
        } else {
            w
        }
    }

    pub fn point(&mut self) -> TailPoint {
        let len = self.rng.gen_range(0..=self.max_prefix);
        let prefix = (0..len).map(|_| self.value()).collect();
        TailPoint::new(prefix, self.value())
    }

    /// A point differing from `x` at every coordinate.
    pub fn totally_different_from(&mut self, x: &TailPoint) -> TailPoint {
        let len = x
            .prefix()
            .len()
            .max(self.rng.gen_range(0..=self.max_prefix));
        let prefix = (0..len).map(|j| self.other_than(x.at(j))).collect();
        let tail = self.other_than(x.tail());
        TailPoint::new(prefix, tail)
    }

    /// A point agreeing with `x` below `bound` and random from there on,
    /// tail included.
    pub fn mutate_from(&mut self, x: &TailPoint, bound: usize) -> TailPoint {
        let extra = self.rng.gen_range(0..=self.max_prefix);
        let prefix = (0..bound + extra)
            .map(|j| if j < bound { x.at(j) } else { self.value() })
            .collect();
        TailPoint::new(prefix, self.value())
    }
}

/// Outcome of [`sample_check`]; failures keep the first offending pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleOutcome {
    pub pairs: usize,
    pub proper_failures: usize,
    pub first_proper_failure: Option<(String, String)>,
    pub mutations: usize,
    pub bound_failures: usize,
    pub first_bound_failure: Option<(String, String)>,
}

/// Checks `count` random totally different pairs for distinct colors and
/// `count` random mutations at or above the dependency bound for equal
/// colors and bounds.
pub fn sample_check(
    f: &dyn LazyColoring,
    seed: u64,
    count: usize,
    max_value: Coord,
) -> Result<SampleOutcome, ConstructError> {
    let mut s = TailSampler::new(seed, 2 * max_value as usize + 2, max_value);
    let mut out = SampleOutcome {
        pairs: count,
        proper_failures: 0,
        first_proper_failure: None,
        mutations: count,
        bound_failures: 0,
        first_bound_failure: None,
    };
    for _ in 0..count {
        let x = s.point();
        let y = s.totally_different_from(&x);
        debug_assert!(x.totally_different(&y).unwrap());
        if f.color(&x)? == f.color(&y)? {
            out.proper_failures += 1;
            out.first_proper_failure
                .get_or_insert((x.to_string(), y.to_string()));
        }
    }
    for _ in 0..count {
        let x = s.point();
        let bound = f.dependency_bound(&x)?;
        let y = s.mutate_from(&x, bound);
        if f.color(&x)? != f.color(&y)? || f.dependency_bound(&y)? != bound {
            out.bound_failures += 1;
            out.first_bound_failure
                .get_or_insert((x.to_string(), y.to_string()));
        }
    }
    Ok(out)
}
