use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("value {value} at position {position} is out of range for a permutation of {len}")]
    OutOfRange {
        position: usize,
        value: usize,
        len: usize,
    },
    #[error("value {value} appears more than once")]
    Repeated { value: usize },
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermutationError> {
        let len = images.len();
        let mut seen = vec![false; len];
        for (position, &value) in images.iter().enumerate() {
            if value >= len {
                return Err(PermutationError::OutOfRange {
                    position,
                    value,
                    len,
                });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(PermutationError::Repeated { value });
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(len: usize) -> Self {
        Permutation((0..len).collect())
    }

    /// Exchanges `a` and `b`.
    pub fn swap(len: usize, a: usize, b: usize) -> Result<Self, PermutationError> {
        let mut images: Vec<usize> = (0..len).collect();
        if a >= len || b >= len {
            return Err(PermutationError::OutOfRange {
                position: a.max(b),
                value: a.max(b),
                len,
            });
        }
        images.swap(a, b);
        Ok(Permutation(images))
    }

    /// `v ↦ (v + by) mod len`.
    pub fn rotation(len: usize, by: usize) -> Self {
        Permutation((0..len).map(|v| (v + by) % len.max(1)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, value: usize) -> usize {
        self.0[value]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (v, &image) in self.0.iter().enumerate() {
            inv[image] = v;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Every permutation of `0..len` in lexicographic order.
    pub fn all(len: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..len).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..len).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..len)
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermutationError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}
