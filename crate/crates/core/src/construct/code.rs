//! Color codes and their canonical integer form.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A color `(tag, payload)`; distinct tags give disjoint color blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorCode {
    pub tag: u64,
    pub payload: Vec<u64>,
}

impl ColorCode {
    pub fn new(tag: u64, payload: Vec<u64>) -> Self {
        ColorCode { tag, payload }
    }

    /// `pair(tag, fold(payload))`.
    ///
    /// Mostly-zero payloads fold to numbers with about `2^len` bits; see
    /// [`ColorCode::int_code_within`] for a bounded variant.
    pub fn int_code(&self) -> BigUint {
        pair(&BigUint::from(self.tag), &fold(&self.payload))
    }

    /// The int code, or `None` if it has more than `max_bits` bits.
    pub fn int_code_within(&self, max_bits: u64) -> Option<BigUint> {
        let mut acc = match self.payload.split_last() {
            None => BigUint::ZERO,
            Some((&last, init)) => {
                let mut acc = BigUint::from(last);
                for &a in init.iter().rev() {
                    acc = capped_pair(&BigUint::from(a), &acc, max_bits)?;
                }
                acc
            }
        };
        acc = capped_pair(&BigUint::from(self.tag), &acc, max_bits)?;
        Some(acc)
    }
}

/// `pair(a, b)` unless the result would exceed `max_bits` bits.
fn capped_pair(a: &BigUint, b: &BigUint, max_bits: u64) -> Option<BigUint> {
    // pair(a, b) < 2^(2·max(bits)+1)
    if 2 * a.bits().max(b.bits()) > max_bits + 1 {
        return None;
    }
    let v = pair(a, b);
    (v.bits() <= max_bits).then_some(v)
}

impl fmt::Display for ColorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:(", self.tag)?;
        for (i, v) in self.payload.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Cantor pairing `(a+b)(a+b+1)/2 + b`.
pub fn pair(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    ((&s * (&s + 1u32)) >> 1u32) + b
}

/// Right-to-left iterated pairing: `fold([]) = 0`, `fold([a]) = a`,
/// `fold(a :: rest) = pair(a, fold(rest))`.
pub fn fold(payload: &[u64]) -> BigUint {
    match payload.split_last() {
        None => BigUint::ZERO,
        Some((&last, init)) => init
            .iter()
            .rev()
            .fold(BigUint::from(last), |acc, &a| pair(&BigUint::from(a), &acc)),
    }
}

/// Whether `code` is a color of the composite coloring: tag `i`, payload
/// of length `2i+2` starting with `i` and ending in a parity bit.
pub fn in_b(code: &ColorCode) -> bool {
    b_violation(code).is_none()
}

fn b_violation(code: &ColorCode) -> Option<String> {
    let i = code.tag;
    let want = i.checked_mul(2).and_then(|v| v.checked_add(2));
    if want != Some(code.payload.len() as u64) {
        return Some(format!(
            "payload has length {}, tag {i} needs {}",
            code.payload.len(),
            want.map_or("more".into(), |w| w.to_string())
        ));
    }
    if code.payload[0] != i {
        return Some(format!(
            "payload starts with {}, not the tag {i}",
            code.payload[0]
        ));
    }
    if *code.payload.last().unwrap() > 1 {
        return Some("last payload entry is not a parity bit".into());
    }
    None
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RankError {
    #[error("code {code} is not in B: {reason}")]
    NotInB { code: String, reason: String },
    #[error("code {0} is too large to rank")]
    TooLarge(String),
    #[error("ranking exceeded its budget of {0} steps")]
    BudgetExceeded(u64),
}

/// Default step budget for [`rank_in_b`].
pub const RANK_BUDGET: u64 = 10_000_000;

/// Position of `code` among all codes of B ordered by `int_code`.
pub fn rank_in_b(code: &ColorCode) -> Result<u128, RankError> {
    rank_in_b_with_budget(code, RANK_BUDGET)
}

/// Largest int code accepted by the ranker.
const RANK_LIMIT_BITS: u64 = 120;

pub fn rank_in_b_with_budget(code: &ColorCode, budget: u64) -> Result<u128, RankError> {
    if let Some(reason) = b_violation(code) {
        return Err(RankError::NotInB {
            code: code.to_string(),
            reason,
        });
    }
    let n = code
        .int_code_within(RANK_LIMIT_BITS)
        .ok_or_else(|| RankError::TooLarge(code.to_string()))?;
    let n = u128::try_from(&n).expect("fits in 120 bits");
    let mut ranker = Ranker { steps: 0, budget };
    let mut rank = 0u128;
    for t in 0u128.. {
        let Some(w_bound) = ranker.inner_bound(t, n) else {
            break;
        };
        rank += ranker.count(2 * t as usize, w_bound)?;
    }
    Ok(rank)
}

fn tri(n: u128) -> Option<u128> {
    n.checked_mul(n + 1).map(|v| v / 2)
}

fn pair_u(a: u128, b: u128) -> Option<u128> {
    tri(a.checked_add(b)?)?.checked_add(b)
}

/// Smallest `b` with `pair(a, b) ≥ bound`.
fn min_second(a: u128, bound: u128) -> u128 {
    let (mut lo, mut hi) = (0u128, bound);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pair_u(a, mid).is_some_and(|v| v < bound) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

struct Ranker {
    steps: u64,
    budget: u64,
}

impl Ranker {
    fn tick(&mut self) -> Result<(), RankError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(RankError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// `W` with `pair(t, pair(t, w)) < n ⇔ w < W`, or `None` once no
    /// tag-`t` code lies below `n`.
    fn inner_bound(&self, t: u128, n: u128) -> Option<u128> {
        if pair_u(t, pair_u(t, 0)?).is_none_or(|v| v >= n) {
            return None;
        }
        Some(min_second(t, min_second(t, n)))
    }

    /// `#{s ∈ S_j : s < bound}` where `S_0 = {0, 1}` and
    /// `S_j = {pair(a, s) : s ∈ S_{j-1}}`.
    fn count(&mut self, j: usize, bound: u128) -> Result<u128, RankError> {
        if j == 0 {
            return Ok(bound.min(2));
        }
        let mut total = 0u128;
        let mut inner = Vec::new();
        self.members_below(j - 1, min_second(0, bound), &mut inner)?;
        for s in inner {
            self.tick()?;
            // a + s ranges over n ≥ s with T(n) + s < bound
            let m = bound - s - 1;
            let top = ((8 * m + 1).isqrt() - 1) / 2;
            total += top + 1 - s;
        }
        Ok(total)
    }

    /// Pushes every member of `S_j` below `bound`.
    fn members_below(
        &mut self,
        j: usize,
        bound: u128,
        out: &mut Vec<u128>,
    ) -> Result<(), RankError> {
        if j == 0 {
            out.extend(0..bound.min(2));
            return Ok(());
        }
        let mut inner = Vec::new();
        self.members_below(j - 1, min_second(0, bound), &mut inner)?;
        for s in inner {
            for a in 0u128.. {
                self.tick()?;
                match pair_u(a, s) {
                    Some(v) if v < bound => out.push(v),
                    _ => break,
                }
            }
        }
        Ok(())
    }
}
