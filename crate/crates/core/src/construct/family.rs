//! Finite-depth almost-disjoint families.
//!
//! A branch `r ∈ 2^m` becomes the vector `x_r(n) = 2^{n+1} + r|(n+1)` for
//! `n < m`, where `r|(n+1)` is the first `n+1` bits read as a binary
//! number. Codes of prefixes are equal iff the prefixes are, so two vectors
//! agree exactly before their branches first disagree.

use super::ConstructError;

/// Vectors for the first `t` branches of depth `m`, in lexicographic order.
pub fn almost_disjoint_family(m: usize, t: usize) -> Result<Vec<Vec<u64>>, ConstructError> {
    check_depth(m)?;
    let available = 1u128 << m;
    if t as u128 > available {
        return Err(ConstructError::TooManyBranches { m, t, available });
    }
    let branches: Vec<Vec<bool>> = (0..t as u64)
        .map(|r| (0..m).map(|n| (r >> (m - 1 - n)) & 1 == 1).collect())
        .collect();
    branch_family(m, &branches)
}

/// Vectors for the given distinct branches of depth `m`.
pub fn branch_family(m: usize, branches: &[Vec<bool>]) -> Result<Vec<Vec<u64>>, ConstructError> {
    check_depth(m)?;
    for (index, r) in branches.iter().enumerate() {
        if r.len() != m {
            return Err(ConstructError::BranchLength {
                index,
                found: r.len(),
                expected: m,
            });
        }
        if let Some(first) = branches[..index].iter().position(|s| s == r) {
            return Err(ConstructError::DuplicateBranch {
                first,
                second: index,
            });
        }
    }
    Ok(branches
        .iter()
        .map(|r| {
            let mut value = 0u64;
            r.iter()
                .enumerate()
                .map(|(n, &bit)| {
                    value = 2 * value + bit as u64;
                    (1u64 << (n + 1)) + value
                })
                .collect()
        })
        .collect())
}

fn check_depth(m: usize) -> Result<(), ConstructError> {
    if m > 62 {
        return Err(ConstructError::DepthTooLarge(m));
    }
    Ok(())
}

/// The first position where `a` and `b` differ, provided they differ at
/// every later position as well; `None` if they are equal or the
/// disagreement set is not a final segment.
pub fn disagreement_start(a: &[u64], b: &[u64]) -> Option<usize> {
    let start = a.iter().zip(b).position(|(x, y)| x != y)?;
    a[start..]
        .iter()
        .zip(&b[start..])
        .all(|(x, y)| x != y)
        .then_some(start)
}
