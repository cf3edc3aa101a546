use crate::point::{Coord, FinitePoint, Point};
use crate::table::ColoringTable;

use super::graph::PowerGraph;
use super::AnalysisError;

fn require_mu_at_least_kappa(t: &ColoringTable) -> Result<(), AnalysisError> {
    let sig = t.sig();
    if sig.mu() < sig.kappa() {
        return Err(AnalysisError::MuBelowKappa {
            mu: sig.mu(),
            kappa: sig.kappa(),
        });
    }
    Ok(())
}

/// `F(c_α) = α` for every `α < κ`. Properness is not checked here.
pub fn is_strongly_uniform(t: &ColoringTable) -> Result<bool, AnalysisError> {
    require_mu_at_least_kappa(t)?;
    let sig = t.sig();
    for alpha in 0..sig.kappa() {
        let c = FinitePoint::constant(sig.lambda(), alpha as Coord);
        if t.eval(&c)? != alpha {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for pairwise totally different `r_0, …, r_{κ-1}` with
/// `F(r_α) = α`.
///
/// Colors are filled in ascending order and candidates for each `r_α` are
/// tried in `enc` order; the first complete clique found is returned.
/// `Ok(None)` means the search space was exhausted.
pub fn weak_uniformity_witness(
    t: &ColoringTable,
) -> Result<Option<Vec<FinitePoint>>, AnalysisError> {
    require_mu_at_least_kappa(t)?;
    let sig = t.sig();
    let g = PowerGraph::new(sig);
    let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); sig.kappa()];
    for (i, &c) in t.colors().iter().enumerate() {
        if c < sig.kappa() {
            by_color[c].push(i);
        }
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(sig.kappa());
    // cursor[α] = next candidate position in by_color[α]
    let mut cursor = vec![0usize; sig.kappa()];
    loop {
        let alpha = chosen.len();
        if alpha == sig.kappa() {
            return Ok(Some(
                chosen.iter().map(|&i| sig.decode(i).unwrap()).collect(),
            ));
        }
        let candidates = &by_color[alpha];
        let next = (cursor[alpha]..candidates.len())
            .find(|&k| chosen.iter().all(|&r| g.adjacent(r, candidates[k])));
        match next {
            Some(k) => {
                cursor[alpha] = k + 1;
                chosen.push(candidates[k]);
                if alpha + 1 < sig.kappa() {
                    cursor[alpha + 1] = 0;
                }
            }
            None => {
                if chosen.pop().is_none() {
                    return Ok(None);
                }
            }
        }
    }
}

pub fn is_weakly_uniform(t: &ColoringTable) -> Result<bool, AnalysisError> {
    Ok(weak_uniformity_witness(t)?.is_some())
}

/// Checks a claimed weak-uniformity witness.
pub fn is_uniformity_witness(t: &ColoringTable, witness: &[FinitePoint]) -> bool {
    if witness.len() != t.sig().kappa() {
        return false;
    }
    let colored = witness
        .iter()
        .enumerate()
        .all(|(alpha, r)| t.eval(r).is_ok_and(|c| c == alpha));
    colored
        && witness.iter().enumerate().all(|(i, a)| {
            witness[i + 1..]
                .iter()
                .all(|b| a.totally_different(b).unwrap_or(false))
        })
}
