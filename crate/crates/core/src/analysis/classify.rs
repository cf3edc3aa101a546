//! Single-coordinate classification.
//!
//! Over a finite index set every ultrafilter is principal, so "F factors
//! through the ultrapower" becomes "F(x) depends injectively on one
//! coordinate `x(i)`". Both classifiers below search for that coordinate.

use serde::Serialize;

use crate::perm::Permutation;
use crate::point::FinitePoint;
use crate::table::{Color, ColoringTable};

use super::{require_proper, AnalysisError};

/// `F(x) = π(x(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipalForm {
    pub coordinate: usize,
    pub permutation: Permutation,
}

impl PrincipalForm {
    pub fn apply(&self, x: &FinitePoint) -> Color {
        self.permutation.apply(x.coords()[self.coordinate] as usize)
    }
}

/// `F(x) = h(x(i))` with `h` a bijection from `0..κ` onto `Ran(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorClassification {
    pub coordinate: usize,
    pub class_map: Vec<Color>,
}

/// A pair breaking `F(x) = F(y) ⇔ x(i) = y(i)` at one coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateViolation {
    pub coordinate: usize,
    pub first: FinitePoint,
    pub second: FinitePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrincipalOutcome {
    Principal(PrincipalForm),
    /// One violation per coordinate.
    NotTrivial(Vec<CoordinateViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoTightOutcome {
    Factor(FactorClassification),
    /// One violation per coordinate.
    Failure(Vec<CoordinateViolation>),
}

/// The class map `v ↦ F(x)` for `x(i) = v`, if `F` factors injectively
/// through coordinate `i`.
fn class_map(t: &ColoringTable, coordinate: usize) -> Option<Vec<Color>> {
    let sig = t.sig();
    let mut map: Vec<Option<Color>> = vec![None; sig.kappa()];
    let mut owner: Vec<Option<usize>> = vec![None; sig.mu()];
    let stride = sig.kappa().pow(coordinate as u32);
    for (index, &c) in t.colors().iter().enumerate() {
        let v = (index / stride) % sig.kappa();
        match map[v] {
            Some(existing) if existing != c => return None,
            Some(_) => {}
            None => {
                if owner[c].is_some_and(|w| w != v) {
                    return None;
                }
                map[v] = Some(c);
                owner[c] = Some(v);
            }
        }
    }
    map.into_iter().collect()
}

/// The first pair `x <enc y` violating the biconditional at `coordinate`, or
/// `None` if `F` factors injectively through it.
pub fn coordinate_violation(t: &ColoringTable, coordinate: usize) -> Option<CoordinateViolation> {
    if class_map(t, coordinate).is_some() {
        return None;
    }
    let sig = t.sig();
    let points: Vec<FinitePoint> = sig.points().collect();
    let colors = t.colors();
    for x in 0..points.len() {
        for y in x + 1..points.len() {
            let same_value = points[x].coords()[coordinate] == points[y].coords()[coordinate];
            if same_value != (colors[x] == colors[y]) {
                return Some(CoordinateViolation {
                    coordinate,
                    first: points[x].clone(),
                    second: points[y].clone(),
                });
            }
        }
    }
    unreachable!("class map failed without a violating pair")
}

/// Finds `(i, π)` with `F(x) = π(x(i))` for all `x`. Requires `μ = κ`.
pub fn extract_principal_form(t: &ColoringTable) -> Result<PrincipalOutcome, AnalysisError> {
    let sig = t.sig();
    if sig.mu() != sig.kappa() {
        return Err(AnalysisError::MuNotKappa {
            mu: sig.mu(),
            kappa: sig.kappa(),
        });
    }
    for coordinate in 0..sig.lambda() {
        if let Some(map) = class_map(t, coordinate) {
            // injective from κ values into μ = κ colors, hence a bijection
            let permutation = Permutation::new(map).expect("injective self-map of 0..κ");
            return Ok(PrincipalOutcome::Principal(PrincipalForm {
                coordinate,
                permutation,
            }));
        }
    }
    Ok(PrincipalOutcome::NotTrivial(
        (0..sig.lambda())
            .map(|i| coordinate_violation(t, i).unwrap())
            .collect(),
    ))
}

/// Searches for a coordinate `i` with `F(x) = F(y) ⇔ x(i) = y(i)`.
///
/// On success `F = h ∘ x(i)` with `h` injective, which makes `F` a 2-tight
/// proper coloring onto its range whenever `κ ≥ 3` or `λ = 1`.
pub fn classify_2tight(t: &ColoringTable) -> Result<TwoTightOutcome, AnalysisError> {
    require_proper(t)?;
    let sig = t.sig();
    for coordinate in 0..sig.lambda() {
        if let Some(class_map) = class_map(t, coordinate) {
            return Ok(TwoTightOutcome::Factor(FactorClassification {
                coordinate,
                class_map,
            }));
        }
    }
    Ok(TwoTightOutcome::Failure(
        (0..sig.lambda())
            .map(|i| coordinate_violation(t, i).unwrap())
            .collect(),
    ))
}

/// For `y` with `y(i) ∈ {x_0(i), …, x_{n-1}(i)}` at every coordinate,
/// reports whether `F(y) ∈ {F(x_0), …, F(x_{n-1})}`. Holds for every such
/// mix when `F` is 2-tight.
pub fn mix_closure_check(
    t: &ColoringTable,
    points: &[FinitePoint],
    y: &FinitePoint,
) -> Result<bool, AnalysisError> {
    if points.is_empty() {
        return Err(AnalysisError::NoPoints);
    }
    let sig = t.sig();
    sig.encode(y)?;
    let mut colors = Vec::with_capacity(points.len());
    for x in points {
        colors.push(t.eval(x)?);
    }
    for (index, &v) in y.coords().iter().enumerate() {
        if !points.iter().any(|x| x.coords()[index] == v) {
            return Err(AnalysisError::SelectionViolated { index });
        }
    }
    Ok(colors.contains(&t.eval(y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Coord;
    use crate::table::SpaceSig;

    fn fp(v: &[Coord]) -> FinitePoint {
        FinitePoint::new(v.to_vec())
    }

    fn table(
        lambda: usize,
        kappa: usize,
        mu: usize,
        f: impl Fn(&[Coord]) -> Color,
    ) -> ColoringTable {
        let sig = SpaceSig::new(lambda, kappa, mu).unwrap();
        ColoringTable::from_fn(sig, |x| f(x.coords())).unwrap()
    }

    #[test]
    fn extracts_coordinate_and_permutation() {
        let t = table(2, 3, 3, |x| x[1] as Color);
        assert_eq!(
            extract_principal_form(&t).unwrap(),
            PrincipalOutcome::Principal(PrincipalForm {
                coordinate: 1,
                permutation: Permutation::identity(3)
            })
        );
        let t = table(2, 3, 3, |x| ((x[0] + 1) % 3) as Color);
        let PrincipalOutcome::Principal(form) = extract_principal_form(&t).unwrap() else {
            panic!("expected a principal form");
        };
        assert_eq!(form.coordinate, 0);
        assert_eq!(form.permutation, Permutation::rotation(3, 1));
        assert!(SpaceSig::new(2, 3, 3)
            .unwrap()
            .points()
            .all(|x| form.apply(&x) == t.eval(&x).unwrap()));
    }

    #[test]
    fn parity_is_not_trivial() {
        let t = table(3, 2, 2, |x| (x.iter().sum::<Coord>() % 2) as Color);
        let PrincipalOutcome::NotTrivial(violations) = extract_principal_form(&t).unwrap() else {
            panic!("parity must not be trivial");
        };
        assert_eq!(violations.len(), 3);
        // (0,0,0) and (0,1,0) share coordinate 0 but not the parity
        assert_eq!(
            violations[0],
            CoordinateViolation {
                coordinate: 0,
                first: fp(&[0, 0, 0]),
                second: fp(&[0, 1, 0])
            }
        );
    }

    #[test]
    fn classify_recovers_permutation() {
        let pi = Permutation::swap(3, 0, 1).unwrap();
        let t = table(2, 3, 3, |x| pi.apply(x[1] as usize));
        assert_eq!(
            classify_2tight(&t).unwrap(),
            TwoTightOutcome::Factor(FactorClassification {
                coordinate: 1,
                class_map: vec![1, 0, 2]
            })
        );
    }

    #[test]
    fn classify_rejects_fresh_mix_color() {
        // (0,1) mixes c_0 and c_1 but gets its own color
        let t = table(2, 3, 4, |x| match x {
            [0, 1] => 3,
            _ => x[0] as Color,
        });
        let TwoTightOutcome::Failure(v) = classify_2tight(&t).unwrap() else {
            panic!("expected failure");
        };
        assert_eq!(v.len(), 2);
        assert!(v
            .iter()
            .any(|w| w.first == fp(&[0, 1]) || w.second == fp(&[0, 1])));
    }

    #[test]
    fn classify_requires_proper() {
        let t = table(2, 3, 3, |_| 0);
        assert!(matches!(
            classify_2tight(&t),
            Err(AnalysisError::NotProper { .. })
        ));
        assert!(matches!(
            extract_principal_form(&table(2, 3, 4, |x| x[0] as Color)),
            Err(AnalysisError::MuNotKappa { .. })
        ));
    }

    #[test]
    fn mix_closure() {
        let t = table(2, 3, 3, |x| x[0] as Color);
        let xs = [fp(&[0, 1]), fp(&[2, 0])];
        assert!(mix_closure_check(&t, &xs, &fp(&[2, 1])).unwrap());
        assert!(mix_closure_check(&t, &xs[..1], &xs[0]).unwrap());
        assert!(matches!(
            mix_closure_check(&t, &xs, &fp(&[1, 1])),
            Err(AnalysisError::SelectionViolated { index: 0 })
        ));
    }
}
