use crate::perm::Permutation;
use crate::point::FinitePoint;
use crate::table::{ColoringTable, SpaceSig};

use super::ConstructError;

/// `F(x) = π(x(i))` on `^λκ`, with `μ = κ`.
pub fn trivial(
    sig: SpaceSig,
    coordinate: usize,
    pi: &Permutation,
) -> Result<ColoringTable, ConstructError> {
    if sig.mu() != sig.kappa() {
        return Err(ConstructError::MuNotKappa {
            mu: sig.mu(),
            kappa: sig.kappa(),
        });
    }
    if coordinate >= sig.lambda() {
        return Err(ConstructError::CoordinateIndex {
            coordinate,
            lambda: sig.lambda(),
        });
    }
    if pi.len() != sig.kappa() {
        return Err(ConstructError::ColorMapLength {
            found: pi.len(),
            expected: sig.kappa(),
        });
    }
    Ok(ColoringTable::from_fn(sig, |x| {
        pi.apply(x.coords()[coordinate] as usize)
    })?)
}

/// `h ∘ F` for a bijection `h` on `0..μ`.
pub fn recolor(t: &ColoringTable, h: &Permutation) -> Result<ColoringTable, ConstructError> {
    let mu = t.sig().mu();
    if h.len() != mu {
        return Err(ConstructError::ColorMapLength {
            found: h.len(),
            expected: mu,
        });
    }
    Ok(ColoringTable::new(
        t.sig(),
        t.colors().iter().map(|&c| h.apply(c)).collect(),
    )?)
}

/// `G(x) = F(x|X)` on `^λκ`, where `F` colors `^{|X|}κ` and `X` lists
/// coordinates in increasing order.
pub fn cylinder_extend_table(
    t: &ColoringTable,
    coordinates: &[usize],
    lambda: usize,
) -> Result<ColoringTable, ConstructError> {
    let base = t.sig();
    if coordinates.is_empty() {
        return Err(ConstructError::EmptyCoordinates);
    }
    if coordinates.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ConstructError::UnsortedCoordinates);
    }
    if coordinates.len() != base.lambda() {
        return Err(ConstructError::ColorMapLength {
            found: coordinates.len(),
            expected: base.lambda(),
        });
    }
    let last = *coordinates.last().unwrap();
    if last >= lambda {
        return Err(ConstructError::CoordinateIndex {
            coordinate: last,
            lambda,
        });
    }
    let sig = SpaceSig::new(lambda, base.kappa(), base.mu())?;
    let colors = sig
        .points()
        .map(|x: FinitePoint| Ok(t.eval(&x.restrict(coordinates)?)?))
        .collect::<Result<Vec<_>, ConstructError>>()?;
    Ok(ColoringTable::new(sig, colors)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{extract_principal_form, PrincipalForm, PrincipalOutcome};

    #[test]
    fn trivial_tables() {
        let sig = SpaceSig::new(2, 3, 3).unwrap();
        let t = trivial(sig, 0, &Permutation::identity(3)).unwrap();
        assert_eq!(t.colors(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        let sig = SpaceSig::new(1, 2, 2).unwrap();
        let t = trivial(sig, 0, &Permutation::swap(2, 0, 1).unwrap()).unwrap();
        assert_eq!(t.colors(), &[1, 0]);
        assert!(matches!(
            trivial(
                SpaceSig::new(2, 3, 4).unwrap(),
                0,
                &Permutation::identity(3)
            ),
            Err(ConstructError::MuNotKappa { .. })
        ));
    }

    #[test]
    fn recolor_shows_up_in_principal_form() {
        let sig = SpaceSig::new(2, 3, 3).unwrap();
        let t = trivial(sig, 1, &Permutation::identity(3)).unwrap();
        let h = Permutation::swap(3, 0, 2).unwrap();
        let r = recolor(&t, &h).unwrap();
        assert_eq!(
            extract_principal_form(&r).unwrap(),
            PrincipalOutcome::Principal(PrincipalForm {
                coordinate: 1,
                permutation: h
            })
        );
        assert_eq!(recolor(&t, &Permutation::identity(3)).unwrap(), t);
        assert!(recolor(&t, &Permutation::identity(2)).is_err());
    }

    #[test]
    fn cylinder_of_trivial_is_trivial() {
        let pi = Permutation::rotation(3, 1);
        let base = trivial(SpaceSig::new(1, 3, 3).unwrap(), 0, &pi).unwrap();
        let lifted = cylinder_extend_table(&base, &[0], 3).unwrap();
        assert_eq!(
            lifted,
            trivial(SpaceSig::new(3, 3, 3).unwrap(), 0, &pi).unwrap()
        );
        let moved = cylinder_extend_table(&base, &[2], 3).unwrap();
        assert_eq!(
            moved,
            trivial(SpaceSig::new(3, 3, 3).unwrap(), 2, &pi).unwrap()
        );
    }
}
