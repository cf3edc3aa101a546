//! JSON construction descriptors.
//!
//! ```json
//! {"kind": "trivial", "lambda": 2, "kappa": 3, "coordinate": 0, "permutation": [0, 1, 2]}
//! {"kind": "parity", "k": 1, "m": 2}
//! {"kind": "cylinder", "base": {...}, "coordinates": [0, 1, 2], "lambda": 4}
//! {"kind": "recolor", "base": {...}, "permutation": [1, 0]}
//! {"kind": "partition", "lambda": 3, "kappa": 4,
//!  "pieces": [{"first_coordinate": [0, 1], "coloring": {...}}, ...]}
//! {"kind": "theorem10"}   (alias "composite")
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::table::{ColoringTable, SpaceSig};

use super::{
    composite_coloring, cylinder_extend_table, materialize, parity_coloring, parity_table, recolor,
    trivial, ConstructError, Cylinder, FinitePartition, LazyColoring, PartitionColoring, Piece,
    TableColoring,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Descriptor {
    Trivial {
        lambda: usize,
        kappa: usize,
        #[serde(alias = "i")]
        coordinate: usize,
        /// Identity when absent.
        #[serde(default, alias = "pi", skip_serializing_if = "Option::is_none")]
        permutation: Option<Permutation>,
    },
    Parity {
        k: usize,
        m: usize,
    },
    Cylinder {
        base: Box<Descriptor>,
        coordinates: Vec<usize>,
        lambda: usize,
    },
    Recolor {
        base: Box<Descriptor>,
        permutation: Permutation,
    },
    Partition {
        lambda: usize,
        kappa: usize,
        pieces: Vec<PieceDescriptor>,
    },
    #[serde(rename = "theorem10", alias = "composite")]
    Composite,
}

/// The piece `{x : x(0) ∈ first_coordinate}` colored by `coloring`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDescriptor {
    pub first_coordinate: Vec<u64>,
    pub coloring: Descriptor,
}

impl Descriptor {
    pub fn from_json(text: &str) -> Result<Self, ConstructError> {
        serde_json::from_str(text).map_err(|e| ConstructError::Descriptor(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptors serialize")
    }

    /// Whether the descriptor names a coloring of all of `^ωω` rather than
    /// a finite table.
    pub fn is_infinite(&self) -> bool {
        match self {
            Descriptor::Composite => true,
            Descriptor::Cylinder { base, .. } => base.is_infinite(),
            _ => false,
        }
    }

    /// The finite table this descriptor denotes.
    ///
    /// `sig` is required for the composite, which is truncated to `^λκ`. For
    /// other kinds it must agree on `λ` and `κ`; a different `μ` re-declares
    /// the color bound.
    pub fn table(&self, sig: Option<SpaceSig>) -> Result<ColoringTable, ConstructError> {
        let built = match self {
            Descriptor::Composite => {
                let sig = sig.ok_or(ConstructError::NeedsSignature)?;
                let t = materialize(&composite_coloring(), sig.lambda(), sig.kappa())?.table;
                return Ok(if sig.mu() == t.sig().mu() {
                    t
                } else {
                    t.with_mu(sig.mu())?
                });
            }
            Descriptor::Trivial {
                lambda,
                kappa,
                coordinate,
                permutation,
            } => {
                let pi = permutation
                    .clone()
                    .unwrap_or_else(|| Permutation::identity(*kappa));
                trivial(SpaceSig::new(*lambda, *kappa, *kappa)?, *coordinate, &pi)?
            }
            Descriptor::Parity { k, m } => parity_table(*k, *m)?,
            Descriptor::Cylinder {
                base,
                coordinates,
                lambda,
            } => cylinder_extend_table(&base.table(None)?, coordinates, *lambda)?,
            Descriptor::Recolor { base, permutation } => recolor(&base.table(None)?, permutation)?,
            Descriptor::Partition {
                lambda,
                kappa,
                pieces,
            } => partition_table(*lambda, *kappa, pieces)?,
        };
        match sig {
            None => Ok(built),
            Some(sig) => {
                let own = built.sig();
                if (own.lambda(), own.kappa()) != (sig.lambda(), sig.kappa()) {
                    return Err(ConstructError::Descriptor(format!(
                        "descriptor builds ^{}{} but --sig asks for ^{}{}",
                        own.lambda(),
                        own.kappa(),
                        sig.lambda(),
                        sig.kappa()
                    )));
                }
                Ok(built.with_mu(sig.mu())?)
            }
        }
    }

    /// A lazy evaluator. Finite kinds are read through their table with
    /// tag 0.
    pub fn lazy(&self) -> Result<Arc<dyn LazyColoring>, ConstructError> {
        Ok(match self {
            Descriptor::Composite => Arc::new(composite_coloring()),
            Descriptor::Parity { k, m } => {
                parity_table(*k, *m)?;
                Arc::new(parity_coloring(*k))
            }
            Descriptor::Cylinder {
                base,
                coordinates,
                lambda,
            } if base.is_infinite() => {
                if coordinates.last().is_some_and(|&c| c >= *lambda) {
                    return Err(ConstructError::CoordinateIndex {
                        coordinate: *coordinates.last().unwrap(),
                        lambda: *lambda,
                    });
                }
                Arc::new(Cylinder::new(coordinates.clone(), base.lazy()?)?)
            }
            _ => Arc::new(TableColoring::new(self.table(None)?, 0)),
        })
    }
}

fn partition_table(
    lambda: usize,
    kappa: usize,
    pieces: &[PieceDescriptor],
) -> Result<ColoringTable, ConstructError> {
    let sig = SpaceSig::new(lambda, kappa, 1)?;
    let mut built = Vec::with_capacity(pieces.len());
    for (i, p) in pieces.iter().enumerate() {
        let t = if p.coloring.is_infinite() {
            materialize(&*p.coloring.lazy()?, lambda, kappa)?.table
        } else {
            p.coloring.table(None)?
        };
        if (t.sig().lambda(), t.sig().kappa()) != (lambda, kappa) {
            return Err(ConstructError::Descriptor(format!(
                "piece {i} is colored on ^{}{}, not ^{lambda}{kappa}",
                t.sig().lambda(),
                t.sig().kappa()
            )));
        }
        built.push(Piece::by_first_coordinate(
            i as u64,
            p.first_coordinate.iter().copied().collect(),
            Arc::new(TableColoring::new(t, i as u64)),
        ));
    }
    let induced = PartitionColoring::new(FinitePartition::new(built));
    let points: Vec<_> = sig.points().collect();
    induced.verify_on(&points)?;
    Ok(materialize(&induced, lambda, kappa)?.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_proper;

    #[test]
    fn parses_and_builds() {
        let d = Descriptor::from_json(r#"{"kind":"trivial","lambda":2,"kappa":3,"i":0}"#).unwrap();
        assert_eq!(
            d.table(None).unwrap().colors(),
            &[0, 1, 2, 0, 1, 2, 0, 1, 2]
        );
        let d = Descriptor::from_json(r#"{"kind":"parity","k":1,"m":2}"#).unwrap();
        let t = d.table(None).unwrap();
        assert_eq!(t.sig().size(), 8);
        assert_eq!(t.range().len(), 2);
        assert!(Descriptor::from_json(r#"{"kind":"parity","k":1,"m":3}"#)
            .unwrap()
            .table(None)
            .is_err());
        assert!(Descriptor::from_json(r#"{"kind":"parity","k":1,"m":2,"x":0}"#).is_err());
        assert!(matches!(
            Descriptor::from_json(r#"{"kind":"theorem10"}"#)
                .unwrap()
                .table(None),
            Err(ConstructError::NeedsSignature)
        ));
    }

    #[test]
    fn round_trips_through_json() {
        let d = Descriptor::Recolor {
            base: Box::new(Descriptor::Trivial {
                lambda: 2,
                kappa: 2,
                coordinate: 1,
                permutation: None,
            }),
            permutation: Permutation::swap(2, 0, 1).unwrap(),
        };
        assert_eq!(Descriptor::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(d.table(None).unwrap().colors(), &[1, 1, 0, 0]);
    }

    #[test]
    fn two_piece_partition() {
        let text = r#"{"kind":"partition","lambda":3,"kappa":4,"pieces":[
            {"first_coordinate":[0,1],"coloring":{"kind":"parity","k":1,"m":4}},
            {"first_coordinate":[2,3],"coloring":{"kind":"parity","k":1,"m":4}}]}"#;
        let t = Descriptor::from_json(text).unwrap().table(None).unwrap();
        assert!(is_proper(&t));
        // same classes as the single parity table, under other color names
        let whole = parity_table(1, 4).unwrap();
        let (a, b) = (t.colors(), whole.colors());
        for x in 0..a.len() {
            for y in 0..a.len() {
                assert_eq!(a[x] == a[y], b[x] == b[y]);
            }
        }

        // a piece coloring that splits its piece is refused
        let text = r#"{"kind":"partition","lambda":2,"kappa":3,"pieces":[
            {"first_coordinate":[0],"coloring":{"kind":"trivial","lambda":2,"kappa":3,"coordinate":1}},
            {"first_coordinate":[1,2],"coloring":{"kind":"trivial","lambda":2,"kappa":3,"coordinate":0}}]}"#;
        assert!(matches!(
            Descriptor::from_json(text).unwrap().table(None),
            Err(ConstructError::Partition(_))
        ));
    }

    #[test]
    fn truncated_composite() {
        let d = Descriptor::Composite;
        let t = d.table(Some(SpaceSig::new(3, 4, 10).unwrap())).unwrap();
        assert_eq!(t.range().len(), 10);
        assert!(is_proper(&t));
        assert!(d.lazy().is_ok());
        assert_eq!(d.to_json(), r#"{"kind":"theorem10"}"#);
        assert_eq!(Descriptor::from_json(r#"{"kind":"composite"}"#).unwrap(), d);
    }
}
