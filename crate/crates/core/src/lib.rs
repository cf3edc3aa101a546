//! Proper colorings of `^λκ`, the powers of the complete graph `K_κ` in
//! which two points are adjacent when they differ at every coordinate.
//!
//! * [`point`]: finite and eventually constant points, difference sets.
//! * [`table`]: exhaustive tables `F: ^λκ → μ` and their JSON form.
//! * [`analysis`]: properness, tightness, minimality, uniformity,
//!   single-coordinate classification and the brute-force oracle.
//! * [`construct`]: trivial, parity, cylinder, partition and composite
//!   colorings, partial extension, almost-disjoint families, minimization.
//! * [`sampling`]: seeded checks for lazy colorings of `^ωω`.
//! * [`cli`]: the `powcolor` command line.
//!
//! ```
//! use powcolor::analysis::{extract_principal_form, is_proper, PrincipalOutcome};
//! use powcolor::construct::trivial;
//! use powcolor::perm::Permutation;
//! use powcolor::table::SpaceSig;
//!
//! let sig = SpaceSig::new(2, 3, 3).unwrap();
//! let t = trivial(sig, 1, &Permutation::rotation(3, 1)).unwrap();
//! assert!(is_proper(&t));
//! assert!(matches!(extract_principal_form(&t).unwrap(), PrincipalOutcome::Principal(_)));
//! ```

pub mod analysis;
mod bitset;
pub mod cli;
pub mod construct;
pub mod perm;
pub mod point;
pub mod sampling;
pub mod table;
