//! Exact arithmetic for slopes on the boundary torus of a one-cusped
//! hyperbolic 3-manifold.
//!
//! Two functions on slopes live here side by side: the Euclidean length on a
//! horotorus, modelled by an exact Gram matrix of the cusp translation
//! lattice, and the Culler-Shalen norm, modelled as a finite sum of weighted
//! distances to boundary slopes. Irrational quantities such as `2*sqrt(7)` are
//! never approximated: lengths are carried as squared rationals and every
//! comparison between sums of square roots is decided exactly by
//! [`cmp_sqrt3`].
//!
//! The [`verify`] module turns the inequalities relating the two functions
//! into checkers that return a [`VerifyReport`] carrying exact witness values.

pub mod cusp;
pub mod error;
pub mod families;
pub mod io;
pub mod manifold;
pub mod norm;
pub mod rational;
pub mod report;
pub mod slope;
pub mod verify;

pub use cusp::{cmp_sqrt3, CuspLattice, SqrtSum};
pub use error::{Error, Result};
pub use families::{fig8_dataset, pretzel_dataset, twobridge_pair, FamilySpec};
pub use manifold::{ManifoldData, SurfaceData};
pub use norm::{BoundarySlopeSet, CsNormData, NormTerm};
pub use rational::Rational;
pub use report::{Status, Value, VerifyReport};
pub use slope::{distance, normalize_slope, numeric_value, Slope};
