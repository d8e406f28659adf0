//! Tropical moduli spaces of rational curves with marked points.
//!
//! The moduli space of `n`-marked rational tropical curves is a fan whose
//! cones are indexed by combinatorial types of trees. This crate builds it
//! with exact arithmetic, embeds it with double-ratio coordinates and checks
//! the balancing and local smoothness certificates of the resulting fan, the
//! psi-class divisors, forgetful maps and the boundary of the
//! compactification.
//!
//! Runnable walk-throughs live in `examples/`; the `tropmod` binary exposes
//! the same operations from the command line.

pub mod cli;
pub mod divisors;
pub mod error;
pub mod lattice;
pub mod maps;
pub mod moduli;
pub mod number;
pub mod semiring;
pub mod trees;

pub use error::{Error, Result};
pub use number::{EdgeLength, Extended};
pub use trees::{CombinatorialType, Label, LeafSet, Split};
