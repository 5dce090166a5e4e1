//! Exact computation of Nielsen coincidence numbers `N_r` and minimum
//! numbers `MC` / `MCC` for pairs of maps from spheres to spherical
//! space forms `S^n/G`.
//!
//! The engine is driven by a catalog of homotopy groups of spheres and
//! the homomorphisms between them (suspensions, Hopf-Hilton invariants,
//! the reflection action, boundary maps). Verdicts are decided by exact
//! integer linear algebra — Smith normal form over arbitrary-precision
//! integers — and every headline number can be cross-checked by
//! brute-force enumeration over all pairs of classes.

pub mod abelian;
pub mod catalog;
pub mod census;
pub mod error;
pub mod minimum;
pub mod nielsen;
pub mod types;

pub use abelian::{FgAbGroup, GroupElement, Homomorphism, IntMatrix, Subgroup};
pub use catalog::{Catalog, SphereGroupKey, Wecken};
pub use census::CensusRow;
pub use error::{Error, Result};
pub use minimum::MinimumVerdict;
pub use nielsen::{NielsenQuery, NielsenVerdict};
pub use types::{Cardinality, GroupOrder, Level};
