//! Exact arithmetic for finitely generated abelian groups and their
//! homomorphisms: the substrate for every kernel, image and order
//! computation in the engine.
//!
//! Everything here is immutable after construction and freely shareable
//! across threads; enumeration iterators are independent per caller.

pub mod group;
pub mod hom;
pub mod matrix;
pub mod snf;
pub mod subgroup;

pub use group::{ElementIter, FgAbGroup, GroupElement};
pub use hom::Homomorphism;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, Snf};
pub use subgroup::{image, integer_kernel_basis, kernel, kernel_cardinality, solve, Subgroup};
