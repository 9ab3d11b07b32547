//! Restricted root systems of supersymmetric pairs, reflections of bases and
//! highest weights, and a decision procedure for spherical highest weights.

pub mod basegraph;
pub mod catalog;
pub mod closedform;
pub mod crosscheck;
pub mod document;
pub mod error;
pub mod reflections;
pub mod scalar;
pub mod sphericity;
pub mod system;

pub use catalog::{build_pair, list_families, CatalogEntry, PairSpec};
pub use error::{Error, Result};
pub use scalar::{frac, int, Scalar, Weight};
pub use sphericity::{decide_spherical, SphericityContext, SphericityVerdict};
pub use system::{Base, BilinearForm, Multiplicity, RestrictedRootSystem, Root};
