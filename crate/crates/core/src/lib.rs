//! Exact calculus of weighted orbit spaces for smooth circle actions on
//! 3- and 4-manifolds.
//!
//! The crate validates legally weighted orbit spaces, assembles equivariant
//! plumbing chains of 2-disk bundles, computes integral intersection forms
//! with exact arithmetic, and identifies the underlying manifold as a
//! connected sum over a fixed alphabet of prime summands. A line-oriented
//! description language and a CLI front end (`orbitcalc`) expose the same
//! pipelines on files.
//!
//! All computations are exact: matrices carry arbitrary-precision integers
//! and signatures come from rational congruence diagonalization, never from
//! floating point. Every public operation is a pure function of immutable
//! values and is safe to call concurrently.

pub mod catalog;
pub mod classify3;
pub mod classify4;
pub mod doc;
pub mod intform;
pub mod manifold;
pub mod orbit;
pub mod plumbing;
pub mod run;

pub use intform::{FormInvariants, IntSymMatrix, Parity};
pub use manifold::{ManifoldExpr, Summand};
pub use orbit::{Sign, WeightedArc, WeightedCircle, WeightedOrbitSpace, WeightedSphere};
