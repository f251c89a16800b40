//! Eilenberg–MacLane simplicial monoids `K(M, n)` for commutative monoids `M`,
//! together with the finite simplicial-set machinery needed to ask horn-filling
//! questions about them.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command-line front end live in the `emspace` crate.
//!
//! Layout:
//! - [`delta`]: monotone maps and the simplex category.
//! - [`sset`]: truncated simplicial sets (`Δ[n]`, `∂Δ[n]`, `Λᵏ[n]`, `Sⁿ`).
//! - [`monoid`]: commutative monoids with capability flags.
//! - [`em`]: the simplicial monoid `K(M, n)` and the nerve view of `K(M, 1)`.
//! - [`horn`]: horn validation, filler search, certificates and sweeps.
#![no_std]

extern crate alloc;

pub mod delta;
pub mod em;
mod error;
pub mod horn;
pub mod monoid;
pub mod sset;

pub use delta::MonotoneMap;
pub use em::{EmSimplex, EmSpace, NerveView};
pub use error::{Error, Result};
pub use horn::{Certificate, FillerResult, HornProblem, HornTarget};
pub use monoid::{Elem, Monoid};
pub use sset::{Simplex, TruncatedSimplicialSet};



