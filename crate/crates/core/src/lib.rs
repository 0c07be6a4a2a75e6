//! Exact invariant theory for Z2-contractions `k = g0 ⋉ g1` of classical
//! reductive Lie algebras.
//!
//! The crate builds symmetric pairs in their block matrix models, contracts
//! them, degenerates classical basic invariants to invariants of the
//! coadjoint representation of the contraction, and checks the resulting
//! systems (degree sums, bi-degrees, independence, tables) with exact
//! rational arithmetic.

pub mod error;
pub mod exactpoly;
pub mod invariants;
pub mod liealg;
pub mod nregular;
pub mod weylf4;

pub use error::{Error, Result};
pub use exactpoly::{BiDegree, Part, Poly, PolyMatrix, Scalar, Space, VarSpace};
pub use invariants::{Status, VerificationReport};
pub use liealg::{Contraction, Family, LieAlgebra, SymmetricPair};
