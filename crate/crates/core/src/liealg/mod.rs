//! Lie algebras by structure constants, classical matrix models, symmetric
//! pairs with their slices, Z2-contractions and the index machinery.

mod algebra;
mod classical;
mod derivation;
mod index;
mod pair;

pub use algebra::{LieAlgebra, SparseVec};
pub use classical::{build_classical, build_classical_with_cap, Family, MatrixModel, DEFAULT_ORDER_CAP};
pub use derivation::{
    adjoint_derivation, coadjoint_derivation, derivation, first_non_annihilating, is_invariant, Representation,
};
pub use index::{dim_stab_formula_check, g0_regular_sample, index_estimate, stabilizer_dim_at, REGULARITY_SAMPLES};
pub use pair::{Contraction, Slice, SymmetricPair};

/// Builds the pair for `family` with `n >= m` under the default size cap.
pub fn build_symmetric_pair(family: Family, n: usize, m: usize) -> crate::Result<SymmetricPair> {
    SymmetricPair::new(family, n, m)
}

pub fn contract(pair: &SymmetricPair) -> Contraction {
    pair.contract()
}
