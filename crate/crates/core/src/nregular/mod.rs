//! N-regular pairs `(gl_{2n}, gl_n ⊕ gl_n)`: explicit generators,
//! centralizer spanning and the partition arithmetic behind the
//! nonnegativity estimate.

mod partition;
mod system;

pub use partition::{
    centralizer_dim_from_partition, centralizer_dim_in_gl, dual_partition, nilpotent_of, uslovie_check, Partition,
};
pub use system::{
    centralizer_dim, centralizer_span_check, nregular_generators, random_regular_in_g1, regular_nilpotent_in_g1,
    NRegularSystem, NREGULAR_CAP,
};
