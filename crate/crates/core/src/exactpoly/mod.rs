//! Exact rational arithmetic and sparse multivariate polynomials.

pub mod linalg;
mod matrix;
mod poly;
mod sampling;
mod scalar;
mod varspace;

pub use matrix::{pfaffian_with, scalar_pfaffian, PolyMatrix};
pub use poly::{BiDegree, Monomial, Poly, Ring};
pub use sampling::{
    independence_test, jacobian_at, jacobian_rank_at, jacobian_rank_at_map, point_from_map,
    schwartz_zippel_bound, IndependenceVerdict, Sampler, MAX_RESAMPLES, SAMPLE_BOUND,
};
pub use scalar::Scalar;
pub use varspace::{Part, Space, VarSpace};
pub(crate) use varspace::same_space;
