//! Step matrices, shifts, derived matrices and the permutahedral diagonal.

mod derived;
mod matrix;
mod partition;
pub(crate) mod shift;
mod step;

pub use derived::{
    complementary_pairings, delta_p_top, derived_matrices, derived_matrices_capped, DerivedSet, DerivedWitness,
    DiagonalTermP,
};
pub(crate) use derived::walk_from_seed;
pub use matrix::SparseIntMatrix;
pub use partition::OrderedPartition;
pub use shift::Shift;
pub(crate) use step::check_cap;
pub use step::{enumerate_step_matrices, enumerate_step_matrices_capped, DEFAULT_MAX_N};
