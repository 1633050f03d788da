//! Leveled and planar trees, the Tonks projection and `Δ_K`.

mod blocks;
mod delta_k;
mod leveled;
mod planar;

pub use blocks::{derived_consecutive_blocks, is_nondegenerate_matrix, Line};
pub use delta_k::{delta_k, delta_k_capped, delta_k_shared, f2_terms, DiagonalTermK, DEFAULT_MAX_ARITY};
pub use leveled::{corolla_profile, tonks, LevelCorolla, LeveledTree};
pub use planar::PlanarTree;
