//! The Saneblidze-Umble diagonal on associahedra and the tensor product of
//! A∞-algebras it induces, with the cyclic-group cohomology computations
//! built on top of it.

pub mod ainf;
pub mod cyclic_products;
pub mod error;
pub mod field;
pub mod oracle;
pub mod su_diagonal;
pub mod trees;

pub use error::{Error, Result};
pub use field::Scalar;
pub use su_diagonal::{
    complementary_pairings, delta_p_top, derived_matrices, enumerate_step_matrices, DerivedSet, DiagonalTermP,
    OrderedPartition, Shift, SparseIntMatrix,
};
pub use trees::{delta_k, tonks, DiagonalTermK, PlanarTree};
pub use ainf::{AInfinity, CyclicFactor, Element, Monomial, TensorProduct};
