//! A∞-structures on cohomology rings of cyclic groups and their tensor
//! products.

mod element;
mod madsen;
mod monomial;
mod stasheff;
mod structure;
mod tensor;

pub use element::{Element, ElementTerm};
pub use madsen::{CyclicFactor, DEFAULT_YCAP};
pub use monomial::{FactorMonomial, Monomial};
pub use stasheff::{stasheff_check, stasheff_sum, Corrupted, StasheffReport, TupleSource, Violation};
pub use structure::{basis_up_to_degree, evaluate_tree, evaluate_tree_basis, op, AInfinity};
pub use tensor::{SignRule, TensorProduct};
