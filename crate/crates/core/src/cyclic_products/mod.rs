//! Computations specific to `H*(C_n × C_m)`: snake matrices, witnesses of
//! non-vanishing, arity scans and the `C₄ × C₄` example.

mod example;
mod snake;
mod support;
mod witness;

pub use example::{
    c4c4_example, check_m4_table, check_m6, C4C4Report, IdentityCheck, M4Report, M6Report, M4_TABLE,
    M6_CLAIMED_COUNT, M6_WITNESS, M6_WITNESS_VALUE,
};
pub use snake::{l_step_matrix, snake_matrix, snake_trees, verify_snake_derived, SnakeSpec, Variant};
pub use support::{arity_support, nonzero_patterns, pattern_counts, ArityWitness, AritySupportReport, PatternValue};
pub use witness::{evaluate_on, evaluate_witness, witness_argument, WitnessMode};
