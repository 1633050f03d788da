//! Slow, independent reimplementations used to check the main pipeline at
//! small sizes. Nothing here calls into the enumeration, projection or
//! evaluation code it checks; only the domain types are shared.

mod closure;
mod naive;

pub use closure::{brute_step_matrices, unrestricted_closure, ORACLE_MAX_N};
pub use naive::{naive_delta_p, naive_tensor_op, naive_tonks, ORACLE_MAX_ARITY};

use serde::Serialize;

use crate::error::Result;
use crate::su_diagonal::{delta_p_top, derived_matrices, enumerate_step_matrices, SparseIntMatrix};

/// Where the unrestricted closure and the derived set disagree.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureDiff {
    pub n: usize,
    pub derived: usize,
    pub closure: usize,
    pub only_in_closure: Vec<SparseIntMatrix>,
    pub only_in_derived: Vec<SparseIntMatrix>,
}

impl ClosureDiff {
    pub fn agrees(&self) -> bool {
        self.only_in_closure.is_empty() && self.only_in_derived.is_empty()
    }
}

pub fn closure_diff(n: usize) -> Result<ClosureDiff> {
    let closure = unrestricted_closure(n)?;
    let derived = derived_matrices(n)?;
    Ok(ClosureDiff {
        n,
        derived: derived.len(),
        closure: closure.len(),
        only_in_closure: closure.iter().filter(|m| !derived.contains(m)).cloned().collect(),
        only_in_derived: derived.matrices().filter(|m| !closure.contains(*m)).cloned().collect(),
    })
}

/// Every oracle against its main-pipeline counterpart at one size.
#[derive(Debug, Clone, Serialize)]
pub struct OracleDiff {
    pub n: usize,
    pub step_matrices_agree: bool,
    pub closure: ClosureDiff,
    pub delta_p_main: usize,
    pub delta_p_naive: usize,
    pub delta_p_agree: bool,
}

impl OracleDiff {
    pub fn agrees(&self) -> bool {
        self.step_matrices_agree && self.closure.agrees() && self.delta_p_agree
    }
}

pub fn oracle_diff(n: usize) -> Result<OracleDiff> {
    let mut brute = brute_step_matrices(n)?;
    brute.sort();
    let mut main = enumerate_step_matrices(n)?;
    main.sort();
    let key = |t: &crate::su_diagonal::DiagonalTermP| (t.left.clone(), t.right.clone());
    let mut naive: Vec<_> = naive_delta_p(n)?.iter().map(key).collect();
    let mut top: Vec<_> = delta_p_top(n)?.iter().map(key).collect();
    naive.sort();
    top.sort();
    Ok(OracleDiff {
        n,
        step_matrices_agree: brute == main,
        closure: closure_diff(n)?,
        delta_p_main: top.len(),
        delta_p_naive: naive.len(),
        delta_p_agree: naive == top,
    })
}
