//! PRIR matrices of `S(n)` in Young's orthogonal form, their restriction
//! block structure, the transversal sum rule, and group-algebra matrix units.
//!
//! Rows and columns are labelled by standard tableaux in last-letter order,
//! so `ψ^μ` restricted to `S(n-1)` is block diagonal with the subgroup irreps
//! `φ^α`, `α = μ - □`, in [`branching_down`](crate::combinatorics::branching_down)
//! order. All entries are real, so the representation is orthogonal and
//! complex conjugation is the identity throughout.

mod structure;
mod units;
mod yor;

pub use structure::{
    factorization_check, restriction_block_residual, sum_rule_residual, RestrictionResidual,
    SumRule,
};
pub use units::{central_idempotent, matrix_unit, MatrixUnit, MatrixUnits};
pub use yor::{
    prir_index_map, represent, subgroup_block_diagonal, yor_matrix, PrirIndex, PrirMatrix,
    YoungOrthogonalForm,
};
