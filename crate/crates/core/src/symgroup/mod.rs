//! Permutations, the standard transversal of `S(m-1) ⊂ S(m)`, coset
//! decomposition and sparse group-algebra arithmetic.

mod algebra;
mod permutation;

pub use algebra::{
    algebra_multiply, conjugation_invariance_check, jm_element, transversal_element, Coefficient,
    GroupAlgebraElement,
};
pub use permutation::{
    all_permutations, coset_decompose, transversal, CosetDecomposition, Permutation,
};
