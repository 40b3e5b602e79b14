//! Brute-force operators on `(C^d)^{⊗n}`.
//!
//! Basis states are indexed by `Σ_k i_k d^{n-k}` with the first tensor factor
//! most significant. `V(σ)` moves factor `k` to position `σ(k)`, so
//! `V(σ)V(τ) = V(στ)`.

mod eigen;
mod operator;
mod pbt;

pub use eigen::{
    cluster_eigenvalues, compare_spectrum, sym_eigen, symmetric_eigenvalues, ClusteredSpectrum,
    DEFAULT_CLUSTER_TOL,
};
pub use operator::{
    entangled_projector, isotypic_projector, jm_tensor, pair_projector, partial_transpose_last,
    perm_operator, DimCap, OperatorData, TensorOperator, DIM_CAP_ENV,
};
pub use pbt::{pbt_operator, verify_pbt_spectrum, PbtVerification};
