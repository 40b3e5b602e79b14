//! Computational workbench for partially reduced irreducible representations
//! (PRIRs) of the symmetric-group chain S(m-1) ⊂ S(m).
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: partitions, tableaux, dimensions, characters and
//!   Schur-Weyl multiplicities in exact arithmetic.
//! * [`symgroup`]: permutations, the standard transversal `{(a m)}`, coset
//!   decomposition and sparse group-algebra arithmetic.
//! * [`prir`]: Young orthogonal form as the PRIR realisation, restriction
//!   block structure, matrix units and the transversal sum rule.
//! * [`induction`]: induced representations inside `C[S(m)]`, the reduction
//!   matrix `U(β)` and the constructive Frobenius reciprocity check.
//! * [`spectra`]: exact rational spectra of Jucys-Murphy elements and of the
//!   port-based teleportation operator.
//! * [`tensorlab`]: brute-force operators on `(C^d)^{⊗n}` with an in-house
//!   Jacobi eigensolver, used as an independent oracle.
//! * [`cli`]: the `prirlab` command-line surface.
//!
//! Permutations compose right-to-left everywhere: `(p * q)(x) = p(q(x))`.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod induction;
pub mod prir;
pub mod rational;
pub mod spectra;
pub mod symgroup;
pub mod tensorlab;

pub use error::{Error, Result};
pub use rational::Rational;
