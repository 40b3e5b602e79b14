use nalgebra::DMatrix;
use serde::Serialize;

use super::{
    compare_spectrum, pair_projector, perm_operator, sym_eigen, ClusteredSpectrum, DimCap,
    TensorOperator, DEFAULT_CLUSTER_TOL,
};
use crate::error::{Error, Result};
use crate::rational::to_f64;
use crate::spectra::{pbt_spectrum_table, SpectrumTable};
use crate::symgroup::{all_permutations, Permutation};

/// The PBT operator on `(C^d)^{⊗(N+l)}` with `N` ports and `l` receivers.
///
/// For `l = 1` this is `Σ_a V((a N)) (1^{⊗N-1} ⊗ P₊) V((a N))`. For `l > 1`
/// it is `1/(N-l)! Σ_{σ ∈ S(N)} V(σ) X V(σ⁻¹)` where `X` places `P₊` on the
/// pairs `(N-l+j, N+j)` and `V` acts on the first `N` factors.
pub fn pbt_operator(ports: usize, d: usize, l: usize, cap: DimCap) -> Result<TensorOperator> {
    if l < 1 {
        return Err(Error::TooSmall {
            what: "l",
            min: 1,
            value: l,
        });
    }
    if ports <= l {
        return Err(Error::TooSmall {
            what: "number of ports",
            min: l + 1,
            value: ports,
        });
    }
    let n = ports + l;
    let dim = cap.space_dim(d, n)?;
    let mut base: Option<DMatrix<f64>> = None;
    for j in 1..=l {
        let pair = pair_projector(d, n, ports - l + j, ports + j, cap)?.into_dense();
        base = Some(match base {
            None => pair,
            Some(b) => b * pair,
        });
    }
    let base = base.expect("l ≥ 1");

    let mut acc = DMatrix::zeros(dim, dim);
    if l == 1 {
        for a in 1..=ports {
            let v = perm_operator(
                &Permutation::transposition(ports, a, ports)?.extend_to(n),
                d,
                cap,
            )?;
            acc += v.conjugate(&base)?;
        }
    } else {
        for sigma in all_permutations(ports) {
            let v = perm_operator(&sigma.extend_to(n), d, cap)?;
            acc += v.conjugate(&base)?;
        }
        let overcount: f64 = (1..=(ports - l)).map(|k| k as f64).product();
        acc /= overcount;
    }
    TensorOperator::dense(d, n, acc)
}

/// Outcome of comparing the brute-force PBT spectrum with the exact table.
#[derive(Debug, Clone, Serialize)]
pub struct PbtVerification {
    pub ports: usize,
    pub d: usize,
    pub spectrum: ClusteredSpectrum,
    /// Distinct predicted eigenvalues with multiplicities, ascending.
    pub predicted: Vec<(f64, u64)>,
    pub max_deviation: f64,
    pub mismatches: Vec<String>,
}

impl PbtVerification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

const EIGEN_TOL: f64 = 1e-8;

/// Diagonalises the single-receiver PBT operator and checks every cluster
/// against [`pbt_spectrum_table`]. With one port the operator is `P₊` itself.
pub fn verify_pbt_spectrum(ports: usize, d: usize, cap: DimCap) -> Result<PbtVerification> {
    let table: SpectrumTable = pbt_spectrum_table(ports, d)?;
    let rho = if ports == 1 {
        pair_projector(d, 2, 1, 2, cap)?
    } else {
        pbt_operator(ports, d, 1, cap)?
    };
    let spectrum = sym_eigen(&rho, DEFAULT_CLUSTER_TOL)?;
    let predicted: Vec<(f64, u64)> = table
        .distinct()
        .iter()
        .map(|(v, m)| (to_f64(v), *m))
        .collect();

    let (max_deviation, mismatches) = compare_spectrum(&spectrum, &predicted, EIGEN_TOL);
    Ok(PbtVerification {
        ports,
        d,
        spectrum,
        predicted,
        max_deviation,
        mismatches,
    })
}
