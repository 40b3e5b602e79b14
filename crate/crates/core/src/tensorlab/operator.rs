use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::combinatorics::{character, dimension, Partition};
use crate::error::{Error, Result};
use crate::symgroup::{all_permutations, Permutation};

pub const DIM_CAP_ENV: &str = "PRIRLAB_DIM_CAP";

/// Upper bound on `d^n` for any operator built here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimCap(pub usize);

impl Default for DimCap {
    fn default() -> Self {
        DimCap(4096)
    }
}

impl DimCap {
    /// Reads `PRIRLAB_DIM_CAP`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(DIM_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(DimCap)
            .unwrap_or_default()
    }

    /// `d^n`, or an error if it exceeds the cap.
    pub fn space_dim(&self, d: usize, n: usize) -> Result<usize> {
        match d.checked_pow(n as u32) {
            Some(dim) if dim <= self.0 => Ok(dim),
            Some(dim) => Err(Error::DimensionCap { dim, cap: self.0 }),
            None => Err(Error::DimensionCap {
                dim: usize::MAX,
                cap: self.0,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OperatorData {
    /// `images[input] = output` for a 0/1 permutation matrix.
    Permutation(Vec<usize>),
    Dense(DMatrix<f64>),
}

/// A real operator on `(C^d)^{⊗n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorOperator {
    pub d: usize,
    pub n: usize,
    pub data: OperatorData,
}

impl TensorOperator {
    pub fn dense(d: usize, n: usize, matrix: DMatrix<f64>) -> Result<Self> {
        let dim = d.pow(n as u32);
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DegreeMismatch {
                expected: dim,
                found: matrix.nrows(),
            });
        }
        Ok(TensorOperator {
            d,
            n,
            data: OperatorData::Dense(matrix),
        })
    }

    pub fn identity(d: usize, n: usize, cap: DimCap) -> Result<Self> {
        let dim = cap.space_dim(d, n)?;
        Ok(TensorOperator {
            d,
            n,
            data: OperatorData::Permutation((0..dim).collect()),
        })
    }

    pub fn dim(&self) -> usize {
        match &self.data {
            OperatorData::Permutation(images) => images.len(),
            OperatorData::Dense(m) => m.nrows(),
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        match &self.data {
            OperatorData::Dense(m) => m.clone(),
            OperatorData::Permutation(images) => {
                let mut m = DMatrix::zeros(images.len(), images.len());
                for (input, &output) in images.iter().enumerate() {
                    m[(output, input)] = 1.0;
                }
                m
            }
        }
    }

    pub fn into_dense(self) -> DMatrix<f64> {
        match self.data {
            OperatorData::Dense(m) => m,
            _ => self.to_dense(),
        }
    }

    fn check_same_space(&self, other: &TensorOperator) -> Result<()> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::DegreeMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// Operator product `self · other`.
    pub fn compose(&self, other: &TensorOperator) -> Result<TensorOperator> {
        self.check_same_space(other)?;
        let data = match (&self.data, &other.data) {
            (OperatorData::Permutation(a), OperatorData::Permutation(b)) => {
                OperatorData::Permutation(b.iter().map(|&x| a[x]).collect())
            }
            _ => OperatorData::Dense(self.to_dense() * other.to_dense()),
        };
        Ok(TensorOperator { data, ..*self })
    }

    pub fn add(&self, other: &TensorOperator) -> Result<TensorOperator> {
        self.check_same_space(other)?;
        Ok(TensorOperator {
            data: OperatorData::Dense(self.to_dense() + other.to_dense()),
            ..*self
        })
    }

    pub fn scale(&self, factor: f64) -> TensorOperator {
        TensorOperator {
            data: OperatorData::Dense(self.to_dense() * factor),
            ..*self
        }
    }

    pub fn transpose(&self) -> TensorOperator {
        let data = match &self.data {
            OperatorData::Permutation(images) => {
                let mut inv = vec![0; images.len()];
                for (i, &o) in images.iter().enumerate() {
                    inv[o] = i;
                }
                OperatorData::Permutation(inv)
            }
            OperatorData::Dense(m) => OperatorData::Dense(m.transpose()),
        };
        TensorOperator { data, ..*self }
    }

    /// `self · M · self⁻¹` for a permutation operator `self`.
    pub fn conjugate(&self, m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        match &self.data {
            OperatorData::Permutation(images) => {
                let n = images.len();
                if m.nrows() != n {
                    return Err(Error::DegreeMismatch {
                        expected: n,
                        found: m.nrows(),
                    });
                }
                Ok(reindex(m, images))
            }
            OperatorData::Dense(v) => Ok(v * m * v.transpose()),
        }
    }

    pub fn trace(&self) -> f64 {
        match &self.data {
            OperatorData::Permutation(images) => {
                images.iter().enumerate().filter(|(i, o)| i == *o).count() as f64
            }
            OperatorData::Dense(m) => m.trace(),
        }
    }

    /// `max |M - Mᵀ|`.
    pub fn asymmetry(&self) -> f64 {
        let m = self.to_dense();
        (&m - m.transpose()).amax()
    }

    /// `self ⊗ 1^{⊗extra}`.
    pub fn extend_identity(&self, extra: usize, cap: DimCap) -> Result<TensorOperator> {
        let big = cap.space_dim(self.d, self.n + extra)?;
        let block = self.d.pow(extra as u32);
        let m = self.to_dense();
        let mut out = DMatrix::zeros(big, big);
        for c in 0..m.ncols() {
            for r in 0..m.nrows() {
                let v = m[(r, c)];
                if v != 0.0 {
                    for u in 0..block {
                        out[(r * block + u, c * block + u)] = v;
                    }
                }
            }
        }
        TensorOperator::dense(self.d, self.n + extra, out)
    }
}

fn reindex(m: &DMatrix<f64>, images: &[usize]) -> DMatrix<f64> {
    let n = images.len();
    let mut out = DMatrix::zeros(n, n);
    for c in 0..n {
        for r in 0..n {
            out[(images[r], images[c])] = m[(r, c)];
        }
    }
    out
}

fn digits(mut index: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = index % d;
        index /= d;
    }
    out
}

fn undigits(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

fn check_local_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::TooSmall {
            what: "local dimension d",
            min: 2,
            value: d,
        });
    }
    Ok(())
}

/// `V(σ)` on `(C^d)^{⊗n}` with `n = deg σ`.
pub fn perm_operator(sigma: &Permutation, d: usize, cap: DimCap) -> Result<TensorOperator> {
    check_local_dim(d)?;
    let n = sigma.degree();
    let dim = cap.space_dim(d, n)?;
    let mut out = vec![0; n];
    let images = (0..dim)
        .map(|input| {
            for (k, x) in digits(input, d, n).into_iter().enumerate() {
                out[sigma.apply(k + 1) - 1] = x;
            }
            undigits(&out, d)
        })
        .collect();
    Ok(TensorOperator {
        d,
        n,
        data: OperatorData::Permutation(images),
    })
}

/// The unnormalised projector `P₊ = |φ₊⟩⟨φ₊|`, `φ₊ = Σ_i |ii⟩`.
pub fn entangled_projector(d: usize) -> Result<TensorOperator> {
    check_local_dim(d)?;
    pair_projector(d, 2, 1, 2, DimCap(usize::MAX))
}

/// `P₊` acting on factors `a` and `b` (1-based) of `(C^d)^{⊗n}`, identity on
/// the rest.
pub fn pair_projector(
    d: usize,
    n: usize,
    a: usize,
    b: usize,
    cap: DimCap,
) -> Result<TensorOperator> {
    check_local_dim(d)?;
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return Err(Error::IndexOutOfRange(format!("factors ({a}, {b}) of {n}")));
    }
    let dim = cap.space_dim(d, n)?;
    let mut m = DMatrix::zeros(dim, dim);
    for x in 0..dim {
        let dx = digits(x, d, n);
        if dx[a - 1] != dx[b - 1] {
            continue;
        }
        let mut dy = dx.clone();
        for v in 0..d {
            dy[a - 1] = v;
            dy[b - 1] = v;
            m[(x, undigits(&dy, d))] = 1.0;
        }
    }
    TensorOperator::dense(d, n, m)
}

/// `J_m = Σ_{a<m} V((a m))` on `(C^d)^{⊗m}`.
pub fn jm_tensor(m: usize, d: usize, cap: DimCap) -> Result<TensorOperator> {
    check_local_dim(d)?;
    if m < 2 {
        return Err(Error::TooSmall {
            what: "m",
            min: 2,
            value: m,
        });
    }
    let dim = cap.space_dim(d, m)?;
    let mut acc = DMatrix::zeros(dim, dim);
    for a in 1..m {
        let v = perm_operator(&Permutation::transposition(m, a, m)?, d, cap)?;
        if let OperatorData::Permutation(images) = &v.data {
            for (i, &o) in images.iter().enumerate() {
                acc[(o, i)] += 1.0;
            }
        }
    }
    TensorOperator::dense(d, m, acc)
}

/// Transpose on the last tensor factor only.
pub fn partial_transpose_last(op: &TensorOperator) -> TensorOperator {
    let d = op.d;
    let m = op.to_dense();
    let dim = m.nrows();
    let out = DMatrix::from_fn(dim, dim, |r, c| {
        let (rb, rl) = (r / d, r % d);
        let (cb, cl) = (c / d, c % d);
        m[(rb * d + cl, cb * d + rl)]
    });
    TensorOperator {
        data: OperatorData::Dense(out),
        ..*op
    }
}

/// `Π_α = (d_α/k!) Σ_{σ ∈ S(k)} χ^α(σ) V(σ)` on `(C^d)^{⊗k}`.
pub fn isotypic_projector(alpha: &Partition, d: usize, cap: DimCap) -> Result<TensorOperator> {
    check_local_dim(d)?;
    let k = alpha.size();
    let dim = cap.space_dim(d, k)?;
    let group = all_permutations(k);
    let mut chars: HashMap<Partition, BigInt> = HashMap::new();
    let mut acc = DMatrix::zeros(dim, dim);
    for sigma in &group {
        let ct = sigma.cycle_type();
        let chi = match chars.get(&ct) {
            Some(c) => c.clone(),
            None => {
                let c = character(alpha, &ct)?;
                chars.insert(ct, c.clone());
                c
            }
        };
        let chi = chi.to_f64().expect("character fits in f64");
        if chi == 0.0 {
            continue;
        }
        if let OperatorData::Permutation(images) = perm_operator(sigma, d, cap)?.data {
            for (i, &o) in images.iter().enumerate() {
                acc[(o, i)] += chi;
            }
        }
    }
    acc *= dimension(alpha) as f64 / group.len() as f64;
    TensorOperator::dense(d, k, acc)
}
