//! Induced representations `Ind↑_{S(m-1)}^{S(m)} φ^β` realised inside
//! `C[S(m)]`, the reduction matrix `U(β)` built from PRIR entries on the
//! transversal, and two independent routes to Frobenius reciprocity.
//!
//! Natural basis vectors are `t_k E^β_{i j}` (transversal index `k` outer,
//! `i` inner). Everything is real, so the complex conjugates in the
//! definition of `U(β)` are no-ops.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{
    branching_down, branching_up, character, dimension, partitions_of, Partition,
};
use crate::error::{Error, Result};
use crate::prir::{MatrixUnits, PrirIndex, YoungOrthogonalForm};
use crate::symgroup::{
    all_permutations, coset_decompose, transversal, GroupAlgebraElement, Permutation,
};
use crate::tensorlab::symmetric_eigenvalues;

/// Multiplicity of each `μ ⊢ m`, listed over all partitions in
/// reverse-lexicographic order (zeros included).
pub type Multiplicities = Vec<(Partition, u64)>;

/// Column label `(t_k, k_β)` of the natural induced basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InducedIndex {
    /// 0-based transversal position.
    pub coset: usize,
    /// `k_β`, 1-based.
    pub inner: usize,
}

/// Row label `(μ, b_β, α(a_α), l_α)` of the reduced basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedIndex {
    pub mu: Partition,
    /// `b_β`, the copy of `β` inside `μ`; always 1 here.
    pub copy: usize,
    pub prir: PrirIndex,
}

fn check_beta(beta: &Partition, m: usize) -> Result<()> {
    if m == 0 || beta.size() + 1 != m {
        return Err(Error::DegreeMismatch {
            expected: m.saturating_sub(1),
            found: beta.size(),
        });
    }
    Ok(())
}

/// The `s·d_β` vectors `t_k E^β_{i j}` spanning one copy `I^β_j` of the
/// induced representation inside `C[S(m)]`.
#[derive(Debug, Clone)]
pub struct InducedBasis {
    pub beta: Partition,
    pub m: usize,
    pub j_fixed: usize,
    pub vectors: Vec<GroupAlgebraElement<f64>>,
}

impl InducedBasis {
    /// Gram matrix under the coefficient inner product `⟨x, y⟩ = Σ_σ x_σ y_σ`.
    pub fn gram_matrix(&self) -> DMatrix<f64> {
        let n = self.vectors.len();
        DMatrix::from_fn(n, n, |a, b| {
            self.vectors[a]
                .terms()
                .map(|(s, c)| c * self.vectors[b].coefficient(s))
                .sum()
        })
    }

    /// Numerical rank of the Gram matrix.
    pub fn rank(&self, tol: f64) -> Result<usize> {
        let eig = symmetric_eigenvalues(&self.gram_matrix())?;
        Ok(eig.iter().filter(|&&l| l > tol).count())
    }
}

/// The basis of `I^β_j`, checked to be linearly independent through the
/// rank of its Gram matrix.
pub fn induced_basis(beta: &Partition, m: usize, j: usize) -> Result<InducedBasis> {
    check_beta(beta, m)?;
    let d = dimension(beta);
    if j == 0 || j > d {
        return Err(Error::IndexOutOfRange(format!("j = {j} for d_β = {d}")));
    }
    let units = MatrixUnits::new(beta);
    let embedded: Vec<GroupAlgebraElement<f64>> = (0..d)
        .map(|i| {
            let terms = units.get(i, j - 1).terms().map(|(s, c)| (s.extend(), *c));
            GroupAlgebraElement::from_terms(m, terms)
        })
        .collect::<Result<_>>()?;
    let mut vectors = Vec::with_capacity(m * d);
    for t in transversal(m) {
        for e in &embedded {
            vectors.push(e.left_translate(&t)?);
        }
    }
    let basis = InducedBasis {
        beta: beta.clone(),
        m,
        j_fixed: j,
        vectors,
    };
    let rank = basis.rank(1e-9)?;
    if rank != basis.vectors.len() {
        return Err(Error::Inconsistent(format!(
            "induced basis for {beta} has rank {rank} < {}",
            basis.vectors.len()
        )));
    }
    Ok(basis)
}

/// Matrix of `g` on the natural induced basis, from `g t_k = t_p h_k`:
/// block `(p, k)` is `φ^β(h_k)`, all other blocks vanish.
pub fn induced_action_matrix(beta: &Partition, m: usize, g: &Permutation) -> Result<DMatrix<f64>> {
    check_beta(beta, m)?;
    induced_action_with(&YoungOrthogonalForm::new(beta), m, g)
}

fn induced_action_with(
    form: &YoungOrthogonalForm,
    m: usize,
    g: &Permutation,
) -> Result<DMatrix<f64>> {
    if g.degree() != m {
        return Err(Error::DegreeMismatch {
            expected: m,
            found: g.degree(),
        });
    }
    let d = form.dim();
    let mut out = DMatrix::zeros(m * d, m * d);
    for (k, t) in transversal(m).iter().enumerate() {
        let dec = coset_decompose(&(g * t))?;
        let h = dec.subgroup.restrict().expect("coset factor fixes m");
        let phi = form.matrix(&h)?;
        out.view_mut((dec.index * d, k * d), (d, d)).copy_from(&phi);
    }
    Ok(out)
}

/// The orthogonal matrix `U(β)` carrying the natural induced basis to the
/// PRIR matrix-unit basis.
#[derive(Debug, Clone)]
pub struct ReductionMatrix {
    pub beta: Partition,
    pub m: usize,
    pub entries: DMatrix<f64>,
    pub row_index: Vec<ReducedIndex>,
    pub col_index: Vec<InducedIndex>,
}

impl ReductionMatrix {
    /// `max(|U Uᵀ - I|, |Uᵀ U - I|)`.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.entries.nrows();
        let id = DMatrix::<f64>::identity(n, n);
        let rows = (&self.entries * self.entries.transpose() - &id).amax();
        let cols = (self.entries.transpose() * &self.entries - &id).amax();
        rows.max(cols)
    }

    /// Rows belonging to `μ`, as a contiguous range.
    pub fn block(&self, mu: &Partition) -> Option<std::ops::Range<usize>> {
        let start = self.row_index.iter().position(|r| &r.mu == mu)?;
        let len = self.row_index.iter().filter(|r| &r.mu == mu).count();
        Some(start..start + len)
    }
}

/// `U(β)[(μ,1,α,l), (t_k,k_β)] = √(d_μ/(s·d_β)) · ψ^μ[(α,l),(β,k_β)](t_k)`.
///
/// Rows: every `μ ⊢ m` containing `β`, in reverse-lexicographic order, then
/// PRIR index order inside `μ`.
pub fn build_u(beta: &Partition, m: usize) -> Result<ReductionMatrix> {
    check_beta(beta, m)?;
    let d_beta = dimension(beta);
    let size = m * d_beta;
    let ts = transversal(m);
    let col_index: Vec<InducedIndex> = (0..m)
        .flat_map(|coset| (1..=d_beta).map(move |inner| InducedIndex { coset, inner }))
        .collect();

    let mut entries = DMatrix::zeros(size, size);
    let mut row_index = Vec::with_capacity(size);
    for (mu, _) in branching_up(beta) {
        let form = YoungOrthogonalForm::new(&mu);
        let range = form
            .blocks()
            .iter()
            .find(|(a, _)| a == beta)
            .map(|(_, r)| r.clone())
            .expect("β is a branch of μ");
        let scale = (form.dim() as f64 / (m * d_beta) as f64).sqrt();
        let psi: Vec<DMatrix<f64>> = ts.iter().map(|t| form.matrix(t)).collect::<Result<_>>()?;
        for (r, prir) in form.index_map().iter().enumerate() {
            let row = row_index.len();
            if row >= size {
                return Err(Error::Inconsistent(
                    "U(β) has more rows than columns".into(),
                ));
            }
            for (c, col) in col_index.iter().enumerate() {
                entries[(row, c)] = scale * psi[col.coset][(r, range.start + col.inner - 1)];
            }
            row_index.push(ReducedIndex {
                mu: mu.clone(),
                copy: 1,
                prir: prir.clone(),
            });
        }
    }
    if row_index.len() != size {
        return Err(Error::Inconsistent(format!(
            "U(β) has {} rows, expected {size}",
            row_index.len()
        )));
    }
    Ok(ReductionMatrix {
        beta: beta.clone(),
        m,
        entries,
        row_index,
        col_index,
    })
}

/// Result of reducing `Ind↑ φ^β` with `U(β)`.
#[derive(Debug, Clone, Serialize)]
pub struct InducedReduction {
    pub multiplicities: Multiplicities,
    /// Largest entry of a conjugated generator coupling two different blocks.
    pub off_block_residual: f64,
    /// Largest deviation of an identified block from the Young orthogonal
    /// generator of its irrep.
    pub block_residual: f64,
}

const BLOCK_TOL: f64 = 1e-8;

/// Conjugates the induced action of each generator `s_i` by `U(β)`, splits
/// the result into its connected blocks, and identifies every block with the
/// irrep whose Young orthogonal generators it reproduces.
pub fn reduce_induced(beta: &Partition, m: usize) -> Result<InducedReduction> {
    let u = build_u(beta, m)?;
    let beta_form = YoungOrthogonalForm::new(beta);
    let n = u.entries.nrows();
    let conjugated: Vec<DMatrix<f64>> = (1..m)
        .map(|i| {
            let g = Permutation::adjacent(m, i)?;
            let action = induced_action_with(&beta_form, m, &g)?;
            Ok(&u.entries * action * u.entries.transpose())
        })
        .collect::<Result<_>>()?;

    // connected components of the joint sparsity pattern
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for c in &conjugated {
        for a in 0..n {
            for b in 0..n {
                if a != b && c[(a, b)].abs() > BLOCK_TOL {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut root_of: HashMap<usize, usize> = HashMap::new();
    for a in 0..n {
        let r = find(&mut parent, a);
        let slot = *root_of.entry(r).or_insert_with(|| {
            components.push(Vec::new());
            components.len() - 1
        });
        components[slot].push(a);
    }

    let mut off_block_residual: f64 = 0.0;
    for c in &conjugated {
        for a in 0..n {
            for b in 0..n {
                if find(&mut parent, a) != find(&mut parent, b) {
                    off_block_residual = off_block_residual.max(c[(a, b)].abs());
                }
            }
        }
    }

    let candidates: Vec<(Partition, YoungOrthogonalForm)> = partitions_of(m)
        .into_iter()
        .map(|mu| {
            let f = YoungOrthogonalForm::new(&mu);
            (mu, f)
        })
        .collect();
    let mut counts: HashMap<Partition, u64> = HashMap::new();
    let mut block_residual: f64 = 0.0;
    for comp in &components {
        let mut best: Option<(&Partition, f64)> = None;
        for (mu, form) in candidates.iter().filter(|(_, f)| f.dim() == comp.len()) {
            let mut worst: f64 = 0.0;
            for (i, c) in conjugated.iter().enumerate() {
                let gen = form.generator(i + 1)?;
                for (x, &a) in comp.iter().enumerate() {
                    for (y, &b) in comp.iter().enumerate() {
                        worst = worst.max((c[(a, b)] - gen[(x, y)]).abs());
                    }
                }
            }
            if best.is_none_or(|(_, w)| worst < w) {
                best = Some((mu, worst));
            }
        }
        match best {
            Some((mu, worst)) if worst <= BLOCK_TOL => {
                block_residual = block_residual.max(worst);
                *counts.entry(mu.clone()).or_default() += 1;
            }
            _ => {
                return Err(Error::Inconsistent(format!(
                    "block {comp:?} of Ind({beta}) matches no irrep of S({m})"
                )))
            }
        }
    }
    if off_block_residual > BLOCK_TOL {
        return Err(Error::Inconsistent(format!(
            "off-block residual {off_block_residual:e} exceeds {BLOCK_TOL:e}"
        )));
    }
    Ok(InducedReduction {
        multiplicities: partitions_of(m)
            .into_iter()
            .map(|mu| {
                let c = counts.get(&mu).copied().unwrap_or(0);
                (mu, c)
            })
            .collect(),
        off_block_residual,
        block_residual,
    })
}

/// Both sides of the basis-reduction identity for one target matrix unit.
#[derive(Debug, Clone)]
pub struct BasisReduction {
    /// `Σ_{t_p,k_β} U(β)[R,(t_p,k_β)] · t_p E^β_{k_β j}` before normalisation.
    pub transformed: GroupAlgebraElement<f64>,
    /// `E^μ[(α,l),(β,j)]`.
    pub target: GroupAlgebraElement<f64>,
    /// The prefactor that makes the two agree, `√(d_μ / (s·d_β))`.
    pub prefactor: f64,
    /// Coefficient-wise `max |prefactor · transformed - target|`.
    pub residual: f64,
}

/// Expands `U(β)` applied to the natural basis of `I^β_j` over all of
/// `S(m)` and compares it with the PRIR matrix unit `E^μ[(α,l),(β,j)]`.
///
/// The normalisation that holds is `√(d_μ/(s·d_β)) = √(|H| d_μ / (|G| d_β))`;
/// the transformed vector is exactly `s` times larger when scaled by
/// `√(s·d_μ/d_β)` instead.
pub fn basis_reduction_residual(
    beta: &Partition,
    m: usize,
    mu: &Partition,
    row: &PrirIndex,
    j: usize,
) -> Result<BasisReduction> {
    check_beta(beta, m)?;
    if !branching_down(mu).iter().any(|(a, _)| a == beta) {
        return Err(Error::NotABranch {
            mu: mu.clone(),
            alpha: beta.clone(),
        });
    }
    let u = build_u(beta, m)?;
    let r = u
        .row_index
        .iter()
        .position(|x| &x.mu == mu && &x.prir == row)
        .ok_or_else(|| Error::IndexOutOfRange(format!("{row} is not a PRIR index of {mu}")))?;
    let basis = induced_basis(beta, m, j)?;
    let mut transformed = GroupAlgebraElement::<f64>::zero(m);
    for (c, v) in basis.vectors.iter().enumerate() {
        transformed = transformed.add(&v.scale(&u.entries[(r, c)]))?;
    }
    let target = MatrixUnits::new(mu)
        .unit(row, &PrirIndex::new(beta.clone(), j))?
        .element;
    let s = m as f64;
    let prefactor = (dimension(mu) as f64 / (s * dimension(beta) as f64)).sqrt();
    let residual = transformed.scale(&prefactor).max_abs_difference(&target);
    Ok(BasisReduction {
        transformed,
        target,
        prefactor,
        residual,
    })
}

/// Frobenius reciprocity through characters, evaluated by direct summation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrobeniusCharacters {
    /// `⟨χ^{Ind β}, χ^μ⟩_{S(m)}` for every `μ ⊢ m`.
    pub induced: Multiplicities,
    /// `⟨χ^β, Res χ^μ⟩_{S(m-1)}` for every `μ ⊢ m`.
    pub restricted: Multiplicities,
}

impl FrobeniusCharacters {
    pub fn agree(&self) -> bool {
        self.induced == self.restricted
    }
}

struct CharacterCache(HashMap<(Partition, Partition), BigInt>);

impl CharacterCache {
    fn get(&mut self, mu: &Partition, class: Partition) -> BigInt {
        self.0
            .entry((mu.clone(), class))
            .or_insert_with_key(|(mu, class)| character(mu, class).expect("sizes agree"))
            .clone()
    }
}

fn to_multiplicity(value: BigRational) -> Result<u64> {
    use num_traits::ToPrimitive;
    if !value.is_integer() || value < BigRational::zero() {
        return Err(Error::Inconsistent(format!(
            "character inner product {value} is not a multiplicity"
        )));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Inconsistent("multiplicity overflow".into()))
}

pub fn frobenius_multiplicities_characters(
    beta: &Partition,
    m: usize,
) -> Result<FrobeniusCharacters> {
    check_beta(beta, m)?;
    let mut cache = CharacterCache(HashMap::new());
    let group = all_permutations(m);
    let ts = transversal(m);

    // induced character, coset formula: Σ over t_k with t_k⁻¹ g t_k ∈ H
    let induced_char: Vec<BigInt> = group
        .iter()
        .map(|g| {
            ts.iter()
                .filter_map(|t| (&(&t.inverse() * g) * t).restrict())
                .map(|h| cache.get(beta, h.cycle_type()))
                .sum()
        })
        .collect();
    let subgroup = all_permutations(m - 1);

    let mut induced = Vec::new();
    let mut restricted = Vec::new();
    for mu in partitions_of(m) {
        let ind: BigInt = group
            .iter()
            .zip(&induced_char)
            .map(|(g, chi)| chi * cache.get(&mu, g.cycle_type()))
            .sum();
        let res: BigInt = subgroup
            .iter()
            .map(|h| cache.get(beta, h.cycle_type()) * cache.get(&mu, h.extend().cycle_type()))
            .sum();
        induced.push((
            mu.clone(),
            to_multiplicity(BigRational::new(ind, BigInt::from(group.len())))?,
        ));
        restricted.push((
            mu,
            to_multiplicity(BigRational::new(res, BigInt::from(subgroup.len())))?,
        ));
    }
    Ok(FrobeniusCharacters {
        induced,
        restricted,
    })
}

/// The branching indicator `[β ∈ μ - □]` for every `μ ⊢ m`.
pub fn branching_multiplicities(beta: &Partition, m: usize) -> Result<Multiplicities> {
    check_beta(beta, m)?;
    Ok(partitions_of(m)
        .into_iter()
        .map(|mu| {
            let hit = branching_down(&mu).iter().any(|(a, _)| a == beta);
            (mu, hit as u64)
        })
        .collect())
}
