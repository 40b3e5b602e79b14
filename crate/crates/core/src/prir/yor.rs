use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{dimension, standard_tableaux, Partition, StandardTableau};
use crate::error::{Error, Result};
use crate::symgroup::{Coefficient, GroupAlgebraElement, Permutation};

/// PRIR multi-index `(α(a_α), i_α)` labelling a row or column of `ψ^μ`.
///
/// `copy` is the multiplicity label `a_α`; for `S(m-1) ⊂ S(m)` the
/// restriction is multiplicity-free and it is always 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrirIndex {
    pub alpha: Partition,
    pub copy: usize,
    /// `i_α`, 1-based within the α block.
    pub inner: usize,
}

impl PrirIndex {
    pub fn new(alpha: Partition, inner: usize) -> Self {
        PrirIndex {
            alpha,
            copy: 1,
            inner,
        }
    }
}

impl fmt::Display for PrirIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}({}),{})", self.alpha, self.copy, self.inner)
    }
}

/// `ψ_R^μ(σ)` together with the PRIR labels of its rows and columns.
#[derive(Debug, Clone, PartialEq)]
pub struct PrirMatrix {
    pub mu: Partition,
    pub entries: DMatrix<f64>,
    pub index_map: Vec<PrirIndex>,
}

impl PrirMatrix {
    /// `max |M Mᵀ - I|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let d = self.entries.nrows();
        let gram = &self.entries * self.entries.transpose();
        (gram - DMatrix::identity(d, d)).amax()
    }
}

/// Young's orthogonal form of the irrep `μ`, realised in the last-letter
/// tableau basis so that restriction to `S(n-1)` is block diagonal.
///
/// Building one of these precomputes the sparse generator data once; it can
/// then be shared read-only between threads.
#[derive(Debug, Clone)]
pub struct YoungOrthogonalForm {
    mu: Partition,
    tableaux: Vec<StandardTableau>,
    index_map: Vec<PrirIndex>,
    blocks: Vec<(Partition, Range<usize>)>,
    // for s_i: diagonal entries and the optional partner (index, coupling)
    diagonal: Vec<Vec<f64>>,
    partner: Vec<Vec<Option<(usize, f64)>>>,
}

impl YoungOrthogonalForm {
    pub fn new(mu: &Partition) -> Self {
        let tableaux = standard_tableaux(mu);
        let n = mu.size();
        let position: HashMap<Vec<Vec<usize>>, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (t.rows().to_vec(), k))
            .collect();

        let mut index_map = Vec::with_capacity(tableaux.len());
        let mut blocks: Vec<(Partition, Range<usize>)> = Vec::new();
        for (k, t) in tableaux.iter().enumerate() {
            let alpha = t
                .restrict()
                .map(|r| r.shape().clone())
                .unwrap_or_else(Partition::empty);
            match blocks.last_mut() {
                Some((a, range)) if *a == alpha => range.end = k + 1,
                _ => blocks.push((alpha.clone(), k..k + 1)),
            }
            let start = blocks.last().expect("just pushed").1.start;
            index_map.push(PrirIndex::new(alpha, k - start + 1));
        }

        let mut diagonal = Vec::new();
        let mut partner = Vec::new();
        for i in 1..n {
            let mut diag = Vec::with_capacity(tableaux.len());
            let mut part = Vec::with_capacity(tableaux.len());
            for t in &tableaux {
                let r = (t.content(i + 1) - t.content(i)) as f64;
                diag.push(1.0 / r);
                part.push(t.swap_adjacent(i).map(|s| {
                    let j = position[s.rows()];
                    (j, (1.0 - 1.0 / (r * r)).sqrt())
                }));
            }
            diagonal.push(diag);
            partner.push(part);
        }

        YoungOrthogonalForm {
            mu: mu.clone(),
            tableaux,
            index_map,
            blocks,
            diagonal,
            partner,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn index_map(&self) -> &[PrirIndex] {
        &self.index_map
    }

    /// Contiguous row ranges of each `α` block, in branching order.
    pub fn blocks(&self) -> &[(Partition, Range<usize>)] {
        &self.blocks
    }

    pub fn position_of(&self, index: &PrirIndex) -> Result<usize> {
        self.index_map
            .iter()
            .position(|x| x == index)
            .ok_or_else(|| {
                Error::IndexOutOfRange(format!("{index} is not a PRIR index of {}", self.mu))
            })
    }

    /// `M ← ψ(s_i) M`.
    fn apply_generator_left(&self, i: usize, m: &mut DMatrix<f64>) {
        let diag = &self.diagonal[i - 1];
        let partner = &self.partner[i - 1];
        let old = m.clone();
        for row in 0..self.dim() {
            let mut new_row = old.row(row) * diag[row];
            if let Some((j, c)) = partner[row] {
                new_row += old.row(j) * c;
            }
            m.set_row(row, &new_row);
        }
    }

    /// `ψ(s_i)` for the adjacent transposition `(i i+1)`.
    pub fn generator(&self, i: usize) -> Result<DMatrix<f64>> {
        let n = self.mu.size();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!(
                "s_{i} is not a generator of S({n})"
            )));
        }
        let mut m = DMatrix::identity(self.dim(), self.dim());
        self.apply_generator_left(i, &mut m);
        Ok(m)
    }

    /// Dense `ψ(σ)`, from the bubble-sort factorisation of `σ`.
    pub fn matrix(&self, sigma: &Permutation) -> Result<DMatrix<f64>> {
        if sigma.degree() != self.mu.size() {
            return Err(Error::DegreeMismatch {
                expected: self.mu.size(),
                found: sigma.degree(),
            });
        }
        let mut m = DMatrix::identity(self.dim(), self.dim());
        for &i in sigma.adjacent_factorization().iter().rev() {
            self.apply_generator_left(i, &mut m);
        }
        Ok(m)
    }

    pub fn prir_matrix(&self, sigma: &Permutation) -> Result<PrirMatrix> {
        Ok(PrirMatrix {
            mu: self.mu.clone(),
            entries: self.matrix(sigma)?,
            index_map: self.index_map.clone(),
        })
    }

    /// Linear extension `Σ c_σ ψ(σ)`.
    pub fn represent<K: Coefficient>(&self, x: &GroupAlgebraElement<K>) -> Result<DMatrix<f64>> {
        if x.degree() != self.mu.size() {
            return Err(Error::DegreeMismatch {
                expected: self.mu.size(),
                found: x.degree(),
            });
        }
        let mut out = DMatrix::zeros(self.dim(), self.dim());
        for (sigma, c) in x.terms() {
            out += self.matrix(sigma)? * c.to_f64();
        }
        Ok(out)
    }
}

pub fn yor_matrix(mu: &Partition, sigma: &Permutation) -> Result<PrirMatrix> {
    YoungOrthogonalForm::new(mu).prir_matrix(sigma)
}

pub fn prir_index_map(mu: &Partition) -> Vec<PrirIndex> {
    YoungOrthogonalForm::new(mu).index_map
}

pub fn represent<K: Coefficient>(
    mu: &Partition,
    x: &GroupAlgebraElement<K>,
) -> Result<DMatrix<f64>> {
    YoungOrthogonalForm::new(mu).represent(x)
}

/// Block-diagonal matrix `⊕_α φ^α(h)` for `h ∈ S(n-1)`, in the block order of
/// `ψ^μ`, built from the subgroup's own Young orthogonal forms.
pub fn subgroup_block_diagonal(mu: &Partition, h: &Permutation) -> Result<DMatrix<f64>> {
    let restricted = h
        .restrict()
        .ok_or_else(|| Error::NotInSubgroup(h.to_string()))?;
    let d = dimension(mu);
    let form = YoungOrthogonalForm::new(mu);
    let mut out = DMatrix::zeros(d, d);
    for (alpha, range) in form.blocks() {
        let block = YoungOrthogonalForm::new(alpha).matrix(&restricted)?;
        out.view_mut((range.start, range.start), (range.len(), range.len()))
            .copy_from(&block);
    }
    Ok(out)
}
