use num_bigint::BigInt;
use num_rational::BigRational;

use super::yor::{PrirIndex, YoungOrthogonalForm};
use crate::combinatorics::{character, dimension, factorial, Partition};
use crate::error::Result;
use crate::rational::Rational;
use crate::symgroup::{all_permutations, GroupAlgebraElement, Permutation};

/// A matrix unit `E^μ_{row,col} = (d_μ/|G|) Σ_g ψ^μ_{col,row}(g⁻¹) g` of
/// `C[S(n)]`.
///
/// Young orthogonal entries involve square roots, so the coefficients are
/// stored as `f64`. Exact statements about the Wedderburn decomposition go
/// through [`central_idempotent`] instead.
#[derive(Debug, Clone)]
pub struct MatrixUnit {
    pub mu: Partition,
    pub row: PrirIndex,
    pub col: PrirIndex,
    pub element: GroupAlgebraElement<f64>,
}

/// All `d_μ²` matrix units of `μ`, sharing one pass over the group.
#[derive(Debug, Clone)]
pub struct MatrixUnits {
    mu: Partition,
    index_map: Vec<PrirIndex>,
    // row-major: units[i * d + j] = E_ij
    units: Vec<GroupAlgebraElement<f64>>,
}

impl MatrixUnits {
    pub fn new(mu: &Partition) -> Self {
        let form = YoungOrthogonalForm::new(mu);
        let n = mu.size();
        let d = form.dim();
        let group = all_permutations(n);
        let scale = d as f64 / group.len() as f64;
        let inverses: Vec<_> = group
            .iter()
            .map(|g| form.matrix(&g.inverse()).expect("degrees agree"))
            .collect();
        let mut units = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let terms = group
                    .iter()
                    .zip(&inverses)
                    .map(|(g, inv)| (g.clone(), scale * inv[(j, i)]));
                units.push(GroupAlgebraElement::from_terms(n, terms).expect("degrees agree"));
            }
        }
        MatrixUnits {
            mu: mu.clone(),
            index_map: form.index_map().to_vec(),
            units,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.index_map.len()
    }

    pub fn index_map(&self) -> &[PrirIndex] {
        &self.index_map
    }

    /// `E_{ij}` by 0-based positions.
    pub fn get(&self, i: usize, j: usize) -> &GroupAlgebraElement<f64> {
        &self.units[i * self.dim() + j]
    }

    pub fn unit(&self, row: &PrirIndex, col: &PrirIndex) -> Result<MatrixUnit> {
        let position = |idx: &PrirIndex| {
            self.index_map.iter().position(|x| x == idx).ok_or_else(|| {
                crate::Error::IndexOutOfRange(format!("{idx} is not a PRIR index of {}", self.mu))
            })
        };
        let (i, j) = (position(row)?, position(col)?);
        Ok(MatrixUnit {
            mu: self.mu.clone(),
            row: row.clone(),
            col: col.clone(),
            element: self.get(i, j).clone(),
        })
    }
}

pub fn matrix_unit(mu: &Partition, row: &PrirIndex, col: &PrirIndex) -> Result<MatrixUnit> {
    MatrixUnits::new(mu).unit(row, col)
}

/// Exact central idempotent `e_μ = (d_μ/n!) Σ_σ χ^μ(σ) σ`, the identity of
/// the block `E^μ = span{E^μ_ij}`.
pub fn central_idempotent(mu: &Partition) -> GroupAlgebraElement<Rational> {
    let n = mu.size();
    let scale = BigRational::new(BigInt::from(dimension(mu)), BigInt::from(factorial(n)));
    let terms: Vec<(Permutation, Rational)> = all_permutations(n)
        .into_iter()
        .map(|g| {
            let chi = character(mu, &g.cycle_type()).expect("sizes agree");
            (g, scale.clone() * BigRational::from_integer(chi))
        })
        .collect();
    GroupAlgebraElement::from_terms(n, terms).expect("degrees agree")
}
