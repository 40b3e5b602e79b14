use serde::Serialize;

use super::yor::{subgroup_block_diagonal, PrirIndex, YoungOrthogonalForm};
use crate::combinatorics::{branching_down, dimension, Partition};
use crate::error::{Error, Result};
use crate::symgroup::{transversal, Permutation};

/// How far `ψ^μ(h)` is from the PRIR block form for a subgroup element `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RestrictionResidual {
    /// Largest entry outside the diagonal `α` blocks.
    pub off_block: f64,
    /// Largest deviation of a diagonal block from the subgroup's own `φ^α(h)`.
    pub block_mismatch: f64,
}

impl RestrictionResidual {
    pub fn max(&self) -> f64 {
        self.off_block.max(self.block_mismatch)
    }
}

/// Checks that `ψ^μ(h)` is block diagonal with blocks `φ^α(h)` for `h` fixing `n`.
pub fn restriction_block_residual(mu: &Partition, h: &Permutation) -> Result<RestrictionResidual> {
    let n = mu.size();
    if h.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: h.degree(),
        });
    }
    if h.restrict().is_none() {
        return Err(Error::NotInSubgroup(h.to_string()));
    }
    let form = YoungOrthogonalForm::new(mu);
    let psi = form.matrix(h)?;
    let mut off_block: f64 = 0.0;
    let block_of = |k: usize| form.blocks().iter().position(|(_, r)| r.contains(&k));
    for i in 0..form.dim() {
        for j in 0..form.dim() {
            if block_of(i) != block_of(j) {
                off_block = off_block.max(psi[(i, j)].abs());
            }
        }
    }
    let blocks = subgroup_block_diagonal(mu, h)?;
    let mut block_mismatch: f64 = 0.0;
    for (_, range) in form.blocks() {
        for i in range.clone() {
            for j in range.clone() {
                block_mismatch = block_mismatch.max((psi[(i, j)] - blocks[(i, j)]).abs());
            }
        }
    }
    Ok(RestrictionResidual {
        off_block,
        block_mismatch,
    })
}

/// `max |ψ(t_k h) - ψ(t_k)·⊕_α φ^α(h)|` for the 0-based transversal index `k`.
pub fn factorization_check(mu: &Partition, k: usize, h: &Permutation) -> Result<f64> {
    let n = mu.size();
    let t = transversal(n);
    let tk = t
        .get(k)
        .ok_or_else(|| Error::IndexOutOfRange(format!("transversal index {k} for S({n})")))?;
    if h.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: h.degree(),
        });
    }
    let form = YoungOrthogonalForm::new(mu);
    let lhs = form.matrix(&(tk * h))?;
    let rhs = form.matrix(tk)? * subgroup_block_diagonal(mu, h)?;
    Ok((lhs - rhs).amax())
}

/// One evaluation of the transversal sum rule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumRule {
    pub value: f64,
    pub expected: f64,
    pub residual: f64,
}

/// Evaluates
/// `Σ_k Σ_{k_β} ψ^μ(t_k⁻¹)[row, (β,k_β)] · ψ^ν(t_k)[(β,k_β), col]`
/// and compares it with `s · d_β/d_μ · δ^{μν} δ_{row,col}`, where `row` is a
/// PRIR index of `μ` and `col` one of `ν`.
pub fn sum_rule_residual(
    mu: &Partition,
    nu: &Partition,
    beta: &Partition,
    row: &PrirIndex,
    col: &PrirIndex,
) -> Result<SumRule> {
    for lambda in [mu, nu] {
        if !branching_down(lambda).iter().any(|(a, _)| a == beta) {
            return Err(Error::NotABranch {
                mu: lambda.clone(),
                alpha: beta.clone(),
            });
        }
    }
    if mu.size() != nu.size() {
        return Err(Error::DegreeMismatch {
            expected: mu.size(),
            found: nu.size(),
        });
    }
    let m = mu.size();
    let form_mu = YoungOrthogonalForm::new(mu);
    let form_nu = YoungOrthogonalForm::new(nu);
    let r = form_mu.position_of(row)?;
    let c = form_nu.position_of(col)?;
    let beta_rows_mu = block_range(&form_mu, beta);
    let beta_rows_nu = block_range(&form_nu, beta);

    let mut value = 0.0;
    for t in transversal(m) {
        let left = form_mu.matrix(&t.inverse())?;
        let right = form_nu.matrix(&t)?;
        for (a, b) in beta_rows_mu.clone().zip(beta_rows_nu.clone()) {
            value += left[(r, a)] * right[(b, c)];
        }
    }
    let expected = if mu == nu && row == col {
        (m * dimension(beta)) as f64 / dimension(mu) as f64
    } else {
        0.0
    };
    Ok(SumRule {
        value,
        expected,
        residual: (value - expected).abs(),
    })
}

fn block_range(form: &YoungOrthogonalForm, beta: &Partition) -> std::ops::Range<usize> {
    form.blocks()
        .iter()
        .find(|(a, _)| a == beta)
        .map(|(_, r)| r.clone())
        .expect("β is a branch of the form's partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;
    use crate::prir::prir_index_map;
    use crate::symgroup::all_permutations;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let h = Permutation::transposition(3, 1, 2).unwrap();
        let r = restriction_block_residual(&p(&[2, 1]), &h).unwrap();
        assert_eq!(r.off_block, 0.0);
        assert!(r.block_mismatch < 1e-12);
        let psi = super::super::yor_matrix(&p(&[2, 1]), &h).unwrap().entries;
        assert_eq!((psi[(0, 0)], psi[(1, 1)]), (1.0, -1.0));

        assert_eq!(
            restriction_block_residual(&p(&[4]), &Permutation::identity(4))
                .unwrap()
                .max(),
            0.0
        );
        let g = Permutation::transposition(3, 1, 3).unwrap();
        assert!(matches!(
            restriction_block_residual(&p(&[2, 1]), &g),
            Err(Error::NotInSubgroup(_))
        ));
    }

    #[test]
    fn restriction_all_subgroup_elements() {
        for m in 2..=5 {
            for mu in partitions_of(m) {
                for h in all_permutations(m).into_iter().filter(|h| h.apply(m) == m) {
                    assert!(restriction_block_residual(&mu, &h).unwrap().max() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let mu = p(&[2, 1]);
        assert_eq!(
            factorization_check(&mu, 1, &Permutation::identity(3)).unwrap(),
            0.0
        );
        let h = Permutation::transposition(3, 1, 2).unwrap();
        assert!(factorization_check(&mu, 0, &h).unwrap() < 1e-10);
        assert!(factorization_check(&mu, 3, &h).is_err());
        for m in 2..=5 {
            for mu in partitions_of(m) {
                for h in all_permutations(m).into_iter().filter(|h| h.apply(m) == m) {
                    for k in 0..m {
                        assert!(factorization_check(&mu, k, &h).unwrap() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn sum_rule_examples() {
        let mu = p(&[2, 1]);
        let beta = p(&[2]);
        let idx = PrirIndex::new(p(&[2]), 1);
        let rule = sum_rule_residual(&mu, &mu, &beta, &idx, &idx).unwrap();
        assert!((rule.value - 1.5).abs() < 1e-10);
        assert!(rule.residual < 1e-10);

        let cross =
            sum_rule_residual(&p(&[3]), &mu, &beta, &prir_index_map(&p(&[3]))[0], &idx).unwrap();
        assert!(cross.value.abs() < 1e-10);

        let other = PrirIndex::new(p(&[1, 1]), 1);
        let off = sum_rule_residual(&mu, &mu, &beta, &idx, &other).unwrap();
        assert!(off.value.abs() < 1e-10);

        assert!(sum_rule_residual(&p(&[3]), &mu, &p(&[1, 1]), &idx, &idx).is_err());
    }
}
