//! Exact eigenvalues of the Jucys-Murphy element, the transversal element and
//! the port-based teleportation operator, with Table-I style listings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    branching_down, dimension, normalized_transposition_character, partitions_of, removed_cell,
    ssyt_count, Partition,
};
use crate::error::{Error, Result};
use crate::rational::{choose2, integer, wire, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub mu: Partition,
    pub alpha: Partition,
    #[serde(with = "wire")]
    pub eigenvalue: Rational,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpectrumContext {
    JmIrrep { m: usize, mu: Partition },
    JmRegular { m: usize },
    Pbt { ports: usize, dim: usize },
}

/// A `(μ, α)`-labelled spectrum. `zero_fill` is the multiplicity of the
/// eigenvalue 0 and is present for PBT tables only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub context: SpectrumContext,
    pub records: Vec<SpectrumRecord>,
    pub zero_fill: Option<u64>,
    /// Pairs left out because `μ` has more rows than the local dimension.
    #[serde(default)]
    pub excluded: Vec<(Partition, Partition)>,
}

impl SpectrumTable {
    /// Σ multiplicities, including the zero fill.
    pub fn total_multiplicity(&self) -> u64 {
        self.records.iter().map(|r| r.multiplicity).sum::<u64>() + self.zero_fill.unwrap_or(0)
    }

    /// Dimension the multiplicities must add up to.
    pub fn expected_total(&self) -> u64 {
        match &self.context {
            SpectrumContext::JmIrrep { mu, .. } => dimension(mu) as u64,
            SpectrumContext::JmRegular { m } => (1..=*m as u64).product(),
            SpectrumContext::Pbt { ports, dim } => (*dim as u64).pow(*ports as u32 + 1),
        }
    }

    /// Σ eigenvalue · multiplicity.
    pub fn trace(&self) -> Rational {
        self.records
            .iter()
            .map(|r| &r.eigenvalue * integer(r.multiplicity as i64))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Distinct eigenvalues with merged multiplicities, ascending, zero fill
    /// included.
    pub fn distinct(&self) -> Vec<(Rational, u64)> {
        let mut merged: BTreeMap<Rational, u64> = BTreeMap::new();
        for r in &self.records {
            *merged.entry(r.eigenvalue.clone()).or_default() += r.multiplicity;
        }
        if let Some(z) = self.zero_fill.filter(|&z| z > 0) {
            *merged.entry(Rational::zero()).or_default() += z;
        }
        merged.into_iter().collect()
    }
}

fn check_branch(mu: &Partition, alpha: &Partition) -> Result<()> {
    removed_cell(mu, alpha).map(|_| ())
}

/// `C(k,2)·χ^λ(12)/d_λ`, zero when `k < 2`.
fn transposition_term(lambda: &Partition) -> Result<Rational> {
    let k = lambda.size();
    if k < 2 {
        return Ok(Rational::zero());
    }
    Ok(choose2(k) * normalized_transposition_character(lambda)?)
}

/// Eigenvalue of the transversal element `Υ` on the `α` block of `ψ^μ`.
pub fn eta(mu: &Partition, alpha: &Partition) -> Result<Rational> {
    if mu.size() < 2 {
        return Err(Error::TooSmall {
            what: "m",
            min: 2,
            value: mu.size(),
        });
    }
    check_branch(mu, alpha)?;
    Ok(transposition_term(mu)? - transposition_term(alpha)? + Rational::one())
}

/// Eigenvalue of `J_m` on the `α` block of `ψ^μ`.
pub fn gamma(mu: &Partition, alpha: &Partition) -> Result<Rational> {
    Ok(eta(mu, alpha)? - Rational::one())
}

/// Content (column minus row) of the cell `μ \ α`.
pub fn content_eigenvalue(mu: &Partition, alpha: &Partition) -> Result<Rational> {
    Ok(integer(removed_cell(mu, alpha)?.content()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JmMode {
    Irrep(Partition),
    Regular,
}

pub fn jm_spectrum_table(m: usize, mode: &JmMode) -> Result<SpectrumTable> {
    if m < 2 {
        return Err(Error::TooSmall {
            what: "m",
            min: 2,
            value: m,
        });
    }
    let rows = |mu: &Partition, regular: bool| -> Result<Vec<SpectrumRecord>> {
        branching_down(mu)
            .into_iter()
            .map(|(alpha, _)| {
                let d_alpha = dimension(&alpha) as u64;
                Ok(SpectrumRecord {
                    eigenvalue: gamma(mu, &alpha)?,
                    multiplicity: if regular {
                        dimension(mu) as u64 * d_alpha
                    } else {
                        d_alpha
                    },
                    mu: mu.clone(),
                    alpha,
                })
            })
            .collect()
    };
    let (context, records) = match mode {
        JmMode::Irrep(mu) => {
            if mu.size() != m {
                return Err(Error::DegreeMismatch {
                    expected: m,
                    found: mu.size(),
                });
            }
            (
                SpectrumContext::JmIrrep { m, mu: mu.clone() },
                rows(mu, false)?,
            )
        }
        JmMode::Regular => {
            let mut all = Vec::new();
            for mu in partitions_of(m) {
                all.extend(rows(&mu, true)?);
            }
            (SpectrumContext::JmRegular { m }, all)
        }
    };
    Ok(SpectrumTable {
        context,
        records,
        zero_fill: None,
        excluded: Vec::new(),
    })
}

/// Eigenvalue of the PBT operator with `N = |μ|` ports on `(C^d)^{⊗(N+1)}`.
///
/// Both the Schur-Weyl ratio `N·m_μ·d_α / (m_α·d_μ)` and the character
/// expression `C(N,2)χ^μ(12)/d_μ - C(N-1,2)χ^α(12)/d_α + d` are evaluated;
/// they must agree exactly. Here `m_α` counts semistandard tableaux of the
/// `S(N-1)` irrep `α`.
pub fn lambda_pbt(mu: &Partition, alpha: &Partition, d: usize) -> Result<Rational> {
    check_branch(mu, alpha)?;
    let m_mu = ssyt_count(mu, d);
    let m_alpha = ssyt_count(alpha, d);
    if m_mu == 0 || m_alpha == 0 {
        return Err(Error::Inadmissible {
            mu: mu.clone(),
            alpha: alpha.clone(),
            d,
        });
    }
    let n = mu.size() as u64;
    let ratio = Rational::new(
        BigInt::from(n) * BigInt::from(m_mu) * BigInt::from(dimension(alpha)),
        BigInt::from(m_alpha) * BigInt::from(dimension(mu)),
    );
    let by_characters = transposition_term(mu)? - transposition_term(alpha)? + integer(d as i64);
    if ratio != by_characters {
        return Err(Error::Inconsistent(format!(
            "λ({mu},{alpha}; d={d}): ratio {ratio} ≠ character form {by_characters}"
        )));
    }
    Ok(ratio)
}

pub fn pbt_spectrum_table(ports: usize, d: usize) -> Result<SpectrumTable> {
    if ports < 1 {
        return Err(Error::TooSmall {
            what: "number of ports",
            min: 1,
            value: ports,
        });
    }
    if d < 2 {
        return Err(Error::TooSmall {
            what: "local dimension d",
            min: 2,
            value: d,
        });
    }
    let space = (d as u64)
        .checked_pow(ports as u32 + 1)
        .ok_or_else(|| Error::Inconsistent(format!("{d}^{} overflows", ports + 1)))?;
    let mut records = Vec::new();
    let mut excluded = Vec::new();
    for mu in partitions_of(ports) {
        for (alpha, _) in branching_down(&mu) {
            if mu.num_rows() > d {
                excluded.push((mu.clone(), alpha));
                continue;
            }
            records.push(SpectrumRecord {
                eigenvalue: lambda_pbt(&mu, &alpha, d)?,
                multiplicity: ssyt_count(&alpha, d) * dimension(&mu) as u64,
                mu: mu.clone(),
                alpha,
            });
        }
    }
    let used: u64 = records.iter().map(|r| r.multiplicity).sum();
    let zero_fill = space
        .checked_sub(used)
        .ok_or_else(|| Error::Inconsistent(format!("multiplicities {used} exceed {space}")))?;
    Ok(SpectrumTable {
        context: SpectrumContext::Pbt { ports, dim: d },
        records,
        zero_fill: Some(zero_fill),
        excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prir::YoungOrthogonalForm;
    use crate::symgroup::{jm_element, transversal_element};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn eta_and_gamma_examples() {
        for m in 2..=7 {
            assert_eq!(
                eta(&Partition::row(m), &Partition::row(m - 1)).unwrap(),
                integer(m as i64)
            );
            assert_eq!(
                gamma(&Partition::row(m), &Partition::row(m - 1)).unwrap(),
                integer(m as i64 - 1)
            );
        }
        assert_eq!(eta(&p(&[2, 1]), &p(&[2])).unwrap(), integer(0));
        assert_eq!(eta(&p(&[2, 1]), &p(&[1, 1])).unwrap(), integer(2));
        assert_eq!(gamma(&p(&[2, 1]), &p(&[2])).unwrap(), integer(-1));
        assert_eq!(gamma(&p(&[2, 1]), &p(&[1, 1])).unwrap(), integer(1));
        assert!(gamma(&p(&[2, 1]), &p(&[3])).is_err());
        assert!(eta(&p(&[1]), &Partition::empty()).is_err());
    }

    #[test]
    fn gamma_is_content() {
        for m in 2..=8 {
            for mu in partitions_of(m) {
                for (alpha, _) in branching_down(&mu) {
                    let g = gamma(&mu, &alpha).unwrap();
                    assert_eq!(g, content_eigenvalue(&mu, &alpha).unwrap());
                    assert_eq!(eta(&mu, &alpha).unwrap(), g + Rational::one());
                }
            }
        }
    }

    #[test]
    fn eigenvalues_match_represented_elements() {
        for m in 2..=5 {
            let j = jm_element(m).unwrap();
            let ups = transversal_element(m).unwrap();
            for mu in partitions_of(m) {
                let form = YoungOrthogonalForm::new(&mu);
                let rj = form.represent(&j).unwrap();
                let ru = form.represent(&ups).unwrap();
                for (alpha, range) in form.blocks() {
                    let g = crate::rational::to_f64(&gamma(&mu, alpha).unwrap());
                    for i in range.clone() {
                        assert!((rj[(i, i)] - g).abs() < 1e-9);
                        assert!((ru[(i, i)] - g - 1.0).abs() < 1e-9);
                    }
                }
                let trace: Rational = jm_spectrum_table(m, &JmMode::Irrep(mu.clone()))
                    .unwrap()
                    .trace();
                assert!((rj.trace() - crate::rational::to_f64(&trace)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn jm_tables() {
        let t = jm_spectrum_table(2, &JmMode::Regular).unwrap();
        let got: Vec<_> = t
            .records
            .iter()
            .map(|r| {
                (
                    r.mu.clone(),
                    r.alpha.clone(),
                    r.eigenvalue.clone(),
                    r.multiplicity,
                )
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (p(&[2]), p(&[1]), integer(1), 1),
                (p(&[1, 1]), p(&[1]), integer(-1), 1)
            ]
        );
        assert_eq!(t.total_multiplicity(), 2);

        let t = jm_spectrum_table(3, &JmMode::Irrep(p(&[2, 1]))).unwrap();
        assert_eq!(t.distinct(), vec![(integer(-1), 1), (integer(1), 1)]);

        for m in 2..=7 {
            let t = jm_spectrum_table(m, &JmMode::Regular).unwrap();
            assert_eq!(t.total_multiplicity(), t.expected_total());
            assert_eq!(t.trace(), Rational::zero());
        }
        assert!(jm_spectrum_table(1, &JmMode::Regular).is_err());
        assert!(jm_spectrum_table(3, &JmMode::Irrep(p(&[2]))).is_err());
    }

    #[test]
    fn lambda_examples() {
        for d in 2..=5 {
            assert_eq!(
                lambda_pbt(&p(&[1]), &Partition::empty(), d).unwrap(),
                integer(d as i64)
            );
        }
        assert_eq!(lambda_pbt(&p(&[3]), &p(&[2]), 2).unwrap(), integer(4));
        assert_eq!(lambda_pbt(&p(&[2, 1]), &p(&[2]), 2).unwrap(), integer(1));
        assert_eq!(lambda_pbt(&p(&[2, 1]), &p(&[1, 1]), 2).unwrap(), integer(3));
        assert!(matches!(
            lambda_pbt(&p(&[1, 1, 1]), &p(&[1, 1]), 2),
            Err(Error::Inadmissible { .. })
        ));
        assert_eq!(lambda_pbt(&p(&[2, 1]), &p(&[2]), 3).unwrap(), integer(2));
        assert_eq!(lambda_pbt(&p(&[3, 1]), &p(&[2, 1]), 2).unwrap(), integer(4));
    }

    #[test]
    fn lambda_minus_d_is_gamma() {
        for n in 2..=8 {
            for mu in partitions_of(n - 1) {
                for (alpha, _) in branching_down(&mu) {
                    for d in 2..=4 {
                        match lambda_pbt(&mu, &alpha, d) {
                            Ok(l) => assert_eq!(
                                l - integer(d as i64),
                                content_eigenvalue(&mu, &alpha).unwrap()
                            ),
                            Err(Error::Inadmissible { .. }) => assert!(mu.num_rows() > d),
                            Err(e) => panic!("{e}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pbt_tables() {
        let t = pbt_spectrum_table(3, 2).unwrap();
        assert_eq!(
            t.distinct(),
            vec![
                (integer(0), 5),
                (integer(1), 6),
                (integer(3), 2),
                (integer(4), 3)
            ]
        );
        assert_eq!(t.zero_fill, Some(5));
        assert_eq!(t.total_multiplicity(), 16);
        assert_eq!(t.trace(), integer(24));
        assert_eq!(t.excluded, vec![(p(&[1, 1, 1]), p(&[1, 1]))]);

        let t = pbt_spectrum_table(1, 3).unwrap();
        assert_eq!(t.distinct(), vec![(integer(0), 8), (integer(3), 1)]);

        for ports in 1..=7 {
            for d in 2..=4 {
                let t = pbt_spectrum_table(ports, d).unwrap();
                assert_eq!(t.total_multiplicity(), t.expected_total());
                assert_eq!(t.trace(), integer((ports * d.pow(ports as u32)) as i64));
            }
        }
        assert!(pbt_spectrum_table(2, 1).is_err());
        assert!(pbt_spectrum_table(0, 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = pbt_spectrum_table(3, 3).unwrap();
        let back: SpectrumTable =
            serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
