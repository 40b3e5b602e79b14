//! The invariant checks run by `verify-all`.

use nalgebra::DMatrix;

use super::report::Check;
use crate::combinatorics::{
    branching_down, branching_up, dimension, partitions_of, ssyt_count, Partition,
};
use crate::error::Result;
use crate::induction::{
    branching_multiplicities, build_u, frobenius_multiplicities_characters, basis_reduction_residual,
    reduce_induced,
};
use crate::prir::{
    restriction_block_residual, sum_rule_residual, MatrixUnits, YoungOrthogonalForm,
};
use crate::rational::{integer, to_f64};
use crate::spectra::{content_eigenvalue, eta, gamma, lambda_pbt};
use crate::symgroup::{
    all_permutations, jm_element, transversal_element, GroupAlgebraElement, Permutation,
};
use crate::tensorlab::{
    compare_spectrum, isotypic_projector, jm_tensor, pair_projector, partial_transpose_last,
    pbt_operator, perm_operator, sym_eigen, verify_pbt_spectrum, DimCap, DEFAULT_CLUSTER_TOL,
};
use crate::Error;

/// Check names in execution order.
pub const CHECK_NAMES: &[&str] = &[
    "prir_restriction",
    "sum_rule",
    "transversal_diagonal",
    "jm_diagonal",
    "gamma_content",
    "eta_gamma",
    "lambda_gamma",
    "u_unitarity",
    "basis_reduction",
    "frobenius",
    "matrix_units",
    "pbt_brute_force",
    "rho_partial_transpose",
    "schur_weyl_jm",
    "multiport_structure",
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteBounds {
    pub m_max: usize,
    pub d_max: usize,
    pub cap: DimCap,
}

/// Largest residual seen, with the case that produced it.
#[derive(Default)]
struct Worst {
    value: f64,
    case: String,
}

impl Worst {
    fn see(&mut self, value: f64, case: impl FnOnce() -> String) {
        if value > self.value || (self.case.is_empty() && value.is_nan()) {
            self.value = value;
            self.case = case();
        }
    }

    fn into_check(self, name: &str, tol: f64) -> Check {
        let check = Check::residual(name, self.value, tol);
        if self.case.is_empty() {
            check
        } else {
            check.with_detail(format!("worst case {}", self.case))
        }
    }
}

/// First failing case of an exact check.
#[derive(Default)]
struct Exact {
    cases: usize,
    failure: Option<String>,
}

impl Exact {
    fn see(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(case());
        }
    }

    fn into_check(self, name: &str) -> Check {
        match self.failure {
            None => Check::exact(name, true).with_detail(format!("{} cases", self.cases)),
            Some(f) => Check::exact(name, false).with_detail(format!("first failure {f}")),
        }
    }
}

/// Runs every check. A check named by `fault` is deliberately perturbed so
/// that it fails; that is the suite's negative control.
pub fn run_suite(bounds: SuiteBounds, fault: Option<&str>) -> Result<Vec<Check>> {
    let SuiteBounds { m_max, d_max, cap } = bounds;
    let mut checks = vec![
        prir_restriction(m_max.min(6))?,
        sum_rule(m_max.min(5))?,
        block_diagonal("transversal_diagonal", m_max.min(6), true)?,
        block_diagonal("jm_diagonal", m_max.min(6), false)?,
        gamma_content(m_max)?,
        eta_gamma(m_max)?,
        lambda_gamma(m_max, d_max)?,
        u_unitarity(m_max.min(6))?,
        basis_reduction(m_max.min(4))?,
        frobenius(m_max.min(6))?,
        matrix_units(m_max.min(4))?,
        pbt_brute_force(m_max, d_max, cap)?,
        rho_partial_transpose(m_max, d_max, cap)?,
        schur_weyl_jm(m_max, d_max, cap)?,
        multiport_structure(m_max, d_max, cap)?,
    ];
    if let Some(name) = fault {
        for c in checks.iter_mut().filter(|c| c.name == name) {
            inject(c);
        }
    }
    Ok(checks)
}

fn inject(check: &mut Check) {
    match check.residual.as_mut() {
        Some(r) => *r += 1.0,
        None => check.exact = Some(false),
    }
    check.passed = false;
    check.detail = Some("injected fault".into());
}

fn prir_restriction(m_max: usize) -> Result<Check> {
    let mut worst = Worst::default();
    for m in 2..=m_max {
        for mu in partitions_of(m) {
            for i in 1..m - 1 {
                let h = Permutation::adjacent(m, i)?;
                let r = restriction_block_residual(&mu, &h)?.max();
                worst.see(r, || format!("{mu}, s_{i}"));
            }
        }
    }
    Ok(worst.into_check("prir_restriction", 1e-10))
}

fn sum_rule(m_max: usize) -> Result<Check> {
    let mut worst = Worst::default();
    for m in 2..=m_max {
        for beta in partitions_of(m - 1) {
            let ups: Vec<Partition> = branching_up(&beta).into_iter().map(|(mu, _)| mu).collect();
            for mu in &ups {
                for nu in &ups {
                    let rows = YoungOrthogonalForm::new(mu).index_map().to_vec();
                    let cols = YoungOrthogonalForm::new(nu).index_map().to_vec();
                    for row in &rows {
                        for col in &cols {
                            let r = sum_rule_residual(mu, nu, &beta, row, col)?.residual;
                            worst.see(r, || format!("{mu}/{nu}/{beta} at {row},{col}"));
                        }
                    }
                }
            }
        }
    }
    Ok(worst.into_check("sum_rule", 1e-10))
}

/// `represent(μ, x)` against `⊕_α value(μ,α)·1_{d_α}` for `x = Υ` or `J`.
fn block_diagonal(name: &str, m_max: usize, transversal: bool) -> Result<Check> {
    let mut worst = Worst::default();
    for m in 2..=m_max {
        let x = if transversal {
            transversal_element(m)?
        } else {
            jm_element(m)?
        };
        for mu in partitions_of(m) {
            let form = YoungOrthogonalForm::new(&mu);
            let rep = form.represent(&x)?;
            let mut expected = DMatrix::zeros(form.dim(), form.dim());
            for (alpha, range) in form.blocks() {
                let v = if transversal {
                    eta(&mu, alpha)?
                } else {
                    gamma(&mu, alpha)?
                };
                for i in range.clone() {
                    expected[(i, i)] = to_f64(&v);
                }
            }
            worst.see((rep - expected).amax(), || mu.to_string());
        }
    }
    Ok(worst.into_check(name, 1e-9))
}

fn gamma_content(m_max: usize) -> Result<Check> {
    let mut exact = Exact::default();
    for m in 2..=m_max {
        for mu in partitions_of(m) {
            for (alpha, _) in branching_down(&mu) {
                let ok = gamma(&mu, &alpha)? == content_eigenvalue(&mu, &alpha)?;
                exact.see(ok, || format!("{mu}/{alpha}"));
            }
        }
    }
    Ok(exact.into_check("gamma_content"))
}

fn eta_gamma(m_max: usize) -> Result<Check> {
    let mut exact = Exact::default();
    for m in 2..=m_max {
        for mu in partitions_of(m) {
            for (alpha, _) in branching_down(&mu) {
                let ok = eta(&mu, &alpha)? == gamma(&mu, &alpha)? + integer(1);
                exact.see(ok, || format!("{mu}/{alpha}"));
            }
        }
    }
    Ok(exact.into_check("eta_gamma"))
}

fn lambda_gamma(m_max: usize, d_max: usize) -> Result<Check> {
    let mut exact = Exact::default();
    for ports in 1..m_max {
        for mu in partitions_of(ports) {
            for (alpha, _) in branching_down(&mu) {
                for d in 2..=d_max {
                    match lambda_pbt(&mu, &alpha, d) {
                        Ok(l) => {
                            let ok = l - integer(d as i64) == content_eigenvalue(&mu, &alpha)?;
                            exact.see(ok, || format!("{mu}/{alpha}, d={d}"));
                        }
                        Err(Error::Inadmissible { .. }) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(exact.into_check("lambda_gamma"))
}

fn u_unitarity(m_max: usize) -> Result<Check> {
    let mut worst = Worst::default();
    for m in 1..=m_max {
        for beta in partitions_of(m - 1) {
            let r = build_u(&beta, m)?.unitarity_residual();
            worst.see(r, || format!("beta={beta}, m={m}"));
        }
    }
    Ok(worst.into_check("u_unitarity", 1e-10))
}

fn basis_reduction(m_max: usize) -> Result<Check> {
    let mut worst = Worst::default();
    for m in 2..=m_max {
        for beta in partitions_of(m - 1) {
            for (mu, _) in branching_up(&beta) {
                for row in YoungOrthogonalForm::new(&mu).index_map() {
                    for j in 1..=dimension(&beta) {
                        let r = basis_reduction_residual(&beta, m, &mu, row, j)?.residual;
                        worst.see(r, || format!("beta={beta}, mu={mu}, row={row}, j={j}"));
                    }
                }
            }
        }
    }
    Ok(worst.into_check("basis_reduction", 1e-9))
}

fn frobenius(m_max: usize) -> Result<Check> {
    let mut exact = Exact::default();
    for m in 1..=m_max {
        for beta in partitions_of(m - 1) {
            let reduced = reduce_induced(&beta, m)?.multiplicities;
            let chars = frobenius_multiplicities_characters(&beta, m)?;
            let branching = branching_multiplicities(&beta, m)?;
            let ok = reduced == chars.induced && chars.agree() && reduced == branching;
            exact.see(ok, || format!("beta={beta}, m={m}"));
        }
    }
    Ok(exact.into_check("frobenius"))
}

/// Matrix-unit multiplication table and `g·E_ij = Σ_k ψ_ki(g) E_kj` for the
/// generators `g`.
fn matrix_units(m_max: usize) -> Result<Check> {
    let mut worst = Worst::default();
    for m in 1..=m_max {
        let units: Vec<MatrixUnits> = partitions_of(m).iter().map(MatrixUnits::new).collect();
        let zero = GroupAlgebraElement::<f64>::zero(m);
        for (a, ua) in units.iter().enumerate() {
            for (b, ub) in units.iter().enumerate() {
                for i in 0..ua.dim() {
                    for j in 0..ua.dim() {
                        for k in 0..ub.dim() {
                            for l in 0..ub.dim() {
                                let product = ua.get(i, j).multiply(ub.get(k, l))?;
                                let expected = if a == b && j == k {
                                    ua.get(i, l)
                                } else {
                                    &zero
                                };
                                let r = product.max_abs_difference(expected);
                                worst.see(r, || {
                                    format!("{}[{i}{j}]·{}[{k}{l}]", ua.partition(), ub.partition())
                                });
                            }
                        }
                    }
                }
            }
        }
        for g in (1..m).map(|i| Permutation::adjacent(m, i)) {
            let g = g?;
            for u in &units {
                let psi = YoungOrthogonalForm::new(u.partition()).matrix(&g)?;
                for i in 0..u.dim() {
                    for j in 0..u.dim() {
                        let mut expected = GroupAlgebraElement::<f64>::zero(m);
                        for k in 0..u.dim() {
                            expected = expected.add(&u.get(k, j).scale(&psi[(k, i)]))?;
                        }
                        let r = u
                            .get(i, j)
                            .left_translate(&g)?
                            .max_abs_difference(&expected);
                        worst.see(r, || format!("{g}·{}[{i}{j}]", u.partition()));
                    }
                }
            }
        }
    }
    Ok(worst.into_check("matrix_units", 1e-10))
}

fn tensor_cases(
    m_max: usize,
    d_max: usize,
    cap: DimCap,
    offset: usize,
) -> impl Iterator<Item = (usize, usize)> {
    (1..m_max)
        .flat_map(move |n| (2..=d_max).map(move |d| (n, d)))
        .filter(move |&(n, d)| cap.space_dim(d, n + offset).is_ok())
}

fn pbt_brute_force(m_max: usize, d_max: usize, cap: DimCap) -> Result<Check> {
    let mut worst = Worst::default();
    let mut failure = None;
    for (ports, d) in tensor_cases(m_max, d_max, cap, 1) {
        let v = verify_pbt_spectrum(ports, d, cap)?;
        worst.see(v.max_deviation, || format!("N={ports}, d={d}"));
        if failure.is_none() && !v.passed() {
            failure = Some(format!("N={ports}, d={d}: {}", v.mismatches.join("; ")));
        }
    }
    let check = worst.into_check("pbt_brute_force", 1e-8);
    Ok(match failure {
        Some(f) => Check {
            passed: false,
            ..check
        }
        .with_detail(f),
        None => check,
    })
}

fn rho_partial_transpose(m_max: usize, d_max: usize, cap: DimCap) -> Result<Check> {
    let mut exact = Exact::default();
    for (ports, d) in tensor_cases(m_max, d_max, cap, 1) {
        let rho = if ports == 1 {
            pair_projector(d, 2, 1, 2, cap)?
        } else {
            pbt_operator(ports, d, 1, cap)?
        };
        let pt = partial_transpose_last(&jm_tensor(ports + 1, d, cap)?);
        exact.see(pt.to_dense() == rho.to_dense(), || {
            format!("N={ports}, d={d}")
        });
    }
    Ok(exact.into_check("rho_partial_transpose"))
}

/// Clustered spectrum of `J_m` on `(C^d)^{⊗m}` against `γ_μ(α)` with
/// multiplicity `m_μ·d_α`.
fn schur_weyl_jm(m_max: usize, d_max: usize, cap: DimCap) -> Result<Check> {
    let mut worst = Worst::default();
    let mut failure = None;
    for (m, d) in tensor_cases(m_max + 1, d_max, cap, 0).filter(|&(m, _)| m >= 2) {
        let predicted = schur_weyl_prediction(m, d)?;
        let spectrum = sym_eigen(&jm_tensor(m, d, cap)?, DEFAULT_CLUSTER_TOL)?;
        let (dev, mismatches) = compare_spectrum(&spectrum, &predicted, 1e-8);
        worst.see(dev, || format!("m={m}, d={d}"));
        if failure.is_none() && !mismatches.is_empty() {
            failure = Some(format!("m={m}, d={d}: {}", mismatches.join("; ")));
        }
    }
    let check = worst.into_check("schur_weyl_jm", 1e-8);
    Ok(match failure {
        Some(f) => Check {
            passed: false,
            ..check
        }
        .with_detail(f),
        None => check,
    })
}

/// Distinct `γ_μ(α)` with merged multiplicities `ssyt_count(μ,d)·d_α`.
pub fn schur_weyl_prediction(m: usize, d: usize) -> Result<Vec<(f64, u64)>> {
    let mut merged: std::collections::BTreeMap<crate::Rational, u64> = Default::default();
    for mu in partitions_of(m) {
        let m_mu = ssyt_count(&mu, d);
        if m_mu == 0 {
            continue;
        }
        for (alpha, _) in branching_down(&mu) {
            *merged.entry(gamma(&mu, &alpha)?).or_default() += m_mu * dimension(&alpha) as u64;
        }
    }
    Ok(merged.into_iter().map(|(v, k)| (to_f64(&v), k)).collect())
}

/// Two-receiver operators: symmetric, PSD, commuting with `V(π)` for
/// `π ∈ S(N)` and with `Π_α ⊗ 1` for `α ⊢ N-2`.
fn multiport_structure(m_max: usize, d_max: usize, cap: DimCap) -> Result<Check> {
    let mut worst = Worst::default();
    let l = 2;
    for ports in 3..=m_max.min(4) {
        for d in 2..=d_max {
            let n = ports + l;
            if cap.space_dim(d, n).is_err() {
                continue;
            }
            let rho = pbt_operator(ports, d, l, cap)?;
            let m = rho.to_dense();
            let case = || format!("N={ports}, l={l}, d={d}");
            worst.see(rho.asymmetry(), case);
            let min = sym_eigen(&rho, DEFAULT_CLUSTER_TOL)?.min().unwrap_or(0.0);
            worst.see((-min).max(0.0), case);
            for pi in all_permutations(ports) {
                let v = perm_operator(&pi.extend_to(n), d, cap)?;
                worst.see((v.conjugate(&m)? - &m).amax(), case);
            }
            for alpha in partitions_of(ports - l) {
                let proj = isotypic_projector(&alpha, d, cap)?
                    .extend_identity(2 * l, cap)?
                    .into_dense();
                worst.see((&proj * &m - &m * &proj).amax(), case);
            }
        }
    }
    Ok(worst.into_check("multiport_structure", 1e-9))
}
