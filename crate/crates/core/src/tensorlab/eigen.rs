use nalgebra::DMatrix;
use serde::Serialize;

use super::TensorOperator;
use crate::error::{Error, Result};

pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

const SYMMETRY_TOL: f64 = 1e-12;
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues grouped into clusters separated by more than `cluster_tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusteredSpectrum {
    /// `(representative eigenvalue, multiplicity)`, ascending.
    pub clusters: Vec<(f64, usize)>,
    pub cluster_tol: f64,
}

impl ClusteredSpectrum {
    pub fn dim(&self) -> usize {
        self.clusters.iter().map(|(_, m)| m).sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.clusters.first().map(|(v, _)| *v)
    }

    /// Multiplicity of the cluster within `tol` of `value`, or 0.
    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.clusters
            .iter()
            .filter(|(v, _)| (v - value).abs() <= tol)
            .map(|(_, m)| m)
            .sum()
    }
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops to `1e-12` times
/// the full norm.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: m.ncols(),
        });
    }
    let asym = (m - m.transpose()).amax();
    if asym > SYMMETRY_TOL * m.amax().max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    // column-major scratch copy; a[c * n + r]
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let total: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for c in 0..n {
            for r in 0..n {
                if r != c {
                    s += a[c * n + r] * a[c * n + r];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut off_norm = off(&a);
    while off_norm > OFF_DIAGONAL_TOL * total {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[q * n + p];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // columns p, q
                for k in 0..n {
                    let akp = a[p * n + k];
                    let akq = a[q * n + k];
                    a[p * n + k] = c * akp - s * akq;
                    a[q * n + k] = s * akp + c * akq;
                }
                // rows p, q
                for k in 0..n {
                    let apk = a[k * n + p];
                    let aqk = a[k * n + q];
                    a[k * n + p] = c * apk - s * aqk;
                    a[k * n + q] = s * apk + c * aqk;
                }
                a[q * n + p] = 0.0;
                a[p * n + q] = 0.0;
            }
        }
        off_norm = off(&a);
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    Ok(eig)
}

/// Groups sorted eigenvalues, starting a new cluster whenever the gap to the
/// previous value exceeds `tol`. Representatives are cluster means.
pub fn cluster_eigenvalues(sorted: &[f64], tol: f64) -> ClusteredSpectrum {
    let mut clusters: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut last = f64::NEG_INFINITY;
    for &x in sorted {
        match clusters.last_mut() {
            Some((rep, count)) if x - last <= tol => {
                sum += x;
                *count += 1;
                *rep = sum / *count as f64;
            }
            _ => {
                sum = x;
                clusters.push((x, 1));
            }
        }
        last = x;
    }
    ClusteredSpectrum {
        clusters,
        cluster_tol: tol,
    }
}

/// Compares clusters with predicted `(eigenvalue, multiplicity)` pairs in
/// ascending order. Returns the largest eigenvalue deviation and a message for
/// every cluster that is off by `tol` or more, has the wrong multiplicity, or
/// has no counterpart.
pub fn compare_spectrum(
    spectrum: &ClusteredSpectrum,
    predicted: &[(f64, u64)],
    tol: f64,
) -> (f64, Vec<String>) {
    let mut mismatches = Vec::new();
    let mut max_deviation: f64 = 0.0;
    if spectrum.clusters.len() != predicted.len() {
        mismatches.push(format!(
            "{} clusters found, {} distinct eigenvalues predicted",
            spectrum.clusters.len(),
            predicted.len()
        ));
    }
    for (&(found, found_mult), &(expected, expected_mult)) in
        spectrum.clusters.iter().zip(predicted)
    {
        let dev = (found - expected).abs();
        max_deviation = max_deviation.max(dev);
        if dev >= tol || found_mult as u64 != expected_mult {
            mismatches.push(format!(
                "cluster {found:.10} x {found_mult} vs predicted {expected} x {expected_mult}"
            ));
        }
    }
    (max_deviation, mismatches)
}

pub fn sym_eigen(op: &TensorOperator, cluster_tol: f64) -> Result<ClusteredSpectrum> {
    let eig = symmetric_eigenvalues(&op.to_dense())?;
    Ok(cluster_eigenvalues(&eig, cluster_tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorlab::entangled_projector;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_examples() {
        let id = DMatrix::<f64>::identity(5, 5);
        assert_eq!(
            cluster_eigenvalues(&symmetric_eigenvalues(&id).unwrap(), 1e-6).clusters,
            vec![(1.0, 5)]
        );
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![2.0, 1.0]));
        assert_eq!(
            cluster_eigenvalues(&symmetric_eigenvalues(&d).unwrap(), 1e-6).clusters,
            vec![(1.0, 1), (2.0, 1)]
        );
        let spec = sym_eigen(&entangled_projector(2).unwrap(), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(spec.clusters.len(), 2);
        assert!(spec.clusters[0].0.abs() < 1e-12 && spec.clusters[0].1 == 3);
        assert!((spec.clusters[1].0 - 2.0).abs() < 1e-12 && spec.clusters[1].1 == 1);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(
            symmetric_eigenvalues(&m),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn agrees_with_nalgebra_on_random_matrices() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in [1, 2, 3, 7, 20, 41] {
            let raw = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
            let m = &raw + raw.transpose();
            let ours = symmetric_eigenvalues(&m).unwrap();
            let mut theirs: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
            theirs.sort_by(|x, y| x.total_cmp(y));
            for (a, b) in ours.iter().zip(&theirs) {
                assert!((a - b).abs() < 1e-10, "{n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn clustering_respects_tolerance() {
        let s = cluster_eigenvalues(&[0.0, 1e-9, 1.0, 1.0 + 5e-7, 3.0], 1e-6);
        assert_eq!(
            s.clusters.iter().map(|c| c.1).collect::<Vec<_>>(),
            vec![2, 2, 1]
        );
        assert_eq!(s.dim(), 5);
        assert_eq!(s.multiplicity_near(1.0, 1e-6), 2);
    }
}
