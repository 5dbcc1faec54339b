use crate::scalar::Scalar;

use super::{NumericsError, SymMatrix};

const MAX_SWEEPS: usize = 100;

/// Full spectrum of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenResult<S> {
    /// Eigenvalues, ascending.
    pub eigenvalues: Vec<S>,
    /// Orthonormal eigenvectors, one column per eigenvalue.
    pub eigenvectors: Vec<Vec<S>>,
    /// Max over i of `|A v_i - lambda_i v_i|_2`, computed against the input.
    pub residual: S,
}

/// Cyclic Jacobi eigendecomposition.
///
/// Unconditionally stable at the dense desk scale this crate targets, with
/// eigenvector orthogonality at machine precision. Deterministic for a
/// fixed input: sweep order, sorting, and sign fixing are all canonical.
pub fn sym_eigen<S: Scalar>(a: &SymMatrix<S>) -> Result<EigenResult<S>, NumericsError> {
    let n = a.order();
    if n == 0 {
        return Ok(EigenResult {
            eigenvalues: vec![],
            eigenvectors: vec![],
            residual: S::zero(),
        });
    }

    // Working copy (full, row-major) and accumulated rotations.
    let mut w: Vec<S> = (0..n * n).map(|k| a.get(k / n, k % n)).collect();
    let mut v = vec![S::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = S::one();
    }

    let norm = a.frobenius_norm();
    let stop = S::epsilon() * norm.max(S::min_positive_value());

    let mut converged = n == 1;
    for _sweep in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut off = S::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + w[p * n + q] * w[p * n + q];
            }
        }
        if (off + off).sqrt() <= stop {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[p * n + q];
                if apq == S::zero() {
                    continue;
                }
                let app = w[p * n + p];
                let aqq = w[q * n + q];
                let tau = (aqq - app) / (S::cast(2.0) * apq);
                let t = {
                    let root = (S::one() + tau * tau).sqrt();
                    if tau >= S::zero() {
                        S::one() / (tau + root)
                    } else {
                        S::one() / (tau - root)
                    }
                };
                let c = S::one() / (S::one() + t * t).sqrt();
                let s = t * c;

                w[p * n + p] = app - t * apq;
                w[q * n + q] = aqq + t * apq;
                w[p * n + q] = S::zero();
                w[q * n + p] = S::zero();
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = w[k * n + p];
                    let akq = w[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    w[k * n + p] = new_kp;
                    w[p * n + k] = new_kp;
                    w[k * n + q] = new_kq;
                    w[q * n + k] = new_kq;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        // Final check: the last sweep may have finished the job.
        let mut off = S::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + w[p * n + q] * w[p * n + q];
            }
        }
        if (off + off).sqrt() > stop {
            return Err(NumericsError::ConvergenceFailure { sweeps: MAX_SWEEPS });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        w[i * n + i]
            .partial_cmp(&w[j * n + j])
            .expect("eigenvalues are finite")
    });

    let eigenvalues: Vec<S> = order.iter().map(|&i| w[i * n + i]).collect();
    let mut eigenvectors: Vec<Vec<S>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
        .collect();
    for col in eigenvectors.iter_mut() {
        fix_sign(col);
    }

    let mut residual = S::zero();
    for (lambda, vec) in eigenvalues.iter().zip(eigenvectors.iter()) {
        let av = a.matvec(vec);
        let r: S = av
            .iter()
            .zip(vec.iter())
            .map(|(&avi, &vi)| {
                let d = avi - *lambda * vi;
                d * d
            })
            .sum();
        residual = residual.max(r.sqrt());
    }

    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Make the largest-magnitude entry positive (first one on ties).
pub(crate) fn fix_sign<S: Scalar>(v: &mut [S]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < S::zero() {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}
