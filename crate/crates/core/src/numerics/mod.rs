//! Dense numerical kernels: symmetric eigendecomposition (cyclic Jacobi),
//! SPD solves (Cholesky), and a small two-phase simplex LP solver.
//!
//! Everything here is Euclidean; generalized (mass-weighted) problems are
//! reduced upstream by the diagonal congruence `M^(-1/2) K M^(-1/2)`.

mod cholesky;
mod eigen;
mod simplex;

pub use cholesky::{spd_solve, Cholesky};
pub(crate) use eigen::fix_sign;
pub use eigen::{sym_eigen, EigenResult};
pub use simplex::{lp_minimize, LpConstraint, LpProblem, LpSolution, LpStatus, Relation};

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {asymmetry}")]
    NotSymmetric { i: usize, j: usize, asymmetry: f64 },
    #[error("matrix is not square: {rows} rows, row {i} has {len} entries")]
    NotSquare { rows: usize, i: usize, len: usize },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("matrix is not positive definite (pivot {pivot} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simplex exceeded the pivot cap ({cap} pivots)")]
    PivotCapExceeded { cap: usize },
}

/// Dense symmetric matrix, stored as a full row-major square.
///
/// Symmetry is enforced at construction: inputs with relative asymmetry
/// above `1e-12` are rejected, anything below is symmetrized exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> SymMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    /// Build from a symmetric function of the index pair; `f` is only
    /// evaluated for `i <= j` and mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    /// Validate squareness and symmetry, then symmetrize exactly.
    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self, NumericsError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(NumericsError::NotSquare {
                    rows: n,
                    i,
                    len: row.len(),
                });
            }
        }
        let mut scale = S::zero();
        for row in rows {
            for &v in row {
                scale = scale.max(v.abs());
            }
        }
        let tol = S::cast(1e-12) * scale;
        let half = S::cast(0.5);
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let a = rows[i][j];
                let b = rows[j][i];
                if (a - b).abs() > tol {
                    return Err(NumericsError::NotSymmetric {
                        i,
                        j,
                        asymmetry: (a - b).abs().to_f64().unwrap_or(f64::NAN),
                    });
                }
                let v = (a + b) * half;
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.n + j]
    }

    /// Set both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: S) {
        self.set(i, j, self.get(i, j) + v);
    }

    pub fn matvec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![S::zero(); self.n];
        for i in 0..self.n {
            let mut acc = S::zero();
            for j in 0..self.n {
                acc = acc + self.data[i * self.n + j] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// Quadratic form `x' A x`.
    pub fn quad_form(&self, x: &[S]) -> S {
        let y = self.matvec(x);
        x.iter().zip(y.iter()).map(|(&a, &b)| a * b).sum()
    }

    pub fn frobenius_norm(&self) -> S {
        self.data
            .iter()
            .map(|&v| v * v)
            .fold(S::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Congruence `D A D` with a diagonal matrix given by its entries.
    pub fn congruence_diag(&self, d: &[S]) -> SymMatrix<S> {
        assert_eq!(d.len(), self.n);
        Self::from_fn(self.n, |i, j| d[i] * self.get(i, j) * d[j])
    }

    /// Principal submatrix selected by (distinct) indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix<S> {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_rejects_asymmetry() {
        let rows = vec![vec![1.0, 2.0], vec![2.5, 1.0]];
        assert!(matches!(
            SymMatrix::from_rows(&rows),
            Err(NumericsError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn from_rows_symmetrizes_roundoff() {
        let rows = vec![vec![1.0, 2.0 + 1e-15], vec![2.0, 1.0]];
        let m = SymMatrix::from_rows(&rows).unwrap();
        assert_eq!(m.get(0, 1), m.get(1, 0));
    }

    #[test]
    fn quad_form_matches_matvec() {
        let m = SymMatrix::from_fn(3, |i, j| (i + j) as f64);
        let x = [1.0, -2.0, 0.5];
        let y = m.matvec(&x);
        let direct: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        assert!((m.quad_form(&x) - direct).abs() < 1e-14);
    }
}
