use crate::scalar::Scalar;

use super::{NumericsError, SymMatrix};

/// Cholesky factorization `A = L L'` of a symmetric positive definite matrix.
///
/// Kept as a struct so one factorization can serve many right-hand sides
/// (the Schur complement assembly solves against every boundary column).
#[derive(Debug, Clone)]
pub struct Cholesky<S> {
    n: usize,
    lower: Vec<S>,
}

impl<S: Scalar> Cholesky<S> {
    pub fn new(a: &SymMatrix<S>) -> Result<Self, NumericsError> {
        let n = a.order();
        let mut max_diag = S::zero();
        for i in 0..n {
            max_diag = max_diag.max(a.get(i, i).abs());
        }
        let pivot_floor = S::cast(1e-13) * max_diag;

        let mut lower = vec![S::zero(); n * n];
        for j in 0..n {
            let mut d = a.get(j, j);
            for k in 0..j {
                d = d - lower[j * n + k] * lower[j * n + k];
            }
            if d <= pivot_floor {
                return Err(NumericsError::NotPositiveDefinite {
                    index: j,
                    pivot: d.to_f64().unwrap_or(f64::NAN),
                });
            }
            let djj = d.sqrt();
            lower[j * n + j] = djj;
            for i in (j + 1)..n {
                let mut v = a.get(i, j);
                for k in 0..j {
                    v = v - lower[i * n + k] * lower[j * n + k];
                }
                lower[i * n + j] = v / djj;
            }
        }
        Ok(Cholesky { n, lower })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Solve `A x = b` by forward and back substitution.
    pub fn solve(&self, b: &[S]) -> Vec<S> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                let lik = self.lower[i * n + k];
                y[i] = y[i] - lik * y[k];
            }
            y[i] = y[i] / self.lower[i * n + i];
        }
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                let lki = self.lower[k * n + i];
                y[i] = y[i] - lki * y[k];
            }
            y[i] = y[i] / self.lower[i * n + i];
        }
        y
    }
}

/// One-shot SPD solve.
pub fn spd_solve<S: Scalar>(a: &SymMatrix<S>, b: &[S]) -> Result<Vec<S>, NumericsError> {
    if b.len() != a.order() {
        return Err(NumericsError::DimensionMismatch {
            expected: a.order(),
            got: b.len(),
        });
    }
    Ok(Cholesky::new(a)?.solve(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_returns_rhs() {
        let a: SymMatrix<f64> = SymMatrix::from_fn(4, |i, j| if i == j { 1.0 } else { 0.0 });
        let b = [1.0, -2.0, 3.5, 0.0];
        let x = spd_solve(&a, &b).unwrap();
        for (xi, bi) in x.iter().zip(&b) {
            assert!((xi - bi).abs() < 1e-15);
        }
    }

    #[test]
    fn diagonal_solve() {
        let mut a: SymMatrix<f64> = SymMatrix::zeros(2);
        a.set(0, 0, 2.0);
        a.set(1, 1, 4.0);
        let x = spd_solve(&a, &[2.0, 4.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15);
        assert!((x[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_by_two_hand_inverse() {
        // [[2,-1],[-1,2]]^-1 (1,0)' = (2/3, 1/3)'.
        let a: SymMatrix<f64> = SymMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]).unwrap();
        let x = spd_solve(&a, &[1.0, 0.0]).unwrap();
        assert!((x[0] - 2.0 / 3.0).abs() < 1e-14);
        assert!((x[1] - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_indefinite() {
        let a = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(
            spd_solve(&a, &[1.0, 1.0]),
            Err(NumericsError::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn solve_residual_small_on_random_spd() {
        let n = 10;
        let mut seed = 42u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        // B'B + eps I is SPD.
        let b_rows: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let a = SymMatrix::from_fn(n, |i, j| {
            let mut acc = 0.0;
            for k in 0..n {
                acc += b_rows[k][i] * b_rows[k][j];
            }
            acc + if i == j { 1e-3 } else { 0.0 }
        });
        let rhs: Vec<f64> = (0..n).map(|_| next()).collect();
        let x = spd_solve(&a, &rhs).unwrap();
        let ax = a.matvec(&x);
        let x_norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let rhs_norm = rhs.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (axi, bi) in ax.iter().zip(&rhs) {
            assert!((axi - bi).abs() <= 1e-10 * (a.frobenius_norm() * x_norm + rhs_norm));
        }
    }
}
