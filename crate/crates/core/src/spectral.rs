//! Operator assembly and spectra.
//!
//! The stiffness matrix `K` has `K_xx = sum_y w_xy` and `K_xy = -w_xy`, so
//! `-Delta = M^(-1) K` with the mass matrix `M = diag(m)` and
//! `u' K v = <du, dv>`. Generalized eigenproblems `K u = mu M u` are
//! symmetrized by the diagonal congruence `M^(-1/2) K M^(-1/2)`; computed
//! eigenvectors are mapped back by `M^(-1/2)`, which makes them
//! m-orthonormal.

use thiserror::Error;

use crate::graph::{BoundaryGraph, InducedGraph, WeightedGraph};
use crate::numerics::{sym_eigen, Cholesky, NumericsError, SymMatrix};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("dirichlet set must be a nonempty proper vertex subset")]
    InvalidDirichletSet,
    #[error("zero denominator in Rayleigh quotient ({which})")]
    ZeroDenominator { which: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    Laplacian,
    Steklov,
    Dirichlet,
}

/// Ordered eigenvalues with m-orthonormal eigenvectors.
///
/// `support[i]` names the vertex that entry `i` of every eigenvector refers
/// to: all vertices for the Laplacian, the boundary for Steklov, the
/// complement of the Dirichlet set for Dirichlet spectra.
#[derive(Debug, Clone)]
pub struct Spectrum<S> {
    pub kind: SpectrumKind,
    pub support: Vec<usize>,
    pub eigenvalues: Vec<S>,
    pub eigenvectors: Vec<Vec<S>>,
    pub residual: S,
}

/// Boundary data together with its harmonic extension to the whole graph.
#[derive(Debug, Clone)]
pub struct HarmonicExtension<S> {
    pub boundary_values: Vec<S>,
    /// Full vertex function: equals the boundary data on B, harmonic on
    /// the interior, and obeys the discrete maximum principle.
    pub values: Vec<S>,
}

/// Dirichlet-to-Neumann map, realized as `Lambda = M_B^(-1) S` with `S` the
/// Schur complement of the stiffness matrix onto the boundary.
#[derive(Debug, Clone)]
pub struct DtnOperator<S> {
    boundary: Vec<usize>,
    schur: SymMatrix<S>,
    boundary_mass: Vec<S>,
}

impl<S: Scalar> DtnOperator<S> {
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn schur(&self) -> &SymMatrix<S> {
        &self.schur
    }

    pub fn boundary_mass(&self) -> &[S] {
        &self.boundary_mass
    }

    /// Apply `Lambda` to boundary data.
    pub fn apply(&self, f: &[S]) -> Vec<S> {
        let sf = self.schur.matvec(f);
        sf.iter()
            .zip(&self.boundary_mass)
            .map(|(&v, &m)| v / m)
            .collect()
    }

    /// Dense `Lambda` (not symmetric unless the boundary mass is constant).
    pub fn lambda_matrix(&self) -> Vec<Vec<S>> {
        let b = self.boundary.len();
        (0..b)
            .map(|i| {
                (0..b)
                    .map(|j| self.schur.get(i, j) / self.boundary_mass[i])
                    .collect()
            })
            .collect()
    }
}

/// Stiffness matrix of the whole graph.
pub fn stiffness_matrix<S: Scalar>(g: &WeightedGraph<S>) -> SymMatrix<S> {
    let mut k = SymMatrix::zeros(g.vertex_count());
    for e in g.edges() {
        k.add_to(e.u, e.u, e.weight);
        k.add_to(e.v, e.v, e.weight);
        k.add_to(e.u, e.v, -e.weight);
    }
    k
}

/// Stiffness matrix of an induced subgraph (interior edges only).
pub fn induced_stiffness<S: Scalar>(ig: &InducedGraph<S>) -> SymMatrix<S> {
    let mut k = SymMatrix::zeros(ig.vertex_count());
    for &(u, v, w) in &ig.edges {
        k.add_to(u, u, w);
        k.add_to(v, v, w);
        k.add_to(u, v, -w);
    }
    k
}

/// m-weighted vertex inner product over the whole graph.
pub fn inner_product<S: Scalar>(g: &WeightedGraph<S>, u: &[S], v: &[S]) -> S {
    (0..g.vertex_count())
        .map(|x| u[x] * v[x] * g.measure(x))
        .sum()
}

/// m-weighted inner product restricted to a vertex subset.
pub fn inner_product_on<S: Scalar>(g: &WeightedGraph<S>, set: &[usize], u: &[S], v: &[S]) -> S {
    set.iter().map(|&x| u[x] * v[x] * g.measure(x)).sum()
}

/// Edge inner product of differentials: `<du, dv>`, one term per edge.
pub fn energy_product<S: Scalar>(g: &WeightedGraph<S>, u: &[S], v: &[S]) -> S {
    g.edges()
        .iter()
        .map(|e| (u[e.v] - u[e.u]) * (v[e.v] - v[e.u]) * e.weight)
        .sum()
}

/// `Delta u` (pointwise) on every vertex.
pub fn laplacian_apply<S: Scalar>(g: &WeightedGraph<S>, u: &[S]) -> Vec<S> {
    (0..g.vertex_count())
        .map(|x| {
            let acc: S = g
                .neighbors(x)
                .iter()
                .map(|&(y, w)| (u[y] - u[x]) * w)
                .sum();
            acc / g.measure(x)
        })
        .collect()
}

fn generalized_eigen<S: Scalar>(
    k: &SymMatrix<S>,
    mass: &[S],
) -> Result<(Vec<S>, Vec<Vec<S>>, S), NumericsError> {
    let d: Vec<S> = mass.iter().map(|&m| S::one() / m.sqrt()).collect();
    let a = k.congruence_diag(&d);
    let eig = sym_eigen(&a)?;
    let vectors = eig
        .eigenvectors
        .into_iter()
        .map(|z| {
            let mut v: Vec<S> = z.iter().zip(&d).map(|(&zi, &di)| zi * di).collect();
            crate::numerics::fix_sign(&mut v);
            v
        })
        .collect();
    Ok((eig.eigenvalues, vectors, eig.residual))
}

/// Full Laplacian spectrum `0 = mu_1 < mu_2 <= ...` of a connected graph.
pub fn laplacian_spectrum<S: Scalar>(g: &WeightedGraph<S>) -> Result<Spectrum<S>, SpectralError> {
    let k = stiffness_matrix(g);
    let (eigenvalues, eigenvectors, residual) = generalized_eigen(&k, g.measures())?;
    Ok(Spectrum {
        kind: SpectrumKind::Laplacian,
        support: (0..g.vertex_count()).collect(),
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Laplacian spectrum of an induced subgraph (may be disconnected).
pub fn induced_laplacian_spectrum<S: Scalar>(
    ig: &InducedGraph<S>,
) -> Result<Spectrum<S>, SpectralError> {
    let k = induced_stiffness(ig);
    let (eigenvalues, eigenvectors, residual) = generalized_eigen(&k, &ig.measures)?;
    Ok(Spectrum {
        kind: SpectrumKind::Laplacian,
        support: ig.original_vertices.clone(),
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Spectrum of `K` restricted to the complement of `dirichlet_set` (zero
/// condition there). All eigenvalues are strictly positive on connected
/// graphs.
pub fn dirichlet_spectrum<S: Scalar>(
    g: &WeightedGraph<S>,
    dirichlet_set: &[usize],
) -> Result<Spectrum<S>, SpectralError> {
    let n = g.vertex_count();
    let mut on_set = vec![false; n];
    for &v in dirichlet_set {
        if v >= n {
            return Err(SpectralError::InvalidDirichletSet);
        }
        on_set[v] = true;
    }
    let omega: Vec<usize> = (0..n).filter(|&v| !on_set[v]).collect();
    if omega.is_empty() || omega.len() == n {
        return Err(SpectralError::InvalidDirichletSet);
    }
    let k = stiffness_matrix(g);
    let k_omega = k.principal_submatrix(&omega);
    let mass: Vec<S> = omega.iter().map(|&v| g.measure(v)).collect();
    let (eigenvalues, eigenvectors, residual) = generalized_eigen(&k_omega, &mass)?;
    Ok(Spectrum {
        kind: SpectrumKind::Dirichlet,
        support: omega,
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Solve `Delta u = 0` on the interior with `u = f` on the boundary.
///
/// `K_OO` is positive definite because the graph is connected and the
/// boundary is nonempty, so the solve cannot hit a zero pivot on valid
/// inputs.
pub fn harmonic_extension<S: Scalar>(
    bg: &BoundaryGraph<S>,
    f: &[S],
) -> Result<HarmonicExtension<S>, SpectralError> {
    let boundary = bg.boundary();
    assert_eq!(f.len(), boundary.len(), "boundary data length");
    let omega = bg.interior();
    let k = stiffness_matrix(bg.graph());
    let k_omega = k.principal_submatrix(omega);
    // rhs_i = -(K_OB f)_i
    let rhs: Vec<S> = omega
        .iter()
        .map(|&y| {
            let mut acc = S::zero();
            for (j, &x) in boundary.iter().enumerate() {
                acc = acc - k.get(y, x) * f[j];
            }
            acc
        })
        .collect();
    let u_omega = Cholesky::new(&k_omega)?.solve(&rhs);

    let mut values = vec![S::zero(); bg.graph().vertex_count()];
    for (j, &x) in boundary.iter().enumerate() {
        values[x] = f[j];
    }
    for (i, &y) in omega.iter().enumerate() {
        values[y] = u_omega[i];
    }
    Ok(HarmonicExtension {
        boundary_values: f.to_vec(),
        values,
    })
}

/// Normal derivative `(1/m_x) sum_y (u(x) - u(y)) w_xy = -Delta u(x)` for
/// every boundary vertex, in boundary order.
pub fn normal_derivative<S: Scalar>(bg: &BoundaryGraph<S>, u: &[S]) -> Vec<S> {
    let g = bg.graph();
    bg.boundary()
        .iter()
        .map(|&x| {
            let acc: S = g
                .neighbors(x)
                .iter()
                .map(|&(y, w)| (u[x] - u[y]) * w)
                .sum();
            acc / g.measure(x)
        })
        .collect()
}

/// Dirichlet-to-Neumann map via the Schur complement
/// `S = K_BB - K_BO K_OO^(-1) K_OB`; one factorization serves every
/// boundary column.
pub fn dtn_matrix<S: Scalar>(bg: &BoundaryGraph<S>) -> Result<DtnOperator<S>, SpectralError> {
    let g = bg.graph();
    let boundary = bg.boundary();
    let omega = bg.interior();
    let k = stiffness_matrix(g);
    let k_omega = k.principal_submatrix(omega);
    let chol = Cholesky::new(&k_omega)?;

    let b = boundary.len();
    let mut schur_rows = vec![vec![S::zero(); b]; b];
    // Solve K_OO x_j = K_OB e_j once per boundary vertex.
    let mut solved: Vec<Vec<S>> = Vec::with_capacity(b);
    for &xj in boundary {
        let col: Vec<S> = omega.iter().map(|&y| k.get(y, xj)).collect();
        solved.push(chol.solve(&col));
    }
    for (i, &xi) in boundary.iter().enumerate() {
        for (j, &xj) in boundary.iter().enumerate() {
            let mut acc = k.get(xi, xj);
            for (oi, &y) in omega.iter().enumerate() {
                acc = acc - k.get(xi, y) * solved[j][oi];
            }
            schur_rows[i][j] = acc;
        }
    }
    let schur = SymMatrix::from_rows(&schur_rows)?;
    let boundary_mass: Vec<S> = boundary.iter().map(|&x| g.measure(x)).collect();
    Ok(DtnOperator {
        boundary: boundary.to_vec(),
        schur,
        boundary_mass,
    })
}

/// Steklov spectrum `0 = sigma_1 < sigma_2 <= ...`: eigenvalues of the DtN
/// map, eigenvectors m-orthonormal over the boundary.
pub fn steklov_spectrum<S: Scalar>(bg: &BoundaryGraph<S>) -> Result<Spectrum<S>, SpectralError> {
    let dtn = dtn_matrix(bg)?;
    let (eigenvalues, eigenvectors, residual) =
        generalized_eigen(&dtn.schur, &dtn.boundary_mass)?;
    Ok(Spectrum {
        kind: SpectrumKind::Steklov,
        support: dtn.boundary,
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Rayleigh quotients `(R, R_sigma)` of a vertex function:
/// `R = <du,du>/<u,u>` and `R_sigma = <du,du>/<u,u>_B`. `R_sigma >= R`
/// always, since `<u,u>_B <= <u,u>`.
pub fn rayleigh_quotients<S: Scalar>(
    bg: &BoundaryGraph<S>,
    u: &[S],
) -> Result<(S, S), SpectralError> {
    let g = bg.graph();
    let energy = energy_product(g, u, u);
    let total = inner_product(g, u, u);
    if total == S::zero() {
        return Err(SpectralError::ZeroDenominator { which: "<u,u>" });
    }
    let on_boundary = inner_product_on(g, bg.boundary(), u, u);
    if on_boundary == S::zero() {
        return Err(SpectralError::ZeroDenominator { which: "<u,u>_B" });
    }
    Ok((energy / total, energy / on_boundary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BoundaryGraph, WeightedGraph};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn p3() -> BoundaryGraph<f64> {
        let g = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        BoundaryGraph::new(g, &[0, 2]).unwrap()
    }

    fn c4_alternating() -> BoundaryGraph<f64> {
        let g = WeightedGraph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        BoundaryGraph::new(g, &[0, 2]).unwrap()
    }

    #[test]
    fn stiffness_of_p3() {
        let g: WeightedGraph<f64> = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        let k = stiffness_matrix(&g);
        let expected = [[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k.get(i, j), expected[i][j]);
            }
        }
    }

    #[test]
    fn stiffness_of_single_heavy_edge() {
        let g: WeightedGraph<f64> =
            WeightedGraph::with_weights(vec![1.0, 1.0], vec![(0, 1, 7.0)]).unwrap();
        let k = stiffness_matrix(&g);
        assert_eq!(k.get(0, 0), 7.0);
        assert_eq!(k.get(0, 1), -7.0);
        assert_eq!(k.get(1, 1), 7.0);
    }

    #[test]
    fn stiffness_annihilates_constants() {
        let g: WeightedGraph<f64> =
            WeightedGraph::with_weights(vec![1.0, 2.0, 0.5, 1.5], vec![(0, 1, 0.3), (1, 2, 2.0), (2, 3, 1.1), (0, 3, 0.7)])
                .unwrap();
        let k = stiffness_matrix(&g);
        for v in k.matvec(&vec![1.0; 4]) {
            assert!(v.abs() < 1e-15);
        }
    }

    #[test]
    fn laplacian_spectra_of_fixtures() {
        // P3: 0, 1, 3 (hand characteristic polynomial).
        let g: WeightedGraph<f64> = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        for (got, want) in s.eigenvalues.iter().zip([0.0, 1.0, 3.0]) {
            assert!(close(*got, want, 1e-12));
        }
        // C4: circulant eigenvalues 2 - 2cos(2 pi k / 4) = 0, 2, 2, 4.
        let g: WeightedGraph<f64> =
            WeightedGraph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        for (got, want) in s.eigenvalues.iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!(close(*got, want, 1e-12));
        }
        // K3: complete graph spectrum 0, 3, 3.
        let g: WeightedGraph<f64> = WeightedGraph::unit(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        for (got, want) in s.eigenvalues.iter().zip([0.0, 3.0, 3.0]) {
            assert!(close(*got, want, 1e-12));
        }
    }

    #[test]
    fn laplacian_eigenvectors_m_orthonormal_and_first_constant() {
        let g: WeightedGraph<f64> = WeightedGraph::with_weights(
            vec![0.7, 1.3, 2.0, 0.5],
            vec![(0, 1, 1.2), (1, 2, 0.8), (2, 3, 1.5), (0, 2, 0.4)],
        )
        .unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        assert!(s.eigenvalues[0].abs() < 1e-9);
        assert!(s.eigenvalues[1] > 0.0);
        let first = &s.eigenvectors[0];
        let mean = first.iter().sum::<f64>() / 4.0;
        for v in first {
            assert!(close(*v, mean, 1e-8 * mean.abs()));
        }
        for i in 0..4 {
            for j in 0..4 {
                let ip = inner_product(&g, &s.eigenvectors[i], &s.eigenvectors[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(close(ip, want, 1e-10));
            }
        }
    }

    #[test]
    fn harmonic_extension_fixtures() {
        // Constants are harmonic.
        let bg = c4_alternating();
        let h = harmonic_extension(&bg, &[3.0, 3.0]).unwrap();
        for v in &h.values {
            assert!(close(*v, 3.0, 1e-12));
        }
        // P3 with f = (1, 0): middle averages to 1/2.
        let bg = p3();
        let h = harmonic_extension(&bg, &[1.0, 0.0]).unwrap();
        assert!(close(h.values[1], 0.5, 1e-12));
        // C4 alternating with f = (1, -1): both interior vertices average
        // their two boundary neighbors to 0.
        let bg = c4_alternating();
        let h = harmonic_extension(&bg, &[1.0, -1.0]).unwrap();
        assert!(close(h.values[1], 0.0, 1e-12));
        assert!(close(h.values[3], 0.0, 1e-12));
    }

    #[test]
    fn harmonic_extension_is_harmonic_and_bounded() {
        let bg = c4_alternating();
        let h = harmonic_extension(&bg, &[2.0, -1.0]).unwrap();
        let delta = laplacian_apply(bg.graph(), &h.values);
        for &y in bg.interior() {
            assert!(delta[y].abs() < 1e-9);
        }
        let (lo, hi) = (-1.0, 2.0);
        for v in &h.values {
            assert!(*v >= lo - 1e-12 && *v <= hi + 1e-12);
        }
    }

    #[test]
    fn normal_derivative_fixtures() {
        let bg = p3();
        // Constants have zero flux.
        let nd = normal_derivative(&bg, &[5.0, 5.0, 5.0]);
        assert!(nd.iter().all(|v| v.abs() < 1e-12));
        // u = (1, 1/2, 0): flux (1/2, -1/2).
        let nd = normal_derivative(&bg, &[1.0, 0.5, 0.0]);
        assert!(close(nd[0], 0.5, 1e-12));
        assert!(close(nd[1], -0.5, 1e-12));
    }

    #[test]
    fn greens_formula_holds() {
        // <Delta u, v>_Omega = -<du, dv> + <du/dn, v>_B for arbitrary u, v.
        let g: WeightedGraph<f64> = WeightedGraph::with_weights(
            vec![0.9, 1.1, 1.7, 0.6, 1.0],
            vec![(0, 1, 1.3), (1, 2, 0.7), (2, 3, 1.9), (3, 4, 0.4), (1, 3, 1.0)],
        )
        .unwrap();
        let bg = BoundaryGraph::new(g, &[0, 4]).unwrap();
        let u = [0.3, -1.2, 0.8, 2.0, -0.5];
        let v = [1.0, 0.4, -0.9, 0.2, 1.5];
        let g = bg.graph();
        let delta_u = laplacian_apply(g, &u);
        let lhs = inner_product_on(g, bg.interior(), &delta_u, &v);
        let flux = normal_derivative(&bg, &u);
        let mut flux_full = vec![0.0; g.vertex_count()];
        for (i, &x) in bg.boundary().iter().enumerate() {
            flux_full[x] = flux[i];
        }
        let rhs = -energy_product(g, &u, &v) + inner_product_on(g, bg.boundary(), &flux_full, &v);
        assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn dtn_fixtures() {
        // P3, endpoints boundary: eliminating the middle vertex gives
        // S = I - (1/2) J, so Lambda = [[.5, -.5], [-.5, .5]].
        let dtn = dtn_matrix(&p3()).unwrap();
        let l = dtn.lambda_matrix();
        assert!(close(l[0][0], 0.5, 1e-12));
        assert!(close(l[0][1], -0.5, 1e-12));
        assert!(close(l[1][0], -0.5, 1e-12));
        assert!(close(l[1][1], 0.5, 1e-12));
        // C4 alternating: each boundary vertex sees 2 f(x) - f1 - f2, i.e.
        // Lambda = [[1, -1], [-1, 1]].
        let dtn = dtn_matrix(&c4_alternating()).unwrap();
        let l = dtn.lambda_matrix();
        assert!(close(l[0][0], 1.0, 1e-12));
        assert!(close(l[0][1], -1.0, 1e-12));
    }

    #[test]
    fn dtn_annihilates_constants_and_matches_flux_route() {
        let g: WeightedGraph<f64> = WeightedGraph::with_weights(
            vec![1.4, 0.8, 1.0, 2.2, 0.5],
            vec![(0, 1, 0.9), (1, 2, 1.1), (2, 3, 0.6), (3, 4, 1.8), (1, 4, 0.3)],
        )
        .unwrap();
        let bg = BoundaryGraph::new(g, &[0, 2]).unwrap();
        let dtn = dtn_matrix(&bg).unwrap();
        let ones = vec![1.0; 2];
        for v in dtn.schur.matvec(&ones) {
            assert!(v.abs() <= 1e-9 * dtn.schur.frobenius_norm());
        }
        // Schur route vs normal_derivative of the harmonic extension on
        // every basis vector.
        for j in 0..2 {
            let mut e = vec![0.0; 2];
            e[j] = 1.0;
            let via_schur = dtn.apply(&e);
            let h = harmonic_extension(&bg, &e).unwrap();
            let via_flux = normal_derivative(&bg, &h.values);
            for (a, b) in via_schur.iter().zip(&via_flux) {
                assert!(close(*a, *b, 1e-9));
            }
        }
    }

    #[test]
    fn steklov_spectra_of_fixtures() {
        let s = steklov_spectrum(&p3()).unwrap();
        assert!(close(s.eigenvalues[0], 0.0, 1e-12));
        assert!(close(s.eigenvalues[1], 1.0, 1e-12));

        let s = steklov_spectrum(&c4_alternating()).unwrap();
        assert!(close(s.eigenvalues[0], 0.0, 1e-12));
        assert!(close(s.eigenvalues[1], 2.0, 1e-12));

        // K_{1,3} with the leaves as boundary: S = I - J/3 on the leaves,
        // so sigma = (0, 1, 1).
        let g: WeightedGraph<f64> = WeightedGraph::unit(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let bg = BoundaryGraph::new(g, &[1, 2, 3]).unwrap();
        let s = steklov_spectrum(&bg).unwrap();
        assert!(close(s.eigenvalues[0], 0.0, 1e-12));
        assert!(close(s.eigenvalues[1], 1.0, 1e-12));
        assert!(close(s.eigenvalues[2], 1.0, 1e-12));
    }

    #[test]
    fn dirichlet_spectra_of_fixtures() {
        // Two vertices, w01 = lambda, Dirichlet at 0: single eigenvalue lambda.
        let lambda = 2.7;
        let g: WeightedGraph<f64> =
            WeightedGraph::with_weights(vec![1.0, 1.0], vec![(0, 1, lambda)]).unwrap();
        let s = dirichlet_spectrum(&g, &[0]).unwrap();
        assert_eq!(s.eigenvalues.len(), 1);
        assert!(close(s.eigenvalues[0], lambda, 1e-12));

        // P3 with Dirichlet at one endpoint: eigenvalues of [[2,-1],[-1,1]]
        // are (3 +- sqrt 5)/2.
        let g: WeightedGraph<f64> = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        let s = dirichlet_spectrum(&g, &[0]).unwrap();
        let lo = (3.0 - 5f64.sqrt()) / 2.0;
        let hi = (3.0 + 5f64.sqrt()) / 2.0;
        assert!(close(s.eigenvalues[0], lo, 1e-12));
        assert!(close(s.eigenvalues[1], hi, 1e-12));
        assert!(s.eigenvalues.iter().all(|&v| v > 0.0));

        let r = dirichlet_spectrum(&g, &[0, 1, 2]);
        assert!(matches!(r, Err(SpectralError::InvalidDirichletSet)));
    }

    #[test]
    fn rayleigh_quotient_behavior() {
        let bg = c4_alternating();
        let (r, rs) = rayleigh_quotients(&bg, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!((r, rs), (0.0, 0.0));

        let spectrum = laplacian_spectrum(bg.graph()).unwrap();
        let u2 = &spectrum.eigenvectors[1];
        let (r, rs) = rayleigh_quotients(&bg, u2).unwrap();
        assert!(close(r, spectrum.eigenvalues[1], 1e-9));
        assert!(rs >= r - 1e-12);

        let zero_on_boundary = [0.0, 1.0, 0.0, -1.0];
        assert!(matches!(
            rayleigh_quotients(&bg, &zero_on_boundary),
            Err(SpectralError::ZeroDenominator { .. })
        ));
    }
}
