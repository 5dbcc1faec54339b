//! Steklov-versus-Laplacian eigenvalue comparison and its rigidity.
//!
//! The comparison says `sigma_i >= mu_i` for `i = 1..|B|`. Equality for all
//! those indices holds exactly when (1) every boundary-to-interior weight
//! factorizes as `w_xy = rho_y m_x m_y` for a nonnegative `rho` on the
//! interior, and (2) the quadratic form
//! `<du,du>_O - Deg <u,u>_O + V_B <rho u,u>_O - (V_G/Deg) <rho,u>_O^2`
//! is nonnegative on the mean-zero interior functions. Both conditions are
//! checked mechanically here, along with the corollaries they imply.

use thiserror::Error;

use crate::graph::{BoundaryGraph, InducedGraph};
use crate::numerics::{sym_eigen, SymMatrix};
use crate::scalar::Scalar;
use crate::spectral::{
    induced_laplacian_spectrum, induced_stiffness, laplacian_apply, laplacian_spectrum,
    steklov_spectrum, SpectralError,
};

/// Default relative tolerance for equality detection.
pub fn default_tol<S: Scalar>() -> S {
    S::cast(1e-8)
}

#[derive(Debug, Error)]
pub enum ComparisonError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("index {index} is not an equality index")]
    NotAnEqualityIndex { index: usize },
    #[error("boundary weighted degree vanishes")]
    DegZero,
}

/// Per-index gaps `sigma_i - mu_i` for `i = 1..|B|`.
#[derive(Debug, Clone)]
pub struct ComparisonReport<S> {
    pub sigma: Vec<S>,
    pub mu: Vec<S>,
    pub gaps: Vec<S>,
    /// `|sigma_i - mu_i| <= tol (1 + |sigma_i|)` per index.
    pub equality: Vec<bool>,
    pub tol: S,
}

impl<S: Scalar> ComparisonReport<S> {
    pub fn all_equal(&self) -> bool {
        self.equality.iter().all(|&e| e)
    }

    /// Worst violation of the comparison: the most negative normalized gap.
    pub fn min_normalized_gap(&self) -> S {
        self.gaps
            .iter()
            .zip(&self.sigma)
            .map(|(&g, &s)| g / (S::one() + s.abs()))
            .fold(S::infinity(), |a, b| a.min(b))
    }
}

/// Rigidity verdict for the full-equality characterization.
#[derive(Debug, Clone)]
pub struct RigidityReport<S> {
    pub comparison: ComparisonReport<S>,
    /// Detected factorization function on the interior, in interior order.
    pub rho: Option<Vec<S>>,
    pub factorization_ok: bool,
    /// Common boundary weighted degree (when the factorization holds).
    pub deg: Option<S>,
    /// Minimum of the rigidity form on the mean-zero subspace, m-weighted;
    /// `+inf` when the interior is a single vertex.
    pub form_min: Option<S>,
    pub form_ok: Option<bool>,
    pub predicted: bool,
    pub observed: bool,
}

/// Corollary report: sufficient condition on general weighted graphs.
#[derive(Debug, Clone)]
pub struct CorGeneralReport<S> {
    pub applicable: bool,
    pub rho: Option<Vec<S>>,
    pub mu2_interior: Option<S>,
    pub rhs: Option<S>,
    pub holds: Option<bool>,
}

/// Corollary report: the constant-rho if-and-only-if characterization.
#[derive(Debug, Clone)]
pub struct CorConstantReport<S> {
    pub applicable: bool,
    pub rho: Option<S>,
    /// `rho (V_Omega - V_B)`.
    pub threshold: Option<S>,
    pub mu2_interior: Option<S>,
    pub holds: Option<bool>,
    pub interior_disconnected: bool,
    /// The special case `V_B >= V_Omega` (meaningful when disconnected).
    pub disconnected_case_holds: Option<bool>,
}

/// Corollary report: unit-weight rigidity via the interior partition.
#[derive(Debug, Clone)]
pub struct UnitRigidityReport<S> {
    pub applicable: bool,
    /// Interior vertices with no boundary neighbor.
    pub omega0: Vec<usize>,
    /// Interior vertices adjacent to the boundary.
    pub omega1: Vec<usize>,
    /// Every interior vertex is adjacent to all of B or to none.
    pub cond1: bool,
    /// `|E(Omega0, Omega1)| = |Omega0| |Omega1|`.
    pub cond2: bool,
    /// `mu_2(Omega1) >= |Omega1| - |Omega0| - |B|` (vacuous for
    /// `|Omega1| <= 1`).
    pub cond3: bool,
    pub mu2_omega1: Option<S>,
    pub predicted: bool,
}

/// Compare the Steklov spectrum against the first `|B|` Laplacian
/// eigenvalues.
pub fn compare_spectra<S: Scalar>(
    bg: &BoundaryGraph<S>,
    tol: S,
) -> Result<ComparisonReport<S>, SpectralError> {
    let sigma = steklov_spectrum(bg)?.eigenvalues;
    let mu_full = laplacian_spectrum(bg.graph())?.eigenvalues;
    let b = sigma.len();
    let mu: Vec<S> = mu_full[..b].to_vec();
    let gaps: Vec<S> = sigma.iter().zip(&mu).map(|(&s, &m)| s - m).collect();
    let equality: Vec<bool> = gaps
        .iter()
        .zip(&sigma)
        .map(|(&g, &s)| g.abs() <= tol * (S::one() + s.abs()))
        .collect();
    Ok(ComparisonReport {
        sigma,
        mu,
        gaps,
        equality,
        tol,
    })
}

/// Detect the factorization `w_xy = rho_y m_x m_y` for boundary-interior
/// pairs. Every interior vertex must be adjacent to all boundary vertices
/// (with consistent quotients) or to none (`rho_y = 0`), and all boundary
/// weighted degrees must agree with `<rho, 1>_Omega`.
pub fn factorization_rho<S: Scalar>(bg: &BoundaryGraph<S>, tol: S) -> Option<Vec<S>> {
    let g = bg.graph();
    let bcount = bg.boundary_count();
    let mut rho = Vec::with_capacity(bg.interior_count());
    for &y in bg.interior() {
        let boundary_neighbors: Vec<(usize, S)> = g
            .neighbors(y)
            .iter()
            .filter(|&&(x, _)| bg.is_boundary(x))
            .copied()
            .collect();
        if boundary_neighbors.is_empty() {
            rho.push(S::zero());
            continue;
        }
        if boundary_neighbors.len() < bcount {
            return None;
        }
        let candidates: Vec<S> = boundary_neighbors
            .iter()
            .map(|&(x, w)| w / (g.measure(x) * g.measure(y)))
            .collect();
        let mean = candidates.iter().copied().sum::<S>() / S::cast(candidates.len() as f64);
        if candidates
            .iter()
            .any(|&c| (c - mean).abs() > tol * (S::one() + mean.abs()))
        {
            return None;
        }
        rho.push(mean);
    }

    let deg: S = bg
        .interior()
        .iter()
        .zip(&rho)
        .map(|(&y, &r)| r * g.measure(y))
        .sum();
    for &x in bg.boundary() {
        if (g.weighted_degree(x) - deg).abs() > tol * (S::one() + deg.abs()) {
            return None;
        }
    }
    Some(rho)
}

/// Minimum eigenvalue (m-weighted) of the rigidity quadratic form on
/// `{u on Omega : <u, 1>_Omega = 0}`. A single-vertex interior forces
/// `u = 0`, reported as `+inf`.
pub fn rigidity_form_min<S: Scalar>(
    bg: &BoundaryGraph<S>,
    rho: &[S],
) -> Result<S, ComparisonError> {
    let g = bg.graph();
    let omega = bg.interior();
    let k = omega.len();
    assert_eq!(rho.len(), k, "rho length");
    let measures: Vec<S> = omega.iter().map(|&y| g.measure(y)).collect();
    let deg: S = measures.iter().zip(rho).map(|(&m, &r)| r * m).sum();
    if !(deg > S::zero()) {
        return Err(ComparisonError::DegZero);
    }
    if k == 1 {
        return Ok(S::infinity());
    }
    let volumes = bg.volumes();

    // A = K_Omega + M (V_B diag(rho) - Deg I) - (V_G / Deg) (M rho)(M rho)'
    let induced = bg.induced_interior();
    let mut a = induced_stiffness(&induced);
    for i in 0..k {
        a.add_to(i, i, measures[i] * (volumes.boundary * rho[i] - deg));
    }
    let m_rho: Vec<S> = measures.iter().zip(rho).map(|(&m, &r)| m * r).collect();
    let scale = volumes.total / deg;
    for i in 0..k {
        for j in i..k {
            a.add_to(i, j, -scale * m_rho[i] * m_rho[j]);
        }
    }

    // Reduce to a Euclidean problem and project out the m-weighted
    // constant direction with a Householder basis.
    let inv_sqrt: Vec<S> = measures.iter().map(|&m| S::one() / m.sqrt()).collect();
    let a_tilde = a.congruence_diag(&inv_sqrt);
    let v_omega_sqrt = volumes.interior.sqrt();
    let q1: Vec<S> = measures.iter().map(|&m| m.sqrt() / v_omega_sqrt).collect();

    let mut h = vec![S::zero(); k];
    h[0] = S::one();
    let mut v: Vec<S> = q1.iter().zip(&h).map(|(&q, &e)| q - e).collect();
    let vnorm2: S = v.iter().map(|&x| x * x).sum();
    let use_reflection = vnorm2 > S::epsilon();
    if !use_reflection {
        v = vec![S::zero(); k];
    }
    let column = |j: usize| -> Vec<S> {
        // Column j of the Householder matrix I - 2 v v' / (v'v).
        (0..k)
            .map(|i| {
                let e = if i == j { S::one() } else { S::zero() };
                if use_reflection {
                    e - S::cast(2.0) * v[i] * v[j] / vnorm2
                } else {
                    e
                }
            })
            .collect()
    };

    // Columns 1..k of the reflection span the orthogonal complement of q1.
    let basis: Vec<Vec<S>> = (1..k).map(column).collect();
    let projected = SymMatrix::from_fn(k - 1, |i, j| {
        let aqj = a_tilde.matvec(&basis[j]);
        basis[i]
            .iter()
            .zip(&aqj)
            .map(|(&qi, &aq)| qi * aq)
            .sum::<S>()
    });
    let eig = sym_eigen(&projected).map_err(SpectralError::from)?;
    Ok(eig.eigenvalues[0])
}

/// Assemble the full rigidity verdict: factorization, form nonnegativity,
/// their conjunction (predicted), and the observed equality pattern.
pub fn full_equality_rigidity<S: Scalar>(
    bg: &BoundaryGraph<S>,
    tol: S,
) -> Result<RigidityReport<S>, ComparisonError> {
    let comparison = compare_spectra(bg, tol)?;
    let rho = factorization_rho(bg, tol);
    let factorization_ok = rho.is_some();
    let (deg, form_min, form_ok) = match &rho {
        Some(rho) => {
            let g = bg.graph();
            let deg: S = bg
                .interior()
                .iter()
                .zip(rho)
                .map(|(&y, &r)| r * g.measure(y))
                .sum();
            let form_min = rigidity_form_min(bg, rho)?;
            let ok = form_min >= -tol * (S::one() + deg.abs());
            (Some(deg), Some(form_min), Some(ok))
        }
        None => (None, None, None),
    };
    let predicted = factorization_ok && form_ok.unwrap_or(false);
    let observed = comparison.all_equal();
    Ok(RigidityReport {
        comparison,
        rho,
        factorization_ok,
        deg,
        form_min,
        form_ok,
        predicted,
        observed,
    })
}

/// For an equality index `i >= 2` (1-based), search the mu_i eigenvalue
/// cluster for a combination vanishing on the interior. Returns the
/// witness (with `v = Delta v = 0` on the interior verified) or `None` if
/// the cluster's interior restriction has full rank, which contradicts
/// equality and flags an anomaly.
pub fn equality_eigenfunction_witness<S: Scalar>(
    bg: &BoundaryGraph<S>,
    index: usize,
    tol: S,
) -> Result<Option<Vec<S>>, ComparisonError> {
    let b = bg.boundary_count();
    if index < 2 || index > b {
        return Err(ComparisonError::NotAnEqualityIndex { index });
    }
    let comparison = compare_spectra(bg, tol)?;
    if !comparison.equality[index - 1] {
        return Err(ComparisonError::NotAnEqualityIndex { index });
    }

    let spectrum = laplacian_spectrum(bg.graph())?;
    let mu_i = spectrum.eigenvalues[index - 1];
    let cluster: Vec<usize> = spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|&(_, &m)| (m - mu_i).abs() <= tol * (S::one() + mu_i.abs()))
        .map(|(j, _)| j)
        .collect();

    // m-weighted Gram matrix of the interior restrictions.
    let g = bg.graph();
    let omega = bg.interior();
    let gram = SymMatrix::from_fn(cluster.len(), |a, c| {
        omega
            .iter()
            .map(|&y| {
                g.measure(y) * spectrum.eigenvectors[cluster[a]][y]
                    * spectrum.eigenvectors[cluster[c]][y]
            })
            .sum::<S>()
    });
    let eig = sym_eigen(&gram).map_err(SpectralError::from)?;
    if eig.eigenvalues[0] > S::cast(1e-8) {
        return Ok(None);
    }
    let coeffs = &eig.eigenvectors[0];
    let n = g.vertex_count();
    let mut witness = vec![S::zero(); n];
    for (a, &j) in cluster.iter().enumerate() {
        for x in 0..n {
            witness[x] = witness[x] + coeffs[a] * spectrum.eigenvectors[j][x];
        }
    }

    let sup: S = witness.iter().fold(S::zero(), |m, &x| m.max(x.abs()));
    let check_tol = S::cast(1e-7) * (S::one() + sup);
    let delta = laplacian_apply(g, &witness);
    let delta_tol = check_tol * (S::one() + mu_i.abs());
    for &y in omega {
        if witness[y].abs() > check_tol || delta[y].abs() > delta_tol {
            return Ok(None);
        }
    }
    Ok(Some(witness))
}

/// Second Laplacian eigenvalue of an induced subgraph with the conventions
/// used by the corollaries: `+inf` for a single vertex, exactly `0` when
/// disconnected.
pub fn mu2_with_conventions<S: Scalar>(ig: &InducedGraph<S>) -> Result<S, SpectralError> {
    if ig.vertex_count() <= 1 {
        return Ok(S::infinity());
    }
    if !ig.is_connected() {
        return Ok(S::zero());
    }
    Ok(induced_laplacian_spectrum(ig)?.eigenvalues[1])
}

/// Sufficient condition for full equality on general weighted graphs:
/// `mu_2(Omega) >= Deg - V_B rho_min + (V_G / Deg) <rho, rho>_Omega`.
pub fn check_cor_general<S: Scalar>(
    bg: &BoundaryGraph<S>,
    tol: S,
) -> Result<CorGeneralReport<S>, ComparisonError> {
    let Some(rho) = factorization_rho(bg, tol) else {
        return Ok(CorGeneralReport {
            applicable: false,
            rho: None,
            mu2_interior: None,
            rhs: None,
            holds: None,
        });
    };
    let g = bg.graph();
    let measures: Vec<S> = bg.interior().iter().map(|&y| g.measure(y)).collect();
    let deg: S = measures.iter().zip(&rho).map(|(&m, &r)| r * m).sum();
    if !(deg > S::zero()) {
        return Err(ComparisonError::DegZero);
    }
    let volumes = bg.volumes();
    let rho_min = rho.iter().copied().fold(S::infinity(), |a, b| a.min(b));
    let rho_sq: S = measures.iter().zip(&rho).map(|(&m, &r)| r * r * m).sum();
    let rhs = deg - volumes.boundary * rho_min + volumes.total / deg * rho_sq;
    let mu2 = mu2_with_conventions(&bg.induced_interior())?;
    let holds = mu2 >= rhs - tol * (S::one() + rhs.abs());
    Ok(CorGeneralReport {
        applicable: true,
        rho: Some(rho),
        mu2_interior: Some(mu2),
        rhs: Some(rhs),
        holds: Some(holds),
    })
}

/// Constant-rho characterization: full equality iff
/// `rho (V_Omega - V_B) <= mu_2(Omega)`, which for a disconnected interior
/// reduces to `V_B >= V_Omega`.
pub fn check_cor_constant<S: Scalar>(
    bg: &BoundaryGraph<S>,
    tol: S,
) -> Result<CorConstantReport<S>, ComparisonError> {
    let induced = bg.induced_interior();
    let interior_disconnected = !induced.is_connected();
    let not_applicable = CorConstantReport {
        applicable: false,
        rho: None,
        threshold: None,
        mu2_interior: None,
        holds: None,
        interior_disconnected,
        disconnected_case_holds: None,
    };
    let Some(rho) = factorization_rho(bg, tol) else {
        return Ok(not_applicable);
    };
    let mean = rho.iter().copied().sum::<S>() / S::cast(rho.len() as f64);
    let constant = rho
        .iter()
        .all(|&r| (r - mean).abs() <= tol * (S::one() + mean.abs()));
    if !constant || !(mean > S::zero()) {
        return Ok(not_applicable);
    }
    let volumes = bg.volumes();
    let threshold = mean * (volumes.interior - volumes.boundary);
    let mu2 = mu2_with_conventions(&induced)?;
    let holds = threshold <= mu2 + tol * (S::one() + mu2.abs().min(S::cast(1e100)));
    let disconnected_case_holds = if interior_disconnected {
        Some(volumes.boundary >= volumes.interior - tol * (S::one() + volumes.interior))
    } else {
        None
    };
    Ok(CorConstantReport {
        applicable: true,
        rho: Some(mean),
        threshold: Some(threshold),
        mu2_interior: Some(mu2),
        holds: Some(holds),
        interior_disconnected,
        disconnected_case_holds,
    })
}

/// Unit-weight characterization via the interior partition
/// `Omega = Omega0 (no boundary neighbors) + Omega1 (all of them)`.
pub fn check_cor_unit<S: Scalar>(
    bg: &BoundaryGraph<S>,
    tol: S,
) -> Result<UnitRigidityReport<S>, ComparisonError> {
    if !bg.graph().is_unit_weight() {
        return Ok(UnitRigidityReport {
            applicable: false,
            omega0: vec![],
            omega1: vec![],
            cond1: false,
            cond2: false,
            cond3: false,
            mu2_omega1: None,
            predicted: false,
        });
    }
    let g = bg.graph();
    let b = bg.boundary_count();
    let mut omega0 = Vec::new();
    let mut omega1 = Vec::new();
    let mut cond1 = true;
    for &y in bg.interior() {
        let count = g
            .neighbors(y)
            .iter()
            .filter(|&&(x, _)| bg.is_boundary(x))
            .count();
        if count == 0 {
            omega0.push(y);
        } else {
            omega1.push(y);
            if count != b {
                cond1 = false;
            }
        }
    }

    let crossing = g
        .edges()
        .iter()
        .filter(|e| {
            let u0 = omega0.binary_search(&e.u).is_ok();
            let v0 = omega0.binary_search(&e.v).is_ok();
            let u1 = omega1.binary_search(&e.u).is_ok();
            let v1 = omega1.binary_search(&e.v).is_ok();
            (u0 && v1) || (u1 && v0)
        })
        .count();
    let cond2 = crossing == omega0.len() * omega1.len();

    let (cond3, mu2_omega1) = if omega1.len() <= 1 {
        (true, None)
    } else {
        let induced = InducedGraph::induced(g, &omega1);
        let mu2 = mu2_with_conventions(&induced)?;
        let rhs = S::cast(omega1.len() as f64)
            - S::cast(omega0.len() as f64)
            - S::cast(b as f64);
        (mu2 >= rhs - tol * (S::one() + rhs.abs()), Some(mu2))
    };

    Ok(UnitRigidityReport {
        applicable: true,
        omega0,
        omega1,
        cond1,
        cond2,
        cond3,
        mu2_omega1,
        predicted: cond1 && cond2 && cond3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_factorized, BoundaryGraph, WeightedGraph};

    fn tol() -> f64 {
        default_tol::<f64>()
    }

    fn p3() -> BoundaryGraph<f64> {
        let g = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        BoundaryGraph::new(g, &[0, 2]).unwrap()
    }

    fn p4() -> BoundaryGraph<f64> {
        let g = WeightedGraph::unit(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        BoundaryGraph::new(g, &[0, 3]).unwrap()
    }

    fn c4_alternating() -> BoundaryGraph<f64> {
        let g = WeightedGraph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        BoundaryGraph::new(g, &[0, 2]).unwrap()
    }

    fn k13_leaves() -> BoundaryGraph<f64> {
        let g = WeightedGraph::unit(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        BoundaryGraph::new(g, &[1, 2, 3]).unwrap()
    }

    /// The alternating 4-cycle with boundary measures shrunk to 0.1 while
    /// keeping rho = 1 (so boundary edges weigh 0.1). Equality fails.
    fn c4_shrunk() -> BoundaryGraph<f64> {
        gen_factorized(&[1.0, 1.0], &[], &[1.0, 1.0], &[0.1, 0.1]).unwrap()
    }

    #[test]
    fn comparison_on_fixtures() {
        let r = compare_spectra(&p3(), tol()).unwrap();
        assert!(r.gaps.iter().all(|g| g.abs() < 1e-10));
        assert!(r.all_equal());

        let r = compare_spectra(&c4_alternating(), tol()).unwrap();
        assert!(r.gaps.iter().all(|g| g.abs() < 1e-10));

        // sigma_1 = mu_1 = 0 always.
        let r = compare_spectra(&p4(), tol()).unwrap();
        assert!(r.sigma[0].abs() < 1e-10);
        assert!(r.mu[0].abs() < 1e-10);
        assert!(r.equality[0]);
        // P4 with endpoint boundary: sigma_2 = 2/3 > mu_2 = 2 - sqrt 2.
        assert!((r.sigma[1] - 2.0 / 3.0).abs() < 1e-10);
        assert!((r.mu[1] - (2.0 - 2f64.sqrt())).abs() < 1e-10);
        assert!(!r.equality[1]);
    }

    #[test]
    fn factorization_detection() {
        // C4 alternating, unit weight: rho = 1 on both interior vertices.
        let rho = factorization_rho(&c4_alternating(), tol()).unwrap();
        assert_eq!(rho.len(), 2);
        assert!(rho.iter().all(|r| (r - 1.0).abs() < 1e-12));

        // P4 endpoints: each interior vertex misses one boundary vertex.
        assert!(factorization_rho(&p4(), tol()).is_none());
    }

    #[test]
    fn factorization_recovers_generated_rho() {
        let rho_in = [0.7, 0.0, 2.5];
        let bg = gen_factorized(
            &[1.5, 0.8, 1.1],
            &[(0, 1, 0.9), (1, 2, 1.3)],
            &rho_in,
            &[0.6, 2.0],
        )
        .unwrap();
        let rho = factorization_rho(&bg, tol()).unwrap();
        for (got, want) in rho.iter().zip(&rho_in) {
            assert!(
                (got - want).abs() <= 1e-10 * (1.0 + want.abs()),
                "{got} vs {want}"
            );
        }
    }

    #[test]
    fn form_min_fixtures() {
        // Single interior vertex: the constraint kills every u.
        let rho = factorization_rho(&p3(), tol()).unwrap();
        let min = rigidity_form_min(&p3(), &rho).unwrap();
        assert!(min.is_infinite() && min > 0.0);

        // C4 alternating: the form is identically zero on the mean-zero
        // line u = (a, -a).
        let bg = c4_alternating();
        let rho = factorization_rho(&bg, tol()).unwrap();
        let min = rigidity_form_min(&bg, &rho).unwrap();
        assert!(min.abs() < 1e-12);

        // Shrunk boundary measures: Q(u) = (-2*2 + 0.2*2) a^2 on u=(a,-a),
        // i.e. minimum eigenvalue -1.8.
        let bg = c4_shrunk();
        let rho = factorization_rho(&bg, tol()).unwrap();
        let min = rigidity_form_min(&bg, &rho).unwrap();
        assert!((min - (-1.8)).abs() < 1e-10, "{min}");
    }

    #[test]
    fn rigidity_iff_on_fixtures() {
        for (bg, expect) in [
            (c4_alternating(), true),
            (p3(), true),
            (k13_leaves(), true),
            (p4(), false),
            (c4_shrunk(), false),
        ] {
            let r = full_equality_rigidity(&bg, tol()).unwrap();
            assert_eq!(r.predicted, expect);
            assert_eq!(r.observed, expect);
        }
    }

    #[test]
    fn rigidity_with_scaled_interior_weights() {
        // A connected interior whose weights grow makes the form positive:
        // equality appears once the interior spectral gap dominates.
        let interior_edges = [(0usize, 1usize, 1.0f64), (1, 2, 1.0)];
        for scale in [0.1, 1.0, 10.0, 100.0] {
            let edges: Vec<(usize, usize, f64)> = interior_edges
                .iter()
                .map(|&(u, v, w)| (u, v, w * scale))
                .collect();
            let bg =
                gen_factorized(&[1.0, 1.0, 1.0], &edges, &[1.0, 1.0, 1.0], &[1.0, 1.0]).unwrap();
            let r = full_equality_rigidity(&bg, tol()).unwrap();
            assert_eq!(r.predicted, r.observed, "scale {scale}");
        }
        // At scale 100 the sufficient condition of the general corollary
        // fires and equality is observed.
        let edges: Vec<(usize, usize, f64)> = interior_edges
            .iter()
            .map(|&(u, v, w)| (u, v, w * 100.0))
            .collect();
        let bg = gen_factorized(&[1.0, 1.0, 1.0], &edges, &[1.0, 1.0, 1.0], &[1.0, 1.0]).unwrap();
        let general = check_cor_general(&bg, tol()).unwrap();
        assert!(general.applicable);
        assert!(general.holds.unwrap());
        let r = full_equality_rigidity(&bg, tol()).unwrap();
        assert!(r.observed);
    }

    #[test]
    fn witness_on_equality_fixtures() {
        // C4 alternating, i = 2: boundary data (1, -1) extends by zero.
        let bg = c4_alternating();
        let w = equality_eigenfunction_witness(&bg, 2, tol())
            .unwrap()
            .expect("witness exists");
        assert!(w[1].abs() < 1e-9);
        assert!(w[3].abs() < 1e-9);
        assert!(w[0].abs() > 0.1);

        // P3, i = 2: the eigenvector (1, 0, -1)/sqrt(2) vanishes at the
        // middle vertex.
        let bg = p3();
        let w = equality_eigenfunction_witness(&bg, 2, tol())
            .unwrap()
            .expect("witness exists");
        assert!(w[1].abs() < 1e-9);

        // Star with leaf boundary, i = 2: witness vanishes at the center.
        let bg = k13_leaves();
        let w = equality_eigenfunction_witness(&bg, 2, tol())
            .unwrap()
            .expect("witness exists");
        assert!(w[0].abs() < 1e-9);

        // Non-equality index errors out.
        let bg = p4();
        assert!(matches!(
            equality_eigenfunction_witness(&bg, 2, tol()),
            Err(ComparisonError::NotAnEqualityIndex { .. })
        ));
    }

    #[test]
    fn cor_general_on_fixtures() {
        // C4 alternating: mu2(Omega) = 0 (disconnected) but the right-hand
        // side is 2 - 2 + (4/2)*2 = 4, so the sufficient condition fails
        // even though equality holds.
        let r = check_cor_general(&c4_alternating(), tol()).unwrap();
        assert!(r.applicable);
        assert_eq!(r.mu2_interior.unwrap(), 0.0);
        assert!((r.rhs.unwrap() - 4.0).abs() < 1e-12);
        assert!(!r.holds.unwrap());

        // Not factorized: not applicable.
        let r = check_cor_general(&p4(), tol()).unwrap();
        assert!(!r.applicable);
    }

    #[test]
    fn cor_constant_on_fixtures() {
        // C4 alternating: rho = 1, V_Omega - V_B = 0 <= mu2 = 0.
        let r = check_cor_constant(&c4_alternating(), tol()).unwrap();
        assert!(r.applicable);
        assert!((r.rho.unwrap() - 1.0).abs() < 1e-12);
        assert!(r.holds.unwrap());
        assert!(r.interior_disconnected);
        assert!(r.disconnected_case_holds.unwrap());

        // Shrunk boundary measures: 1 * (2 - 0.2) = 1.8 > 0, no equality.
        let r = check_cor_constant(&c4_shrunk(), tol()).unwrap();
        assert!(r.applicable);
        assert!(!r.holds.unwrap());
        assert!(!r.disconnected_case_holds.unwrap());

        // P3: single interior vertex, mu2 = +inf convention.
        let r = check_cor_constant(&p3(), tol()).unwrap();
        assert!(r.applicable);
        assert!(r.mu2_interior.unwrap().is_infinite());
        assert!(r.holds.unwrap());
    }

    #[test]
    fn cor_unit_on_fixtures() {
        // C4 alternating: Omega0 empty, mu2(Omega1) = 0 >= 2 - 0 - 2.
        let r = check_cor_unit(&c4_alternating(), tol()).unwrap();
        assert!(r.applicable);
        assert!(r.omega0.is_empty());
        assert_eq!(r.omega1.len(), 2);
        assert!(r.cond1 && r.cond2 && r.cond3);
        assert!(r.predicted);

        // Star with leaf boundary: single interior vertex, cond3 vacuous.
        let r = check_cor_unit(&k13_leaves(), tol()).unwrap();
        assert!(r.predicted);
        assert!(r.mu2_omega1.is_none());

        // P4 endpoints: interior vertices see only one of two boundary
        // vertices, cond1 fails.
        let r = check_cor_unit(&p4(), tol()).unwrap();
        assert!(!r.cond1);
        assert!(!r.predicted);

        // Non-unit weights: not applicable.
        let r = check_cor_unit(&c4_shrunk(), tol()).unwrap();
        assert!(!r.applicable);
    }
}
