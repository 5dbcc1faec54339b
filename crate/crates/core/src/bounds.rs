//! Lower bounds for Steklov eigenvalues and their verification targets.
//!
//! Everything here evaluates a closed-form or small-spectral bound and
//! pairs it with the eigenvalue it bounds; the acceptance tests assert the
//! slacks.

use thiserror::Error;

use crate::curvature::{ollivier_min_adjacent, CurvatureError};
use crate::graph::{
    edge_connectivity, gen_path, vertex_connectivity, BoundaryGraph, GraphError, WeightedGraph,
};
use crate::scalar::Scalar;
use crate::spectral::{dirichlet_spectrum, laplacian_spectrum, steklov_spectrum, SpectralError};

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error("the bound requires the unit weight")]
    NotUnitWeight,
    #[error("index {index} out of range (need 2 <= i <= |B| = {boundary})")]
    IndexOutOfRange { index: usize, boundary: usize },
    #[error("invalid parameters: {what}")]
    InvalidParameters { what: String },
}

/// One evaluated bound against its target eigenvalue.
#[derive(Debug, Clone)]
pub struct BoundReport<S> {
    pub name: String,
    pub bound: S,
    pub target: S,
    /// `target - bound`; nonnegative whenever the hypotheses hold.
    pub slack: S,
    pub notes: String,
}

impl<S: Scalar> BoundReport<S> {
    fn new(name: &str, bound: S, target: S, notes: String) -> Self {
        BoundReport {
            name: name.to_string(),
            bound,
            target,
            slack: target - bound,
            notes,
        }
    }
}

/// Connectivity bounds `sigma_2 >= 2 e(G) (1 - cos(pi/n)) >= 2 v(G) (...)`
/// for unit-weight graphs. Returns (edge report, vertex report).
pub fn fiedler_bounds<S: Scalar>(
    bg: &BoundaryGraph<S>,
) -> Result<(BoundReport<S>, BoundReport<S>), BoundsError> {
    let g = bg.graph();
    if !g.is_unit_weight() {
        return Err(BoundsError::NotUnitWeight);
    }
    if bg.boundary_count() < 2 {
        return Err(BoundsError::IndexOutOfRange {
            index: 2,
            boundary: bg.boundary_count(),
        });
    }
    let n = g.vertex_count();
    let e = edge_connectivity(g);
    let v = vertex_connectivity(g);
    let factor = S::cast(2.0) * (S::one() - (S::PI() / S::cast(n as f64)).cos());
    let sigma2 = steklov_spectrum(bg)?.eigenvalues[1];
    let edge = BoundReport::new(
        "fiedler-edge",
        S::cast(e as f64) * factor,
        sigma2,
        format!("e(G) = {e}, n = {n}"),
    );
    let vertex = BoundReport::new(
        "fiedler-vertex",
        S::cast(v as f64) * factor,
        sigma2,
        format!("v(G) = {v}, n = {n}"),
    );
    Ok((edge, vertex))
}

/// Largest Laplacian eigenvalue of the unit-weight path on `i` vertices,
/// computed numerically (the closed form `2 - 2cos(pi (i-1)/i)` is used as
/// a cross-check in tests).
pub fn path_top_eigenvalue<S: Scalar>(i: usize) -> Result<S, BoundsError> {
    if i < 2 {
        return Err(BoundsError::InvalidParameters {
            what: format!("path top eigenvalue needs i >= 2, got {i}"),
        });
    }
    let path: WeightedGraph<S> = gen_path(i)?;
    let spectrum = laplacian_spectrum(&path)?;
    Ok(*spectrum.eigenvalues.last().expect("nonempty spectrum"))
}

/// First Dirichlet eigenvalue of the path `0..k` with the zero condition at
/// vertex 0, unit measures, `w_01 = lambda` and unit weights elsewhere.
pub fn p_dirichlet<S: Scalar>(k: usize, lambda: S) -> Result<S, BoundsError> {
    if k < 1 || !(lambda > S::zero()) {
        return Err(BoundsError::InvalidParameters {
            what: format!("p_dirichlet needs k >= 1 and lambda > 0, got k = {k}"),
        });
    }
    let mut edges: Vec<(usize, usize, S)> = vec![(0, 1, lambda)];
    for j in 1..k {
        edges.push((j, j + 1, S::one()));
    }
    let g = WeightedGraph::with_weights(vec![S::one(); k + 1], edges)?;
    let spectrum = dirichlet_spectrum(&g, &[0])?;
    Ok(spectrum.eigenvalues[0])
}

/// Friedman-type bound for `sigma_i` on unit-weight graphs.
#[derive(Debug, Clone)]
pub struct FriedmanReport<S> {
    pub report: BoundReport<S>,
    /// `i` divides `|V|`: the strict branch `sigma_i > P(k, lambda_i)`.
    pub divides: bool,
    pub k: usize,
    /// Top path eigenvalue `lambda_i` (divides branch only).
    pub lambda_i: Option<S>,
}

pub fn friedman_bound<S: Scalar>(
    bg: &BoundaryGraph<S>,
    index: usize,
) -> Result<FriedmanReport<S>, BoundsError> {
    let g = bg.graph();
    if !g.is_unit_weight() {
        return Err(BoundsError::NotUnitWeight);
    }
    let b = bg.boundary_count();
    if index < 2 || index > b {
        return Err(BoundsError::IndexOutOfRange {
            index,
            boundary: b,
        });
    }
    let n = g.vertex_count();
    let sigma = steklov_spectrum(bg)?.eigenvalues;
    let target = sigma[index - 1];
    if n % index != 0 {
        let k = n / index;
        let bound = S::cast(2.0)
            * (S::one() - (S::PI() / S::cast((2 * k + 1) as f64)).cos());
        Ok(FriedmanReport {
            report: BoundReport::new(
                "friedman-floor",
                bound,
                target,
                format!("i = {index} does not divide n = {n}; k = {k}"),
            ),
            divides: false,
            k,
            lambda_i: None,
        })
    } else {
        let k = n / index;
        let lambda_i = path_top_eigenvalue::<S>(index)?;
        let bound = p_dirichlet(k, lambda_i)?;
        Ok(FriedmanReport {
            report: BoundReport::new(
                "friedman-dirichlet",
                bound,
                target,
                format!("i = {index} divides n = {n}; k = {k}; strict"),
            ),
            divides: true,
            k,
            lambda_i: Some(lambda_i),
        })
    }
}

/// Lichnerowicz-type check from Ollivier curvature: when the minimum edge
/// curvature is positive it bounds both `mu_2` and `sigma_2` from below.
#[derive(Debug, Clone)]
pub struct OllivierLichnerowiczReport<S> {
    pub kappa_min: S,
    /// The hypothesis `kappa_min > 0` holds.
    pub applicable: bool,
    pub mu2: S,
    /// Absent when the boundary has a single vertex.
    pub sigma2: Option<S>,
    pub mu_slack: Option<S>,
    pub sigma_slack: Option<S>,
}

pub fn lichnerowicz_ollivier_check<S: Scalar>(
    bg: &BoundaryGraph<S>,
) -> Result<OllivierLichnerowiczReport<S>, BoundsError> {
    let g = bg.graph();
    let kappa_min = ollivier_min_adjacent(g)?;
    let mu2 = laplacian_spectrum(g)?.eigenvalues[1];
    let sigma2 = if bg.boundary_count() >= 2 {
        Some(steklov_spectrum(bg)?.eigenvalues[1])
    } else {
        None
    };
    let applicable = kappa_min > S::zero();
    let (mu_slack, sigma_slack) = if applicable {
        (Some(mu2 - kappa_min), sigma2.map(|s| s - kappa_min))
    } else {
        (None, None)
    };
    Ok(OllivierLichnerowiczReport {
        kappa_min,
        applicable,
        mu2,
        sigma2,
        mu_slack,
        sigma_slack,
    })
}

/// Bakry-Emery Lichnerowicz formula `n K / (n - 1)`; a pure evaluator, the
/// curvature-dimension hypothesis itself is not checked.
pub fn lichnerowicz_cd_bound<S: Scalar>(curvature: S, dimension: S) -> Result<S, BoundsError> {
    if !(curvature > S::zero()) || !(dimension > S::one()) {
        return Err(BoundsError::InvalidParameters {
            what: format!("need K > 0 and n > 1, got K = {curvature}, n = {dimension}"),
        });
    }
    Ok(dimension * curvature / (dimension - S::one()))
}
