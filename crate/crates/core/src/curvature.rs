//! Ollivier curvature by linear programming.
//!
//! `kappa(x, y)` is the infimum of `(Delta f(x) - Delta f(y)) / d(x, y)`
//! over functions that are 1-Lipschitz for the hop metric and normalized by
//! `f(y) - f(x) = d(x, y)`. The LP restricts `f` to the closed
//! neighborhoods of `x` and `y` with full-graph distances in the
//! constraints: any feasible restricted function extends 1-Lipschitz to
//! the whole graph, and the objective only reads the restriction, so the
//! optimum is unchanged.

use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::numerics::{lp_minimize, LpConstraint, LpProblem, LpStatus, NumericsError};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum CurvatureError {
    #[error(transparent)]
    Lp(#[from] NumericsError),
    #[error("curvature needs two distinct vertices")]
    SameVertex,
    #[error("curvature LP returned {status:?} on a feasible bounded instance")]
    LpFailure { status: LpStatus },
}

/// Curvature of a vertex pair with the minimizing function.
#[derive(Debug, Clone)]
pub struct CurvaturePair<S> {
    pub x: usize,
    pub y: usize,
    pub kappa: S,
    /// Vertices carrying the optimizer (ascending): `N[x] union N[y]` for
    /// the restricted LP.
    pub support: Vec<usize>,
    /// Minimizing `f` on the support, gauge-fixed by `f(x) = 0`.
    pub optimizer: Vec<S>,
}

/// Curvature via the neighborhood-restricted LP.
pub fn ollivier_kappa<S: Scalar>(
    g: &WeightedGraph<S>,
    x: usize,
    y: usize,
) -> Result<CurvaturePair<S>, CurvatureError> {
    let mut support: Vec<usize> = vec![x, y];
    support.extend(g.neighbors(x).iter().map(|&(v, _)| v));
    support.extend(g.neighbors(y).iter().map(|&(v, _)| v));
    support.sort_unstable();
    support.dedup();
    kappa_on_support(g, x, y, support)
}

/// Curvature via the LP over every vertex; used to validate the
/// neighborhood restriction.
pub fn ollivier_kappa_full_support<S: Scalar>(
    g: &WeightedGraph<S>,
    x: usize,
    y: usize,
) -> Result<CurvaturePair<S>, CurvatureError> {
    kappa_on_support(g, x, y, (0..g.vertex_count()).collect())
}

fn kappa_on_support<S: Scalar>(
    g: &WeightedGraph<S>,
    x: usize,
    y: usize,
    support: Vec<usize>,
) -> Result<CurvaturePair<S>, CurvatureError> {
    if x == y {
        return Err(CurvatureError::SameVertex);
    }
    let position: std::collections::HashMap<usize, usize> = support
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let nv = support.len();

    // Full-graph hop distances between support vertices.
    let dist_rows: Vec<Vec<usize>> = support.iter().map(|&v| g.distances_from(v)).collect();
    let d = |i: usize, j: usize| dist_rows[i][support[j]];
    let dxy = S::cast(d(position[&x], position[&y]) as f64);

    // Objective: (Delta f(x) - Delta f(y)) / d(x, y).
    let mut objective = vec![S::zero(); nv];
    let mut add_delta = |center: usize, sign: S, objective: &mut Vec<S>| {
        let m = g.measure(center);
        for &(v, w) in g.neighbors(center) {
            objective[position[&v]] += sign * w / m;
        }
        objective[position[&center]] -= sign * g.weighted_degree(center);
    };
    add_delta(x, S::one(), &mut objective);
    add_delta(y, -S::one(), &mut objective);
    for c in objective.iter_mut() {
        *c = *c / dxy;
    }

    let mut constraints = Vec::new();
    let row = |i: usize, j: usize| {
        let mut a = vec![S::zero(); nv];
        a[i] = S::one();
        a[j] = -S::one();
        a
    };
    for i in 0..nv {
        for j in (i + 1)..nv {
            let dij = S::cast(d(i, j) as f64);
            constraints.push(LpConstraint::le(row(i, j), dij));
            constraints.push(LpConstraint::le(row(j, i), dij));
        }
    }
    // Normalization f(y) - f(x) = d(x, y) and gauge f(x) = 0.
    constraints.push(LpConstraint::eq(
        row(position[&y], position[&x]),
        dxy,
    ));
    let mut gauge = vec![S::zero(); nv];
    gauge[position[&x]] = S::one();
    constraints.push(LpConstraint::eq(gauge, S::zero()));

    let problem = LpProblem {
        objective,
        constraints,
    };
    let solution = lp_minimize(&problem)?;
    if solution.status != LpStatus::Optimal {
        // f(v) = d(x,y) - d(v,y) is always feasible and the objective is
        // bounded on the (compact, gauge-fixed) feasible set.
        return Err(CurvatureError::LpFailure {
            status: solution.status,
        });
    }
    Ok(CurvaturePair {
        x,
        y,
        kappa: solution.objective,
        support,
        optimizer: solution.x,
    })
}

/// Minimum curvature over the edges of the graph.
pub fn ollivier_min_adjacent<S: Scalar>(g: &WeightedGraph<S>) -> Result<S, CurvatureError> {
    let mut min = S::infinity();
    for e in g.edges() {
        let pair = ollivier_kappa(g, e.u, e.v)?;
        min = min.min(pair.kappa);
    }
    Ok(min)
}

/// Curvature of every unordered pair of distinct vertices, including
/// non-adjacent ones.
pub fn ollivier_all_pairs<S: Scalar>(
    g: &WeightedGraph<S>,
) -> Result<Vec<CurvaturePair<S>>, CurvatureError> {
    let n = g.vertex_count();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in (x + 1)..n {
            pairs.push(ollivier_kappa(g, x, y)?);
        }
    }
    Ok(pairs)
}
