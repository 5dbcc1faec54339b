//! Graph families used by the comparison and bound checks, plus seeded
//! random instances for property tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

use super::{BoundaryGraph, GraphError, WeightedGraph};

/// Unit-weight path on `n` vertices.
pub fn gen_path<S: Scalar>(n: usize) -> Result<WeightedGraph<S>, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter {
            what: format!("path needs n >= 2, got {n}"),
        });
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    WeightedGraph::unit(n, &edges)
}

/// Unit-weight cycle on `n` vertices.
pub fn gen_cycle<S: Scalar>(n: usize) -> Result<WeightedGraph<S>, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter {
            what: format!("cycle needs n >= 3, got {n}"),
        });
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    WeightedGraph::unit(n, &edges)
}

/// Unit-weight star: a center (vertex 0) with `arms` paths of `arm_len`
/// vertices each.
pub fn gen_star<S: Scalar>(arms: usize, arm_len: usize) -> Result<WeightedGraph<S>, GraphError> {
    if arms < 2 || arm_len < 1 {
        return Err(GraphError::InvalidParameter {
            what: format!("star needs arms >= 2 and arm_len >= 1, got {arms} and {arm_len}"),
        });
    }
    let n = 1 + arms * arm_len;
    let mut edges = Vec::with_capacity(n - 1);
    for j in 0..arms {
        let first = 1 + j * arm_len;
        edges.push((0, first));
        for s in 1..arm_len {
            edges.push((first + s - 1, first + s));
        }
    }
    WeightedGraph::unit(n, &edges)
}

/// Unit-weight comb: a base path on `teeth` vertices with a tooth path of
/// `tooth_len` vertices attached to every base vertex.
pub fn gen_comb<S: Scalar>(teeth: usize, tooth_len: usize) -> Result<WeightedGraph<S>, GraphError> {
    if teeth < 2 || tooth_len < 1 {
        return Err(GraphError::InvalidParameter {
            what: format!("comb needs teeth >= 2 and tooth_len >= 1, got {teeth} and {tooth_len}"),
        });
    }
    let n = teeth * (1 + tooth_len);
    let mut edges = Vec::with_capacity(n - 1);
    for j in 0..teeth - 1 {
        edges.push((j, j + 1));
    }
    for j in 0..teeth {
        let first = teeth + j * tooth_len;
        edges.push((j, first));
        for s in 1..tooth_len {
            edges.push((first + s - 1, first + s));
        }
    }
    WeightedGraph::unit(n, &edges)
}

/// Path with both endpoints as boundary.
pub fn path_boundary<S: Scalar>(n: usize) -> Result<BoundaryGraph<S>, GraphError> {
    let g = gen_path(n)?;
    BoundaryGraph::new(g, &[0, n - 1]).map_err(|e| boundary_mode_error("path endpoints", e))
}

/// Even cycle with every other vertex as boundary.
pub fn cycle_boundary<S: Scalar>(n: usize) -> Result<BoundaryGraph<S>, GraphError> {
    let g = gen_cycle(n)?;
    let boundary: Vec<usize> = (0..n).step_by(2).collect();
    BoundaryGraph::new(g, &boundary).map_err(|e| boundary_mode_error("alternating cycle", e))
}

/// Star with the end point of every arm as boundary.
pub fn star_boundary<S: Scalar>(
    arms: usize,
    arm_len: usize,
) -> Result<BoundaryGraph<S>, GraphError> {
    let g = gen_star(arms, arm_len)?;
    let boundary: Vec<usize> = (0..arms).map(|j| j * arm_len + arm_len).collect();
    BoundaryGraph::new(g, &boundary).map_err(|e| boundary_mode_error("star arm endpoints", e))
}

/// Comb with the free end of every tooth as boundary.
pub fn comb_boundary<S: Scalar>(
    teeth: usize,
    tooth_len: usize,
) -> Result<BoundaryGraph<S>, GraphError> {
    let g = gen_comb(teeth, tooth_len)?;
    let boundary: Vec<usize> = (0..teeth)
        .map(|j| teeth + j * tooth_len + tooth_len - 1)
        .collect();
    BoundaryGraph::new(g, &boundary).map_err(|e| boundary_mode_error("comb tooth tips", e))
}

fn boundary_mode_error(mode: &str, e: GraphError) -> GraphError {
    match e {
        GraphError::AdjacentBoundaryPair { a, b } => GraphError::InvalidBoundaryMode {
            reason: format!("{mode}: vertices '{a}' and '{b}' are adjacent"),
        },
        GraphError::EmptyInterior => GraphError::InvalidBoundaryMode {
            reason: format!("{mode}: interior would be empty"),
        },
        other => other,
    }
}

/// Attach fresh boundary vertices to a given interior so that every
/// boundary-to-interior weight factorizes as `w_xy = rho_y * m_x * m_y`.
///
/// Interior vertices keep indices `0..k` (with their measures and edges);
/// boundary vertices follow. Interior vertices with `rho_y = 0` get no
/// boundary edges, so the interior edges must keep them connected.
pub fn gen_factorized<S: Scalar>(
    interior_measures: &[S],
    interior_edges: &[(usize, usize, S)],
    rho: &[S],
    boundary_measures: &[S],
) -> Result<BoundaryGraph<S>, GraphError> {
    let k = interior_measures.len();
    if rho.len() != k {
        return Err(GraphError::InvalidParameter {
            what: format!("rho has {} entries for {k} interior vertices", rho.len()),
        });
    }
    if boundary_measures.is_empty() {
        return Err(GraphError::EmptyBoundary);
    }
    if rho.iter().any(|&r| r < S::zero()) {
        return Err(GraphError::InvalidParameter {
            what: "rho must be nonnegative".to_string(),
        });
    }
    if rho.iter().all(|&r| r == S::zero()) {
        return Err(GraphError::AllRhoZero);
    }

    let b = boundary_measures.len();
    let mut measures = interior_measures.to_vec();
    measures.extend_from_slice(boundary_measures);
    let mut edges = interior_edges.to_vec();
    for (bi, &mx) in boundary_measures.iter().enumerate() {
        let x = k + bi;
        for (y, (&my, &ry)) in interior_measures.iter().zip(rho.iter()).enumerate() {
            if ry > S::zero() {
                edges.push((x, y, ry * mx * my));
            }
        }
    }
    let graph = WeightedGraph::with_weights(measures, edges)?;
    let boundary: Vec<usize> = (k..k + b).collect();
    BoundaryGraph::new(graph, &boundary)
}

/// Erdos-Renyi `G(n, p)` conditioned on connectivity. Measures and weights
/// are log-uniform in `[0.5, 2]` unless `unit` is set. Deterministic for a
/// fixed generator state.
pub fn random_connected<S: Scalar, R: Rng>(
    rng: &mut R,
    n: usize,
    p: f64,
    unit: bool,
) -> Result<WeightedGraph<S>, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter {
            what: format!("random graph needs n >= 2, got {n}"),
        });
    }
    let mut p = p.clamp(0.05, 1.0);
    for _attempt in 0..10_000 {
        let mut edges: Vec<(usize, usize, S)> = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen::<f64>() < p {
                    let w = if unit { S::one() } else { log_uniform(rng) };
                    edges.push((u, v, w));
                }
            }
        }
        let measures: Vec<S> = (0..n)
            .map(|_| if unit { S::one() } else { log_uniform(rng) })
            .collect();
        match WeightedGraph::with_weights(measures, edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected) => {
                p = (p * 1.1).min(1.0);
                continue;
            }
            Err(e) => return Err(e),
        }
    }
    Err(GraphError::InvalidParameter {
        what: "could not sample a connected graph".to_string(),
    })
}

fn log_uniform<S: Scalar, R: Rng>(rng: &mut R) -> S {
    let u: f64 = rng.gen();
    S::cast(0.5 * 4f64.powf(u))
}

/// A random valid boundary: a nonempty subset of a random-order greedy
/// maximal independent set. Independence gives the first axiom, and every
/// neighbor of an independent vertex is interior, so the second is free.
pub fn random_boundary<S: Scalar, R: Rng>(
    rng: &mut R,
    graph: WeightedGraph<S>,
) -> Result<BoundaryGraph<S>, GraphError> {
    let n = graph.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut in_mis = vec![false; n];
    let mut blocked = vec![false; n];
    let mut mis = Vec::new();
    for &v in &order {
        if !blocked[v] {
            in_mis[v] = true;
            mis.push(v);
            blocked[v] = true;
            for &(u, _) in graph.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    let size = rng.gen_range(1..=mis.len());
    BoundaryGraph::new(graph, &mis[..size])
}

/// Seeded random weighted boundary graph with `2 <= n <= max_n`.
pub fn random_weighted_boundary_graph<S: Scalar>(
    seed: u64,
    max_n: usize,
) -> Result<BoundaryGraph<S>, GraphError> {
    random_boundary_graph_inner(seed, max_n, false)
}

/// Seeded random unit-weight boundary graph with `2 <= n <= max_n`.
pub fn random_unit_boundary_graph<S: Scalar>(
    seed: u64,
    max_n: usize,
) -> Result<BoundaryGraph<S>, GraphError> {
    random_boundary_graph_inner(seed, max_n, true)
}

fn random_boundary_graph_inner<S: Scalar>(
    seed: u64,
    max_n: usize,
    unit: bool,
) -> Result<BoundaryGraph<S>, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n.max(2));
    let p = rng.gen_range(0.15..0.7);
    let g = random_connected(&mut rng, n, p, unit)?;
    random_boundary(&mut rng, g)
}
