//! Weighted finite graphs with an optional boundary partition.
//!
//! A graph is a triple `(G, m, w)`: a finite simple connected graph with a
//! positive vertex measure `m` and positive symmetric edge weights `w`
//! (stored once per unordered edge). A boundary is an independent vertex
//! set whose members all touch the interior.

mod connectivity;
mod format;
mod generate;

pub use connectivity::{edge_connectivity, vertex_connectivity};
pub use format::{parse_graph_text, write_graph_text, ParseError, ParsedGraph};
pub use generate::{
    comb_boundary, cycle_boundary, gen_comb, gen_cycle, gen_factorized, gen_path, gen_star,
    path_boundary, random_boundary, random_connected, random_unit_boundary_graph,
    random_weighted_boundary_graph, star_boundary,
};

use std::collections::HashMap;
use std::collections::VecDeque;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("a graph needs at least 2 vertices, got {got}")]
    TooFewVertices { got: usize },
    #[error("duplicate vertex label '{label}'")]
    DuplicateLabel { label: String },
    #[error("nonpositive {what}")]
    NonpositiveValue { what: String },
    #[error("self-loop at vertex '{label}'")]
    SelfLoop { label: String },
    #[error("duplicate edge between '{a}' and '{b}'")]
    DuplicateEdge { a: String, b: String },
    #[error("vertex index {index} out of range (graph has {count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("boundary is empty")]
    EmptyBoundary,
    #[error("interior is empty")]
    EmptyInterior,
    #[error("boundary vertices '{a}' and '{b}' are adjacent")]
    AdjacentBoundaryPair { a: String, b: String },
    #[error("boundary vertex '{label}' has no interior neighbor")]
    BoundaryWithoutInteriorNeighbor { label: String },
    #[error("rho vanishes identically")]
    AllRhoZero,
    #[error("invalid boundary mode: {reason}")]
    InvalidBoundaryMode { reason: String },
    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },
}

/// An unordered edge `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<S> {
    pub u: usize,
    pub v: usize,
    pub weight: S,
}

/// Weighted finite simple connected graph.
///
/// Vertices are dense indices `0..n` with string labels; validation happens
/// once at construction and every instance is immutable afterwards.
#[derive(Debug, Clone)]
pub struct WeightedGraph<S> {
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    measures: Vec<S>,
    edges: Vec<Edge<S>>,
    adjacency: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> WeightedGraph<S> {
    pub fn new(
        vertices: Vec<(String, S)>,
        edges: Vec<(usize, usize, S)>,
    ) -> Result<Self, GraphError> {
        let n = vertices.len();
        if n < 2 {
            return Err(GraphError::TooFewVertices { got: n });
        }
        let mut labels = Vec::with_capacity(n);
        let mut measures = Vec::with_capacity(n);
        let mut label_index = HashMap::with_capacity(n);
        for (label, m) in vertices {
            if label_index.contains_key(&label) {
                return Err(GraphError::DuplicateLabel { label });
            }
            if !(m > S::zero()) {
                return Err(GraphError::NonpositiveValue {
                    what: format!("measure of vertex '{label}'"),
                });
            }
            label_index.insert(label.clone(), labels.len());
            labels.push(label);
            measures.push(m);
        }

        let mut normalized: Vec<Edge<S>> = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            for &e in [u, v].iter() {
                if e >= n {
                    return Err(GraphError::VertexOutOfRange { index: e, count: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop {
                    label: labels[u].clone(),
                });
            }
            if !(w > S::zero()) {
                return Err(GraphError::NonpositiveValue {
                    what: format!("weight of edge ('{}','{}')", labels[u], labels[v]),
                });
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            normalized.push(Edge { u, v, weight: w });
        }
        normalized.sort_by_key(|e| (e.u, e.v));
        for pair in normalized.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(GraphError::DuplicateEdge {
                    a: labels[pair[0].u].clone(),
                    b: labels[pair[0].v].clone(),
                });
            }
        }

        let mut adjacency = vec![Vec::new(); n];
        for e in &normalized {
            adjacency[e.u].push((e.v, e.weight));
            adjacency[e.v].push((e.u, e.weight));
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_by_key(|&(v, _)| v);
        }

        let g = WeightedGraph {
            labels,
            label_index,
            measures,
            edges: normalized,
            adjacency,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Unit-weight graph (`m = w = 1`) with labels `"0".."n-1"`.
    pub fn unit(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let vertices = (0..n).map(|i| (i.to_string(), S::one())).collect();
        let edges = edges.iter().map(|&(u, v)| (u, v, S::one())).collect();
        Self::new(vertices, edges)
    }

    /// Indexed labels, explicit measures and weights.
    pub fn with_weights(
        measures: Vec<S>,
        edges: Vec<(usize, usize, S)>,
    ) -> Result<Self, GraphError> {
        let vertices = measures
            .into_iter()
            .enumerate()
            .map(|(i, m)| (i.to_string(), m))
            .collect();
        Self::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn measure(&self, v: usize) -> S {
        self.measures[v]
    }

    pub fn measures(&self) -> &[S] {
        &self.measures
    }

    pub fn edges(&self) -> &[Edge<S>] {
        &self.edges
    }

    /// Neighbors of `v` with edge weights, ascending by index.
    pub fn neighbors(&self, v: usize) -> &[(usize, S)] {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search_by_key(&v, |&(x, _)| x).is_ok()
    }

    pub fn weight_between(&self, u: usize, v: usize) -> Option<S> {
        self.adjacency[u]
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| self.adjacency[u][i].1)
    }

    /// Weighted degree `(1/m_x) sum_y w_xy`.
    pub fn weighted_degree(&self, x: usize) -> S {
        let total: S = self.adjacency[x].iter().map(|&(_, w)| w).sum();
        total / self.measures[x]
    }

    /// Number of incident edges (weights ignored).
    pub fn combinatorial_degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    pub fn min_combinatorial_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.combinatorial_degree(v))
            .min()
            .unwrap_or(0)
    }

    pub fn total_measure(&self) -> S {
        self.measures.iter().copied().sum()
    }

    /// All m and w equal to one exactly.
    pub fn is_unit_weight(&self) -> bool {
        self.measures.iter().all(|&m| m == S::one())
            && self.edges.iter().all(|e| e.weight == S::one())
    }

    /// Hop distances from `from` to every vertex (unweighted BFS).
    pub fn distances_from(&self, from: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Hop distance between two vertices.
    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.distances_from(x)[y]
    }

    fn is_connected(&self) -> bool {
        !self.distances_from(0).contains(&usize::MAX)
    }

    /// Same graph with every edge weight multiplied by `t > 0`.
    pub fn scale_weights(&self, t: S) -> Result<Self, GraphError> {
        let vertices = self
            .labels
            .iter()
            .zip(&self.measures)
            .map(|(l, &m)| (l.clone(), m))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.weight * t))
            .collect();
        Self::new(vertices, edges)
    }

    /// Same graph with every vertex measure multiplied by `t > 0`.
    pub fn scale_measures(&self, t: S) -> Result<Self, GraphError> {
        let vertices = self
            .labels
            .iter()
            .zip(&self.measures)
            .map(|(l, &m)| (l.clone(), m * t))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.weight))
            .collect();
        Self::new(vertices, edges)
    }
}

/// A weighted graph plus a validated boundary set.
///
/// Axioms: no two boundary vertices are adjacent, every boundary vertex has
/// an interior neighbor, and both parts are nonempty.
#[derive(Debug, Clone)]
pub struct BoundaryGraph<S> {
    graph: WeightedGraph<S>,
    boundary: Vec<usize>,
    interior: Vec<usize>,
    is_boundary: Vec<bool>,
}

impl<S: Scalar> BoundaryGraph<S> {
    pub fn new(graph: WeightedGraph<S>, boundary: &[usize]) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        let mut sorted: Vec<usize> = boundary.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(GraphError::EmptyBoundary);
        }
        if let Some(&bad) = sorted.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange {
                index: bad,
                count: n,
            });
        }
        if sorted.len() == n {
            return Err(GraphError::EmptyInterior);
        }
        let mut is_boundary = vec![false; n];
        for &v in &sorted {
            is_boundary[v] = true;
        }
        for &v in &sorted {
            let mut has_interior_neighbor = false;
            for &(u, _) in graph.neighbors(v) {
                if is_boundary[u] {
                    return Err(GraphError::AdjacentBoundaryPair {
                        a: graph.label(v).to_string(),
                        b: graph.label(u).to_string(),
                    });
                }
                has_interior_neighbor = true;
            }
            if !has_interior_neighbor {
                return Err(GraphError::BoundaryWithoutInteriorNeighbor {
                    label: graph.label(v).to_string(),
                });
            }
        }
        let interior = (0..n).filter(|&v| !is_boundary[v]).collect();
        Ok(BoundaryGraph {
            graph,
            boundary: sorted,
            interior,
            is_boundary,
        })
    }

    pub fn graph(&self) -> &WeightedGraph<S> {
        &self.graph
    }

    /// Boundary vertex indices, ascending.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Interior vertex indices, ascending.
    pub fn interior(&self) -> &[usize] {
        &self.interior
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.is_boundary[v]
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary.len()
    }

    pub fn interior_count(&self) -> usize {
        self.interior.len()
    }

    /// Position of vertex `v` in the boundary ordering.
    pub fn boundary_position(&self, v: usize) -> Option<usize> {
        self.boundary.binary_search(&v).ok()
    }

    /// Position of vertex `v` in the interior ordering.
    pub fn interior_position(&self, v: usize) -> Option<usize> {
        self.interior.binary_search(&v).ok()
    }

    pub fn volumes(&self) -> Volumes<S> {
        let vb: S = self.boundary.iter().map(|&v| self.graph.measure(v)).sum();
        let vo: S = self.interior.iter().map(|&v| self.graph.measure(v)).sum();
        Volumes {
            boundary: vb,
            interior: vo,
            total: vb + vo,
        }
    }

    /// Subgraph induced on the interior. May be disconnected or a single
    /// vertex, so it is not a `WeightedGraph`.
    pub fn induced_interior(&self) -> InducedGraph<S> {
        InducedGraph::induced(&self.graph, &self.interior)
    }

    /// Rebuild with all edge weights scaled by `t`.
    pub fn scale_weights(&self, t: S) -> Result<Self, GraphError> {
        Self::new(self.graph.scale_weights(t)?, &self.boundary)
    }

    /// Rebuild with all measures scaled by `t`.
    pub fn scale_measures(&self, t: S) -> Result<Self, GraphError> {
        Self::new(self.graph.scale_measures(t)?, &self.boundary)
    }
}

/// Measure totals per part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Volumes<S> {
    pub boundary: S,
    pub interior: S,
    pub total: S,
}

/// A vertex-induced subgraph: inherits measures and weights but is exempt
/// from the connectivity requirement.
#[derive(Debug, Clone)]
pub struct InducedGraph<S> {
    /// Parent-graph index of each local vertex.
    pub original_vertices: Vec<usize>,
    pub measures: Vec<S>,
    /// Local-index edges, `u < v`.
    pub edges: Vec<(usize, usize, S)>,
}

impl<S: Scalar> InducedGraph<S> {
    pub fn induced(graph: &WeightedGraph<S>, vertices: &[usize]) -> Self {
        let mut local = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let measures = vertices.iter().map(|&v| graph.measure(v)).collect();
        let mut edges = Vec::new();
        for e in graph.edges() {
            if let (Some(&lu), Some(&lv)) = (local.get(&e.u), local.get(&e.v)) {
                let (a, b) = if lu < lv { (lu, lv) } else { (lv, lu) };
                edges.push((a, b, e.weight));
            }
        }
        edges.sort_by_key(|&(u, v, _)| (u, v));
        InducedGraph {
            original_vertices: vertices.to_vec(),
            measures,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.original_vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}
