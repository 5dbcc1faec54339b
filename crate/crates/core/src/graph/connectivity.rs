//! Combinatorial connectivity quantities. Both ignore weights: they count
//! edges and vertices whose removal disconnects the graph.

use crate::scalar::Scalar;

use super::WeightedGraph;

/// Edge connectivity via Stoer-Wagner global minimum cut with unit
/// capacities. Exact at desk scale.
pub fn edge_connectivity<S: Scalar>(g: &WeightedGraph<S>) -> usize {
    let n = g.vertex_count();
    let mut w = vec![vec![0usize; n]; n];
    for e in g.edges() {
        w[e.u][e.v] = 1;
        w[e.v][e.u] = 1;
    }

    let mut active: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    while active.len() > 1 {
        // Maximum-adjacency ordering; the cut of the phase separates the
        // last vertex added from the rest.
        let mut in_a = vec![false; n];
        let mut key = vec![0usize; n];
        let mut prev = usize::MAX;
        let mut last = usize::MAX;
        for _ in 0..active.len() {
            let mut pick = usize::MAX;
            for &v in &active {
                if !in_a[v] && (pick == usize::MAX || key[v] > key[pick]) {
                    pick = v;
                }
            }
            in_a[pick] = true;
            prev = last;
            last = pick;
            for &v in &active {
                if !in_a[v] {
                    key[v] += w[pick][v];
                }
            }
        }
        best = best.min(key[last]);
        // Merge `last` into `prev`.
        for &v in &active {
            if v != last && v != prev {
                w[prev][v] += w[last][v];
                w[v][prev] = w[prev][v];
            }
        }
        active.retain(|&v| v != last);
    }
    best
}

/// Vertex connectivity. The complete graph is `n - 1` by convention;
/// otherwise it is the minimum over non-adjacent pairs of the vertex-split
/// max-flow (Menger).
pub fn vertex_connectivity<S: Scalar>(g: &WeightedGraph<S>) -> usize {
    let n = g.vertex_count();
    let complete = g.edge_count() == n * (n - 1) / 2;
    if complete {
        return n - 1;
    }
    let mut best = usize::MAX;
    for s in 0..n {
        for t in (s + 1)..n {
            if g.adjacent(s, t) {
                continue;
            }
            best = best.min(split_max_flow(g, s, t));
        }
    }
    best
}

/// Max vertex-disjoint `s`-`t` paths for non-adjacent `s`, `t`: split each
/// vertex into in/out nodes with a unit arc and run BFS augmentation.
fn split_max_flow<S: Scalar>(g: &WeightedGraph<S>, s: usize, t: usize) -> usize {
    let n = g.vertex_count();
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let big = n as i64;

    // Arc list with residuals; arcs[i] paired with arcs[i^1].
    let mut arcs: Vec<(usize, usize, i64)> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let push = |arcs: &mut Vec<(usize, usize, i64)>,
                    adj: &mut Vec<Vec<usize>>,
                    from: usize,
                    to: usize,
                    cap: i64| {
        adj[from].push(arcs.len());
        arcs.push((from, to, cap));
        adj[to].push(arcs.len());
        arcs.push((to, from, 0));
    };
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        push(&mut arcs, &mut adj, node_in(v), node_out(v), cap);
    }
    for e in g.edges() {
        push(&mut arcs, &mut adj, node_out(e.u), node_in(e.v), big);
        push(&mut arcs, &mut adj, node_out(e.v), node_in(e.u), big);
    }

    let source = node_out(s);
    let sink = node_in(t);
    let mut flow = 0usize;
    loop {
        let mut parent_arc = vec![usize::MAX; 2 * n];
        let mut queue = std::collections::VecDeque::from([source]);
        let mut seen = vec![false; 2 * n];
        seen[source] = true;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &ai in &adj[x] {
                let (from, to, cap) = arcs[ai];
                if from == x && cap > 0 && !seen[to] {
                    seen[to] = true;
                    parent_arc[to] = ai;
                    queue.push_back(to);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        // Unit augmentation suffices: every path is throttled by a unit arc.
        let mut x = sink;
        while x != source {
            let ai = parent_arc[x];
            arcs[ai].2 -= 1;
            arcs[ai ^ 1].2 += 1;
            x = arcs[ai].0;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph<f64> {
        WeightedGraph::unit(n, edges).unwrap()
    }

    /// Oracle: try all edge subsets up to size `k` and report the smallest
    /// that disconnects.
    fn brute_edge_connectivity(g: &WeightedGraph<f64>) -> usize {
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let m = edges.len();
        for k in 0..=m {
            let mut chosen = vec![false; m];
            if subsets_disconnect(g, &edges, &mut chosen, 0, k) {
                return k;
            }
        }
        m
    }

    fn subsets_disconnect(
        g: &WeightedGraph<f64>,
        edges: &[(usize, usize)],
        chosen: &mut [bool],
        start: usize,
        left: usize,
    ) -> bool {
        if left == 0 {
            return !connected_without(g, edges, chosen);
        }
        for i in start..edges.len() {
            chosen[i] = true;
            if subsets_disconnect(g, edges, chosen, i + 1, left - 1) {
                chosen[i] = false;
                return true;
            }
            chosen[i] = false;
        }
        false
    }

    fn connected_without(g: &WeightedGraph<f64>, edges: &[(usize, usize)], removed: &[bool]) -> bool {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if !removed[i] {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    #[test]
    fn path_and_cycle() {
        let p3 = unit(3, &[(0, 1), (1, 2)]);
        assert_eq!(edge_connectivity(&p3), 1);
        assert_eq!(vertex_connectivity(&p3), 1);
        let c4 = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(edge_connectivity(&c4), 2);
        assert_eq!(vertex_connectivity(&c4), 2);
    }

    #[test]
    fn complete_graph_k4() {
        let k4 = unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(edge_connectivity(&k4), 3);
        assert_eq!(brute_edge_connectivity(&k4), 3);
        assert_eq!(vertex_connectivity(&k4), 3);
    }

    #[test]
    fn two_triangles_with_a_bridge() {
        let g = unit(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)],
        );
        assert_eq!(edge_connectivity(&g), 1);
        assert_eq!(brute_edge_connectivity(&g), 1);
        assert_eq!(vertex_connectivity(&g), 1);
    }

    #[test]
    fn complete_bipartite_k23() {
        let g = unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(edge_connectivity(&g), 2);
        assert_eq!(vertex_connectivity(&g), 2);
    }
}
