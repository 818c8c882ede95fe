//! Finite simple undirected graphs over dense 0-based vertex ids.
//!
//! Adjacency lists are kept sorted and strictly increasing, so the symmetry,
//! no-loop and no-multi-edge invariants are enforced by construction. Values
//! are immutable once built; every operation here is a pure function.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Normalized unordered vertex pair with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the normalized pair. Panics on a loop; use `try_new` for
    /// untrusted input.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loops are not edges");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Edge, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        Ok(Edge::new(a, b))
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// The image of this edge under a vertex map.
    pub fn mapped(&self, image: &[usize]) -> Edge {
        Edge::new(image[self.u], image[self.v])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// loops and out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges in sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Connected components as sorted vertex sets; their union is V(G).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// K0 and K1 both count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `s` together with the vertex correspondence:
    /// new id `i` is the vertex `old_ids[i]` of the original graph
    /// (`old_ids` is sorted, so old→new is a binary search).
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut old_ids: Vec<usize> = s.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        if let Some(&bad) = old_ids.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange(bad, self.n()));
        }
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &old) in old_ids.iter().enumerate() {
            new_id[old] = i;
        }
        let mut adj = vec![Vec::new(); old_ids.len()];
        for (i, &old) in old_ids.iter().enumerate() {
            for &w in &self.adj[old] {
                if new_id[w] != usize::MAX {
                    adj[i].push(new_id[w]);
                }
            }
            // source lists are sorted and new ids are order-preserving
            debug_assert!(adj[i].windows(2).all(|w| w[0] < w[1]));
        }
        Ok((Graph { adj }, old_ids))
    }

    /// Relabels the graph by `image` (old id -> new id).
    pub fn relabelled(&self, image: &[usize]) -> Graph {
        assert_eq!(image.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for u in 0..self.n() {
            for &w in &self.adj[u] {
                adj[image[u]].push(image[w]);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    /// Checks the structural invariants explicitly (used by tests and after
    /// parsing untrusted input).
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        for u in 0..self.n() {
            for pair in self.adj[u].windows(2) {
                if pair[0] >= pair[1] {
                    return Err(GraphError::MalformedEdgeList(format!(
                        "adjacency of {u} not strictly increasing"
                    )));
                }
            }
            for &w in &self.adj[u] {
                if w == u {
                    return Err(GraphError::Loop(u));
                }
                if w >= self.n() {
                    return Err(GraphError::VertexOutOfRange(w, self.n()));
                }
                if !self.has_edge(w, u) {
                    return Err(GraphError::MalformedEdgeList(format!(
                        "edge {u}-{w} not symmetric"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Named constructions used throughout the tests and the classifier.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{1,m}`: centre is vertex 0, leaves 1..=m.
    pub fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Graph::from_edges(m + 1, &edges).unwrap()
    }

    /// Two triangles glued at a common vertex; the degree-4 centre is vertex 0.
    pub fn hourglass() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    pub fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    /// Triangle with a pendant vertex attached to each corner.
    pub fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }
}
