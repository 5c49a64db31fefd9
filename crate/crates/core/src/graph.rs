//! Finite simple undirected graphs with cached hop-metric distances.
//!
//! Vertices are dense indices `0..n`. The all-pairs distance table is filled
//! lazily, one BFS row per queried source; rows are stored behind [`OnceLock`]
//! so a constructed graph can be shared read-only across threads.

use std::collections::VecDeque;
use std::sync::OnceLock;

use thiserror::Error;

/// Sentinel for "no path" in internal distance rows.
const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Immutable finite simple undirected graph.
#[derive(Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    dist: Vec<OnceLock<Vec<u32>>>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        // Distance rows are recomputable; start the clone cold.
        Graph {
            adj: self.adj.clone(),
            dist: (0..self.adj.len()).map(|_| OnceLock::new()).collect(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Self-loops, duplicate edges (in either orientation), and out-of-range
    /// endpoints are rejected rather than repaired: a malformed list usually
    /// means a generator bug upstream.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            dist: (0..n).map(|_| OnceLock::new()).collect(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|list| list.len() == n - 1)
    }

    fn dist_row(&self, source: usize) -> &[u32] {
        self.dist[source].get_or_init(|| {
            let mut row = vec![UNREACHABLE; self.n()];
            let mut queue = VecDeque::new();
            row[source] = 0;
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if row[v] == UNREACHABLE {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            row
        })
    }

    /// Hop distance between `u` and `v`; `None` when no path exists.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist_row(u)[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Forces every BFS row, so later concurrent reads never race to fill one.
    pub fn precompute_distances(&self) {
        for v in 0..self.n() {
            self.dist_row(v);
        }
    }

    pub fn is_connected(&self) -> bool {
        self.dist_row(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Maximum finite distance; `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for u in 0..self.n() {
            for &d in self.dist_row(u) {
                if d == UNREACHABLE {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Splits the closed neighborhoods of an edge `xy` into the five blocks
    /// used throughout the curvature bounds: the common part `A`, the private
    /// parts `N_x` and `N_y`, and the outside `B`.
    pub fn edge_split(&self, x: usize, y: usize) -> Result<EdgeNeighborhoodSplit, GraphError> {
        if !self.has_edge(x, y) {
            return Err(GraphError::NotAdjacent(x, y));
        }
        let mut common = Vec::new();
        let mut nx = Vec::new();
        let mut ny = Vec::new();
        let mut outside = Vec::new();
        for v in 0..self.n() {
            if v == x || v == y {
                continue;
            }
            match (self.has_edge(x, v), self.has_edge(y, v)) {
                (true, true) => common.push(v),
                (true, false) => nx.push(v),
                (false, true) => ny.push(v),
                (false, false) => outside.push(v),
            }
        }
        Ok(EdgeNeighborhoodSplit {
            x,
            y,
            common,
            nx,
            ny,
            outside,
        })
    }
}

/// Partition of `V` around an edge `xy`: `{x}`, `{y}`, `A = S_1(x) ∩ S_1(y)`,
/// `N_x = S_1(x) ∖ (S_1(y) ∪ {y})`, `N_y = S_1(y) ∖ (S_1(x) ∪ {x})`, and
/// `B = V ∖ (S_1(x) ∪ S_1(y))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNeighborhoodSplit {
    pub x: usize,
    pub y: usize,
    pub common: Vec<usize>,
    pub nx: Vec<usize>,
    pub ny: Vec<usize>,
    pub outside: Vec<usize>,
}
