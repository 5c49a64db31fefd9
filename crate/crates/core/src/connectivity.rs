//! Exact vertex and edge connectivity with minimum separator / minimum cut
//! witnesses, via unit-capacity max-flow (Menger).

use std::collections::{BTreeMap, VecDeque};

use crate::graph::Graph;
use crate::rational::rat;
use crate::report::{CheckId, Relation, TheoremReport};

/// A connectivity value together with a removal set certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityWitness {
    pub value: usize,
    pub separator: Separator,
    /// Parts of `G - separator`, sorted by smallest member.
    pub components: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separator {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

/// Vertex connectivity `k(G)`.
///
/// Complete graphs return `n - 1` with an empty separator by convention;
/// disconnected graphs return 0. Otherwise the witness is a minimum
/// separator extracted from the minimizing max-flow cut, following the
/// standard scheme: fix a minimum-degree vertex `s`, run flows to every
/// vertex outside `N[s]`, then between non-adjacent pairs inside `N(s)`.
pub fn vertex_connectivity(g: &Graph) -> ConnectivityWitness {
    if g.is_complete() {
        return ConnectivityWitness {
            value: g.n() - 1,
            separator: Separator::Vertices(Vec::new()),
            components: g.components(),
        };
    }
    if !g.is_connected() {
        return ConnectivityWitness {
            value: 0,
            separator: Separator::Vertices(Vec::new()),
            components: g.components(),
        };
    }

    let s = (0..g.n())
        .min_by_key(|&v| (g.degree(v), v))
        .expect("non-empty graph");
    let mut best: Option<(usize, Vec<usize>)> = None;
    let consider = |u: usize, v: usize, best: &mut Option<(usize, Vec<usize>)>| {
        let (value, separator) = vertex_cut(g, u, v);
        if best.as_ref().map_or(true, |(b, _)| value < *b) {
            *best = Some((value, separator));
        }
    };
    for t in 0..g.n() {
        if t != s && !g.has_edge(s, t) {
            consider(s, t, &mut best);
        }
    }
    let neighborhood = g.neighbors(s).to_vec();
    for (i, &u) in neighborhood.iter().enumerate() {
        for &v in &neighborhood[i + 1..] {
            if !g.has_edge(u, v) {
                consider(u, v, &mut best);
            }
        }
    }
    let (value, separator) = best.expect("non-complete graph has a non-adjacent pair");
    let components = components_without_vertices(g, &separator);
    ConnectivityWitness {
        value,
        separator: Separator::Vertices(separator),
        components,
    }
}

/// Edge connectivity `k'(G)`: a single vertex gives 0 by convention,
/// otherwise the minimum over max-flows from a fixed root (Menger).
pub fn edge_connectivity(g: &Graph) -> ConnectivityWitness {
    if g.n() == 1 {
        return ConnectivityWitness {
            value: 0,
            separator: Separator::Edges(Vec::new()),
            components: g.components(),
        };
    }
    if !g.is_connected() {
        return ConnectivityWitness {
            value: 0,
            separator: Separator::Edges(Vec::new()),
            components: g.components(),
        };
    }
    let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
    for t in 1..g.n() {
        let (value, cut) = edge_cut(g, 0, t);
        if best.as_ref().map_or(true, |(b, _)| value < *b) {
            best = Some((value, cut));
        }
    }
    let (value, cut) = best.unwrap();
    let components = components_without_edges(g, &cut);
    ConnectivityWitness {
        value,
        separator: Separator::Edges(cut),
        components,
    }
}

/// The Whitney chain `k(G) <= k'(G) <= delta(G)`.
pub fn whitney_check(g: &Graph) -> TheoremReport {
    let k = vertex_connectivity(g).value;
    let k_prime = edge_connectivity(g).value;
    let delta = g.min_degree();
    // Encoded as: min slack of the chain >= 0.
    let slack = (k_prime as i64 - k as i64).min(delta as i64 - k_prime as i64);
    TheoremReport::checked(
        CheckId::Whitney,
        String::new(),
        Relation::Ge,
        rat(slack),
        rat(0),
        BTreeMap::new(),
    )
    .with_witness("k", k)
    .with_witness("k_prime", k_prime)
    .with_witness("delta", delta)
}

/// Minimum vertex cut between non-adjacent `s`, `t` by vertex-splitting
/// max-flow: each vertex becomes an in/out pair joined by a unit arc, graph
/// edges become uncapacitated arcs both ways. The separator is read off the
/// residual reachability of the min cut.
fn vertex_cut(g: &Graph, s: usize, t: usize) -> (usize, Vec<usize>) {
    let n = g.n();
    let inf = (n + 1) as i64;
    let mut net = FlowNetwork::new(2 * n);
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    for v in 0..n {
        let cap = if v == s || v == t { inf } else { 1 };
        net.add_arc(node_in(v), node_out(v), cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(node_out(u), node_in(v), inf);
        net.add_arc(node_out(v), node_in(u), inf);
    }
    let value = net.max_flow(node_out(s), node_in(t));
    let reachable = net.residual_reachable(node_out(s));
    let separator: Vec<usize> = (0..n)
        .filter(|&v| reachable[node_in(v)] && !reachable[node_out(v)])
        .collect();
    debug_assert_eq!(separator.len() as i64, value);
    (value as usize, separator)
}

/// Minimum edge cut between `s` and `t`; each undirected edge is one arc
/// pair with unit capacity in both directions.
fn edge_cut(g: &Graph, s: usize, t: usize) -> (usize, Vec<(usize, usize)>) {
    let mut net = FlowNetwork::new(g.n());
    for (u, v) in g.edges() {
        net.add_undirected_arc(u, v);
    }
    let value = net.max_flow(s, t);
    let reachable = net.residual_reachable(s);
    let cut: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| reachable[u] != reachable[v])
        .collect();
    debug_assert_eq!(cut.len() as i64, value);
    (value as usize, cut)
}

fn components_without_vertices(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let mut gone = vec![false; g.n()];
    for &v in removed {
        gone[v] = true;
    }
    bfs_components(g.n(), |u, out| {
        if !gone[u] {
            out.extend(g.neighbors(u).iter().copied().filter(|&v| !gone[v]));
        }
    })
    .into_iter()
    .filter(|comp| comp.len() != 1 || !gone[comp[0]])
    .collect()
}

fn components_without_edges(g: &Graph, removed: &[(usize, usize)]) -> Vec<Vec<usize>> {
    bfs_components(g.n(), |u, out| {
        for &v in g.neighbors(u) {
            let cut = removed.contains(&(u, v)) || removed.contains(&(v, u));
            if !cut {
                out.push(v);
            }
        }
    })
}

fn bfs_components(n: usize, mut neighbors: impl FnMut(usize, &mut Vec<usize>)) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut scratch = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            scratch.clear();
            neighbors(u, &mut scratch);
            for &v in &scratch {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Small Edmonds-Karp max-flow on integer capacities.
struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<i64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            residual: Vec::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.adj[from].push(self.to.len());
        self.to.push(to);
        self.residual.push(cap);
        self.adj[to].push(self.to.len());
        self.to.push(from);
        self.residual.push(0);
    }

    fn add_undirected_arc(&mut self, u: usize, v: usize) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.residual.push(1);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.residual.push(1);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut parent: Vec<Option<usize>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if v != s && parent[v].is_none() && self.residual[a] > 0 {
                        parent[v] = Some(a);
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if parent[t].is_none() {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while v != s {
                let a = parent[v].unwrap();
                bottleneck = bottleneck.min(self.residual[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = parent[v].unwrap();
                self.residual[a] -= bottleneck;
                self.residual[a ^ 1] += bottleneck;
                v = self.to[a ^ 1];
            }
            total += bottleneck;
        }
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if !seen[v] && self.residual[a] > 0 {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    fn vertex_sep(w: &ConnectivityWitness) -> &[usize] {
        match &w.separator {
            Separator::Vertices(s) => s,
            Separator::Edges(_) => panic!("expected vertex separator"),
        }
    }

    #[test]
    fn complete_graph_convention() {
        for n in 1..=6 {
            let w = vertex_connectivity(&families::complete(n).unwrap());
            assert_eq!(w.value, n - 1);
            assert!(vertex_sep(&w).is_empty());
        }
        assert_eq!(edge_connectivity(&families::complete(5).unwrap()).value, 4);
    }

    #[test]
    fn bowtie_apex_is_the_separator() {
        let w = vertex_connectivity(&families::bowtie());
        assert_eq!(w.value, 1);
        assert_eq!(vertex_sep(&w), &[4]);
        assert_eq!(w.components, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn sharp_example_connectivity() {
        let se = families::sharp_example(10, 5).unwrap();
        assert_eq!(vertex_connectivity(&se.graph).value, 5);
    }

    #[test]
    fn edge_connectivity_small_cases() {
        assert_eq!(edge_connectivity(&Graph::new(1, &[]).unwrap()).value, 0);
        let p3 = families::path(3).unwrap();
        let w = edge_connectivity(&p3);
        assert_eq!(w.value, 1);
        assert_eq!(w.components.len(), 2);

        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let w = edge_connectivity(&split);
        assert_eq!(w.value, 0);
        assert_eq!(w.components.len(), 2);
        assert_eq!(vertex_connectivity(&split).value, 0);
    }

    #[test]
    fn separator_removal_disconnects() {
        for g in [
            families::bowtie(),
            families::petersen(),
            families::two_kn_join(3, &families::empty(2).unwrap()).unwrap(),
            families::cycle(7).unwrap(),
        ] {
            let w = vertex_connectivity(&g);
            assert!(w.components.len() >= 2, "separator must disconnect");
            assert_eq!(vertex_sep(&w).len(), w.value);

            let we = edge_connectivity(&g);
            assert!(we.components.len() >= 2);
            match &we.separator {
                Separator::Edges(cut) => assert_eq!(cut.len(), we.value),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn whitney_chain_examples() {
        let r = whitney_check(&families::complete(5).unwrap());
        assert!(r.pass);
        assert_eq!(r.witnesses["k"], "4");
        assert_eq!(r.witnesses["k_prime"], "4");
        assert_eq!(r.witnesses["delta"], "4");

        let r = whitney_check(&families::bowtie());
        assert!(r.pass);
        assert_eq!(r.witnesses["k"], "1");
        assert_eq!(r.witnesses["k_prime"], "2");
        assert_eq!(r.witnesses["delta"], "2");

        // Star K_{1,4}.
        let star = families::join(&families::complete(1).unwrap(), &families::empty(4).unwrap());
        let r = whitney_check(&star);
        assert!(r.pass);
        assert_eq!(r.witnesses["k"], "1");
        assert_eq!(r.witnesses["k_prime"], "1");
        assert_eq!(r.witnesses["delta"], "1");
    }
}
