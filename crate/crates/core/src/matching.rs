//! Maximum bipartite matching with a König vertex-cover witness.
//!
//! The cover certifies maximality (|matching| = |cover| on bipartite
//! instances) and the reported deficiency equals the largest Hall violation
//! `max_A |A| - |S_1(A)|` over subsets of the left side.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("sides overlap at vertex {0}")]
    OverlappingSides(usize),
    #[error("pair ({0}, {1}) does not join the left side to the right side")]
    PairOutsideSides(usize, usize),
}

/// A maximum matching together with its König certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched pairs `(left vertex, right vertex)`.
    pub edges: Vec<(usize, usize)>,
    /// Vertex cover of the instance edges, |cover| = |edges|.
    pub cover: Vec<usize>,
    /// `|left| - |edges|`, the defect of the left side.
    pub deficiency: usize,
}

/// Hopcroft-Karp style augmentation; the cover is read off the final
/// alternating-reachability partition.
pub fn max_bipartite_matching(
    left: &[usize],
    right: &[usize],
    pairs: &[(usize, usize)],
) -> Result<MatchingResult, MatchingError> {
    let left_set: BTreeSet<usize> = left.iter().copied().collect();
    let right_set: BTreeSet<usize> = right.iter().copied().collect();
    if let Some(&v) = left_set.intersection(&right_set).next() {
        return Err(MatchingError::OverlappingSides(v));
    }
    let left_index: BTreeMap<usize, usize> =
        left_set.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let right_index: BTreeMap<usize, usize> =
        right_set.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let left_ids: Vec<usize> = left_set.iter().copied().collect();
    let right_ids: Vec<usize> = right_set.iter().copied().collect();

    let mut adj = vec![Vec::new(); left_ids.len()];
    for &(u, v) in pairs {
        match (left_index.get(&u), right_index.get(&v)) {
            (Some(&ul), Some(&vl)) => adj[ul].push(vl),
            _ => return Err(MatchingError::PairOutsideSides(u, v)),
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }

    let nl = left_ids.len();
    let nr = right_ids.len();
    let mut match_l: Vec<Option<usize>> = vec![None; nl];
    let mut match_r: Vec<Option<usize>> = vec![None; nr];

    // Repeated augmentation: BFS computes layers from free left vertices,
    // DFS extends along them. Terminates when no augmenting path remains.
    loop {
        let layers = bfs_layers(&adj, &match_l, &match_r);
        let mut augmented = false;
        for u in 0..nl {
            if match_l[u].is_none() && dfs_augment(u, &adj, &layers, &mut match_l, &mut match_r) {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }

    // König: Z = free left vertices plus everything alternating-reachable;
    // the cover is (L \ Z) ∪ (R ∩ Z).
    let mut seen_l = vec![false; nl];
    let mut seen_r = vec![false; nr];
    let mut queue: VecDeque<usize> = (0..nl).filter(|&u| match_l[u].is_none()).collect();
    for &u in &queue {
        seen_l[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if seen_r[v] || match_l[u] == Some(v) {
                continue;
            }
            seen_r[v] = true;
            if let Some(w) = match_r[v] {
                if !seen_l[w] {
                    seen_l[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let edges: Vec<(usize, usize)> = (0..nl)
        .filter_map(|u| match_l[u].map(|v| (left_ids[u], right_ids[v])))
        .collect();
    let mut cover: Vec<usize> = (0..nl)
        .filter(|&u| !seen_l[u])
        .map(|u| left_ids[u])
        .chain((0..nr).filter(|&v| seen_r[v]).map(|v| right_ids[v]))
        .collect();
    cover.sort_unstable();
    Ok(MatchingResult {
        deficiency: nl - edges.len(),
        edges,
        cover,
    })
}

fn bfs_layers(
    adj: &[Vec<usize>],
    match_l: &[Option<usize>],
    match_r: &[Option<usize>],
) -> Vec<u32> {
    let mut layers = vec![u32::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for u in 0..adj.len() {
        if match_l[u].is_none() {
            layers[u] = 0;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if let Some(w) = match_r[v] {
                if layers[w] == u32::MAX {
                    layers[w] = layers[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    layers
}

fn dfs_augment(
    u: usize,
    adj: &[Vec<usize>],
    layers: &[u32],
    match_l: &mut Vec<Option<usize>>,
    match_r: &mut Vec<Option<usize>>,
) -> bool {
    for &v in &adj[u] {
        let extend = match match_r[v] {
            None => true,
            Some(w) => {
                layers[w] == layers[u] + 1 && dfs_augment(w, adj, layers, match_l, match_r)
            }
        };
        if extend {
            match_l[u] = Some(v);
            match_r[v] = Some(u);
            return true;
        }
    }
    false
}
