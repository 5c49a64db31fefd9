//! Independent oracles shared by the integration suites.
//!
//! Everything here recomputes answers by brute force; nothing reuses the
//! solver code paths under test.

// Each integration target compiles its own copy; not all of them use
// every oracle.
#![allow(dead_code)]

use std::collections::VecDeque;

use curvcon::rational::{rat, Rational};
use curvcon::transport::Measure;
use curvcon::Graph;

/// All-pairs distances by Floyd-Warshall; `None` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut dist = vec![vec![inf; n]; n];
    for v in 0..n {
        dist[v][v] = 0;
    }
    for (u, v) in g.edges() {
        dist[u][v] = 1;
        dist[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k].saturating_add(dist[k][j]);
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|d| if d >= inf { None } else { Some(d) })
                .collect()
        })
        .collect()
}

fn connected_after_vertex_removal(g: &Graph, removed: &[usize]) -> bool {
    let n = g.n();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !gone[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !gone[v] && !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == n - removed.len()
}

fn connected_after_edge_removal(g: &Graph, removed: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if removed.contains(&(u, v)) || removed.contains(&(v, u)) {
                continue;
            }
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == n
}

fn subsets_of_size<T: Copy>(items: &[T], size: usize, f: &mut impl FnMut(&[T]) -> bool) -> bool {
    fn go<T: Copy>(
        items: &[T],
        size: usize,
        start: usize,
        chosen: &mut Vec<T>,
        f: &mut impl FnMut(&[T]) -> bool,
    ) -> bool {
        if chosen.len() == size {
            return f(chosen);
        }
        for i in start..items.len() {
            chosen.push(items[i]);
            if go(items, size, i + 1, chosen, f) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(items, size, 0, &mut Vec::new(), f)
}

/// Exhaustive vertex connectivity: the smallest vertex set whose removal
/// disconnects, with the complete-graph (n-1) and disconnected (0)
/// conventions.
pub fn vertex_connectivity_oracle(g: &Graph) -> usize {
    if g.is_complete() {
        return g.n() - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let vertices: Vec<usize> = (0..g.n()).collect();
    for size in 1..g.n() {
        let found = subsets_of_size(&vertices, size, &mut |subset| {
            !connected_after_vertex_removal(g, subset)
        });
        if found {
            return size;
        }
    }
    unreachable!("a non-complete graph has a separating set");
}

/// Exhaustive edge connectivity (smallest disconnecting edge set; sizes are
/// searched up to the minimum degree, which always suffices).
pub fn edge_connectivity_oracle(g: &Graph) -> usize {
    if g.n() == 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let edges = g.edges();
    for size in 1..=g.min_degree() {
        let found = subsets_of_size(&edges, size, &mut |subset| {
            !connected_after_edge_removal(g, subset)
        });
        if found {
            return size;
        }
    }
    unreachable!("removing all edges at a minimum-degree vertex disconnects");
}

/// Kantorovich dual by exhaustive enumeration of integer functions that are
/// 1-Lipschitz across every edge (hence 1-Lipschitz for the hop metric),
/// anchored to 0 at the first support vertex and clamped to [-diam, diam].
/// Valid because hop-metric costs make the dual polytope integral.
pub fn dual_oracle(g: &Graph, mu1: &Measure, mu2: &Measure) -> Rational {
    let anchor = mu1
        .support()
        .chain(mu2.support())
        .next()
        .expect("nonempty support");
    // BFS order so every later vertex has an assigned neighbor.
    let mut order = vec![anchor];
    let mut seen = vec![false; g.n()];
    seen[anchor] = true;
    let mut queue = VecDeque::from([anchor]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
                queue.push_back(v);
            }
        }
    }
    let radius: i64 = order
        .iter()
        .map(|&u| i64::from(g.distance(anchor, u).unwrap()))
        .max()
        .unwrap_or(0);

    let mut signed = vec![Rational::from_integer(0.into()); g.n()];
    for (v, m) in mu1.iter() {
        signed[v] += m;
    }
    for (v, m) in mu2.iter() {
        signed[v] -= m;
    }

    fn search(
        g: &Graph,
        order: &[usize],
        index: usize,
        values: &mut Vec<i64>,
        assigned: &mut Vec<bool>,
        radius: i64,
        signed: &[Rational],
        acc: &Rational,
        best: &mut Rational,
    ) {
        if index == order.len() {
            if *acc > *best {
                *best = acc.clone();
            }
            return;
        }
        let v = order[index];
        let mut low = -radius;
        let mut high = radius;
        for &u in g.neighbors(v) {
            if assigned[u] {
                low = low.max(values[u] - 1);
                high = high.min(values[u] + 1);
            }
        }
        for f in low..=high {
            values[v] = f;
            assigned[v] = true;
            let next = acc + rat(f) * &signed[v];
            search(g, order, index + 1, values, assigned, radius, signed, &next, best);
            assigned[v] = false;
        }
    }

    let mut best = rat(i64::MIN / 4);
    let mut values = vec![0i64; g.n()];
    let mut assigned = vec![false; g.n()];
    // Anchor at zero (the objective is shift-invariant).
    values[anchor] = 0;
    assigned[anchor] = true;
    let acc = rat(0);
    search(
        g,
        &order,
        1,
        &mut values,
        &mut assigned,
        radius,
        &signed,
        &acc,
        &mut best,
    );
    best
}

/// Brute-force minimum bijection cost (reference for the Hungarian method).
pub fn permutation_assignment_oracle(costs: &[Vec<i64>]) -> i64 {
    fn go(costs: &[Vec<i64>], row: usize, taken: &mut [bool], acc: i64, best: &mut i64) {
        if row == costs.len() {
            *best = (*best).min(acc);
            return;
        }
        for j in 0..costs.len() {
            if !taken[j] {
                taken[j] = true;
                go(costs, row + 1, taken, acc + costs[row][j], best);
                taken[j] = false;
            }
        }
    }
    if costs.is_empty() {
        return 0;
    }
    let mut best = i64::MAX;
    go(costs, 0, &mut vec![false; costs.len()], 0, &mut best);
    best
}

/// Exhaustive maximum matching size of a bipartite instance.
pub fn max_matching_oracle(left: &[usize], pairs: &[(usize, usize)]) -> usize {
    fn go(left: &[usize], pairs: &[(usize, usize)], i: usize, used: &mut Vec<usize>) -> usize {
        if i == left.len() {
            return 0;
        }
        let skip = go(left, pairs, i + 1, used);
        let mut best = skip;
        let u = left[i];
        let rights: Vec<usize> = pairs
            .iter()
            .filter(|&&(a, _)| a == u)
            .map(|&(_, b)| b)
            .collect();
        for v in rights {
            if !used.contains(&v) {
                used.push(v);
                best = best.max(1 + go(left, pairs, i + 1, used));
                used.pop();
            }
        }
        best
    }
    go(left, pairs, 0, &mut Vec::new())
}

/// Exhaustive minimum vertex cover size of a bipartite instance.
pub fn min_cover_oracle(left: &[usize], right: &[usize], pairs: &[(usize, usize)]) -> usize {
    let vertices: Vec<usize> = left.iter().chain(right.iter()).copied().collect();
    for size in 0..=vertices.len() {
        let mut found_cover = false;
        subsets_of_size(&vertices, size, &mut |subset| {
            if pairs
                .iter()
                .all(|&(u, v)| subset.contains(&u) || subset.contains(&v))
            {
                found_cover = true;
                true
            } else {
                false
            }
        });
        if found_cover {
            return size;
        }
    }
    unreachable!("the whole vertex set is a cover");
}

/// Largest Hall violation `max_A (|A| - |S_1(A)|)` over subsets of the left
/// side, floored at 0.
pub fn hall_deficiency_oracle(left: &[usize], pairs: &[(usize, usize)]) -> usize {
    let mut worst: i64 = 0;
    for mask in 0u32..(1 << left.len()) {
        let subset: Vec<usize> = (0..left.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| left[i])
            .collect();
        let mut neighborhood: Vec<usize> = pairs
            .iter()
            .filter(|&&(u, _)| subset.contains(&u))
            .map(|&(_, v)| v)
            .collect();
        neighborhood.sort_unstable();
        neighborhood.dedup();
        worst = worst.max(subset.len() as i64 - neighborhood.len() as i64);
    }
    worst as usize
}
