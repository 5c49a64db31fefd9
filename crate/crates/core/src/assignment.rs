//! Exact minimum-cost perfect assignment (Hungarian method) on integer
//! cost matrices.

/// Optimal assignment of rows to columns of a square cost matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    /// `column_of_row[i]` is the column assigned to row `i`.
    pub column_of_row: Vec<usize>,
    pub total_cost: i64,
}

/// Shortest-augmenting-path Hungarian algorithm with potentials, O(n^3).
/// `costs` must be square; an empty matrix yields the empty assignment.
pub fn min_cost_assignment(costs: &[Vec<i64>]) -> Assignment {
    let n = costs.len();
    if n == 0 {
        return Assignment {
            column_of_row: Vec::new(),
            total_cost: 0,
        };
    }
    debug_assert!(costs.iter().all(|row| row.len() == n));
    const INF: i64 = i64::MAX / 4;

    // 1-indexed potentials; row_of[j] is the row matched to column j.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut min_slack = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let slack = costs[i0 - 1][j - 1] - u[i0] - v[j];
                if slack < min_slack[j] {
                    min_slack[j] = slack;
                    way[j] = j0;
                }
                if min_slack[j] < delta {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        while j0 != 0 {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        }
    }

    let mut column_of_row = vec![0usize; n];
    for j in 1..=n {
        column_of_row[row_of[j] - 1] = j - 1;
    }
    let total_cost = column_of_row
        .iter()
        .enumerate()
        .map(|(i, &j)| costs[i][j])
        .sum();
    Assignment {
        column_of_row,
        total_cost,
    }
}
