//! Exact min-cost assignment by shortest augmenting paths with potentials.
//! Absent entries are treated as missing edges; an infeasible instance
//! reports `None`.

use std::ops::{Add, Sub};

pub(crate) trait Cost: Copy + PartialOrd + Add<Output = Self> + Sub<Output = Self> {
    const ZERO: Self;
}

impl Cost for i64 {
    const ZERO: i64 = 0;
}

impl Cost for f64 {
    const ZERO: f64 = 0.0;
}

/// Minimum total cost of a perfect assignment on a square matrix, or `None`
/// when no perfect matching over the present edges exists. Costs must be
/// nonnegative (callers shift by the minimum entry first).
pub(crate) fn min_cost_assignment<T: Cost>(cost: &[Vec<Option<T>>]) -> Option<T> {
    let n = cost.len();
    if n == 0 {
        return Some(T::ZERO);
    }
    debug_assert!(cost.iter().all(|row| row.len() == n));

    // Columns are 1-indexed; column 0 is the sentinel holding the row
    // currently being assigned.
    let mut u = vec![T::ZERO; n + 1];
    let mut v = vec![T::ZERO; n + 1];
    let mut matched: Vec<Option<usize>> = vec![None; n + 1];
    let mut way = vec![0usize; n + 1];

    for row in 0..n {
        matched[0] = Some(row);
        let mut j0 = 0usize;
        let mut minv: Vec<Option<T>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched[j0].expect("used column is matched");
            let mut delta: Option<T> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost[i0][j - 1] {
                    let cur = c - u[i0] - v[j];
                    if minv[j].is_none_or(|m| cur < m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = minv[j] {
                    if delta.is_none_or(|d| m < d) {
                        delta = Some(m);
                        j1 = j;
                    }
                }
            }
            // No reachable unmatched column: the matching cannot be completed.
            let delta = delta?;
            for j in 0..=n {
                if used[j] {
                    let i = matched[j].expect("used column is matched");
                    u[i] = u[i] + delta;
                    v[j] = v[j] - delta;
                } else if let Some(m) = minv[j] {
                    minv[j] = Some(m - delta);
                }
            }
            j0 = j1;
            if matched[j0].is_none() {
                break;
            }
        }
        // Augment along the alternating path back to the sentinel column.
        while j0 != 0 {
            let j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
        }
    }

    let mut total = T::ZERO;
    for j in 1..=n {
        let i = matched[j].expect("perfect matching");
        total = total + cost[i][j - 1].expect("matched edge exists");
    }
    Some(total)
}
