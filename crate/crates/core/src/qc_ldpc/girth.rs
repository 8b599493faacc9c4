//! Exact girth of a Tanner graph.

use std::collections::VecDeque;

use crate::f2::BitMatrix;

/// Length of the shortest cycle in the bipartite check/bit graph of `h`,
/// or `None` if the graph is a forest.
///
/// A breadth-first search from every vertex; a non-tree edge `(u, v)` closes
/// a walk of length `dist[u] + dist[v] + 1` containing a cycle, and the
/// search rooted on a shortest cycle finds exactly its length.
pub fn girth_exact(h: &BitMatrix) -> Option<usize> {
    let (m, n) = (h.num_rows(), h.num_cols());
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m + n];
    for (i, row) in h.rows().iter().enumerate() {
        for j in row.iter_ones() {
            adj[i].push(m + j);
            adj[m + j].push(i);
        }
    }
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; m + n];
    let mut parent = vec![usize::MAX; m + n];
    let mut queue = VecDeque::new();
    for root in 0..m + n {
        // Bipartite cycles have length at least 4.
        if best == 4 {
            break;
        }
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // Deeper vertices cannot close a shorter cycle.
            if 2 * dist[u] >= best {
                break;
            }
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}
