//! Graph-class checks: C4-freeness and girth.

use std::collections::VecDeque;

use crate::graph::Graph;

/// True iff no two distinct vertices share two common neighbors, which is
/// exactly the absence of a (not necessarily induced) 4-cycle.
///
/// Scans all 2-paths from each vertex: O(sum of squared degrees).
pub fn is_c4_free(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut reached_from = vec![u32::MAX; n];
    for u in g.vertices() {
        for &(w, _) in g.neighbors(u) {
            for &(x, _) in g.neighbors(w) {
                if x == u {
                    continue;
                }
                if reached_from[x.index()] == u.0 {
                    return false;
                }
                reached_from[x.index()] = u.0;
            }
        }
    }
    true
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    let mut visited = Vec::new();
    for s in g.vertices() {
        for &x in &visited {
            dist[x] = usize::MAX;
        }
        visited.clear();
        queue.clear();
        dist[s.index()] = 0;
        parent[s.index()] = u32::MAX;
        visited.push(s.index());
        queue.push_back(s);
        'bfs: while let Some(x) = queue.pop_front() {
            // No cycle through s found from here on can beat `best`.
            if 2 * dist[x.index()] >= best {
                break;
            }
            for &(y, _) in g.neighbors(x) {
                if dist[y.index()] == usize::MAX {
                    dist[y.index()] = dist[x.index()] + 1;
                    parent[y.index()] = x.0;
                    visited.push(y.index());
                    queue.push_back(y);
                } else if parent[x.index()] != y.0 {
                    best = best.min(dist[x.index()] + dist[y.index()] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}
