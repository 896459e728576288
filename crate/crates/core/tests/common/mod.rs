#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use imenum::dynamic::DynamicGraph;
use imenum::enumerate::{enumerate, Algorithm, Control, EnumConfig};
use imenum::generate::SplitMix64;
use imenum::{EdgeId, EnumStats, Graph, VertexId};

pub type Solution = Vec<u32>;

pub fn path(n: usize) -> Graph {
    let pairs: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
    Graph::from_indexed(n, &pairs).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    Graph::from_indexed(n, &pairs).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    let pairs: Vec<(u32, u32)> = (1..=leaves as u32).map(|i| (0, i)).collect();
    Graph::from_indexed(leaves + 1, &pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            pairs.push((a, b));
        }
    }
    Graph::from_indexed(n, &pairs).unwrap()
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.vertex_count() as u32;
    let mut pairs: Vec<(u32, u32)> = a.edges().map(|(_, [x, y])| (x.0, y.0)).collect();
    pairs.extend(b.edges().map(|(_, [x, y])| (x.0 + off, y.0 + off)));
    Graph::from_indexed(a.vertex_count() + b.vertex_count(), &pairs).unwrap()
}

pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    let pairs: Vec<(u32, u32)> = (1..n as u32).map(|i| (rng.below(i as u64) as u32, i)).collect();
    Graph::from_indexed(n, &pairs).unwrap()
}

/// Uniform simple graph with `n` vertices and `min(m, n choose 2)` edges.
pub fn random_graph(n: usize, m: usize, rng: &mut SplitMix64) -> Graph {
    let mut all = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            all.push((a, b));
        }
    }
    let take = m.min(all.len());
    for i in 0..take {
        let j = i + rng.below((all.len() - i) as u64) as usize;
        all.swap(i, j);
    }
    all.truncate(take);
    Graph::from_indexed(n, &all).unwrap()
}

/// Seeded suite of random graphs with `n <= max_n` and `m <= max_m`.
pub fn random_suite(count: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let n = 1 + rng.below(max_n as u64) as usize;
            let m = rng.below(max_m as u64 + 1) as usize;
            random_graph(n, m, &mut rng)
        })
        .collect()
}

/// Named families used across the suites.
pub fn family_suite() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 1..=10 {
        out.push((format!("P{k}"), path(k)));
    }
    for k in 3..=10 {
        out.push((format!("C{k}"), cycle(k)));
    }
    for k in 1..=8 {
        out.push((format!("K1,{k}"), star(k)));
    }
    out.push(("K4".into(), complete(4)));
    let mut rng = SplitMix64::new(0x7ee5);
    for i in 0..20 {
        let n = 1 + rng.below(12) as usize;
        out.push((format!("tree{i}"), random_tree(n, &mut rng)));
    }
    out
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (_, [a, b]) in g.edges() {
        adj[a.index()][b.index()] = true;
        adj[b.index()][a.index()] = true;
    }
    adj
}

/// Pairwise induced-matching check straight from the definition.
pub fn pairwise_induced(g: &Graph, m: &[EdgeId]) -> bool {
    let adj = adjacency_matrix(g);
    for (i, &e) in m.iter().enumerate() {
        for &f in &m[i + 1..] {
            if e == f {
                continue;
            }
            for x in g.endpoints(e) {
                for y in g.endpoints(f) {
                    if x == y || adj[x.index()][y.index()] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True iff some 4 distinct vertices carry a 4-cycle subgraph.
pub fn has_c4_exhaustive(g: &Graph) -> bool {
    let adj = adjacency_matrix(g);
    let n = g.vertex_count();
    let cyc = |a: usize, b: usize, c: usize, d: usize| adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if cyc(a, b, c, d) || cyc(a, b, d, c) || cyc(a, c, b, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn canonical(m: &[EdgeId]) -> Solution {
    let mut s: Vec<u32> = m.iter().map(|e| e.0).collect();
    s.sort_unstable();
    s
}

/// Runs `algorithm` to completion and returns every emitted solution in order.
pub fn collect(g: &Graph, algorithm: Algorithm) -> (Vec<Solution>, EnumStats) {
    collect_with(g, &EnumConfig::new(algorithm))
}

pub fn collect_with(g: &Graph, config: &EnumConfig) -> (Vec<Solution>, EnumStats) {
    let mut out = Vec::new();
    let mut sink = |m: &[EdgeId]| {
        out.push(canonical(m));
        Control::Continue
    };
    let stats = enumerate(g, config, &mut sink).unwrap();
    (out, stats)
}

pub fn as_set(sols: &[Solution]) -> BTreeSet<Solution> {
    sols.iter().cloned().collect()
}

/// Live-graph BFS distances from `src`, computed from the live edge list only.
pub fn live_distances(g: &DynamicGraph, src: VertexId) -> Vec<Option<u32>> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.live_edges() {
        let [a, b] = g.endpoints(e);
        adj[a.index()].push(b.index());
        adj[b.index()].push(a.index());
    }
    let mut dist = vec![None; n];
    dist[src.index()] = Some(0);
    let mut q = VecDeque::from([src.index()]);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    dist
}

/// Live edge-to-edge distance: minimum over endpoint pairs.
pub fn live_edge_distance(g: &DynamicGraph, e: EdgeId, f: EdgeId) -> Option<u32> {
    let mut best: Option<u32> = None;
    for x in g.endpoints(e) {
        let d = live_distances(g, x);
        for y in g.endpoints(f) {
            if let Some(k) = d[y.index()] {
                best = Some(best.map_or(k, |b| b.min(k)));
            }
        }
    }
    best
}
