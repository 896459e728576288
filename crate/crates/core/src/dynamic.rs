//! Mutable view of a [`Graph`] with O(1) edge hiding and LIFO rollback.
//!
//! Every vertex owns a circular doubly-linked list threaded through per-(edge,
//! endpoint) nodes plus one header node. Unlinking leaves a node's own links
//! intact, so restoring removals in reverse order relinks each node at its
//! original position.

use crate::degree_index::DegreeIndex;
use crate::error::GraphError;
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Undo {
    Edge(EdgeId),
    Vertex(VertexId),
}

/// Position in the undo log. Consumed by [`DynamicGraph::rollback`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct UndoMark {
    id: u64,
    position: usize,
}

impl UndoMark {
    pub fn position(&self) -> usize {
        self.position
    }
}

#[derive(Clone, Debug)]
pub struct DynamicGraph {
    original: Graph,
    endpoints: Vec<[u32; 2]>,
    // Nodes 0..2m: node 2e+s sits in the list of endpoints[e][s].
    // Nodes 2m..2m+n: list headers.
    next: Vec<u32>,
    prev: Vec<u32>,
    degree: Vec<u32>,
    edge_alive: Vec<bool>,
    vertex_alive: Vec<bool>,
    live_edges: usize,
    log: Vec<Undo>,
    marks: Vec<UndoMark>,
    next_mark_id: u64,
    index: DegreeIndex,
    deletions: u64,
    restorations: u64,
}

impl DynamicGraph {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let header = |v: usize| (2 * m + v) as u32;
        let mut next = vec![0u32; 2 * m + n];
        let mut prev = vec![0u32; 2 * m + n];
        for v in 0..n {
            next[header(v) as usize] = header(v);
            prev[header(v) as usize] = header(v);
        }
        let mut endpoints = Vec::with_capacity(m);
        let mut degree = vec![0u32; n];
        for (e, [a, b]) in g.edges() {
            endpoints.push([a.0, b.0]);
            for (side, x) in [a, b].into_iter().enumerate() {
                let node = 2 * e.0 + side as u32;
                let h = header(x.index());
                let last = prev[h as usize];
                next[last as usize] = node;
                prev[node as usize] = last;
                next[node as usize] = h;
                prev[h as usize] = node;
                degree[x.index()] += 1;
            }
        }
        let vertex_alive = vec![true; n];
        let capacity = degree.iter().copied().max().unwrap_or(0) as usize + 1;
        let index = DegreeIndex::from_degrees(&degree, &vertex_alive, capacity);
        DynamicGraph {
            original: g.clone(),
            endpoints,
            next,
            prev,
            degree,
            edge_alive: vec![true; m],
            vertex_alive,
            live_edges: m,
            log: Vec::new(),
            marks: Vec::new(),
            next_mark_id: 0,
            index,
            deletions: 0,
            restorations: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.degree.len()
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn live_edge_count(&self) -> usize {
        self.live_edges
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v.index()] as usize
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        let [a, b] = self.endpoints[e.index()];
        [VertexId(a), VertexId(b)]
    }

    #[inline]
    pub fn is_edge_alive(&self, e: EdgeId) -> bool {
        self.edge_alive[e.index()]
    }

    #[inline]
    pub fn is_vertex_alive(&self, v: VertexId) -> bool {
        self.vertex_alive[v.index()]
    }

    /// The graph as constructed, unaffected by removals.
    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn degree_index(&self) -> &DegreeIndex {
        &self.index
    }

    #[inline]
    pub fn max_degree_vertex(&self) -> Option<VertexId> {
        self.index.max_degree_vertex()
    }

    /// Total edge removals since construction.
    pub fn deletions(&self) -> u64 {
        self.deletions
    }

    /// Total edge restorations since construction.
    pub fn restorations(&self) -> u64 {
        self.restorations
    }

    pub fn undo_len(&self) -> usize {
        self.log.len()
    }

    /// Live neighbors of `v` with the connecting edge.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> Neighbors<'_> {
        let header = (2 * self.endpoints.len() + v.index()) as u32;
        Neighbors { g: self, header, cur: self.next[header as usize] }
    }

    /// Live edges in ascending id order.
    pub fn live_edges(&self) -> Vec<EdgeId> {
        (0..self.endpoints.len() as u32).map(EdgeId).filter(|&e| self.edge_alive[e.index()]).collect()
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        if e.index() >= self.endpoints.len() || !self.edge_alive[e.index()] {
            return Err(GraphError::EdgeNotAlive(e));
        }
        self.hide_edge(e);
        Ok(())
    }

    /// Removes a live edge without the liveness check.
    #[inline]
    pub(crate) fn hide_edge(&mut self, e: EdgeId) {
        debug_assert!(self.edge_alive[e.index()]);
        for side in 0..2 {
            let node = 2 * e.0 as usize + side;
            let (p, n) = (self.prev[node], self.next[node]);
            self.next[p as usize] = n;
            self.prev[n as usize] = p;
            let x = self.endpoints[e.index()][side];
            let d = self.degree[x as usize] as usize;
            self.degree[x as usize] -= 1;
            self.index.on_degree_change(VertexId(x), d, d - 1);
        }
        self.edge_alive[e.index()] = false;
        self.live_edges -= 1;
        self.deletions += 1;
        self.log.push(Undo::Edge(e));
    }

    /// Removes every live edge at `v`, then marks `v` dead.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if v.index() >= self.vertex_alive.len() || !self.vertex_alive[v.index()] {
            return Err(GraphError::VertexNotAlive(v));
        }
        while let Some((_, e)) = self.neighbors(v).next() {
            self.hide_edge(e);
        }
        self.vertex_alive[v.index()] = false;
        self.index.on_vertex_removed(v);
        self.log.push(Undo::Vertex(v));
        Ok(())
    }

    pub fn mark(&mut self) -> UndoMark {
        let m = UndoMark { id: self.next_mark_id, position: self.log.len() };
        self.next_mark_id += 1;
        self.marks.push(m);
        m
    }

    /// Undoes every removal logged after `m`, newest first. Marks taken after
    /// `m` are discarded along with it.
    pub fn rollback(&mut self, m: UndoMark) -> Result<(), GraphError> {
        let slot = self.marks.binary_search_by_key(&m.id, |k| k.id).map_err(|_| GraphError::StaleMark)?;
        if self.marks[slot] != m {
            return Err(GraphError::StaleMark);
        }
        self.marks.truncate(slot);
        self.undo_to(m.position);
        Ok(())
    }

    fn undo_to(&mut self, position: usize) {
        while self.log.len() > position {
            match self.log.pop() {
                Some(Undo::Edge(e)) => self.restore_edge(e),
                Some(Undo::Vertex(v)) => {
                    self.vertex_alive[v.index()] = true;
                    self.index.on_vertex_restored(v);
                }
                None => unreachable!(),
            }
        }
    }

    fn restore_edge(&mut self, e: EdgeId) {
        for side in (0..2).rev() {
            let node = 2 * e.0 as usize + side;
            let (p, n) = (self.prev[node], self.next[node]);
            self.next[p as usize] = node as u32;
            self.prev[n as usize] = node as u32;
            let x = self.endpoints[e.index()][side];
            let d = self.degree[x as usize] as usize;
            self.degree[x as usize] += 1;
            self.index.on_degree_change(VertexId(x), d, d + 1);
        }
        self.edge_alive[e.index()] = true;
        self.live_edges += 1;
        self.restorations += 1;
    }

    /// Whether the live distance between `e` and `f` (minimum over endpoint
    /// pairs) is at most `k`, for `k` in `0..=2`.
    pub fn edge_distance_at_most(&self, e: EdgeId, f: EdgeId, k: u32) -> Result<bool, GraphError> {
        assert!(k <= 2, "edge distance is only probed up to 2");
        for x in [e, f] {
            if x.index() >= self.endpoints.len() || !self.edge_alive[x.index()] {
                return Err(GraphError::EdgeNotAlive(x));
            }
        }
        let targets = self.endpoints(f);
        let mut frontier: Vec<VertexId> = self.endpoints(e).to_vec();
        let mut seen = frontier.clone();
        for depth in 0..=k {
            if frontier.iter().any(|x| targets.contains(x)) {
                return Ok(true);
            }
            if depth == k {
                break;
            }
            let mut grown = Vec::new();
            for &x in &frontier {
                for (y, _) in self.neighbors(x) {
                    if !seen.contains(&y) {
                        seen.push(y);
                        grown.push(y);
                    }
                }
            }
            frontier = grown;
        }
        Ok(false)
    }

    /// Per-vertex sorted live incident edges plus vertex liveness; equal
    /// snapshots mean equal live graphs.
    pub fn snapshot(&self) -> (Vec<Vec<EdgeId>>, Vec<bool>) {
        let adj = (0..self.vertex_count() as u32)
            .map(|v| {
                let mut es: Vec<EdgeId> = self.neighbors(VertexId(v)).map(|(_, e)| e).collect();
                es.sort_unstable();
                es
            })
            .collect();
        (adj, self.vertex_alive.clone())
    }

    /// Verifies adjacency lists, degrees, the live edge count and the degree
    /// index against the alive flags.
    pub fn check_consistency(&self) -> Result<(), String> {
        let mut expected: Vec<Vec<EdgeId>> = vec![Vec::new(); self.vertex_count()];
        for (i, &[a, b]) in self.endpoints.iter().enumerate() {
            if self.edge_alive[i] {
                expected[a as usize].push(EdgeId(i as u32));
                expected[b as usize].push(EdgeId(i as u32));
            }
        }
        let (actual, _) = self.snapshot();
        for v in 0..self.vertex_count() {
            if actual[v] != expected[v] {
                return Err(format!("adjacency of v{v} is {:?}, expected {:?}", actual[v], expected[v]));
            }
            if self.degree[v] as usize != expected[v].len() {
                return Err(format!("degree of v{v} is {}, expected {}", self.degree[v], expected[v].len()));
            }
            if !self.vertex_alive[v] && !expected[v].is_empty() {
                return Err(format!("dead vertex v{v} has live edges"));
            }
        }
        let live = self.edge_alive.iter().filter(|&&a| a).count();
        if live != self.live_edges {
            return Err(format!("live edge count {} but {live} edges alive", self.live_edges));
        }
        self.index.check_against(self)
    }
}

pub struct Neighbors<'a> {
    g: &'a DynamicGraph,
    header: u32,
    cur: u32,
}

impl Iterator for Neighbors<'_> {
    type Item = (VertexId, EdgeId);

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        if self.cur == self.header {
            return None;
        }
        let node = self.cur;
        self.cur = self.g.next[node as usize];
        let e = node >> 1;
        let other = self.g.endpoints[e as usize][(node & 1 ^ 1) as usize];
        Some((VertexId(other), EdgeId(e)))
    }
}
