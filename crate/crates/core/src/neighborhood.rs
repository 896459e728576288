//! Concentric edge classes around a pivot vertex, measured in the live graph.
//!
//! With `dist` the live distance to the pivot `v`, an edge `{x, y}` with
//! `dist(x) <= dist(y)` is a 0-1 edge, 1-1 edge, 1-2 edge or 2-* edge (2-2 or
//! 2-3). Edges with both endpoints at distance >= 3 are never touched.
//!
//! For a 0-1 edge `e = {v, u}`, its sector is the set of 2-* edges having a
//! distance-2 endpoint adjacent to `u`: exactly the edges that conflict with
//! `e` and lie outside the closed neighborhood of `v`.

use crate::dynamic::DynamicGraph;
use crate::error::NeighborhoodError;
use crate::graph::{EdgeId, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PivotClassification {
    pivot: Option<VertexId>,
    /// Edges at the pivot, ascending by id.
    pub d01: Vec<EdgeId>,
    /// Non-pivot endpoint of each `d01` edge, aligned with `d01`.
    pub dist1: Vec<VertexId>,
    pub d11: Vec<EdgeId>,
    pub d12: Vec<EdgeId>,
    pub d2: Vec<EdgeId>,
    /// Each distance-2 vertex with the number of 1-2 edges it touches.
    pub dist2: Vec<(VertexId, u32)>,
    /// Number of 1-1 edges at each distance-1 vertex, aligned with `d01`.
    pub one_one_at: Vec<u32>,
    sect_start: Vec<u32>,
    sect_edges: Vec<EdgeId>,
}

impl PivotClassification {
    pub fn pivot(&self) -> VertexId {
        self.pivot.expect("classification has not been computed")
    }

    /// Sector of the `i`-th pivot edge.
    #[inline]
    pub fn sect2_at(&self, i: usize) -> &[EdgeId] {
        &self.sect_edges[self.sect_start[i] as usize..self.sect_start[i + 1] as usize]
    }

    /// Sector of the pivot edge `e`.
    pub fn sect2(&self, e: EdgeId) -> Result<&[EdgeId], NeighborhoodError> {
        let i = self.d01.binary_search(&e).map_err(|_| NeighborhoodError::EdgeNotInD01(e))?;
        Ok(self.sect2_at(i))
    }

    /// Sum of sector sizes over all pivot edges.
    pub fn sect_sum(&self) -> usize {
        self.sect_edges.len()
    }

    /// Size of the union of all four classes, i.e. every live edge within distance 2.
    pub fn touched(&self) -> usize {
        self.d01.len() + self.d11.len() + self.d12.len() + self.d2.len()
    }

    fn clear(&mut self) {
        self.d01.clear();
        self.dist1.clear();
        self.d11.clear();
        self.d12.clear();
        self.d2.clear();
        self.dist2.clear();
        self.one_one_at.clear();
        self.sect_start.clear();
        self.sect_edges.clear();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A distance-2 vertex touching other than exactly one 1-2 edge.
    OneTwoEdgeCount { vertex: VertexId, count: u32 },
    /// A pivot edge whose far endpoint carries more than one 1-1 edge.
    OneOneEdgeCount { edge: EdgeId, count: u32 },
    /// Total sector size above twice the number of 2-* edges.
    SectorSum { sum: usize, bound: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::OneTwoEdgeCount { vertex, count } => {
                write!(f, "distance-2 vertex {vertex} touches {count} 1-2 edges")
            }
            Violation::OneOneEdgeCount { edge, count } => {
                write!(f, "pivot edge {edge} is adjacent to {count} 1-1 edges")
            }
            Violation::SectorSum { sum, bound } => write!(f, "sector sum {sum} exceeds {bound}"),
        }
    }
}

/// Local C4-freeness checks around a pivot. Empty iff all three hold.
pub fn check_c4free_local(c: &PivotClassification) -> Vec<Violation> {
    let mut out = Vec::new();
    for &(vertex, count) in &c.dist2 {
        if count != 1 {
            out.push(Violation::OneTwoEdgeCount { vertex, count });
        }
    }
    for (&edge, &count) in c.d01.iter().zip(&c.one_one_at) {
        if count > 1 {
            out.push(Violation::OneOneEdgeCount { edge, count });
        }
    }
    let (sum, bound) = (c.sect_sum(), 2 * c.d2.len());
    if sum > bound {
        out.push(Violation::SectorSum { sum, bound });
    }
    out
}

/// Scratch state for repeated classification over one graph. Labels and
/// stamps are epoch-tagged so nothing is cleared between calls.
#[derive(Clone, Debug)]
pub struct Classifier {
    epoch: u32,
    seen: Vec<u32>,
    dist: Vec<u8>,
    one_two: Vec<u32>,
    stamp: u32,
    edge_stamp: Vec<u32>,
}

impl Classifier {
    pub fn new(g: &DynamicGraph) -> Self {
        Classifier {
            epoch: 0,
            seen: vec![0; g.vertex_count()],
            dist: vec![0; g.vertex_count()],
            one_two: vec![0; g.vertex_count()],
            stamp: 0,
            edge_stamp: vec![0; g.edge_count()],
        }
    }

    #[inline]
    fn label(&self, x: VertexId) -> Option<u8> {
        (self.seen[x.index()] == self.epoch).then(|| self.dist[x.index()])
    }

    #[inline]
    fn set(&mut self, x: VertexId, d: u8) {
        self.seen[x.index()] = self.epoch;
        self.dist[x.index()] = d;
    }

    fn next_epoch(&mut self) {
        if self.epoch == u32::MAX {
            self.seen.fill(0);
            self.epoch = 0;
        }
        self.epoch += 1;
    }

    fn next_stamp(&mut self) {
        if self.stamp == u32::MAX {
            self.edge_stamp.fill(0);
            self.stamp = 0;
        }
        self.stamp += 1;
    }

    /// Classifies the live edges within distance 2 of `v` into `out`.
    pub fn classify_into(
        &mut self,
        g: &DynamicGraph,
        v: VertexId,
        out: &mut PivotClassification,
    ) -> Result<(), NeighborhoodError> {
        if !g.is_vertex_alive(v) {
            return Err(NeighborhoodError::VertexNotAlive(v));
        }
        if g.degree(v) == 0 {
            return Err(NeighborhoodError::ZeroDegreePivot(v));
        }
        out.clear();
        out.pivot = Some(v);
        self.next_epoch();
        self.set(v, 0);

        // Adjacency lists stay in ascending edge-id order under removal and
        // LIFO restoration, so d01 comes out sorted.
        for (u, e) in g.neighbors(v) {
            out.d01.push(e);
            out.dist1.push(u);
            self.set(u, 1);
        }
        debug_assert!(out.d01.windows(2).all(|w| w[0] < w[1]));

        for &u in &out.dist1 {
            let mut one_one = 0;
            for (w, f) in g.neighbors(u) {
                match self.label(w) {
                    Some(0) => {}
                    Some(1) => {
                        one_one += 1;
                        if u < w {
                            out.d11.push(f);
                        }
                    }
                    Some(_) => {
                        out.d12.push(f);
                        self.one_two[w.index()] += 1;
                    }
                    None => {
                        self.set(w, 2);
                        self.one_two[w.index()] = 1;
                        out.d12.push(f);
                        out.dist2.push((w, 0));
                    }
                }
            }
            out.one_one_at.push(one_one);
        }

        for slot in &mut out.dist2 {
            let x = slot.0;
            slot.1 = self.one_two[x.index()];
            for (y, f) in g.neighbors(x) {
                match self.label(y) {
                    Some(1) => {}
                    Some(2) => {
                        if x < y {
                            out.d2.push(f);
                        }
                    }
                    Some(_) => unreachable!("distance-2 vertex adjacent to the pivot"),
                    None => out.d2.push(f),
                }
            }
        }

        out.sect_start.push(0);
        for i in 0..out.dist1.len() {
            self.next_stamp();
            let u = out.dist1[i];
            for (x, _) in g.neighbors(u) {
                if self.label(x) != Some(2) {
                    continue;
                }
                for (y, h) in g.neighbors(x) {
                    if self.label(y) == Some(1) || self.edge_stamp[h.index()] == self.stamp {
                        continue;
                    }
                    self.edge_stamp[h.index()] = self.stamp;
                    out.sect_edges.push(h);
                }
            }
            out.sect_start.push(out.sect_edges.len() as u32);
        }
        Ok(())
    }

    pub fn classify(&mut self, g: &DynamicGraph, v: VertexId) -> Result<PivotClassification, NeighborhoodError> {
        let mut out = PivotClassification::default();
        self.classify_into(g, v, &mut out)?;
        Ok(out)
    }
}

/// One-shot classification with fresh scratch state.
pub fn classify(g: &DynamicGraph, v: VertexId) -> Result<PivotClassification, NeighborhoodError> {
    Classifier::new(g).classify(g, v)
}
