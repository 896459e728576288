//! Vertices bucketed by current degree.
//!
//! Bucket `i` is an intrusive doubly-linked list of the alive vertices whose
//! degree is `i`. Degrees only ever move by one per update, so the cached top
//! bucket is maintained in O(1) without scanning.

use crate::dynamic::DynamicGraph;
use crate::graph::VertexId;

const NIL: u32 = u32::MAX;
const NO_BUCKET: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct DegreeIndex {
    head: Vec<u32>,
    tail: Vec<u32>,
    len: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    bucket: Vec<u32>,
    top: usize,
}

impl DegreeIndex {
    /// Builds the index for the live state of `g` by bucket sort.
    pub fn build(g: &DynamicGraph) -> Self {
        let n = g.vertex_count();
        let degrees: Vec<u32> = (0..n as u32).map(|v| g.degree(VertexId(v)) as u32).collect();
        let alive: Vec<bool> = (0..n as u32).map(|v| g.is_vertex_alive(VertexId(v))).collect();
        let capacity = degrees.iter().copied().max().unwrap_or(0) as usize + 1;
        Self::from_degrees(&degrees, &alive, capacity)
    }

    /// `capacity` is the number of buckets; it must exceed every degree the
    /// vertices will ever reach.
    pub(crate) fn from_degrees(degrees: &[u32], alive: &[bool], capacity: usize) -> Self {
        let n = degrees.len();
        let mut idx = DegreeIndex {
            head: vec![NIL; capacity],
            tail: vec![NIL; capacity],
            len: vec![0; capacity],
            next: vec![NIL; n],
            prev: vec![NIL; n],
            bucket: vec![NIL; n],
            top: NO_BUCKET,
        };
        for v in 0..n {
            if alive[v] {
                idx.push(v as u32, degrees[v] as usize);
            }
        }
        idx
    }

    fn push(&mut self, v: u32, b: usize) {
        let t = self.tail[b];
        self.prev[v as usize] = t;
        self.next[v as usize] = NIL;
        if t == NIL {
            self.head[b] = v;
        } else {
            self.next[t as usize] = v;
        }
        self.tail[b] = v;
        self.len[b] += 1;
        self.bucket[v as usize] = b as u32;
        if self.top == NO_BUCKET || b > self.top {
            self.top = b;
        }
    }

    fn unlink(&mut self, v: u32) -> usize {
        let b = self.bucket[v as usize] as usize;
        let (p, n) = (self.prev[v as usize], self.next[v as usize]);
        if p == NIL {
            self.head[b] = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail[b] = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.len[b] -= 1;
        self.bucket[v as usize] = NIL;
        if b == self.top && self.len[b] == 0 {
            self.top = if b == 0 { NO_BUCKET } else { b - 1 };
        }
        b
    }

    /// Moves `v` from bucket `old_degree` to `new_degree`; degrees differ by one.
    pub fn on_degree_change(&mut self, v: VertexId, old_degree: usize, new_degree: usize) {
        debug_assert_eq!(old_degree.abs_diff(new_degree), 1);
        debug_assert_eq!(self.bucket[v.index()] as usize, old_degree);
        self.unlink(v.0);
        self.push(v.0, new_degree);
    }

    /// Drops a dead vertex; it must currently sit in bucket 0.
    pub(crate) fn on_vertex_removed(&mut self, v: VertexId) {
        debug_assert_eq!(self.bucket[v.index()], 0);
        self.unlink(v.0);
    }

    pub(crate) fn on_vertex_restored(&mut self, v: VertexId) {
        self.push(v.0, 0);
    }

    /// A vertex of maximum current degree, or `None` when no vertex has an edge.
    /// Ties resolve to the tail of the top bucket.
    #[inline]
    pub fn max_degree_vertex(&self) -> Option<VertexId> {
        if self.top == NO_BUCKET || self.top == 0 {
            None
        } else {
            Some(VertexId(self.tail[self.top]))
        }
    }

    pub fn max_degree(&self) -> usize {
        if self.top == NO_BUCKET {
            0
        } else {
            self.top
        }
    }

    /// Vertices currently in bucket `degree`, head to tail.
    pub fn bucket(&self, degree: usize) -> Vec<VertexId> {
        let mut out = Vec::new();
        if degree >= self.head.len() {
            return out;
        }
        let mut cur = self.head[degree];
        while cur != NIL {
            out.push(VertexId(cur));
            cur = self.next[cur as usize];
        }
        out
    }

    /// Bucket currently holding `v`, or `None` for a dead vertex.
    pub fn bucket_of(&self, v: VertexId) -> Option<usize> {
        match self.bucket[v.index()] {
            NIL => None,
            b => Some(b as usize),
        }
    }

    /// Checks the index against the live degrees and alive flags of `g`.
    pub fn check_against(&self, g: &DynamicGraph) -> Result<(), String> {
        let mut total = 0usize;
        for b in 0..self.head.len() {
            let members = self.bucket(b);
            if members.len() != self.len[b] as usize {
                return Err(format!("bucket {b} length mismatch"));
            }
            for v in members {
                if !g.is_vertex_alive(v) {
                    return Err(format!("dead vertex {v} in bucket {b}"));
                }
                if g.degree(v) != b {
                    return Err(format!("{v} in bucket {b} but has degree {}", g.degree(v)));
                }
                total += 1;
            }
        }
        let alive = (0..g.vertex_count() as u32).filter(|&v| g.is_vertex_alive(VertexId(v))).count();
        if total != alive {
            return Err(format!("buckets hold {total} vertices, {alive} alive"));
        }
        let expected_top = (0..self.head.len()).rev().find(|&b| self.len[b] > 0);
        if expected_top.unwrap_or(NO_BUCKET) != self.top {
            return Err(format!("cached top {} but highest nonempty is {expected_top:?}", self.top));
        }
        Ok(())
    }
}
