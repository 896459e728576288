//! Immutable labeled graph: the input to every enumerator and the reference
//! against which emitted matchings are validated.

use std::collections::HashMap;
use std::fmt;

use crate::error::GraphError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An undirected simple graph with string vertex labels.
///
/// Vertex ids are dense and assigned in first-appearance order; edge ids follow
/// input order. Adjacency is stored in CSR form.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<[VertexId; 2]>,
    adj_start: Vec<usize>,
    adj: Vec<(VertexId, EdgeId)>,
}

impl Graph {
    /// Builds a graph from label pairs. Labels are interned in first-appearance order.
    pub fn from_pairs<I, L>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (L, L)>,
        L: AsRef<str>,
    {
        let mut ids: HashMap<String, VertexId> = HashMap::new();
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut intern = |label: &str, labels: &mut Vec<String>| -> VertexId {
            *ids.entry(label.to_owned()).or_insert_with(|| {
                labels.push(label.to_owned());
                VertexId(labels.len() as u32 - 1)
            })
        };
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            if a == b {
                return Err(GraphError::SelfLoop(a.to_owned()));
            }
            let u = intern(a, &mut labels);
            let v = intern(b, &mut labels);
            edges.push([u, v]);
        }
        Self::assemble(labels, edges)
    }

    /// Builds a graph on vertices `0..n` labeled `1..=n`, from 0-based index pairs.
    pub fn from_indexed(n: usize, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            assert!((a as usize) < n && (b as usize) < n, "vertex index out of range");
            if a == b {
                return Err(GraphError::SelfLoop(labels[a as usize].clone()));
            }
            edges.push([VertexId(a), VertexId(b)]);
        }
        Self::assemble(labels, edges)
    }

    fn assemble(labels: Vec<String>, edges: Vec<[VertexId; 2]>) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(edges.len());
        for (i, &[u, v]) in edges.iter().enumerate() {
            let key = if u < v { (u, v) } else { (v, u) };
            if seen.insert(key, i).is_some() {
                return Err(GraphError::DuplicateEdge(labels[u.index()].clone(), labels[v.index()].clone()));
            }
        }
        let mut adj_start = vec![0usize; n + 1];
        for &[u, v] in &edges {
            adj_start[u.index() + 1] += 1;
            adj_start[v.index() + 1] += 1;
        }
        for i in 0..n {
            adj_start[i + 1] += adj_start[i];
        }
        let mut fill = adj_start.clone();
        let mut adj = vec![(VertexId(0), EdgeId(0)); 2 * edges.len()];
        for (i, &[u, v]) in edges.iter().enumerate() {
            let e = EdgeId(i as u32);
            adj[fill[u.index()]] = (v, e);
            fill[u.index()] += 1;
            adj[fill[v.index()]] = (u, e);
            fill[v.index()] += 1;
        }
        Ok(Graph { labels, edges, adj_start, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e.index()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.edges.iter().enumerate().map(|(i, &ends)| (EdgeId(i as u32), ends))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[self.adj_start[v.index()]..self.adj_start[v.index() + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj_start[v.index() + 1] - self.adj_start[v.index()]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.neighbors(u).iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Returns whether `matching` (treated as a set) is an induced matching:
    /// every two distinct edges are vertex-disjoint and joined by no edge.
    ///
    /// Each matching edge inspects only the radius-1 neighborhood of its endpoints.
    pub fn is_induced_matching(&self, matching: &[EdgeId]) -> Result<bool, GraphError> {
        let mut ids = matching.to_vec();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&e) = ids.iter().find(|e| e.index() >= self.edges.len()) {
            return Err(GraphError::UnknownEdge(e));
        }
        let mut owner = vec![usize::MAX; self.vertex_count()];
        for (i, &e) in ids.iter().enumerate() {
            for x in self.edges[e.index()] {
                if owner[x.index()] != usize::MAX {
                    return Ok(false);
                }
                owner[x.index()] = i;
            }
        }
        for (i, &e) in ids.iter().enumerate() {
            for x in self.edges[e.index()] {
                for &(y, _) in self.neighbors(x) {
                    if owner[y.index()] != usize::MAX && owner[y.index()] != i {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}
