//! Immutable simple undirected graphs and the local-structure queries the
//! rest of the crate is built on: neighborhoods, induced subgraphs, vertex
//! deletion, and edge/triangle values.

use std::fmt;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is not in 0..{1}")]
    InvalidVertex(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{{{0}, {1}, {2}}} is not a triangle")]
    NotATriangle(usize, usize, usize),
}

/// Sorted, duplicate-free list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Row-wise adjacency bitset, one `u64` word per 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows { words, bits: vec![0; words * n] }
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: BitRows,
}

/// A graph derived from a parent by keeping a subset of its vertices,
/// together with the dense re-indexing that was applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reindexed {
    pub graph: Graph,
    /// `new_to_old[i]` is the parent vertex that became vertex `i`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[v]` is `Some(i)` when parent vertex `v` was kept as `i`.
    pub old_to_new: Vec<Option<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = BitRows::new(n);
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !rows.get(u, v) {
                rows.set(u, v);
                rows.set(v, u);
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, rows })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("no edges")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        Graph::new(n, edges).expect("valid complete graph")
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// Wheel with a `rim`-cycle on vertices `1..=rim` and hub `0`.
    pub fn wheel(rim: usize) -> Self {
        assert!(rim >= 3, "a wheel rim needs at least three vertices");
        let spokes = (1..=rim).map(|v| (0, v));
        let rim_edges = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
        Graph::new(rim + 1, spokes.chain(rim_edges)).expect("valid wheel")
    }

    /// The octahedron `K_{2,2,2}`: antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
    pub fn octahedron() -> Self {
        let edges = (0..6)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| u / 2 != v / 2);
        Graph::new(6, edges).expect("valid octahedron")
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("valid random graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows.get(u, v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v, self.n))
        }
    }

    /// Open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v].clone()))
    }

    /// Subgraph induced by `keep`, re-indexed densely in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Reindexed, GraphError> {
        for v in keep.iter() {
            self.check_vertex(v)?;
        }
        let new_to_old = keep.as_slice().to_vec();
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut edges = Vec::new();
        for (i, &v) in new_to_old.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(j) = old_to_new[w] {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let graph = Graph::new(new_to_old.len(), edges)?;
        Ok(Reindexed { graph, new_to_old, old_to_new })
    }

    /// `G[N(v)]`, with `v` itself excluded.
    pub fn induced_neighborhood(&self, v: usize) -> Result<Reindexed, GraphError> {
        let nbhd = self.neighborhood(v)?;
        self.induced_subgraph(&nbhd)
    }

    /// `G - v`; the remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Reindexed, GraphError> {
        self.check_vertex(v)?;
        let keep = VertexSet((0..self.n).filter(|&w| w != v).collect());
        self.induced_subgraph(&keep)
    }

    /// Number of common neighbours of the endpoints of edge `{u, v}`.
    pub fn edge_value(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.adj[u].iter().filter(|&&w| self.rows.get(v, w)).count())
    }

    /// Number of common neighbours of the three vertices of a triangle.
    pub fn triangle_value(&self, a: usize, b: usize, c: usize) -> Result<usize, GraphError> {
        if !(self.has_edge(a, b) && self.has_edge(a, c) && self.has_edge(b, c)) {
            return Err(GraphError::NotATriangle(a, b, c));
        }
        Ok(self.adj[a]
            .iter()
            .filter(|&&w| self.rows.get(b, w) && self.rows.get(c, w))
            .count())
    }

    /// Triangles `(a, b, c)` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for &c in &self.adj[b] {
                if c > b && self.rows.get(a, c) {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("valid union")
    }

    /// Adds a new vertex `n` adjacent to `neighbors`.
    pub fn add_vertex(&self, neighbors: &[usize]) -> Result<Graph, GraphError> {
        let v = self.n;
        let edges = self.edges().chain(neighbors.iter().map(|&u| (u, v)));
        Graph::new(self.n + 1, edges)
    }

    /// Graph whose vertex `perm[v]` plays the role of old vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match vertex count");
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v]))).expect("valid relabel")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
