//! Simple graphs, signed complete graphs and the structural helpers used on
//! the negative part: degrees, distances, pendants, bases, cycles and balance.

mod cycles;
pub mod graph6;
mod signed;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use cycles::CycleList;
pub use signed::SignedCompleteGraph;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is not bicyclic (connected with |E| = |V| + 1)")]
    NotBicyclic,
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),
    #[error("negative part has {found} vertices, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
}

/// Shortest-path distance; unreachable pairs are a separate variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Undirected simple graph on vertices `0..vertex_count`.
///
/// Adjacency lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of insertion order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    /// Edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = SimpleGraph::empty(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.adj.len() || v >= self.adj.len() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                self.edge_count -= 1;
                true
            }
            Err(_) => false,
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.adj.len(),
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].len() == 1)
            .collect()
    }

    /// Vertices incident to at least one edge.
    pub fn non_isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count())
            .filter(|&v| !self.adj[v].is_empty())
            .collect()
    }

    fn bfs(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(match self.bfs(&[u])[v] {
            Some(d) => Distance::Finite(d),
            None => Distance::Unreachable,
        })
    }

    /// Largest pairwise distance. `Unreachable` for disconnected graphs;
    /// `Finite(0)` for graphs with at most one vertex.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for u in 0..self.vertex_count() {
            for d in self.bfs(&[u]) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Unreachable,
                }
            }
        }
        Distance::Finite(best)
    }

    /// `N^r(S)`: vertices whose distance to the set `sources` is exactly `r`.
    pub fn neighbors_at_distance(
        &self,
        sources: &[Vertex],
        r: usize,
    ) -> Result<Vec<Vertex>, GraphError> {
        for &s in sources {
            self.check_vertex(s)?;
        }
        Ok(self
            .bfs(sources)
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| (d == Some(r)).then_some(v))
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        self.bfs(&[0]).iter().all(Option::is_some)
    }

    /// Connected with `|E| = |V| + 1`.
    pub fn is_bicyclic(&self) -> bool {
        self.edge_count == self.vertex_count() + 1 && self.is_connected()
    }

    /// Indices of the vertices that survive repeated deletion of degree-1
    /// vertices.
    pub fn core_vertices(&self) -> Vec<Vertex> {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] || deg[v] != 1 {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }

    /// The base of a bicyclic graph: its unique minimal bicyclic subgraph,
    /// relabelled onto `0..|V(base)|` in increasing order of the original
    /// labels.
    pub fn base(&self) -> Result<SimpleGraph, GraphError> {
        if !self.is_bicyclic() {
            return Err(GraphError::NotBicyclic);
        }
        Ok(self.induced_subgraph(&self.core_vertices()))
    }

    /// Subgraph induced on `vertices`, relabelled so that `vertices[i]`
    /// becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        g
    }

    /// Drops isolated vertices, keeping the relative order of the rest.
    pub fn without_isolated(&self) -> SimpleGraph {
        self.induced_subgraph(&self.non_isolated_vertices())
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..vertex_count`.
    pub fn permuted(&self, perm: &[Vertex]) -> SimpleGraph {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let mut g = SimpleGraph::empty(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation keeps edges simple");
        }
        g
    }

    /// Same edges on a larger vertex set; new vertices are isolated.
    pub fn padded(&self, vertex_count: usize) -> SimpleGraph {
        assert!(vertex_count >= self.vertex_count());
        let mut adj = self.adj.clone();
        adj.resize(vertex_count, Vec::new());
        SimpleGraph {
            adj,
            edge_count: self.edge_count,
        }
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<SimpleGraph, GraphError> {
        graph6::decode(s)
    }
}
