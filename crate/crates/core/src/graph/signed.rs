use super::cycles::validate_cycle;
use super::{GraphError, SimpleGraph, Vertex};
use crate::exactpoly::IntMatrix;

/// Signed complete graph `(K_n, B)`: every pair of distinct vertices is an
/// edge, negative iff it belongs to `negative`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedCompleteGraph {
    negative: SimpleGraph,
}

impl SignedCompleteGraph {
    pub fn new(n: usize, negative: SimpleGraph) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        if negative.vertex_count() != n {
            return Err(GraphError::OrderMismatch {
                expected: n,
                found: negative.vertex_count(),
            });
        }
        Ok(SignedCompleteGraph { negative })
    }

    /// All-positive `K_n`.
    pub fn all_positive(n: usize) -> Result<Self, GraphError> {
        Self::new(n, SimpleGraph::empty(n))
    }

    pub fn from_negative_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(n, SimpleGraph::from_edges(n, edges)?)
    }

    /// Places `b` on vertices `0..|V(b)|` of `K_n` as the negative part.
    pub fn embed(b: &SimpleGraph, n: usize) -> Result<Self, GraphError> {
        if n < b.vertex_count() {
            return Err(GraphError::OrderMismatch {
                expected: b.vertex_count(),
                found: n,
            });
        }
        Self::new(n, b.padded(n))
    }

    pub fn order(&self) -> usize {
        self.negative.vertex_count()
    }

    /// The negative edge set as a graph on all `n` vertices.
    pub fn negative_edges(&self) -> &SimpleGraph {
        &self.negative
    }

    /// The negative part with isolated vertices dropped.
    pub fn negative_part(&self) -> SimpleGraph {
        self.negative.without_isolated()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.negative.edge_count()
    }

    pub fn is_negative(&self, u: Vertex, v: Vertex) -> bool {
        self.negative.has_edge(u, v)
    }

    /// Sign of the edge `uv`; zero on the diagonal.
    pub fn sign(&self, u: Vertex, v: Vertex) -> i8 {
        if u == v {
            0
        } else if self.negative.has_edge(u, v) {
            -1
        } else {
            1
        }
    }

    /// Signed adjacency matrix as small integers, row-major.
    pub fn adjacency_rows(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|j| i64::from(self.sign(i, j))).collect())
            .collect()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.adjacency_rows()).expect("adjacency matrix is square")
    }

    /// Product of edge signs around `cycle` (closing edge included).
    pub fn cycle_sign(&self, cycle: &[Vertex]) -> Result<i8, GraphError> {
        validate_cycle(cycle, self.order())?;
        let len = cycle.len();
        Ok((0..len)
            .map(|i| self.sign(cycle[i], cycle[(i + 1) % len]))
            .product())
    }

    /// Switching test: balanced iff the vertices split into two sides with
    /// the negative edges exactly across. Side of `v` is fixed by the sign of
    /// `0v`, then every pair is checked.
    pub fn is_balanced(&self) -> bool {
        let n = self.order();
        let side: Vec<bool> = (0..n).map(|v| v != 0 && self.is_negative(0, v)).collect();
        (0..n).all(|i| ((i + 1)..n).all(|j| self.is_negative(i, j) == (side[i] != side[j])))
    }

    /// Returns the graph with the sign of `uv` flipped.
    pub(crate) fn with_flipped(&self, u: Vertex, v: Vertex) -> SignedCompleteGraph {
        let mut negative = self.negative.clone();
        if !negative.remove_edge(u, v) {
            negative.add_edge(u, v).expect("flip of a valid pair");
        }
        SignedCompleteGraph { negative }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> SignedCompleteGraph {
        SignedCompleteGraph {
            negative: self.negative.permuted(perm),
        }
    }
}
