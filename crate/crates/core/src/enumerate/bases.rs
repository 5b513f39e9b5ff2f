//! Minimal bicyclic graphs: theta graphs and dumbbells.

use crate::families::theta_hat;
use crate::graph::SimpleGraph;

/// Shape of a base. Different shapes are never isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseShape {
    /// θ̂(a, b, c), `1 ≤ a ≤ b ≤ c`, `b ≥ 2`.
    Theta { a: usize, b: usize, c: usize },
    /// Cycles of lengths `p ≤ q` joined by a path of length `bridge`;
    /// `bridge = 0` means they share a vertex.
    Dumbbell { p: usize, q: usize, bridge: usize },
}

impl BaseShape {
    pub fn vertex_count(&self) -> usize {
        match *self {
            BaseShape::Theta { a, b, c } => a + b + c - 1,
            BaseShape::Dumbbell { p, q, bridge } => p + q + bridge - 1,
        }
    }

    pub fn graph(&self) -> SimpleGraph {
        match *self {
            BaseShape::Theta { a, b, c } => theta_hat(a, b, c).expect("valid parameters"),
            BaseShape::Dumbbell { p, q, bridge } => dumbbell(p, q, bridge),
        }
    }
}

/// Cycle `0 … p−1`, then the bridge from vertex 0, then the second cycle
/// through the bridge's far end.
pub fn dumbbell(p: usize, q: usize, bridge: usize) -> SimpleGraph {
    assert!(p >= 3 && q >= 3, "cycles need length ≥ 3");
    let n = p + q + bridge - 1;
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let mut prev = 0;
    for i in 0..bridge {
        edges.push((prev, p + i));
        prev = p + i;
    }
    let join = prev;
    let first = p + bridge;
    let mut cur = join;
    for i in 0..q - 1 {
        edges.push((cur, first + i));
        cur = first + i;
    }
    edges.push((cur, join));
    SimpleGraph::from_edges(n, edges).expect("valid by construction")
}

/// All bases with at most `max_vertices` vertices.
pub fn bases_up_to(max_vertices: usize) -> Vec<BaseShape> {
    let mut out = Vec::new();
    for a in 1..=max_vertices {
        for b in a.max(2)..=max_vertices {
            for c in b..=max_vertices {
                if a + b + c - 1 <= max_vertices {
                    out.push(BaseShape::Theta { a, b, c });
                }
            }
        }
    }
    for p in 3..=max_vertices {
        for q in p..=max_vertices {
            for bridge in 0..=max_vertices {
                if p + q + bridge - 1 <= max_vertices {
                    out.push(BaseShape::Dumbbell { p, q, bridge });
                }
            }
        }
    }
    out
}
