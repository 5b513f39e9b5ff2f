//! Special partitions of signed complete graphs and the characteristic
//! polynomial factorization through their quotient matrix:
//!
//! ```text
//! φ(Γ, λ) = (λ+1)^(Σ_{i≤p} n_i − p) · (λ−1)^(Σ_{i>p} n_i − q) · φ(Q, λ)
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{IntMatrix, IntPoly};
use crate::graph::{SignedCompleteGraph, Vertex};

/// Ordered blocks: the first `p` induce all-positive cliques, the rest
/// all-negative cliques. Vertices inside each block are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPartition {
    blocks: Vec<Vec<Vertex>>,
    p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} appears in more than one block")]
    Repeated(Vertex),
    #[error("vertex {0} is not covered")]
    Uncovered(Vertex),
    #[error("p = {p} exceeds the block count {blocks}")]
    TooManyPositive { p: usize, blocks: usize },
    #[error("{0}")]
    Violation(Violation),
}

/// First failure found by [`validate_special_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A positive block contains a negative edge.
    NegativeInsidePositive { block: usize, edge: (Vertex, Vertex) },
    /// A negative block contains a positive edge.
    PositiveInsideNegative { block: usize, edge: (Vertex, Vertex) },
    /// Two blocks are joined by edges of both signs.
    MixedCrossSigns {
        blocks: (usize, usize),
        positive: (Vertex, Vertex),
        negative: (Vertex, Vertex),
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NegativeInsidePositive { block, edge } => write!(
                f,
                "positive block {block} contains negative edge {}-{}",
                edge.0, edge.1
            ),
            Violation::PositiveInsideNegative { block, edge } => write!(
                f,
                "negative block {block} contains positive edge {}-{}",
                edge.0, edge.1
            ),
            Violation::MixedCrossSigns {
                blocks,
                positive,
                negative,
            } => write!(
                f,
                "blocks {} and {} are joined by positive edge {}-{} and negative edge {}-{}",
                blocks.0, blocks.1, positive.0, positive.1, negative.0, negative.1
            ),
        }
    }
}

impl SpecialPartition {
    /// Blocks as given; only the shape is checked here, signs are checked by
    /// [`validate_special_partition`].
    pub fn new(blocks: Vec<Vec<Vertex>>, p: usize) -> Result<Self, PartitionError> {
        if p > blocks.len() {
            return Err(PartitionError::TooManyPositive {
                p,
                blocks: blocks.len(),
            });
        }
        let mut blocks = blocks;
        for (i, b) in blocks.iter_mut().enumerate() {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock(i));
            }
            b.sort_unstable();
        }
        Ok(SpecialPartition { blocks, p })
    }

    /// Orders the blocks canonically: positive cliques (singletons included)
    /// first, then negative cliques, each group keeping the given order.
    pub fn classify(
        g: &SignedCompleteGraph,
        blocks: Vec<Vec<Vertex>>,
    ) -> Result<Self, PartitionError> {
        let tmp = SpecialPartition::new(blocks, 0)?;
        tmp.check_cover(g.order())?;
        let (pos, neg): (Vec<_>, Vec<_>) = tmp
            .blocks
            .into_iter()
            .partition(|b| b.len() == 1 || !g.is_negative(b[0], b[1]));
        let p = pos.len();
        let part = SpecialPartition::new(pos.into_iter().chain(neg).collect(), p)?;
        validate_special_partition(g, &part)?;
        Ok(part)
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.blocks.len() - self.p
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    fn check_cover(&self, n: usize) -> Result<(), PartitionError> {
        let mut seen = vec![false; n];
        for &v in self.blocks.iter().flatten() {
            if v >= n {
                return Err(PartitionError::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PartitionError::Repeated(v));
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(PartitionError::Uncovered(v)),
            None => Ok(()),
        }
    }
}

/// Checks that `part` partitions `V(g)`, that block cliques carry the
/// declared sign, and that every pair of blocks is joined by one sign.
pub fn validate_special_partition(
    g: &SignedCompleteGraph,
    part: &SpecialPartition,
) -> Result<(), PartitionError> {
    part.check_cover(g.order())?;
    let violation = |v| Err(PartitionError::Violation(v));
    for (i, b) in part.blocks.iter().enumerate() {
        let want_negative = i >= part.p;
        for (a, &x) in b.iter().enumerate() {
            for &y in &b[a + 1..] {
                if g.is_negative(x, y) != want_negative {
                    return violation(if want_negative {
                        Violation::PositiveInsideNegative {
                            block: i,
                            edge: (x, y),
                        }
                    } else {
                        Violation::NegativeInsidePositive {
                            block: i,
                            edge: (x, y),
                        }
                    });
                }
            }
        }
    }
    for i in 0..part.blocks.len() {
        for j in i + 1..part.blocks.len() {
            let mut pos = None;
            let mut neg = None;
            for &x in &part.blocks[i] {
                for &y in &part.blocks[j] {
                    let slot = if g.is_negative(x, y) { &mut neg } else { &mut pos };
                    slot.get_or_insert((x, y));
                }
            }
            if let (Some(positive), Some(negative)) = (pos, neg) {
                return violation(Violation::MixedCrossSigns {
                    blocks: (i, j),
                    positive,
                    negative,
                });
            }
        }
    }
    Ok(())
}

/// `q_ij = ±|X_j|` by the cross sign, `q_ii = ±(|X_i| − 1)` by the block
/// sign. These are the row sums of the blocks of `A(g)`, so always integral.
pub fn quotient_matrix(
    g: &SignedCompleteGraph,
    part: &SpecialPartition,
) -> Result<IntMatrix, PartitionError> {
    validate_special_partition(g, part)?;
    let m = part.blocks.len();
    let mut rows = vec![vec![0i64; m]; m];
    for i in 0..m {
        let x = part.blocks[i][0];
        for j in 0..m {
            let size = part.blocks[j].len() as i64;
            rows[i][j] = if i == j {
                let s = if i < part.p { 1 } else { -1 };
                s * (size - 1)
            } else {
                i64::from(g.sign(x, part.blocks[j][0])) * size
            };
            debug_assert_eq!(
                rows[i][j],
                part.blocks[j]
                    .iter()
                    .map(|&y| i64::from(g.sign(x, y)))
                    .sum::<i64>()
            );
        }
    }
    Ok(IntMatrix::from_rows(&rows).expect("square by construction"))
}

/// The right-hand side of the factorization; equals the characteristic
/// polynomial of `A(g)`.
pub fn char_poly_from_quotient(
    g: &SignedCompleteGraph,
    part: &SpecialPartition,
) -> Result<IntPoly, PartitionError> {
    let q = quotient_matrix(g, part)?;
    let sizes = part.sizes();
    let plus: usize = sizes[..part.p].iter().map(|s| s - 1).sum();
    let minus: usize = sizes[part.p..].iter().map(|s| s - 1).sum();
    let lift = |c: i64, e: usize| IntPoly::linear(c).pow(e as i64).expect("non-negative");
    Ok(&(&lift(1, plus) * &lift(-1, minus)) * &q.char_poly_exact())
}

/// Every vertex touched by a negative edge as a singleton, then the
/// remaining vertices as one positive block (omitted when empty). Its
/// quotient polynomial is `φ(g)` with `f − 1` factors of `λ+1` removed, `f`
/// the number of untouched vertices.
pub fn collapsed_partition(g: &SignedCompleteGraph) -> SpecialPartition {
    let support = g.negative_edges().non_isolated_vertices();
    let mut touched = vec![false; g.order()];
    let mut blocks: Vec<Vec<Vertex>> = support
        .iter()
        .map(|&v| {
            touched[v] = true;
            vec![v]
        })
        .collect();
    let filler: Vec<Vertex> = (0..g.order()).filter(|&v| !touched[v]).collect();
    if !filler.is_empty() {
        blocks.push(filler);
    }
    let p = blocks.len();
    SpecialPartition::new(blocks, p).expect("blocks are nonempty")
}

/// Characteristic polynomial of the quotient of [`collapsed_partition`].
pub fn collapsed_char_poly(g: &SignedCompleteGraph) -> IntPoly {
    quotient_matrix(g, &collapsed_partition(g))
        .expect("the collapsed partition is special")
        .char_poly_exact()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapsed_quotient_divides_out_the_filler() {
        let g = SignedCompleteGraph::from_negative_edges(9, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let part = collapsed_partition(&g);
        assert_eq!(part.sizes(), vec![1, 1, 1, 1, 5]);
        let full = g.adjacency_matrix().char_poly_exact();
        let lifted = &IntPoly::linear(1).pow(4).unwrap() * &collapsed_char_poly(&g);
        assert_eq!(full, lifted);
    }

    fn k4_one_negative() -> SignedCompleteGraph {
        SignedCompleteGraph::from_negative_edges(4, [(0, 1)]).unwrap()
    }

    #[test]
    fn single_positive_block() {
        let g = SignedCompleteGraph::all_positive(5).unwrap();
        let part = SpecialPartition::new(vec![(0..5).collect()], 1).unwrap();
        let q = quotient_matrix(&g, &part).unwrap();
        assert_eq!(q, IntMatrix::from_rows(&[vec![4]]).unwrap());
        let expected = &IntPoly::linear(1).pow(4).unwrap() * &IntPoly::linear(-4);
        assert_eq!(char_poly_from_quotient(&g, &part).unwrap(), expected);
    }

    #[test]
    fn negative_edge_inside_positive_block() {
        let g = k4_one_negative();
        let part = SpecialPartition::new(vec![vec![0, 1], vec![2, 3]], 1).unwrap();
        // p = 1 makes {2,3} a negative block too, which is also violated;
        // block 0 is reported first
        assert_eq!(
            validate_special_partition(&g, &part),
            Err(PartitionError::Violation(Violation::NegativeInsidePositive {
                block: 0,
                edge: (0, 1)
            }))
        );
    }

    #[test]
    fn negative_block_factorization() {
        let g = k4_one_negative();
        let part = SpecialPartition::new(vec![vec![2, 3], vec![0, 1]], 1).unwrap();
        let q = quotient_matrix(&g, &part).unwrap();
        assert_eq!(q, IntMatrix::from_rows(&[vec![1, 2], vec![2, -1]]).unwrap());
        assert_eq!(
            char_poly_from_quotient(&g, &part).unwrap(),
            g.adjacency_matrix().char_poly_exact()
        );
    }

    #[test]
    fn mixed_cross_block() {
        let g = k4_one_negative();
        let part = SpecialPartition::new(vec![vec![0], vec![1, 2, 3]], 2).unwrap();
        assert!(matches!(
            validate_special_partition(&g, &part),
            Err(PartitionError::Violation(Violation::MixedCrossSigns { .. }))
        ));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            SpecialPartition::new(vec![vec![0], vec![]], 1),
            Err(PartitionError::EmptyBlock(1))
        );
        assert!(matches!(
            SpecialPartition::new(vec![vec![0]], 2),
            Err(PartitionError::TooManyPositive { .. })
        ));
        let g = k4_one_negative();
        let dup = SpecialPartition::new(vec![vec![0, 1, 2], vec![2, 3]], 2).unwrap();
        assert_eq!(validate_special_partition(&g, &dup), Err(PartitionError::Repeated(2)));
        let short = SpecialPartition::new(vec![vec![0, 1, 2]], 1).unwrap();
        assert_eq!(validate_special_partition(&g, &short), Err(PartitionError::Uncovered(3)));
    }

    #[test]
    fn classify_puts_singletons_first_group() {
        let g = k4_one_negative();
        let part = SpecialPartition::classify(&g, vec![vec![1, 0], vec![3], vec![2]]).unwrap();
        assert_eq!(part.blocks(), &[vec![3], vec![2], vec![0, 1]]);
        assert_eq!((part.p(), part.q()), (2, 1));
    }

    #[test]
    fn json_shape() {
        let part = SpecialPartition::new(vec![vec![3, 1], vec![0, 2]], 2).unwrap();
        let s = serde_json::to_string(&part).unwrap();
        assert_eq!(s, r#"{"blocks":[[1,3],[0,2]],"p":2}"#);
        let back: SpecialPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, part);
    }
}
