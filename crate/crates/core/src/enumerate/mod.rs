//! Connected bicyclic graphs up to isomorphism.
//!
//! Every connected bicyclic graph is its base with a rooted tree hanging from
//! each base vertex. Generation takes every base on at most `v` vertices,
//! every composition of `v` over the base vertices, and every choice of
//! rooted trees of those sizes; duplicates (from base automorphisms) are
//! removed by certificate. Only graph6 certificates are kept in memory, and
//! the stream decodes them one at a time in certificate order.

mod bases;
mod canon;
mod trees;

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{GraphError, SignedCompleteGraph, SimpleGraph};

pub use bases::{bases_up_to, dumbbell, BaseShape};
pub use canon::{canonical_form, canonical_labeling, certificate, CanonicalGraph};
pub use trees::{rooted_trees, ParentArray};

pub const MIN_VERTICES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("bicyclic graphs need at least {MIN_VERTICES} vertices, got {0}")]
    TooFewVertices(usize),
}

/// Sorted, duplicate-free certificates of all connected bicyclic graphs on
/// `v` vertices.
pub fn bicyclic_certificates(v: usize) -> Result<Vec<String>, EnumerateError> {
    if v < MIN_VERTICES {
        return Err(EnumerateError::TooFewVertices(v));
    }
    let trees: Vec<Vec<ParentArray>> = (0..=v).map(rooted_trees).collect();
    let jobs: Vec<(SimpleGraph, Vec<usize>)> = bases_up_to(v)
        .into_iter()
        .flat_map(|b| {
            let g = b.graph();
            compositions(v, g.vertex_count())
                .into_iter()
                .map(move |c| (g.clone(), c))
        })
        .collect();
    let set = jobs
        .par_iter()
        .fold(HashSet::new, |mut acc, (base, sizes)| {
            for_each_forest(base, sizes, &trees, |g| {
                acc.insert(certificate(g));
            });
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return merge(b, a);
            }
            a.extend(b);
            a
        });
    let mut out: Vec<String> = set.into_iter().collect();
    out.par_sort_unstable();
    Ok(out)
}

fn merge(mut big: HashSet<String>, small: HashSet<String>) -> HashSet<String> {
    big.extend(small);
    big
}

/// Stream of all connected bicyclic graphs on `v` vertices, one per
/// isomorphism class, strictly increasing by certificate.
pub fn enumerate_bicyclic(
    v: usize,
) -> Result<impl Iterator<Item = CanonicalGraph>, EnumerateError> {
    Ok(bicyclic_certificates(v)?.into_iter().map(|c| {
        let g = SimpleGraph::from_graph6(&c).expect("certificates are valid graph6");
        CanonicalGraph::from_canonical(g, c)
    }))
}

/// `b` as the negative part of `K_n` on vertices `0..|V(b)|`.
pub fn embed(b: &SimpleGraph, n: usize) -> Result<SignedCompleteGraph, GraphError> {
    SignedCompleteGraph::embed(b, n)
}

/// Ordered `parts`-tuples of positive integers summing to `total`.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 1..=rest.saturating_sub(parts - 1) {
            cur.push(x);
            go(rest - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Calls `f` on every graph obtained by rooting a tree of size `sizes[i]`
/// at base vertex `i`.
fn for_each_forest(
    base: &SimpleGraph,
    sizes: &[usize],
    trees: &[Vec<ParentArray>],
    mut f: impl FnMut(&SimpleGraph),
) {
    let v: usize = sizes.iter().sum();
    let mut choice = vec![0usize; sizes.len()];
    loop {
        let mut g = base.padded(v);
        let mut next = base.vertex_count();
        for (root, (&size, &pick)) in sizes.iter().zip(&choice).enumerate() {
            let parent = &trees[size][pick];
            let label = |i: usize| if i == 0 { root } else { next + i - 1 };
            for (i, &p) in parent.iter().enumerate().skip(1) {
                g.add_edge(label(p), label(i)).expect("tree edges are new");
            }
            next += size - 1;
        }
        f(&g);
        // odometer over the tree choices
        let mut i = 0;
        loop {
            if i == sizes.len() {
                return;
            }
            choice[i] += 1;
            if choice[i] < trees[sizes[i]].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(14, 4).len(), 286);
        assert!(compositions(3, 4).is_empty());
        assert_eq!(compositions(4, 4), vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn small_stream_is_sorted_and_bicyclic() {
        assert!(matches!(
            enumerate_bicyclic(3),
            Err(EnumerateError::TooFewVertices(3))
        ));
        let all: Vec<CanonicalGraph> = enumerate_bicyclic(6).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].certificate() < w[1].certificate()));
        for c in &all {
            let g = c.graph();
            assert!(g.is_bicyclic());
            assert!(g.base().unwrap().min_degree().unwrap() >= 2);
            assert_eq!(certificate(g), c.certificate());
        }
    }

    #[test]
    fn embedding_places_base_first() {
        let g = embed(&dumbbell(3, 3, 0), 7).unwrap();
        assert_eq!(g.negative_edge_count(), 6);
        assert!(g.is_negative(0, 1));
        assert!(embed(&dumbbell(3, 3, 0), 4).is_err());
    }
}
