//! Unlabeled rooted trees by level sequences.
//!
//! A rooted tree on `t` nodes is written as the depths of its nodes in
//! preorder, with children visited in non-increasing canonical order. The
//! successor rule below steps through these sequences in decreasing
//! lexicographic order, from the path `0 1 … t−1` down to the star
//! `0 1 1 … 1`, producing each tree exactly once.

/// Parent array of a rooted tree; node 0 is the root and
/// `parent[i] < i` for every other node.
pub type ParentArray = Vec<usize>;

pub fn rooted_trees(t: usize) -> Vec<ParentArray> {
    if t == 0 {
        return Vec::new();
    }
    let mut level: Vec<usize> = (0..t).collect();
    let mut out = vec![parents(&level)];
    loop {
        let Some(p) = level.iter().rposition(|&l| l > 1) else {
            return out;
        };
        let q = level[..p]
            .iter()
            .rposition(|&l| l == level[p] - 1)
            .expect("a node at depth d > 1 has an earlier node at depth d − 1");
        for i in p..t {
            level[i] = level[i - (p - q)];
        }
        out.push(parents(&level));
    }
}

fn parents(level: &[usize]) -> ParentArray {
    let mut last_at = vec![0usize; level.len()];
    let mut parent = vec![0usize; level.len()];
    for (i, &l) in level.iter().enumerate() {
        if l > 0 {
            parent[i] = last_at[l - 1];
        }
        last_at[l] = i;
    }
    parent
}
