//! Canonical labeling by individualization and refinement.
//!
//! The search tree individualizes vertices of the first non-singleton cell
//! and refines to an equitable partition; every discrete leaf gives a
//! relabeled adjacency bit string and the largest one is the certificate.
//! Children are pruned by twin transpositions and by automorphisms found from
//! leaves with equal bit strings, both restricted to those fixing the current
//! individualized prefix.

use std::cmp::Ordering;

use crate::graph::{SimpleGraph, Vertex};

/// A graph together with its canonical relabeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGraph {
    graph: SimpleGraph,
    labeling: Vec<Vertex>,
    canonical: SimpleGraph,
    certificate: String,
}

impl CanonicalGraph {
    /// Input graph.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// `labeling[v]` is the canonical position of input vertex `v`.
    pub fn labeling(&self) -> &[Vertex] {
        &self.labeling
    }

    pub fn canonical_graph(&self) -> &SimpleGraph {
        &self.canonical
    }

    /// Sorted edge list under the canonical labeling.
    pub fn canonical_edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.canonical.edges().collect()
    }

    /// graph6 of the canonical graph; equal iff the inputs are isomorphic.
    pub fn certificate(&self) -> &str {
        &self.certificate
    }

    /// Wraps a graph that is already in canonical form, e.g. one decoded
    /// from a certificate.
    pub(crate) fn from_canonical(canonical: SimpleGraph, certificate: String) -> Self {
        CanonicalGraph {
            labeling: (0..canonical.vertex_count()).collect(),
            graph: canonical.clone(),
            canonical,
            certificate,
        }
    }
}

impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.certificate
            .cmp(&other.certificate)
            .then_with(|| self.labeling.cmp(&other.labeling))
            .then_with(|| self.graph.edges().cmp(other.graph.edges()))
    }
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalGraph {
    let labeling = canonical_labeling(g);
    let canonical = g.permuted(&labeling);
    let certificate = canonical.to_graph6();
    CanonicalGraph {
        graph: g.clone(),
        labeling,
        canonical,
        certificate,
    }
}

/// Just the certificate; skips building the relabeled graph twice.
pub fn certificate(g: &SimpleGraph) -> String {
    g.permuted(&canonical_labeling(g)).to_graph6()
}

pub fn canonical_labeling(g: &SimpleGraph) -> Vec<Vertex> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let words = n.div_ceil(64);
    let mut nbr = vec![0u64; n * words];
    for (u, v) in g.edges() {
        nbr[u * words + v / 64] |= 1 << (v % 64);
        nbr[v * words + u / 64] |= 1 << (u % 64);
    }
    let mut search = Search {
        g,
        n,
        words,
        nbr,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    search.refine(&mut cells);
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    search.best.expect("at least one leaf").1
}

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    words: usize,
    nbr: Vec<u64>,
    best: Option<(Vec<u64>, Vec<Vertex>)>,
    autos: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    /// Splits cells by neighbor counts into every cell until equitable.
    /// Sub-cells are ordered by their count vectors, so the result does not
    /// depend on vertex names.
    fn refine(&self, cells: &mut Vec<Vec<Vertex>>) {
        let mut cell_of = vec![0usize; self.n];
        let mut counts = Vec::new();
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let m = cells.len();
            let mut next = Vec::with_capacity(m);
            for c in cells.iter() {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                counts.clear();
                counts.resize(c.len() * m, 0u32);
                for (idx, &v) in c.iter().enumerate() {
                    for &w in self.g.neighbors(v) {
                        counts[idx * m + cell_of[w]] += 1;
                    }
                }
                let mut order: Vec<usize> = (0..c.len()).collect();
                let sig = |i: usize| &counts[i * m..(i + 1) * m];
                order.sort_by(|&a, &b| sig(a).cmp(sig(b)).then(c[a].cmp(&c[b])));
                let mut start = 0;
                for end in 1..=order.len() {
                    if end == order.len() || sig(order[end]) != sig(order[start]) {
                        next.push(order[start..end].iter().map(|&i| c[i]).collect());
                        start = end;
                    }
                }
            }
            if next.len() == cells.len() {
                return;
            }
            *cells = next;
        }
    }

    fn descend(&mut self, cells: Vec<Vec<Vertex>>, prefix: &mut Vec<Vertex>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut explored: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, &cell, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// True if some automorphism fixing `prefix` pointwise maps `v` to an
    /// already explored vertex.
    fn equivalent_to_explored(
        &self,
        v: Vertex,
        explored: &[Vertex],
        cell: &[Vertex],
        prefix: &[Vertex],
    ) -> bool {
        if explored.iter().any(|&u| self.twins(u, v)) {
            return true;
        }
        let mut uf = UnionFind::new(self.n);
        for a in self.cell_twins(cell) {
            uf.union(a.0, a.1);
        }
        for gamma in &self.autos {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for (x, &y) in gamma.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        let root = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == root)
    }

    fn cell_twins(&self, cell: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (i, &a) in cell.iter().enumerate() {
            for &b in &cell[i + 1..] {
                if self.twins(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `N(a) ∖ {b} = N(b) ∖ {a}`: swapping `a` and `b` is an automorphism.
    fn twins(&self, a: Vertex, b: Vertex) -> bool {
        let w = self.words;
        (0..w).all(|i| {
            let mut diff = self.nbr[a * w + i] ^ self.nbr[b * w + i];
            if a / 64 == i {
                diff &= !(1 << (a % 64));
            }
            if b / 64 == i {
                diff &= !(1 << (b % 64));
            }
            diff == 0
        })
    }

    fn leaf(&mut self, cells: &[Vec<Vertex>]) {
        let mut lab = vec![0; self.n];
        for (pos, c) in cells.iter().enumerate() {
            lab[c[0]] = pos;
        }
        let bits = self.bits(&lab);
        match &self.best {
            None => self.best = Some((bits, lab)),
            Some((b, best_lab)) => match bits.cmp(b) {
                Ordering::Greater => self.best = Some((bits, lab)),
                Ordering::Equal => {
                    // γ(v) = best⁻¹(lab(v)) maps this leaf onto the best one
                    let mut inv = vec![0; self.n];
                    for (v, &p) in best_lab.iter().enumerate() {
                        inv[p] = v;
                    }
                    let gamma: Vec<Vertex> = lab.iter().map(|&p| inv[p]).collect();
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(gamma);
                    }
                }
                Ordering::Less => {}
            },
        }
    }

    /// Upper triangle of the relabeled adjacency matrix in graph6 order
    /// (column by column), most significant bit first.
    fn bits(&self, lab: &[Vertex]) -> Vec<u64> {
        let total = self.n * (self.n - 1) / 2;
        let mut out = vec![0u64; total.div_ceil(64).max(1)];
        for (u, v) in self.g.edges() {
            let (i, j) = {
                let (a, b) = (lab[u], lab[v]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            };
            let idx = j * (j - 1) / 2 + i;
            out[idx / 64] |= 1 << (63 - idx % 64);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
