//! Randomized trial drivers shared by the integration and acceptance tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_spectra::graph::{SignedCompleteGraph, SimpleGraph};
use theta_spectra::perturb::{checked_swap, Hypothesis, SwapMove, Verdict};
use theta_spectra::spectra::{adjacency_sym, interlace_check, InterlaceViolation};

pub fn random_signed(rng: &mut impl Rng, n: usize, p: f64) -> SignedCompleteGraph {
    let mut b = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    SignedCompleteGraph::new(n, b).unwrap()
}

fn random_move(g: &SignedCompleteGraph, rng: &mut impl Rng) -> Option<SwapMove> {
    let n = g.order();
    let mut cands = Vec::new();
    for (a, b) in g.negative_edges().edges() {
        for (r, s) in [(a, b), (b, a)] {
            for t in 0..n {
                if t != r && t != s && !g.is_negative(r, t) {
                    cands.push(SwapMove::new(r, s, t));
                }
            }
        }
    }
    cands.choose(rng).copied()
}

#[derive(Debug, Default)]
pub struct PerturbStats {
    pub trials: usize,
    pub violations: usize,
    pub worst_margin: f64,
    pub strict: usize,
    pub strict_increased: usize,
    pub degenerate: usize,
}

impl PerturbStats {
    pub fn strict_rate(&self) -> f64 {
        if self.strict == 0 {
            1.0
        } else {
            self.strict_increased as f64 / self.strict as f64
        }
    }
}

/// Draws random signed `K_n`, `n ∈ [8,16]`, and random sign swaps until
/// `trials` moves satisfy the eigenvector hypothesis.
pub fn perturbation_trials(seed: u64, trials: usize, tol: f64) -> PerturbStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = PerturbStats {
        worst_margin: f64::INFINITY,
        ..Default::default()
    };
    while st.trials < trials {
        let n = rng.gen_range(8..=16);
        let p = rng.gen_range(0.1..0.6);
        let g = random_signed(&mut rng, n, p);
        let Some(m) = random_move(&g, &mut rng) else { continue };
        let c = checked_swap(&g, m, tol).unwrap();
        let margin = match c.verdict {
            Verdict::NotApplicable => continue,
            Verdict::Pass { margin } => margin,
            Verdict::Fail { margin } => {
                st.violations += 1;
                margin
            }
        };
        st.trials += 1;
        st.worst_margin = st.worst_margin.min(margin);
        if c.degenerate {
            st.degenerate += 1;
        } else if c.classification == Hypothesis::Strict {
            st.strict += 1;
            if margin > tol {
                st.strict_increased += 1;
            }
        }
    }
    st
}

/// Random principal submatrices of random signed adjacency matrices.
pub fn interlacing_trials(seed: u64, trials: usize) -> Vec<InterlaceViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..trials {
        let n = rng.gen_range(2..16);
        let p = rng.gen_range(0.0..1.0);
        let g = random_signed(&mut rng, n, p);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(&mut rng);
        idx.truncate(rng.gen_range(1..=n));
        if let Err(v) = interlace_check(&adjacency_sym(&g), &idx, 1e-9).unwrap() {
            bad.push(v);
        }
    }
    bad
}

/// All `v·(v−1)/2` vertex pairs, lexicographic.
pub fn pairs(v: usize) -> Vec<(usize, usize)> {
    (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect()
}

/// Calls `f` on every connected labeled graph with `v` vertices and `m`
/// edges.
pub fn for_each_labeled(v: usize, m: usize, mut f: impl FnMut(SimpleGraph)) {
    let all = pairs(v);
    let mut pick = (0..m).collect::<Vec<_>>();
    loop {
        let g = SimpleGraph::from_edges(v, pick.iter().map(|&i| all[i])).unwrap();
        if g.is_connected() {
            f(g);
        }
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pick[i] < all.len() - m + i {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..m {
            pick[j] = pick[j - 1] + 1;
        }
    }
}
