mod common;

use std::collections::HashSet;

use common::{for_each_labeled, pairs};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_spectra::enumerate::{bicyclic_certificates, canonical_form, certificate, enumerate_bicyclic};
use theta_spectra::graph::SimpleGraph;

fn permutations(v: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; v], &mut out);
    out
}

/// Lexicographically least edge bitmask over all relabelings.
fn brute_canon(g: &SimpleGraph, perms: &[Vec<usize>], index: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| g.edges().fold(0u64, |acc, (a, b)| acc | 1 << index[p[a]][p[b]]))
        .min()
        .unwrap()
}

#[test]
fn matches_brute_force_isomorphism_classes() {
    for v in 4..=6 {
        let perms = permutations(v);
        let mut index = vec![vec![0; v]; v];
        for (i, (a, b)) in pairs(v).into_iter().enumerate() {
            index[a][b] = i;
            index[b][a] = i;
        }
        let mut brute = HashSet::new();
        let mut certs = HashSet::new();
        for_each_labeled(v, v + 1, |g| {
            brute.insert(brute_canon(&g, &perms, &index));
            certs.insert(certificate(&g));
        });
        let ours: HashSet<String> = bicyclic_certificates(v).unwrap().into_iter().collect();
        assert_eq!(ours.len(), brute.len(), "v={v}");
        assert_eq!(ours, certs, "v={v}");
    }
}

#[test]
fn labeled_oracle_at_seven_vertices() {
    let mut certs = HashSet::new();
    for_each_labeled(7, 8, |g| {
        certs.insert(certificate(&g));
    });
    let ours: HashSet<String> = bicyclic_certificates(7).unwrap().into_iter().collect();
    assert_eq!(ours, certs);
}

#[test]
fn class_counts() {
    let want = [1, 5, 19, 67, 236, 797, 2678];
    for (v, &w) in (4..).zip(&want) {
        assert_eq!(bicyclic_certificates(v).unwrap().len(), w, "v={v}");
    }
    assert!(bicyclic_certificates(3).is_err());
}

#[test]
fn stream_is_sorted_and_bicyclic() {
    let classes: Vec<_> = enumerate_bicyclic(8).unwrap().collect();
    for w in classes.windows(2) {
        assert!(w[0].certificate() < w[1].certificate());
    }
    for c in &classes {
        assert!(c.graph().is_bicyclic());
        assert_eq!(certificate(c.graph()), c.certificate());
    }
}

#[test]
fn certificate_is_relabeling_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut g = SimpleGraph::empty(10);
    let all = pairs(10);
    for &(a, b) in all.choose_multiple(&mut rng, 18) {
        g.add_edge(a, b).unwrap();
    }
    let want = certificate(&g);
    for _ in 0..1000 {
        let mut p: Vec<usize> = (0..10).collect();
        p.shuffle(&mut rng);
        let h = g.permuted(&p);
        assert_eq!(certificate(&h), want);
        let c = canonical_form(&h);
        assert_eq!(c.graph().edge_count(), 18);
        assert_eq!(c.canonical_graph().to_graph6(), want);
    }
    let mut other = g.clone();
    let (a, b) = loop {
        let e = all[rng.gen_range(0..all.len())];
        if !g.has_edge(e.0, e.1) {
            break e;
        }
    };
    other.add_edge(a, b).unwrap();
    assert_ne!(certificate(&other), want);
}
