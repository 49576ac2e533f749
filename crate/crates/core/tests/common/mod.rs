#![allow(dead_code)]

use mcg_core::{Graph, VertexId};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Union of `k` random perfect matchings on `n` vertices. Every edge lies in
/// one of them, so the graph is matching covered whenever it is connected.
pub fn union_of_matchings(n: usize, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_order(n);
    let mut p: Vec<u32> = (0..n as u32).collect();
    for _ in 0..k {
        p.shuffle(&mut rng);
        for pair in p.chunks(2) {
            g.add_edge(VertexId(pair[0]), VertexId(pair[1])).unwrap();
        }
    }
    g
}

/// As [`union_of_matchings`], with every matching between `0..n/2` and
/// `n/2..n`.
pub fn bipartite_union(n: usize, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = n / 2;
    let mut g = Graph::with_order(n);
    let mut p: Vec<u32> = (h as u32..n as u32).collect();
    for _ in 0..k {
        p.shuffle(&mut rng);
        for (a, &b) in p.iter().enumerate() {
            g.add_edge(VertexId(a as u32), VertexId(b)).unwrap();
        }
    }
    g
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_order(n);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.random_bool(p) {
                g.add_edge(VertexId(a), VertexId(b)).unwrap();
            }
        }
    }
    g
}

/// Connected unions of 2 to 4 perfect matchings on 4 to 10 vertices.
pub fn mc_graph() -> impl Strategy<Value = Graph> {
    (2usize..=5, 2usize..=4, any::<u64>())
        .prop_map(|(h, k, seed)| union_of_matchings(2 * h, k, seed))
        .prop_filter("connected", Graph::is_connected)
}

pub fn bipartite_mc_graph() -> impl Strategy<Value = Graph> {
    (2usize..=5, 2usize..=4, any::<u64>())
        .prop_map(|(h, k, seed)| bipartite_union(2 * h, k, seed))
        .prop_filter("connected", Graph::is_connected)
}

/// Arbitrary simple graphs on up to 10 vertices.
pub fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, 0.1f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}

/// Relabels `g` by a seeded permutation and shuffles its edge order.
pub fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut pairs: Vec<(u32, u32)> = g
        .index_pairs()
        .into_iter()
        .map(|(a, b)| (perm[a] as u32, perm[b] as u32))
        .collect();
    pairs.shuffle(&mut rng);
    Graph::from_edges(n, &pairs).unwrap()
}
