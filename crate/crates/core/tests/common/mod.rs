#![allow(dead_code)]

use std::path::PathBuf;

use cliquepoly::catalog::{enumerate_nonisomorphic, read_graph6_catalog};
use cliquepoly::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every graph with `1 <= n <= max_n` vertices, up to isomorphism.
pub fn catalog_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_nonisomorphic(n).unwrap().map(|r| r.graph))
        .collect()
}

pub fn catalog8() -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/graphs8.g6");
    let text = std::fs::read_to_string(&path).expect("data/graphs8.g6");
    read_graph6_catalog(&text, "graphs8.g6")
        .unwrap()
        .into_iter()
        .map(|r| r.graph)
        .collect()
}

pub fn catalog_upto8() -> Vec<Graph> {
    let mut all = catalog_upto(7);
    all.extend(catalog8());
    all
}

/// Seeded Erdős–Rényi graphs with `lo..=hi` vertices and random density.
pub fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.1..0.9);
            Graph::random(n, p, &mut rng)
        })
        .collect()
}
