#![allow(dead_code)]

use kclique::generate;
use kclique::graph::{Graph, VertexId};

/// Seeded G(n, p) family: graph `i` has `n` in `lo..=hi` and `p` cycling
/// through `ps`.
pub fn gnp_family(count: usize, lo: usize, hi: usize, ps: &[f64], seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = lo + (i * 7 + seed as usize) % (hi - lo + 1);
            let p = ps[i % ps.len()];
            generate::gnp(n, p, seed * 1_000_003 + i as u64)
        })
        .collect()
}

/// Degeneracy by the textbook O(n^2) peeler: repeatedly delete a vertex of
/// minimum residual degree and record the largest such minimum.
pub fn reference_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let deg = |v: usize| {
            g.neighbors(v as VertexId)
                .iter()
                .filter(|&&u| alive[u as usize])
                .count()
        };
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| deg(v))
            .unwrap();
        best = best.max(deg(v));
        alive[v] = false;
    }
    best
}

/// Thread counts exercised by determinism checks: 1, 4 and the hardware
/// default.
pub const THREADS: [usize; 3] = [1, 4, 0];
