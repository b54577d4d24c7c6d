//! Small deterministic graph families for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

pub fn complete(n: usize) -> Graph {
    let n32 = n as VertexId;
    Graph::from_edges(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    let n32 = n as VertexId;
    Graph::from_edges(n, (1..n32).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    let n32 = n as VertexId;
    let closing = (n >= 3).then(|| (n32 - 1, 0));
    Graph::from_edges(n, (1..n32).map(|v| (v - 1, v)).chain(closing))
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as VertexId).map(|v| (0, v)))
}

/// Uniform random recursive tree: vertex `v` attaches to a random earlier
/// vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n as VertexId)
        .map(|v| (rng.random_range(0..v), v))
        .collect();
    Graph::from_edges(n, edges)
}

/// Erdos-Renyi G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Disjoint union; vertices of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n() as VertexId;
    let edges = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edges(a.n() + b.n(), edges.collect::<Vec<_>>())
}

/// Graph with a planted clique on the first `clique` vertices over a G(n, p)
/// background.
pub fn planted_clique(n: usize, p: f64, clique: usize, seed: u64) -> Graph {
    let bg = gnp(n, p, seed);
    let c = clique.min(n) as VertexId;
    let planted = (0..c).flat_map(|u| (u + 1..c).map(move |v| (u, v)));
    Graph::from_edges(n, bg.edges().chain(planted).collect::<Vec<_>>())
}

/// Chung-Lu style graph with a power-law expected degree sequence, a
/// skewed-degree stand-in for social networks in benchmarks.
pub fn power_law(n: usize, avg_degree: f64, exponent: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<f64> = (0..n)
        .map(|i| ((i + 1) as f64).powf(-1.0 / (exponent - 1.0)))
        .collect();
    let total: f64 = weights.iter().sum();
    let cumulative: Vec<f64> = weights
        .iter()
        .scan(0.0, |acc, w| {
            *acc += w / total;
            Some(*acc)
        })
        .collect();
    let m = (n as f64 * avg_degree / 2.0) as usize;
    let pick = |rng: &mut ChaCha8Rng| {
        let x: f64 = rng.random();
        cumulative.partition_point(|&c| c < x).min(n - 1) as VertexId
    };
    let edges: Vec<_> = (0..m).map(|_| (pick(&mut rng), pick(&mut rng))).collect();
    Graph::from_edges(n, edges)
}
