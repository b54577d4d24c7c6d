//! Brute-force references for tests and debugging.
//!
//! Nothing here uses orientations, the counting engines, or parallelism.
//! Every routine refuses inputs above its size limit.

use crate::counting::CliqueCounts;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexId};

/// Size limits for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Routines enumerating all vertex subsets.
    pub max_n_subsets: usize,
    /// Backtracking clique enumeration.
    pub max_n_enum: usize,
}

pub const LIMITS: OracleLimits = OracleLimits {
    max_n_subsets: 16,
    max_n_enum: 40,
};

fn refuse_above(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::OracleLimit { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n() as VertexId)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

/// All k-cliques as bitmasks over vertex ids, for graphs with at most 64
/// vertices. Cliques are grown in increasing id order.
fn clique_masks(g: &Graph, k: usize) -> Vec<u64> {
    fn grow(adj: &[u64], k: usize, clique: u64, size: usize, cands: u64, out: &mut Vec<u64>) {
        if size == k {
            out.push(clique);
            return;
        }
        if (cands.count_ones() as usize) < k - size {
            return;
        }
        let mut rest = cands;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only later ids, so each clique is produced once
            grow(adj, k, clique | 1 << v, size + 1, rest & adj[v], out);
        }
    }
    let adj = adjacency_masks(g);
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    grow(&adj, k, 0, 0, all, &mut out);
    out
}

/// Exact total and per-vertex k-clique counts by exhaustive enumeration.
pub fn brute_force_count(g: &Graph, k: usize) -> Result<CliqueCounts> {
    refuse_above(g, LIMITS.max_n_enum)?;
    if k < 1 {
        return Err(invalid("clique size must be positive"));
    }
    let cliques = clique_masks(g, k);
    let mut per_vertex = vec![0u64; g.n()];
    for &c in &cliques {
        let mut rest = c;
        while rest != 0 {
            per_vertex[rest.trailing_zeros() as usize] += 1;
            rest &= rest - 1;
        }
    }
    Ok(CliqueCounts {
        k,
        total: cliques.len() as u64,
        per_vertex: Some(per_vertex),
    })
}

/// Every k-clique as a sorted vertex list, in lexicographic order.
pub fn brute_force_list(g: &Graph, k: usize) -> Result<Vec<Vec<VertexId>>> {
    refuse_above(g, LIMITS.max_n_enum)?;
    let mut out: Vec<Vec<VertexId>> = clique_masks(g, k)
        .into_iter()
        .map(|mut c| {
            let mut q = Vec::with_capacity(k);
            while c != 0 {
                q.push(c.trailing_zeros() as VertexId);
                c &= c - 1;
            }
            q
        })
        .collect();
    out.sort();
    Ok(out)
}

fn induced_edges(adj: &[u64], subset: u64) -> u64 {
    let mut rest = subset;
    let mut twice = 0u64;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        twice += (adj[v] & subset).count_ones() as u64;
    }
    twice / 2
}

/// Arboricity via Nash-Williams: the maximum over subsets `U` with
/// `|U| >= 2` of `ceil(|E(U)| / (|U| - 1))`. Zero for edgeless graphs.
pub fn exact_arboricity(g: &Graph) -> Result<u32> {
    refuse_above(g, LIMITS.max_n_subsets)?;
    let adj = adjacency_masks(g);
    let mut best = 0u64;
    for subset in 1u64..(1u64 << g.n()) {
        let size = subset.count_ones() as u64;
        if size < 2 {
            continue;
        }
        let e = induced_edges(&adj, subset);
        best = best.max(e.div_ceil(size - 1));
    }
    Ok(best as u32)
}

/// Maximum edge density `|E(U)| / |U|` over nonempty subsets, as a fraction.
pub fn max_edge_density(g: &Graph) -> Result<(u64, u64)> {
    refuse_above(g, LIMITS.max_n_subsets)?;
    let adj = adjacency_masks(g);
    let mut best = (0u64, 1u64);
    for subset in 1u64..(1u64 << g.n()) {
        let size = subset.count_ones() as u64;
        let e = induced_edges(&adj, subset);
        if e as u128 * best.1 as u128 > best.0 as u128 * size as u128 {
            best = (e, size);
        }
    }
    Ok(best)
}

/// Densest subgraph for k-clique density.
#[derive(Debug, Clone, PartialEq)]
pub struct Densest {
    pub cliques: u64,
    pub subset: Vec<VertexId>,
}

impl Densest {
    pub fn density(&self) -> f64 {
        if self.subset.is_empty() {
            0.0
        } else {
            self.cliques as f64 / self.subset.len() as f64
        }
    }
}

/// Maximizes `(k-cliques inside U) / |U|` over all nonempty `U`. Ties go to
/// the smaller subset, then the lexicographically smaller one.
pub fn exact_densest(g: &Graph, k: usize) -> Result<Densest> {
    refuse_above(g, LIMITS.max_n_subsets)?;
    let cliques = clique_masks(g, k);
    let members = |mask: u64| -> Vec<VertexId> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            out.push(rest.trailing_zeros() as VertexId);
            rest &= rest - 1;
        }
        out
    };
    let mut best: Option<(u64, u64, Vec<VertexId>)> = None;
    for subset in 1u64..(1u64 << g.n()) {
        let size = subset.count_ones() as u64;
        let inside = cliques.iter().filter(|&&c| c & subset == c).count() as u64;
        let better = match &best {
            None => true,
            Some((bc, bs, bset)) => {
                let lhs = inside as u128 * *bs as u128;
                let rhs = *bc as u128 * size as u128;
                lhs > rhs
                    || (lhs == rhs && (size < *bs || (size == *bs && members(subset) < *bset)))
            }
        };
        if better {
            best = Some((inside, size, members(subset)));
        }
    }
    Ok(match best {
        Some((c, _, subset)) => Densest { cliques: c, subset },
        None => Densest {
            cliques: 0,
            subset: Vec::new(),
        },
    })
}

/// `s[z]` is the number of unordered pairs of distinct k-cliques sharing
/// exactly `z` vertices; the returned vector has length `k`, so `z` ranges
/// over `0..k`.
pub fn shared_pairs(g: &Graph, k: usize) -> Result<Vec<u64>> {
    refuse_above(g, LIMITS.max_n_subsets)?;
    let cliques = clique_masks(g, k);
    let mut s = vec![0u64; k.max(1)];
    for (i, &a) in cliques.iter().enumerate() {
        for &b in &cliques[i + 1..] {
            s[(a & b).count_ones() as usize] += 1;
        }
    }
    Ok(s)
}

/// Core numbers from a one-vertex-at-a-time peeler that recounts from
/// scratch: repeatedly removes the smallest-id vertex of minimum k-clique
/// count in the residual graph; a vertex's core number is the running
/// maximum of removal counts.
pub fn sequential_core_numbers(g: &Graph, k: usize) -> Result<Vec<u64>> {
    refuse_above(g, LIMITS.max_n_subsets)?;
    let n = g.n();
    let cliques = clique_masks(g, k);
    let mut alive: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut core = vec![0u64; n];
    let mut running = 0u64;
    while alive != 0 {
        let live: Vec<u64> = cliques
            .iter()
            .copied()
            .filter(|&c| c & alive == c)
            .collect();
        let count = |v: usize| live.iter().filter(|&&c| c >> v & 1 == 1).count() as u64;
        let (v, c) = (0..n)
            .filter(|&v| alive >> v & 1 == 1)
            .map(|v| (v, count(v)))
            .min_by_key(|&(v, c)| (c, v))
            .unwrap();
        running = running.max(c);
        core[v] = running;
        alive &= !(1u64 << v);
    }
    Ok(core)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn counts() {
        assert_eq!(
            brute_force_count(&generate::complete(7), 5).unwrap().total,
            21
        );
        assert_eq!(brute_force_count(&generate::cycle(6), 3).unwrap().total, 0);
        let g = generate::gnp(20, 0.3, 4);
        assert_eq!(brute_force_count(&g, 2).unwrap().total, g.m());
        let c = brute_force_count(&generate::complete(5), 3).unwrap();
        assert_eq!(c.per_vertex.unwrap(), vec![6; 5]);
    }

    #[test]
    fn refuses_large_inputs() {
        let g = generate::path(41);
        assert!(matches!(
            brute_force_count(&g, 3),
            Err(Error::OracleLimit { n: 41, limit: 40 })
        ));
        let g = generate::path(17);
        assert!(exact_arboricity(&g).is_err());
        assert!(exact_densest(&g, 3).is_err());
        assert!(shared_pairs(&g, 3).is_err());
    }

    #[test]
    fn arboricity() {
        assert_eq!(exact_arboricity(&generate::random_tree(12, 3)).unwrap(), 1);
        assert_eq!(exact_arboricity(&generate::complete(5)).unwrap(), 3);
        assert_eq!(exact_arboricity(&generate::cycle(4)).unwrap(), 2);
        assert_eq!(exact_arboricity(&Graph::from_edges(4, [])).unwrap(), 0);
    }

    #[test]
    fn densest() {
        let d = exact_densest(&generate::complete(5), 3).unwrap();
        assert_eq!(d.density(), 2.0);
        assert_eq!(d.subset, vec![0, 1, 2, 3, 4]);

        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        let d = exact_densest(&g, 3).unwrap();
        assert_eq!(d.density(), 1.0);
        assert_eq!(d.subset, vec![0, 1, 2, 3]);

        assert_eq!(
            exact_densest(&generate::cycle(7), 3).unwrap().density(),
            0.0
        );
    }

    #[test]
    fn pairs() {
        let g = generate::disjoint_union(&generate::complete(3), &generate::complete(3));
        assert_eq!(shared_pairs(&g, 3).unwrap()[2], 0);
        assert_eq!(shared_pairs(&generate::complete(4), 3).unwrap()[2], 6);
    }

    #[test]
    fn sequential_cores() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(sequential_core_numbers(&g, 3).unwrap(), vec![3, 3, 3, 3, 0]);
    }
}
