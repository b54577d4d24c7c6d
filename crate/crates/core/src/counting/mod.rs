//! Exact k-clique counting, per-vertex counting and listing over an
//! acyclic orientation.
//!
//! The first recursion level runs over all vertices `v` with candidates
//! `N_DG(v)`; each further level adds one candidate and intersects with its
//! out-neighbors, stopping when too few candidates remain to finish a clique.
//! Node parallelism splits the first level across tasks, edge parallelism the
//! first two. Deeper levels are sequential within a task.

mod engine;
mod intersect;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{invalid, Error, Result};
use crate::graph::{DirectedGraph, VertexId};
use crate::par;

use engine::{CountOnly, Levels, MergeEngine};
pub(crate) use engine::{InducedEngine, InducedGraph, Marks, Sink};
pub use intersect::intersect_into;

/// Which recursion levels are split into parallel tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    /// First level only (one task per vertex).
    Node,
    /// First two levels (one task per directed edge).
    Edge,
}

impl Parallelism {
    /// Node parallelism below k = 8, edge parallelism from there on.
    pub fn auto(k: usize) -> Self {
        if k < 8 {
            Parallelism::Node
        } else {
            Parallelism::Edge
        }
    }
}

impl fmt::Display for Parallelism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parallelism::Node => "node",
            Parallelism::Edge => "edge",
        })
    }
}

impl FromStr for Parallelism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "node" => Ok(Parallelism::Node),
            "edge" => Ok(Parallelism::Edge),
            other => Err(invalid(format!("unknown parallelism {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    pub parallelism: Parallelism,
    /// Materialize the subgraph induced on each `N_DG(v)` and intersect with
    /// a level-stamped mark array instead of merging sorted slices.
    pub build_induced: bool,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            parallelism: Parallelism::Node,
            build_induced: true,
        }
    }
}

impl CountConfig {
    /// Default configuration with parallelism picked for `k`.
    pub fn for_k(k: usize) -> Self {
        CountConfig {
            parallelism: Parallelism::auto(k),
            ..Default::default()
        }
    }
}

/// Result of a counting run.
///
/// Counts are unsigned 64-bit and wrap silently past `u64::MAX`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCounts {
    pub k: usize,
    pub total: u64,
    /// `per_vertex[v]` is the number of k-cliques containing `v`.
    pub per_vertex: Option<Vec<u64>>,
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(invalid(format!("clique size must be at least 2, got {k}")))
    } else {
        Ok(())
    }
}

/// Number of k-cliques of the graph behind `dg`.
pub fn count_total(dg: &DirectedGraph, k: usize, cfg: &CountConfig) -> Result<CliqueCounts> {
    check_k(k)?;
    let total = run(dg, k, cfg, &CountOnly);
    Ok(CliqueCounts {
        k,
        total,
        per_vertex: None,
    })
}

struct PerVertex<'a> {
    counts: &'a [AtomicU64],
}

impl Sink for PerVertex<'_> {
    const MEMBERS: bool = true;

    fn complete(&self, prefix: &[VertexId], tail: &[VertexId]) {
        let t = tail.len() as u64;
        if t == 0 {
            return;
        }
        for &p in prefix {
            self.counts[p as usize].fetch_add(t, Ordering::Relaxed);
        }
        for &x in tail {
            self.counts[x as usize].fetch_add(1, Ordering::Relaxed);
        }
    }
}

/// Total count plus the number of k-cliques through every vertex.
pub fn count_per_vertex(dg: &DirectedGraph, k: usize, cfg: &CountConfig) -> Result<CliqueCounts> {
    check_k(k)?;
    let counts: Vec<AtomicU64> = (0..dg.n()).map(|_| AtomicU64::new(0)).collect();
    let total = run(dg, k, cfg, &PerVertex { counts: &counts });
    Ok(CliqueCounts {
        k,
        total,
        per_vertex: Some(counts.into_iter().map(AtomicU64::into_inner).collect()),
    })
}

struct Listing<'a, F> {
    k: usize,
    emit: &'a F,
}

impl<F> Sink for Listing<'_, F>
where
    F: Fn(&[VertexId]) + Sync,
{
    const MEMBERS: bool = true;

    fn complete(&self, prefix: &[VertexId], tail: &[VertexId]) {
        let mut clique = Vec::with_capacity(self.k);
        clique.extend_from_slice(prefix);
        clique.push(0);
        for &x in tail {
            *clique.last_mut().unwrap() = x;
            (self.emit)(&clique);
        }
    }
}

/// Calls `emit` once per k-clique with its vertices in increasing rank.
///
/// `emit` may be invoked concurrently from several tasks and in any order.
pub fn list_cliques<F>(
    dg: &DirectedGraph,
    k: usize,
    cfg: &CountConfig,
    emit: F,
) -> Result<CliqueCounts>
where
    F: Fn(&[VertexId]) + Sync,
{
    check_k(k)?;
    let total = run(dg, k, cfg, &Listing { k, emit: &emit });
    Ok(CliqueCounts {
        k,
        total,
        per_vertex: None,
    })
}

/// Per-task scratch for the induced-subgraph path.
struct Scratch {
    sub: InducedGraph,
    marks: Marks,
}

fn run<S: Sink>(dg: &DirectedGraph, k: usize, cfg: &CountConfig, sink: &S) -> u64 {
    let n = dg.n();
    // members still needed after the first vertex
    let levels = k - 1;
    if levels == 1 {
        return par::sum(0..n, |v| {
            let v = v as VertexId;
            let out = dg.out_neighbors(v);
            if S::MEMBERS {
                sink.complete(&[v], out);
            }
            out.len() as u64
        });
    }
    match (cfg.build_induced, cfg.parallelism) {
        (true, Parallelism::Node) => par::sum_with(
            0..n,
            || Scratch {
                sub: InducedGraph::new(n),
                marks: Marks::default(),
            },
            |s, v| {
                let v = v as VertexId;
                let out = dg.out_neighbors(v);
                if out.len() < levels {
                    return 0;
                }
                s.sub.build(dg, out);
                InducedEngine::count_all(&s.sub, levels, &[v], &mut s.marks, sink)
            },
        ),
        (true, Parallelism::Edge) => par::sum_with(
            0..n,
            || InducedGraph::new(n),
            |sub, v| {
                let v = v as VertexId;
                let out = dg.out_neighbors(v);
                if out.len() < levels {
                    return 0;
                }
                sub.build(dg, out);
                let sub = &*sub;
                par::sum_with(0..sub.len(), Marks::default, |mk, w| {
                    InducedEngine::count_from(sub, w as u32, levels, &[v], mk, sink)
                })
            },
        ),
        (false, Parallelism::Node) => par::sum_with(0..n, Levels::default, |st, v| {
            let v = v as VertexId;
            MergeEngine::count(dg, dg.out_neighbors(v), levels, &[v], st, sink)
        }),
        (false, Parallelism::Edge) => par::sum(0..n, |v| {
            let v = v as VertexId;
            let out = dg.out_neighbors(v);
            if out.len() < levels {
                return 0;
            }
            par::sum_with(
                0..out.len(),
                || (Levels::default(), Vec::new()),
                |(st, cands), i| {
                    let u = out[i];
                    intersect_into(out, dg.out_neighbors(u), cands);
                    MergeEngine::count(dg, cands, levels - 1, &[v, u], st, sink)
                },
            )
        }),
    }
}

/// Counts the `(levels)`-cliques inside an arbitrary candidate set (sorted
/// by id) that extend `prefix`, reporting them to `sink`. Used by peeling.
pub(crate) fn count_in_set<S: Sink>(
    dg: &DirectedGraph,
    cands: &[VertexId],
    levels: usize,
    prefix: &[VertexId],
    sub: &mut InducedGraph,
    marks: &mut Marks,
    sink: &S,
) -> u64 {
    sub.build(dg, cands);
    InducedEngine::count_all(sub, levels, prefix, marks, sink)
}
