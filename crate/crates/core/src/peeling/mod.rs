//! k-clique densest subgraph approximation by vertex peeling.
//!
//! [`peel_exact`] repeatedly removes every vertex of minimum k-clique count
//! and yields k-clique core numbers plus a `1/k`-approximate densest
//! subgraph. [`peel_approx`] removes every vertex whose count is at most
//! `k (1 + eps)` times the current density, finishing in logarithmically
//! many rounds with a `1/(k (1 + eps))` guarantee.
//!
//! Both track the density `remaining cliques / remaining vertices` after
//! every round, starting from the whole graph.

mod bucket;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

pub use bucket::{BucketQueue, DEFAULT_WINDOW};

use crate::counting::{count_in_set, count_per_vertex, CountConfig, InducedGraph, Marks, Sink};
use crate::error::{invalid, Error, Result};
use crate::graph::{DirectedGraph, Graph, VertexId};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexState {
    Alive,
    /// Being removed in the current batch.
    InBatch,
    Peeled,
}

/// Outcome of removing one batch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Removal {
    /// k-cliques destroyed by the batch, each counted once.
    pub removed: u64,
    /// Surviving vertices whose count dropped, sorted by id.
    pub changed: Vec<VertexId>,
}

/// Residual graph state shared by both peelers: per-vertex k-clique counts
/// restricted to the unpeeled vertices.
pub struct Peeler<'a> {
    g: &'a Graph,
    dg: &'a DirectedGraph,
    k: usize,
    counts: Vec<AtomicU64>,
    state: Vec<VertexState>,
    touched: Vec<AtomicBool>,
}

struct Scratch {
    sub: InducedGraph,
    marks: Marks,
    cands: Vec<VertexId>,
}

struct Decrement<'p> {
    counts: &'p [AtomicU64],
    state: &'p [VertexState],
    touched: &'p [AtomicBool],
    changed: &'p Mutex<Vec<VertexId>>,
    underflow: &'p AtomicBool,
}

impl Decrement<'_> {
    fn hit(&self, u: VertexId, by: u64) {
        let ui = u as usize;
        if self.state[ui] != VertexState::Alive {
            return;
        }
        let prev = self.counts[ui].fetch_sub(by, Ordering::Relaxed);
        if prev < by {
            self.underflow.store(true, Ordering::Relaxed);
        }
        if !self.touched[ui].swap(true, Ordering::Relaxed) {
            self.changed.lock().unwrap().push(u);
        }
    }
}

impl Sink for Decrement<'_> {
    const MEMBERS: bool = true;

    fn complete(&self, prefix: &[VertexId], tail: &[VertexId]) {
        if tail.is_empty() {
            return;
        }
        // prefix[0] is the batch vertex doing the counting
        for &p in &prefix[1..] {
            self.hit(p, tail.len() as u64);
        }
        for &t in tail {
            self.hit(t, 1);
        }
    }
}

impl<'a> Peeler<'a> {
    /// Starts from the given per-vertex counts of the full graph.
    pub fn new(g: &'a Graph, dg: &'a DirectedGraph, k: usize, counts: Vec<u64>) -> Result<Self> {
        if k < 2 {
            return Err(invalid(format!("clique size must be at least 2, got {k}")));
        }
        if dg.n() != g.n() || counts.len() != g.n() {
            return Err(invalid("graph, orientation and counts disagree on n"));
        }
        Ok(Peeler {
            g,
            dg,
            k,
            counts: counts.into_iter().map(AtomicU64::new).collect(),
            state: vec![VertexState::Alive; g.n()],
            touched: (0..g.n()).map(|_| AtomicBool::new(false)).collect(),
        })
    }

    pub fn count(&self, v: VertexId) -> u64 {
        self.counts[v as usize].load(Ordering::Relaxed)
    }

    pub fn counts(&self) -> Vec<u64> {
        self.counts
            .iter()
            .map(|c| c.load(Ordering::Relaxed))
            .collect()
    }

    pub fn state(&self, v: VertexId) -> VertexState {
        self.state[v as usize]
    }

    /// Removes `batch` from the residual graph.
    ///
    /// Each destroyed k-clique is charged to exactly one batch member: the
    /// one whose out-neighbors contain all other batch members of the clique,
    /// i.e. its lowest ranked batch member. Every surviving member of a
    /// destroyed clique loses one from its count.
    pub fn remove_batch(&mut self, batch: &[VertexId]) -> Result<Removal> {
        for &v in batch {
            match self.state.get(v as usize) {
                Some(VertexState::Alive) => self.state[v as usize] = VertexState::InBatch,
                _ => {
                    self.rollback(batch);
                    return Err(Error::Contract(format!(
                        "vertex {v} is not an unpeeled vertex (or appears twice in the batch)"
                    )));
                }
            }
        }
        let levels = self.k - 1;
        let n = self.g.n();
        let (g, dg) = (self.g, self.dg);
        let changed = Mutex::new(Vec::new());
        let underflow = AtomicBool::new(false);
        let sink = Decrement {
            counts: &self.counts,
            state: &self.state,
            touched: &self.touched,
            changed: &changed,
            underflow: &underflow,
        };
        let state = &self.state;
        let rank = dg.ranking();
        let removed = par::sum_with(
            0..batch.len(),
            || Scratch {
                sub: InducedGraph::new(n),
                marks: Marks::default(),
                cands: Vec::new(),
            },
            |s, i| {
                let v = batch[i];
                let rv = rank.rank(v);
                s.cands.clear();
                s.cands.extend(g.neighbors(v).iter().copied().filter(|&u| {
                    match state[u as usize] {
                        VertexState::Alive => true,
                        VertexState::InBatch => rank.rank(u) > rv,
                        VertexState::Peeled => false,
                    }
                }));
                if s.cands.len() < levels {
                    return 0;
                }
                count_in_set(dg, &s.cands, levels, &[v], &mut s.sub, &mut s.marks, &sink)
            },
        );
        for &v in batch {
            self.state[v as usize] = VertexState::Peeled;
        }
        let mut changed = changed.into_inner().unwrap();
        changed.sort_unstable();
        for &u in &changed {
            self.touched[u as usize].store(false, Ordering::Relaxed);
        }
        if underflow.load(Ordering::Relaxed) {
            return Err(Error::Contract(
                "k-clique count went negative; counts were inconsistent with the residual graph"
                    .into(),
            ));
        }
        Ok(Removal { removed, changed })
    }

    fn rollback(&mut self, batch: &[VertexId]) {
        for &v in batch {
            if let Some(s) = self.state.get_mut(v as usize) {
                if *s == VertexState::InBatch {
                    *s = VertexState::Alive;
                }
            }
        }
    }
}

/// Result of a peeling run.
#[derive(Debug, Clone, PartialEq)]
pub struct PeelOutcome {
    pub k: usize,
    /// k-clique core numbers; only produced by exact peeling.
    pub core: Option<Vec<u64>>,
    /// Number of peeling rounds.
    pub rho: usize,
    pub total_cliques: u64,
    /// Best `remaining cliques / remaining vertices` over all rounds.
    pub best_density: f64,
    /// Round after which `best_density` was observed (0 = whole graph).
    pub best_round: usize,
    /// Vertices still present after `best_round`, sorted by id.
    pub dense_vertices: Vec<VertexId>,
    /// Cliques destroyed in each round.
    pub removed_per_round: Vec<u64>,
}

/// Tracks the densest residual graph seen so far, comparing exactly.
struct DensityTracker {
    best: (u64, u64),
    best_round: usize,
}

impl DensityTracker {
    fn new(total: u64, n: usize) -> Self {
        DensityTracker {
            best: (total, n.max(1) as u64),
            best_round: 0,
        }
    }

    fn observe(&mut self, round: usize, cliques: u64, vertices: usize) {
        if vertices == 0 {
            return;
        }
        let (bc, bv) = self.best;
        if cliques as u128 * bv as u128 > bc as u128 * vertices as u128 {
            self.best = (cliques, vertices as u64);
            self.best_round = round;
        }
    }

    fn density(&self) -> f64 {
        self.best.0 as f64 / self.best.1 as f64
    }
}

fn initial_counts(dg: &DirectedGraph, k: usize) -> Result<(u64, Vec<u64>)> {
    let c = count_per_vertex(dg, k, &CountConfig::for_k(k))?;
    Ok((c.total, c.per_vertex.expect("per-vertex counts requested")))
}

fn finish(
    k: usize,
    core: Option<Vec<u64>>,
    total: u64,
    tracker: DensityTracker,
    peeled_in: &[usize],
    removed_per_round: Vec<u64>,
) -> PeelOutcome {
    let dense_vertices = (0..peeled_in.len())
        .filter(|&v| peeled_in[v] > tracker.best_round)
        .map(|v| v as VertexId)
        .collect();
    PeelOutcome {
        k,
        core,
        rho: removed_per_round.len(),
        total_cliques: total,
        best_density: tracker.density(),
        best_round: tracker.best_round,
        dense_vertices,
        removed_per_round,
    }
}

/// Peels all minimum-count vertices per round.
pub fn peel_exact(g: &Graph, dg: &DirectedGraph, k: usize) -> Result<PeelOutcome> {
    if k < 2 {
        return Err(invalid(format!("clique size must be at least 2, got {k}")));
    }
    let (total, counts) = initial_counts(dg, k)?;
    peel_exact_from(g, dg, k, total, counts)
}

/// [`peel_exact`] starting from precomputed counts.
pub fn peel_exact_from(
    g: &Graph,
    dg: &DirectedGraph,
    k: usize,
    total: u64,
    counts: Vec<u64>,
) -> Result<PeelOutcome> {
    let n = g.n();
    let mut queue = BucketQueue::new(counts.clone());
    let mut peeler = Peeler::new(g, dg, k, counts)?;
    let mut tracker = DensityTracker::new(total, n);
    let mut core = vec![0u64; n];
    let mut peeled_in = vec![0usize; n];
    let mut removed_per_round = Vec::new();
    let mut running_max = 0u64;
    let mut remaining_cliques = total;
    let mut remaining = n;

    while let Some((value, batch)) = queue.pop_min() {
        running_max = running_max.max(value);
        let round = removed_per_round.len() + 1;
        for &v in &batch {
            core[v as usize] = running_max;
            peeled_in[v as usize] = round;
        }
        let r = peeler.remove_batch(&batch)?;
        for &u in &r.changed {
            queue.update(u, peeler.count(u));
        }
        remaining -= batch.len();
        remaining_cliques = remaining_cliques
            .checked_sub(r.removed)
            .ok_or_else(|| Error::Contract("removed more cliques than exist".into()))?;
        removed_per_round.push(r.removed);
        tracker.observe(round, remaining_cliques, remaining);
    }
    Ok(finish(
        k,
        Some(core),
        total,
        tracker,
        &peeled_in,
        removed_per_round,
    ))
}

/// Threshold peeling: every round removes each vertex whose count is at most
/// `k (1 + eps)` times the current density.
pub fn peel_approx(g: &Graph, dg: &DirectedGraph, k: usize, epsilon: f64) -> Result<PeelOutcome> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(invalid(format!("epsilon must be positive, got {epsilon}")));
    }
    if k < 2 {
        return Err(invalid(format!("clique size must be at least 2, got {k}")));
    }
    let (total, counts) = initial_counts(dg, k)?;
    let n = g.n();
    let mut peeler = Peeler::new(g, dg, k, counts)?;
    let mut tracker = DensityTracker::new(total, n);
    let mut peeled_in = vec![0usize; n];
    let mut removed_per_round = Vec::new();
    let mut remaining_cliques = total;
    let mut alive: Vec<VertexId> = (0..n as VertexId).collect();
    let factor = k as f64 * (1.0 + epsilon);

    while !alive.is_empty() {
        let size = alive.len() as f64;
        // count <= k (1 + eps) R / |S|, cross-multiplied; f64 is exact below 2^53
        let limit = factor * remaining_cliques as f64;
        let p = &peeler;
        let (mut batch, mut rest): (Vec<VertexId>, Vec<VertexId>) = alive
            .iter()
            .partition(|&&v| p.count(v) as f64 * size <= limit);
        if batch.is_empty() {
            // only reachable through rounding on huge counts
            let min = alive.iter().map(|&v| p.count(v)).min().unwrap();
            (batch, rest) = alive.iter().partition(|&&v| p.count(v) == min);
        }
        let round = removed_per_round.len() + 1;
        for &v in &batch {
            peeled_in[v as usize] = round;
        }
        let r = peeler.remove_batch(&batch)?;
        remaining_cliques = remaining_cliques
            .checked_sub(r.removed)
            .ok_or_else(|| Error::Contract("removed more cliques than exist".into()))?;
        removed_per_round.push(r.removed);
        alive = rest;
        tracker.observe(round, remaining_cliques, alive.len());
    }
    Ok(finish(
        k,
        None,
        total,
        tracker,
        &peeled_in,
        removed_per_round,
    ))
}
