//! Low out-degree vertex rankings.
//!
//! Two provable strategies (Goodrich-Pszona and Barenboim-Elkin) peel
//! vertices in rounds and rank them by peel round; three heuristic orders
//! (degree, original, k-core) are provided for comparison. Within a round,
//! vertices are ordered by id so every strategy is deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{invalid, Error, Result};
use crate::graph::{DirectedGraph, Graph, Ranking, VertexId};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Degree,
    Original,
    KCore,
    GoodrichPszona,
    BarenboimElkin,
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [
        Strategy::Degree,
        Strategy::Original,
        Strategy::KCore,
        Strategy::GoodrichPszona,
        Strategy::BarenboimElkin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Degree => "degree",
            Strategy::Original => "original",
            Strategy::KCore => "kcore",
            Strategy::GoodrichPszona => "goodrich",
            Strategy::BarenboimElkin => "barenboim",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(Strategy::Degree),
            "original" => Ok(Strategy::Original),
            "kcore" | "k-core" => Ok(Strategy::KCore),
            "goodrich" | "goodrich_pszona" | "goodrich-pszona" => Ok(Strategy::GoodrichPszona),
            "barenboim" | "barenboim_elkin" | "barenboim-elkin" => Ok(Strategy::BarenboimElkin),
            other => Err(invalid(format!("unknown ordering {other:?}"))),
        }
    }
}

/// How to rank vertices before directing the graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientConfig {
    pub strategy: Strategy,
    /// Slack parameter of the two peeling strategies.
    pub epsilon: f64,
    /// Arboricity estimate for Barenboim-Elkin; estimated when absent.
    pub alpha_hat: Option<u32>,
}

impl Default for OrientConfig {
    fn default() -> Self {
        OrientConfig {
            strategy: Strategy::GoodrichPszona,
            epsilon: 1.0,
            alpha_hat: None,
        }
    }
}

impl OrientConfig {
    pub fn new(strategy: Strategy) -> Self {
        OrientConfig {
            strategy,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_epsilon(self.epsilon)?;
        if self.alpha_hat == Some(0) {
            return Err(invalid("alpha_hat must be at least 1"));
        }
        Ok(())
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon.is_finite() && epsilon > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("epsilon must be positive, got {epsilon}")))
    }
}

/// A ranking produced by round-based peeling, with the size of every round.
#[derive(Debug, Clone)]
pub struct PeelOrder {
    pub ranking: Ranking,
    pub batches: Vec<usize>,
}

impl PeelOrder {
    pub fn rounds(&self) -> usize {
        self.batches.len()
    }
}

/// Computes the ranking selected by `cfg`.
pub fn rank(g: &Graph, cfg: &OrientConfig) -> Result<Ranking> {
    cfg.validate()?;
    Ok(match cfg.strategy {
        Strategy::Degree => rank_by_degree(g),
        Strategy::Original => rank_original(g),
        Strategy::KCore => rank_by_kcore(g),
        Strategy::GoodrichPszona => rank_goodrich_pszona(g, cfg.epsilon)?,
        Strategy::BarenboimElkin => {
            let alpha = match cfg.alpha_hat {
                Some(a) => a,
                None => estimate_arboricity(g, cfg.epsilon)?,
            };
            rank_barenboim_elkin(g, cfg.epsilon, alpha)?
        }
    })
}

/// Ranks and directs `g` in one step.
pub fn orient(g: &Graph, cfg: &OrientConfig) -> Result<DirectedGraph> {
    let ranking = rank(g, cfg)?;
    DirectedGraph::from_ranking(g, ranking)
}

pub fn rank_original(g: &Graph) -> Ranking {
    Ranking::identity(g.n())
}

/// Orders vertices by non-decreasing degree, ties by id.
pub fn rank_by_degree(g: &Graph) -> Ranking {
    let mut order: Vec<VertexId> = (0..g.n() as VertexId).collect();
    par::sort_by_key(&mut order, |&v| (g.degree(v), v));
    Ranking::from_order(&order).expect("sorted ids form a permutation")
}

/// Degeneracy order: repeatedly removes a vertex of minimum induced degree,
/// smallest id first.
pub fn rank_by_kcore(g: &Graph) -> Ranking {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n as VertexId).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: BTreeSet<(usize, VertexId)> = (0..n as VertexId)
        .map(|v| (degree[v as usize], v))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some((_, v)) = queue.pop_first() {
        removed[v as usize] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            let ui = u as usize;
            if !removed[ui] {
                queue.remove(&(degree[ui], u));
                degree[ui] -= 1;
                queue.insert((degree[ui], u));
            }
        }
    }
    Ranking::from_order(&order).expect("every vertex removed once")
}

/// Induced degrees of the remaining vertices, updated in parallel as
/// batches are removed.
struct Residual<'g> {
    g: &'g Graph,
    degree: Vec<AtomicU32>,
    // round in which each vertex was removed, `ALIVE` while present
    removed_in: Vec<u32>,
    round: u32,
}

const ALIVE: u32 = u32::MAX;

impl<'g> Residual<'g> {
    fn new(g: &'g Graph) -> Self {
        Residual {
            g,
            degree: (0..g.n() as VertexId)
                .map(|v| AtomicU32::new(g.degree(v) as u32))
                .collect(),
            removed_in: vec![ALIVE; g.n()],
            round: 0,
        }
    }

    fn degree(&self, v: VertexId) -> u32 {
        self.degree[v as usize].load(Ordering::Relaxed)
    }

    /// Removes `batch` and returns how many residual edges disappeared.
    fn remove(&mut self, batch: &[VertexId]) -> u64 {
        let round = self.round;
        self.round += 1;
        for &v in batch {
            self.removed_in[v as usize] = round;
        }
        let (g, degree, removed_in) = (self.g, &self.degree, &self.removed_in);
        par::sum(0..batch.len(), |i| {
            let v = batch[i];
            let mut lost = 0;
            for &u in g.neighbors(v) {
                match removed_in[u as usize] {
                    ALIVE => {
                        degree[u as usize].fetch_sub(1, Ordering::Relaxed);
                        lost += 1;
                    }
                    r if r == round && u > v => lost += 1,
                    _ => {}
                }
            }
            lost
        })
    }
}

pub fn rank_goodrich_pszona(g: &Graph, epsilon: f64) -> Result<Ranking> {
    Ok(goodrich_pszona_order(g, epsilon)?.ranking)
}

/// Goodrich-Pszona peeling: each round removes the
/// `max(1, floor(eps * n' / (2 + eps)))` remaining vertices of lowest induced
/// degree, ties by id.
pub fn goodrich_pszona_order(g: &Graph, epsilon: f64) -> Result<PeelOrder> {
    check_epsilon(epsilon)?;
    let mut residual = Residual::new(g);
    let mut remaining: Vec<VertexId> = (0..g.n() as VertexId).collect();
    let mut order = Vec::with_capacity(g.n());
    let mut batches = Vec::new();
    while !remaining.is_empty() {
        let n_rem = remaining.len();
        let take = ((epsilon * n_rem as f64 / (2.0 + epsilon)).floor() as usize).clamp(1, n_rem);
        let res = &residual;
        par::sort_by_key(&mut remaining, |&v| (res.degree(v), v));
        let rest = remaining.split_off(take);
        let mut batch = std::mem::replace(&mut remaining, rest);
        residual.remove(&batch);
        batches.push(batch.len());
        order.append(&mut batch);
    }
    Ok(PeelOrder {
        ranking: Ranking::from_order(&order)?,
        batches,
    })
}

pub fn rank_barenboim_elkin(g: &Graph, epsilon: f64, alpha_hat: u32) -> Result<Ranking> {
    Ok(barenboim_elkin_order(g, epsilon, alpha_hat)?.ranking)
}

/// Barenboim-Elkin peeling: each round removes every remaining vertex of
/// induced degree below `(2 + eps) * alpha_hat`, in id order. A round that
/// removes nothing doubles the threshold for the rounds after it; it is not
/// recorded as a batch.
pub fn barenboim_elkin_order(g: &Graph, epsilon: f64, alpha_hat: u32) -> Result<PeelOrder> {
    check_epsilon(epsilon)?;
    if alpha_hat == 0 {
        return Err(invalid("alpha_hat must be at least 1"));
    }
    let mut threshold = (2.0 + epsilon) * alpha_hat as f64;
    let mut residual = Residual::new(g);
    let mut remaining: Vec<VertexId> = (0..g.n() as VertexId).collect();
    let mut order = Vec::with_capacity(g.n());
    let mut batches = Vec::new();
    while !remaining.is_empty() {
        let res = &residual;
        let (mut batch, rest): (Vec<VertexId>, Vec<VertexId>) = remaining
            .iter()
            .partition(|&&v| (res.degree(v) as f64) < threshold);
        if batch.is_empty() {
            threshold *= 2.0;
            continue;
        }
        residual.remove(&batch);
        remaining = rest;
        batches.push(batch.len());
        order.append(&mut batch);
    }
    Ok(PeelOrder {
        ranking: Ranking::from_order(&order)?,
        batches,
    })
}

/// Estimates the arboricity by threshold peeling for edge density.
///
/// Each round removes every vertex with induced degree at most
/// `2 (1 + eps)` times the current density `|E'| / |V'|`; the result is the
/// ceiling of the largest density seen, and at least 1.
pub fn estimate_arboricity(g: &Graph, epsilon: f64) -> Result<u32> {
    check_epsilon(epsilon)?;
    let mut residual = Residual::new(g);
    let mut remaining: Vec<VertexId> = (0..g.n() as VertexId).collect();
    let mut edges = g.m();
    // best density as a fraction edges / vertices
    let mut best = (0u64, 1u64);
    while !remaining.is_empty() {
        let verts = remaining.len() as u64;
        if (edges as u128) * (best.1 as u128) > (best.0 as u128) * (verts as u128) {
            best = (edges, verts);
        }
        let limit = 2.0 * (1.0 + epsilon) * edges as f64 / verts as f64;
        let res = &residual;
        let (batch, rest): (Vec<VertexId>, Vec<VertexId>) = remaining
            .iter()
            .partition(|&&v| (res.degree(v) as f64) <= limit);
        // the minimum degree never exceeds twice the density
        debug_assert!(!batch.is_empty());
        edges -= residual.remove(&batch);
        remaining = rest;
    }
    let ceil = best.0.div_ceil(best.1);
    Ok(ceil.max(1) as u32)
}
