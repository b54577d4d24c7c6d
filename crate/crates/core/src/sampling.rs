//! Approximate k-clique counting by colorful sparsification.
//!
//! Every vertex draws one of `c` colors and only monochromatic edges survive.
//! A k-clique survives with probability `p^(k-1)` where `p = 1/c`, so the
//! clique count of the sparsified graph scaled by `p^-(k-1)` is an unbiased
//! estimate of the true count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::{count_total, CountConfig};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId};
use crate::orientation::{orient, OrientConfig};
use crate::par;

#[derive(Debug, Clone, PartialEq)]
pub struct SampleEstimate {
    pub k: usize,
    pub colors: u32,
    /// k-cliques of the sparsified graph.
    pub sub_count: u64,
    /// `sub_count * colors^(k-1)`.
    pub estimate: f64,
    pub seed: u64,
}

impl SampleEstimate {
    pub fn p(&self) -> f64 {
        1.0 / self.colors as f64
    }
}

/// Color of `v` under `seed`, uniform in `[0, colors)`.
///
/// Depends only on `(seed, v)`, not on evaluation order or thread count.
pub fn vertex_color(seed: u64, v: VertexId, colors: u32) -> u32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(v as u64);
    rng.random_range(0..colors)
}

/// Keeps exactly the edges whose endpoints received the same color.
pub fn colorful_sparsify(g: &Graph, colors: u32, seed: u64) -> Result<Graph> {
    if colors == 0 {
        return Err(invalid("number of colors must be at least 1"));
    }
    if colors == 1 {
        return Ok(g.clone());
    }
    let color: Vec<u32> = par::map_collect(0..g.n(), |v| vertex_color(seed, v as VertexId, colors));
    Ok(g.filter_edges(|u, v| color[u as usize] == color[v as usize]))
}

/// Sparsifies, orients, counts, and rescales.
pub fn approx_count(
    g: &Graph,
    k: usize,
    colors: u32,
    seed: u64,
    orient_cfg: &OrientConfig,
) -> Result<SampleEstimate> {
    if k < 2 {
        return Err(invalid(format!("clique size must be at least 2, got {k}")));
    }
    let sparse = colorful_sparsify(g, colors, seed)?;
    let dg = orient(&sparse, orient_cfg)?;
    let sub_count = count_total(&dg, k, &CountConfig::for_k(k))?.total;
    let scale = (colors as f64).powi(k as i32 - 1);
    Ok(SampleEstimate {
        k,
        colors,
        sub_count,
        estimate: sub_count as f64 * scale,
        seed,
    })
}

/// Variance of the estimator.
///
/// `shared[z]` is the number of unordered pairs of k-cliques sharing exactly
/// `z` vertices, for `z` in `2..k` (entries outside that range are ignored).
/// Pairs sharing at most one vertex are independent. Each unordered pair
/// contributes its covariance twice, once per ordering.
pub fn analytic_variance(x: f64, p: f64, k: usize, shared: &[u64]) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("p must lie in (0, 1], got {p}")));
    }
    if k < 2 {
        return Err(invalid(format!("clique size must be at least 2, got {k}")));
    }
    if x < 0.0 {
        return Err(invalid("clique count must be non-negative"));
    }
    let e = (k - 1) as i32;
    let survive = p.powi(e);
    let both_indep = p.powi(2 * e);
    let mut var = x * (survive - both_indep);
    for z in 2..k {
        let s = shared.get(z).copied().unwrap_or(0) as f64;
        var += 2.0 * s * (p.powi(2 * e - z as i32 + 1) - both_indep);
    }
    Ok(var / both_indep)
}

/// Mean and corrected sample standard deviation of repeated estimates with
/// seeds `seed, seed + 1, ...`.
pub fn approx_count_trials(
    g: &Graph,
    k: usize,
    colors: u32,
    seed: u64,
    trials: usize,
    orient_cfg: &OrientConfig,
) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    let estimates = (0..trials as u64)
        .map(|t| approx_count(g, k, colors, seed.wrapping_add(t), orient_cfg).map(|e| e.estimate))
        .collect::<Result<Vec<_>>>()?;
    Ok(mean_std(&estimates))
}

pub(crate) fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}
