//! The clique recursion.
//!
//! Two interchangeable engines enumerate the `levels`-cliques inside a
//! candidate set of a [`DirectedGraph`]:
//!
//! * [`MergeEngine`] intersects sorted candidate slices with out-neighbor
//!   slices at every level.
//! * [`InducedEngine`] first materializes the subgraph induced on the
//!   candidates, relabeled to `[0, d)`, and then intersects by checking
//!   level stamps in a mark array, so deeper levels never touch the full
//!   graph again.
//!
//! Every clique is found exactly once because the orientation is acyclic:
//! its members are always added in increasing rank.

use crate::graph::{DirectedGraph, VertexId};

use super::intersect::intersect_into;

/// Receives completed cliques. `prefix` holds the members chosen so far (in
/// increasing rank, original ids) and each vertex of `tail` completes one
/// clique with it.
pub(crate) trait Sink: Sync {
    /// When false the engines skip materializing `prefix` and `tail`.
    const MEMBERS: bool;

    fn complete(&self, prefix: &[VertexId], tail: &[VertexId]);
}

/// Discards cliques; used for plain counting.
pub(crate) struct CountOnly;

impl Sink for CountOnly {
    const MEMBERS: bool = false;

    #[inline]
    fn complete(&self, _: &[VertexId], _: &[VertexId]) {}
}

/// Per-level candidate buffers plus the current clique prefix.
#[derive(Debug, Default)]
pub(crate) struct Levels {
    bufs: Vec<Vec<u32>>,
    prefix: Vec<VertexId>,
    tail: Vec<VertexId>,
}

impl Levels {
    fn ensure(&mut self, levels: usize) {
        if self.bufs.len() <= levels {
            self.bufs.resize_with(levels + 1, Vec::new);
        }
    }
}

pub(crate) struct MergeEngine;

impl MergeEngine {
    /// Counts the `levels`-cliques inside `cands` (sorted by id) that extend
    /// `prefix`.
    pub(crate) fn count<S: Sink>(
        dg: &DirectedGraph,
        cands: &[VertexId],
        levels: usize,
        prefix: &[VertexId],
        st: &mut Levels,
        sink: &S,
    ) -> u64 {
        st.ensure(levels);
        st.prefix.clear();
        st.prefix.extend_from_slice(prefix);
        Self::rec(dg, cands, levels, st, sink)
    }

    fn rec<S: Sink>(
        dg: &DirectedGraph,
        cands: &[VertexId],
        level: usize,
        st: &mut Levels,
        sink: &S,
    ) -> u64 {
        if level == 1 {
            if S::MEMBERS {
                sink.complete(&st.prefix, cands);
            }
            return cands.len() as u64;
        }
        if cands.len() < level {
            return 0;
        }
        let mut total = 0;
        let mut next = std::mem::take(&mut st.bufs[level - 1]);
        for &w in cands {
            intersect_into(cands, dg.out_neighbors(w), &mut next);
            if next.len() >= level - 1 {
                st.prefix.push(w);
                total += Self::rec(dg, &next, level - 1, st, sink);
                st.prefix.pop();
            }
        }
        st.bufs[level - 1] = next;
        total
    }
}

const ABSENT: u32 = u32::MAX;

/// Subgraph of a [`DirectedGraph`] induced on a candidate set, with
/// vertices relabeled to `[0, d)` in candidate order.
#[derive(Debug)]
pub(crate) struct InducedGraph {
    // global id -> local id, ABSENT outside the current candidate set
    local_of: Vec<u32>,
    globals: Vec<VertexId>,
    offsets: Vec<u32>,
    adj: Vec<u32>,
}

impl InducedGraph {
    pub(crate) fn new(n: usize) -> Self {
        InducedGraph {
            local_of: vec![ABSENT; n],
            globals: Vec::new(),
            offsets: vec![0],
            adj: Vec::new(),
        }
    }

    /// Rebuilds the structure for `cands`; any previous contents are
    /// discarded.
    pub(crate) fn build(&mut self, dg: &DirectedGraph, cands: &[VertexId]) {
        for &g in &self.globals {
            self.local_of[g as usize] = ABSENT;
        }
        self.globals.clear();
        self.globals.extend_from_slice(cands);
        for (i, &g) in cands.iter().enumerate() {
            self.local_of[g as usize] = i as u32;
        }
        self.offsets.clear();
        self.offsets.push(0);
        self.adj.clear();
        for &g in cands {
            for &x in dg.out_neighbors(g) {
                let l = self.local_of[x as usize];
                if l != ABSENT {
                    self.adj.push(l);
                }
            }
            self.offsets.push(self.adj.len() as u32);
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.globals.len()
    }

    #[inline]
    pub(crate) fn out(&self, local: u32) -> &[u32] {
        let l = local as usize;
        &self.adj[self.offsets[l] as usize..self.offsets[l + 1] as usize]
    }

    #[inline]
    pub(crate) fn global(&self, local: u32) -> VertexId {
        self.globals[local as usize]
    }
}

/// Mark-array recursion over an [`InducedGraph`]. `lab[x] == level` marks
/// `x` as a candidate at that level; 0 means "not a candidate".
#[derive(Debug, Default)]
pub(crate) struct Marks {
    lab: Vec<u32>,
    levels: Levels,
}

pub(crate) struct InducedEngine;

impl InducedEngine {
    /// Counts the `levels`-cliques of the whole induced graph that extend
    /// `prefix`.
    pub(crate) fn count_all<S: Sink>(
        sub: &InducedGraph,
        levels: usize,
        prefix: &[VertexId],
        mk: &mut Marks,
        sink: &S,
    ) -> u64 {
        let d = sub.len();
        if levels == 1 {
            if S::MEMBERS {
                mk.levels.tail.clear();
                mk.levels.tail.extend_from_slice(&sub.globals);
                sink.complete(prefix, &mk.levels.tail);
            }
            return d as u64;
        }
        if d < levels {
            return 0;
        }
        mk.levels.ensure(levels);
        mk.levels.prefix.clear();
        mk.levels.prefix.extend_from_slice(prefix);
        if mk.lab.len() < d {
            mk.lab.resize(d, 0);
        }
        let top = &mut mk.levels.bufs[levels];
        top.clear();
        top.extend(0..d as u32);
        for x in 0..d {
            mk.lab[x] = levels as u32;
        }
        let total = Self::rec(sub, levels, mk, sink);
        mk.lab[..d].fill(0);
        total
    }

    /// Counts the `levels`-cliques that start at local vertex `w` (so `w`'s
    /// out-neighbors are the candidates for the remaining `levels - 1`
    /// members). Used to split one induced graph across tasks.
    pub(crate) fn count_from<S: Sink>(
        sub: &InducedGraph,
        w: u32,
        levels: usize,
        prefix: &[VertexId],
        mk: &mut Marks,
        sink: &S,
    ) -> u64 {
        debug_assert!(levels >= 2);
        let out = sub.out(w);
        mk.levels.ensure(levels);
        mk.levels.prefix.clear();
        mk.levels.prefix.extend_from_slice(prefix);
        mk.levels.prefix.push(sub.global(w));
        let below = levels - 1;
        if below == 1 {
            if S::MEMBERS {
                let tail = &mut mk.levels.tail;
                tail.clear();
                tail.extend(out.iter().map(|&x| sub.global(x)));
                sink.complete(&mk.levels.prefix, tail);
            }
            return out.len() as u64;
        }
        if out.len() < below {
            return 0;
        }
        if mk.lab.len() < sub.len() {
            mk.lab.resize(sub.len(), 0);
        }
        let buf = &mut mk.levels.bufs[below];
        buf.clear();
        buf.extend_from_slice(out);
        for &x in out {
            mk.lab[x as usize] = below as u32;
        }
        let total = Self::rec(sub, below, mk, sink);
        for &x in out {
            mk.lab[x as usize] = 0;
        }
        total
    }

    // candidates for this level are in `mk.levels.bufs[level]`, each
    // stamped with `level`
    fn rec<S: Sink>(sub: &InducedGraph, level: usize, mk: &mut Marks, sink: &S) -> u64 {
        let cands = std::mem::take(&mut mk.levels.bufs[level]);
        let mut total = 0;
        if level == 2 {
            let tail_needed = S::MEMBERS;
            for &w in &cands {
                if tail_needed {
                    let mut tail = std::mem::take(&mut mk.levels.tail);
                    tail.clear();
                    tail.extend(
                        sub.out(w)
                            .iter()
                            .filter(|&&x| mk.lab[x as usize] == 2)
                            .map(|&x| sub.global(x)),
                    );
                    total += tail.len() as u64;
                    if !tail.is_empty() {
                        mk.levels.prefix.push(sub.global(w));
                        sink.complete(&mk.levels.prefix, &tail);
                        mk.levels.prefix.pop();
                    }
                    mk.levels.tail = tail;
                } else {
                    total += sub
                        .out(w)
                        .iter()
                        .filter(|&&x| mk.lab[x as usize] == 2)
                        .count() as u64;
                }
            }
        } else {
            let below = level - 1;
            for &w in &cands {
                let mut next = std::mem::take(&mut mk.levels.bufs[below]);
                next.clear();
                for &x in sub.out(w) {
                    if mk.lab[x as usize] == level as u32 {
                        mk.lab[x as usize] = below as u32;
                        next.push(x);
                    }
                }
                if next.len() >= below {
                    // the callee hands its candidate buffer back unchanged
                    mk.levels.bufs[below] = next;
                    mk.levels.prefix.push(sub.global(w));
                    total += Self::rec(sub, below, mk, sink);
                    mk.levels.prefix.pop();
                    next = std::mem::take(&mut mk.levels.bufs[below]);
                }
                for &x in &next {
                    mk.lab[x as usize] = level as u32;
                }
                mk.levels.bufs[below] = next;
            }
        }
        mk.levels.bufs[level] = cands;
        total
    }
}
