//! Undirected CSR graphs, vertex rankings and the acyclic orientations they
//! induce.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::par;

/// Dense vertex identifier in `[0, n)`.
pub type VertexId = u32;

/// Undirected simple graph in compressed-sparse-row layout.
///
/// Every adjacency slice is strictly increasing, contains no self loop, and
/// the adjacency relation is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<u64>,
    neighbors: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an arbitrary edge stream.
    ///
    /// Self loops and duplicate edges (in either direction) are dropped and
    /// edges are symmetrized.
    ///
    /// # Panics
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_sorted_adjacency(adj)
    }

    /// Wraps adjacency lists that already satisfy the CSR invariants.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<VertexId>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0u64);
        let total: usize = adj.iter().map(Vec::len).sum();
        let mut neighbors = Vec::with_capacity(total);
        for list in adj {
            neighbors.extend_from_slice(&list);
            offsets.push(neighbors.len() as u64);
        }
        let g = Graph { offsets, neighbors };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Builds a graph directly from CSR arrays, validating every invariant.
    pub fn from_csr(offsets: Vec<u64>, neighbors: Vec<VertexId>) -> Result<Self> {
        let g = Graph { offsets, neighbors };
        g.check_invariants()?;
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn m(&self) -> u64 {
        self.neighbors.len() as u64 / 2
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    pub fn neighbor_array(&self) -> &[VertexId] {
        &self.neighbors
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n() as VertexId)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Iterates each undirected edge once as `(u, v)` with `u < v`, in
    /// lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n() as VertexId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph on the same vertex set keeping the edges accepted by `keep`.
    /// `keep` is evaluated for both orientations of an edge and must be
    /// symmetric.
    pub fn filter_edges<F>(&self, keep: F) -> Graph
    where
        F: Fn(VertexId, VertexId) -> bool + Sync + Send,
    {
        let adj = par::map_collect(0..self.n(), |u| {
            let u = u as VertexId;
            self.neighbors(u)
                .iter()
                .copied()
                .filter(|&v| keep(u, v))
                .collect::<Vec<_>>()
        });
        Graph::from_sorted_adjacency(adj)
    }

    /// Checks the CSR invariants, reporting the first violation.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Contract(msg));
        if self.offsets.is_empty() {
            return bad("empty offset array".into());
        }
        if self.offsets[0] != 0 {
            return bad("offsets[0] != 0".into());
        }
        if *self.offsets.last().unwrap() as usize != self.neighbors.len() {
            return bad("offsets[n] != neighbor count".into());
        }
        if !self.neighbors.len().is_multiple_of(2) {
            return bad("odd adjacency length".into());
        }
        let n = self.n();
        for v in 0..n {
            if self.offsets[v] > self.offsets[v + 1] {
                return bad(format!("offsets decrease at {v}"));
            }
        }
        for v in 0..n as VertexId {
            let list = self.neighbors(v);
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("slice of {v} not strictly increasing"));
            }
            for &u in list {
                if u as usize >= n {
                    return bad(format!("neighbor {u} of {v} out of range"));
                }
                if u == v {
                    return bad(format!("self loop at {v}"));
                }
                if !self.has_edge(u, v) {
                    return bad(format!("edge ({v}, {u}) not symmetric"));
                }
            }
        }
        Ok(())
    }

    /// Writes each edge once as `u v` with `u < v`, sorted lexicographically.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }
}

/// A graph together with the original identifiers of its dense vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `labels[v]` is the id vertex `v` carried in the input.
    pub labels: Vec<u64>,
}

impl LabeledGraph {
    /// Writes the edge list in original ids, each edge once with the smaller
    /// label first, sorted lexicographically.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        let mut edges: Vec<(u64, u64)> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u as usize], self.labels[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        for (a, b) in edges {
            writeln!(out, "{a} {b}")?;
        }
        Ok(())
    }
}

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `#` are comments and blank lines are skipped. Ids are
/// compacted to `[0, n)` in order of first appearance.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<LabeledGraph> {
    let mut ids: HashMap<u64, VertexId> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut intern = |raw: u64, labels: &mut Vec<u64>| -> Result<VertexId, String> {
        if let Some(&id) = ids.get(&raw) {
            return Ok(id);
        }
        let id = VertexId::try_from(labels.len()).map_err(|_| "too many vertices".to_string())?;
        ids.insert(raw, id);
        labels.push(raw);
        Ok(id)
    };

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim_start_matches(|c: char| c.is_ascii_whitespace());
        if trimmed.starts_with('#') || trimmed.is_empty() {
            continue;
        }
        let fail = |message: String| Error::Parse {
            line: lineno,
            message,
        };
        let tokens: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        if tokens.len() != 2 {
            return Err(fail(format!("expected 2 ids, found {}", tokens.len())));
        }
        let mut ends = [0 as VertexId; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            let raw: u64 = tok
                .parse()
                .map_err(|_| fail(format!("invalid vertex id {tok:?}")))?;
            *slot = intern(raw, &mut labels).map_err(fail)?;
        }
        edges.push((ends[0], ends[1]));
    }

    let graph = Graph::from_edges(labels.len(), edges);
    Ok(LabeledGraph { graph, labels })
}

/// Parses an edge list held in memory.
pub fn parse_edge_list_str(text: &str) -> Result<LabeledGraph> {
    parse_edge_list(text.as_bytes())
}

/// A total order on the vertices: `rank[v]` is the position of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ranking {
    rank: Vec<u32>,
}

impl Ranking {
    /// Builds a ranking from positions, checking it is a bijection onto
    /// `[0, n)`.
    pub fn from_ranks(rank: Vec<u32>) -> Result<Self> {
        let n = rank.len();
        let mut seen = vec![false; n];
        for &r in &rank {
            let r = r as usize;
            if r >= n || seen[r] {
                return Err(Error::NotAPermutation(n));
            }
            seen[r] = true;
        }
        Ok(Ranking { rank })
    }

    /// Builds a ranking from vertices listed in rank order.
    pub fn from_order(order: &[VertexId]) -> Result<Self> {
        let n = order.len();
        let mut rank = vec![u32::MAX; n];
        for (pos, &v) in order.iter().enumerate() {
            let v = v as usize;
            if v >= n || rank[v] != u32::MAX {
                return Err(Error::NotAPermutation(n));
            }
            rank[v] = pos as u32;
        }
        Ok(Ranking { rank })
    }

    pub fn identity(n: usize) -> Self {
        Ranking {
            rank: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    #[inline]
    pub fn rank(&self, v: VertexId) -> u32 {
        self.rank[v as usize]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Vertices listed in rank order.
    pub fn order(&self) -> Vec<VertexId> {
        let mut order = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            order[r as usize] = v as VertexId;
        }
        order
    }

    /// One vertex id per line, in rank order.
    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        for v in self.order() {
            writeln!(out, "{v}")?;
        }
        Ok(())
    }

    /// Reads the format produced by [`Ranking::write`].
    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut order = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let tok = line.trim();
            if tok.is_empty() {
                continue;
            }
            let v = tok.parse::<VertexId>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("invalid vertex id {tok:?}"),
            })?;
            order.push(v);
        }
        Ranking::from_order(&order)
    }
}

/// Acyclic orientation of a [`Graph`]: each edge points from the lower to
/// the higher ranked endpoint. Out-slices are sorted by vertex id.
#[derive(Debug, Clone)]
pub struct DirectedGraph {
    out_offsets: Vec<u64>,
    out_neighbors: Vec<VertexId>,
    ranking: Ranking,
}

impl DirectedGraph {
    /// Directs every edge of `g` toward its higher ranked endpoint.
    pub fn from_ranking(g: &Graph, ranking: Ranking) -> Result<Self> {
        if ranking.len() != g.n() {
            return Err(Error::RankingLength {
                expected: g.n(),
                got: ranking.len(),
            });
        }
        let out: Vec<Vec<VertexId>> = par::map_collect(0..g.n(), |v| {
            let v = v as VertexId;
            let rv = ranking.rank(v);
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| ranking.rank(u) > rv)
                .collect()
        });
        let mut out_offsets = Vec::with_capacity(g.n() + 1);
        out_offsets.push(0u64);
        let mut out_neighbors = Vec::with_capacity(g.m() as usize);
        for list in out {
            out_neighbors.extend_from_slice(&list);
            out_offsets.push(out_neighbors.len() as u64);
        }
        Ok(DirectedGraph {
            out_offsets,
            out_neighbors,
            ranking,
        })
    }

    pub fn n(&self) -> usize {
        self.out_offsets.len() - 1
    }

    pub fn m(&self) -> u64 {
        self.out_neighbors.len() as u64
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    /// Out-neighbors of `v`, sorted by id.
    #[inline]
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.out_neighbors[self.out_offsets[v] as usize..self.out_offsets[v + 1] as usize]
    }

    #[inline]
    pub fn out_degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        (self.out_offsets[v + 1] - self.out_offsets[v]) as usize
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n() as VertexId)
            .map(|v| self.out_degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Forgets edge directions.
    pub fn symmetrize(&self) -> Graph {
        let edges = (0..self.n() as VertexId)
            .flat_map(|u| self.out_neighbors(u).iter().map(move |&v| (u, v)));
        Graph::from_edges(self.n(), edges)
    }
}

/// Convenience wrapper over [`DirectedGraph::from_ranking`].
pub fn direct_by_ranking(g: &Graph, ranking: &Ranking) -> Result<DirectedGraph> {
    DirectedGraph::from_ranking(g, ranking.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let lg = parse_edge_list_str("0 1\n1 2\n2 0").unwrap();
        assert_eq!(lg.graph.n(), 3);
        assert_eq!(lg.graph.m(), 3);
    }

    #[test]
    fn duplicates_and_self_loops_dropped() {
        let lg = parse_edge_list_str("0 1\n1 0\n0 0").unwrap();
        assert_eq!(lg.graph.n(), 2);
        assert_eq!(lg.graph.m(), 1);
    }

    #[test]
    fn empty_input() {
        let lg = parse_edge_list_str("").unwrap();
        assert_eq!(lg.graph.n(), 0);
        assert_eq!(lg.graph.m(), 0);
        let lg = parse_edge_list_str("# only a comment\n\n").unwrap();
        assert_eq!(lg.graph.n(), 0);
    }

    #[test]
    fn sparse_ids_remapped_in_first_appearance_order() {
        let lg = parse_edge_list_str("# FromNodeId ToNodeId\n10\t7\n7   3000000000\n").unwrap();
        assert_eq!(lg.labels, vec![10, 7, 3_000_000_000]);
        assert!(lg.graph.has_edge(0, 1));
        assert!(lg.graph.has_edge(1, 2));
        assert!(!lg.graph.has_edge(0, 2));
    }

    #[test]
    fn malformed_lines_report_line_number() {
        match parse_edge_list_str("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list_str("# c\n0 1 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_edge_list_str("5\n").is_err());
        assert!(parse_edge_list_str("-1 2\n").is_err());
    }

    #[test]
    fn edge_list_output_is_sorted() {
        let lg = parse_edge_list_str("2 1\n0 2\n1 0").unwrap();
        let mut buf = Vec::new();
        lg.graph.write_edge_list(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0 1\n0 2\n1 2\n");
    }

    #[test]
    fn direct_triangle_identity() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let dg = DirectedGraph::from_ranking(&g, Ranking::identity(3)).unwrap();
        let degs: Vec<_> = (0..3).map(|v| dg.out_degree(v)).collect();
        assert_eq!(degs, vec![2, 1, 0]);
        assert_eq!(dg.m(), 3);
    }

    #[test]
    fn ranking_length_mismatch() {
        let g = Graph::from_edges(3, [(0, 1)]);
        let err = DirectedGraph::from_ranking(&g, Ranking::identity(2)).unwrap_err();
        assert!(matches!(
            err,
            Error::RankingLength {
                expected: 3,
                got: 2
            }
        ));
    }

    #[test]
    fn ranking_rejects_non_permutations() {
        assert!(Ranking::from_ranks(vec![0, 0]).is_err());
        assert!(Ranking::from_ranks(vec![0, 2]).is_err());
        assert!(Ranking::from_order(&[1, 1]).is_err());
        let r = Ranking::from_order(&[2, 0, 1]).unwrap();
        assert_eq!(r.ranks(), &[1, 2, 0]);
        assert_eq!(r.order(), vec![2, 0, 1]);
    }

    #[test]
    fn ranking_roundtrip() {
        let r = Ranking::from_order(&[3, 1, 0, 2]).unwrap();
        let mut buf = Vec::new();
        r.write(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "3\n1\n0\n2\n");
        assert_eq!(Ranking::read(&buf[..]).unwrap(), r);
    }

    #[test]
    fn csr_validation() {
        assert!(Graph::from_csr(vec![0, 1, 2], vec![1, 0]).is_ok());
        assert!(Graph::from_csr(vec![0, 1, 1], vec![1]).is_err());
        assert!(Graph::from_csr(vec![0, 1], vec![0]).is_err());
    }
}
