//! Two independent perfect-matching counters.
//!
//! `count_exhaustive` is the oracle: a plain branching search that works on
//! any graph and is transparently correct. `count_layered` is the engine: a
//! layer-by-layer transfer count for products `base x P_n` that reaches
//! thousands of layers. The two share no counting logic, so agreement
//! between them is evidence rather than tautology.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{Graph, VertexLabel};

/// One perfect matching, as a sorted list of normalized edges.
pub type Matching = Vec<(VertexLabel, VertexLabel)>;

/// Errors from the layered counter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingError {
    /// The base graph has a vertex outside layer 0.
    InvalidBase(VertexLabel),
    /// The layered counter packs base vertices into a 32-bit mask.
    BaseTooLarge(usize),
    /// A product needs at least one layer.
    NoLayers,
    /// A defect names a layer `>= n` or a base vertex that does not exist.
    DefectOutOfRange(VertexLabel),
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::InvalidBase(v) => {
                write!(f, "base graph has vertex {v} outside layer 0")
            }
            MatchingError::BaseTooLarge(m) => {
                write!(f, "base graph has {m} vertices; the layered counter supports at most 32")
            }
            MatchingError::NoLayers => write!(f, "a layered count needs at least one layer"),
            MatchingError::DefectOutOfRange(v) => {
                write!(f, "defect {v} is outside the layered graph")
            }
        }
    }
}

impl core::error::Error for MatchingError {}

/// Live view of a graph during the branching search: adjacency lists plus an
/// alive mask and incrementally maintained live degrees.
struct Search {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    remaining: usize,
}

impl Search {
    fn new(graph: &Graph) -> Self {
        let n = graph.vertex_count();
        let index: BTreeMap<VertexLabel, usize> = graph
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in graph.edges() {
            let (i, j) = (index[&a], index[&b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let degree = adj.iter().map(Vec::len).collect();
        Search {
            adj,
            alive: vec![true; n],
            degree,
            remaining: n,
        }
    }

    fn kill(&mut self, v: usize) {
        self.alive[v] = false;
        self.remaining -= 1;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            if self.alive[u] {
                self.degree[u] -= 1;
            }
        }
    }

    fn revive(&mut self, v: usize) {
        let mut d = 0;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            if self.alive[u] {
                self.degree[u] += 1;
                d += 1;
            }
        }
        self.degree[v] = d;
        self.alive[v] = true;
        self.remaining += 1;
    }

    /// Number of perfect matchings of the live subgraph. Branches on a live
    /// vertex of minimum degree, so forced (degree-1) choices are taken
    /// without widening the search and dead ends (degree 0) prune at once.
    fn count(&mut self) -> BigInt {
        if self.remaining == 0 {
            return BigInt::one();
        }
        let mut best = usize::MAX;
        let mut best_degree = usize::MAX;
        for v in 0..self.alive.len() {
            if self.alive[v] && self.degree[v] < best_degree {
                best = v;
                best_degree = self.degree[v];
            }
        }
        if best_degree == 0 {
            return BigInt::zero();
        }
        let partners: Vec<usize> = self.adj[best]
            .iter()
            .copied()
            .filter(|&u| self.alive[u])
            .collect();
        let mut total = BigInt::zero();
        for u in partners {
            self.kill(best);
            self.kill(u);
            total += self.count();
            self.revive(u);
            self.revive(best);
        }
        total
    }

    /// Enumerates matchings in lexicographic edge order by always matching
    /// the smallest live vertex next.
    fn collect(
        &mut self,
        labels: &[VertexLabel],
        chosen: &mut Matching,
        out: &mut Vec<Matching>,
        limit: usize,
    ) {
        if out.len() == limit {
            return;
        }
        if self.remaining == 0 {
            out.push(chosen.clone());
            return;
        }
        let Some(v) = (0..self.alive.len()).find(|&v| self.alive[v]) else {
            return;
        };
        let partners: Vec<usize> = self.adj[v]
            .iter()
            .copied()
            .filter(|&u| self.alive[u])
            .collect();
        for u in partners {
            self.kill(v);
            self.kill(u);
            chosen.push((labels[v], labels[u]));
            self.collect(labels, chosen, out, limit);
            chosen.pop();
            self.revive(u);
            self.revive(v);
        }
    }
}

/// Exact number of perfect matchings of an arbitrary graph, by exhaustive
/// branching. The empty graph has one (empty) matching; a graph with an odd
/// number of vertices has none.
pub fn count_exhaustive(graph: &Graph) -> BigInt {
    if graph.vertex_count() == 0 {
        return BigInt::one();
    }
    if graph.vertex_count() % 2 == 1 {
        return BigInt::zero();
    }
    Search::new(graph).count()
}

/// Lists up to `limit` perfect matchings, in lexicographic edge order.
/// Each matching is a sorted list of normalized `(low, high)` edges.
pub fn list_matchings(graph: &Graph, limit: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    if limit == 0 || graph.vertex_count() % 2 == 1 {
        return out;
    }
    if graph.vertex_count() == 0 {
        out.push(Vec::new());
        return out;
    }
    let labels = graph.vertices().to_vec();
    let mut search = Search::new(graph);
    let mut chosen = Vec::new();
    search.collect(&labels, &mut chosen, &mut out, limit);
    out
}

/// Counts matchings of the induced base subgraph `mask`, memoized. The
/// lowest vertex of the mask must be matched to one of its in-mask
/// neighbors; summing over those partners recurses on strictly smaller
/// masks.
fn base_matchings(mask: u32, adj: &[u32], memo: &mut BTreeMap<u32, BigInt>) -> BigInt {
    if mask == 0 {
        return BigInt::one();
    }
    if let Some(known) = memo.get(&mask) {
        return known.clone();
    }
    let i = mask.trailing_zeros();
    let mut total = BigInt::zero();
    let mut partners = adj[i as usize] & mask;
    while partners != 0 {
        let j = partners.trailing_zeros();
        partners &= partners - 1;
        total += base_matchings(mask & !(1 << i) & !(1 << j), adj, memo);
    }
    memo.insert(mask, total.clone());
    total
}

/// Exact number of perfect matchings of `base x P_n` with the `defects`
/// vertices removed.
///
/// The count sweeps the layers once. The state between layer `L` and layer
/// `L+1` is the set of base positions in layer `L+1` already consumed by
/// rung edges from layer `L`; everything a layer leaves unconsumed must be
/// matched inside that layer, which contributes the matching count of the
/// induced base subgraph. Time per layer is bounded by `3^m` big-integer
/// operations for an `m`-vertex base, independent of `n`, so thousands of
/// layers are cheap.
pub fn count_layered(
    base: &Graph,
    n: u32,
    defects: &[VertexLabel],
) -> Result<BigInt, MatchingError> {
    for &w in base.vertices() {
        if w.layer != 0 {
            return Err(MatchingError::InvalidBase(w));
        }
    }
    let m = base.vertex_count();
    if m > 32 {
        return Err(MatchingError::BaseTooLarge(m));
    }
    if n == 0 {
        return Err(MatchingError::NoLayers);
    }

    let position = |label: VertexLabel| base.vertices().binary_search(&label).ok();
    let mut adj = vec![0u32; m];
    for (a, b) in base.edges() {
        let i = position(a).expect("edge endpoint is a base vertex");
        let j = position(b).expect("edge endpoint is a base vertex");
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }

    let mut defect_at: BTreeMap<u32, u32> = BTreeMap::new();
    for &d in defects {
        let in_base = position(VertexLabel::new(d.base_index, 0));
        match in_base {
            Some(i) if d.layer < n => {
                *defect_at.entry(d.layer).or_insert(0) |= 1 << i;
            }
            _ => return Err(MatchingError::DefectOutOfRange(d)),
        }
    }

    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut memo: BTreeMap<u32, BigInt> = BTreeMap::new();
    // Maps "base positions of the current layer consumed from below" to the
    // number of ways of reaching that state.
    let mut states: BTreeMap<u32, BigInt> = BTreeMap::new();
    states.insert(0, BigInt::one());

    for layer in 0..n {
        let present = full & !defect_at.get(&layer).copied().unwrap_or(0);
        let next_present = if layer + 1 < n {
            full & !defect_at.get(&(layer + 1)).copied().unwrap_or(0)
        } else {
            // The last layer has nothing above it, so nothing may be
            // deferred upward.
            0
        };
        let mut next: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (&consumed, ways) in &states {
            let free = present & !consumed;
            let candidates = free & next_present;
            // Every subset of the free positions may be sent upward as rungs,
            // provided the rung partner exists above and the rest of the
            // layer can pair off internally.
            let mut upward = candidates;
            loop {
                let internal = base_matchings(free & !upward, &adj, &mut memo);
                if !internal.is_zero() {
                    let contribution = ways * &internal;
                    *next.entry(upward).or_insert_with(BigInt::zero) += contribution;
                }
                if upward == 0 {
                    break;
                }
                upward = (upward - 1) & candidates;
            }
        }
        states = next;
    }

    Ok(states.remove(&0).unwrap_or_else(BigInt::zero))
}
