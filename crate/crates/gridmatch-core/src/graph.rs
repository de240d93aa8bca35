//! Labeled undirected graphs: base families, products with a path, and
//! vertex deletion.
//!
//! Vertices carry a `(base_index, layer)` label. A base graph lives entirely
//! in layer 0; `product_with_path` stacks `n` copies of it and joins
//! consecutive copies with "rung" edges, which is the layered-grid structure
//! everything else in this crate counts matchings on.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// A vertex of a (possibly layered) graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    pub base_index: u32,
    pub layer: u32,
}

impl VertexLabel {
    pub fn new(base_index: u32, layer: u32) -> Self {
        VertexLabel { base_index, layer }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base_index, self.layer)
    }
}

/// Shorthand used by tests and the family catalog.
pub fn v(base_index: u32, layer: u32) -> VertexLabel {
    VertexLabel::new(base_index, layer)
}

/// The base graphs the layered families are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    /// Path `P_m` on vertices `0..m`.
    Path(u32),
    /// Cycle `C_m`, `m >= 3`.
    Cycle(u32),
    /// Complete graph `K_m`.
    Complete(u32),
    /// Star `K_{1,leaves}`: center `0`, leaves `1..=leaves`.
    Star(u32),
    /// `K_m` minus the single edge `{0, 1}`.
    CompleteMinusEdge(u32),
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::Path(m) => write!(f, "path({m})"),
            BaseKind::Cycle(m) => write!(f, "cycle({m})"),
            BaseKind::Complete(m) => write!(f, "complete({m})"),
            BaseKind::Star(l) => write!(f, "star({l})"),
            BaseKind::CompleteMinusEdge(m) => write!(f, "complete_minus_edge({m})"),
        }
    }
}

/// Errors from graph construction and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// The base-kind size constraint was violated (e.g. a cycle needs
    /// at least 3 vertices).
    InvalidBaseSize(BaseKind),
    DuplicateVertex(VertexLabel),
    SelfLoop(VertexLabel),
    UnknownEndpoint(VertexLabel),
    /// `remove_vertices` was asked to delete a vertex that is not present.
    UnknownVertex(VertexLabel),
    /// `product_with_path` requires every base vertex to sit in layer 0.
    NotABaseVertex(VertexLabel),
    /// Products need at least one layer.
    NoLayers,
    /// Malformed serialized graph text; carries the offending line.
    Parse(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidBaseSize(kind) => write!(f, "invalid size for base graph {kind}"),
            GraphError::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            GraphError::SelfLoop(v) => write!(f, "self loop at {v}"),
            GraphError::UnknownEndpoint(v) => write!(f, "edge endpoint {v} is not a vertex"),
            GraphError::UnknownVertex(v) => write!(f, "vertex {v} is not in the graph"),
            GraphError::NotABaseVertex(v) => {
                write!(f, "vertex {v} is not in layer 0, so this is not a base graph")
            }
            GraphError::NoLayers => write!(f, "a product needs at least one layer"),
            GraphError::Parse(line) => write!(f, "unparseable graph line: {line:?}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An undirected graph on labeled vertices. Vertices are kept sorted and
/// edges normalized `(min, max)`, so equal graphs compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexLabel>,
    edges: BTreeSet<(VertexLabel, VertexLabel)>,
}

impl Graph {
    /// Builds a graph, validating that vertices are unique and that edges
    /// join distinct existing vertices.
    pub fn new(
        mut vertices: Vec<VertexLabel>,
        edges: impl IntoIterator<Item = (VertexLabel, VertexLabel)>,
    ) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        for pair in vertices.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateVertex(pair[0]));
            }
        }
        let vertex_set: BTreeSet<_> = vertices.iter().copied().collect();
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for endpoint in [a, b] {
                if !vertex_set.contains(&endpoint) {
                    return Err(GraphError::UnknownEndpoint(endpoint));
                }
            }
            normalized.insert(if a < b { (a, b) } else { (b, a) });
        }
        Ok(Graph {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in sorted order.
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexLabel, VertexLabel)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_vertex(&self, v: VertexLabel) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: VertexLabel, b: VertexLabel) -> bool {
        self.edges.contains(&if a < b { (a, b) } else { (b, a) })
    }

    pub fn neighbors(&self, v: VertexLabel) -> Vec<VertexLabel> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn degree(&self, v: VertexLabel) -> usize {
        self.neighbors(v).len()
    }

    /// Serializes to the line format `v <base> <layer>` / `e <b1> <l1> <b2> <l2>`,
    /// vertices first, everything sorted, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "v {} {}", v.base_index, v.layer);
        }
        for (a, b) in &self.edges {
            let _ = writeln!(
                out,
                "e {} {} {} {}",
                a.base_index, a.layer, b.base_index, b.layer
            );
        }
        out
    }

    /// Parses the `to_text` line format. Line order does not matter;
    /// the result is canonical, so `parse(render(g)) == g`.
    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums = |want: usize| -> Result<Vec<u32>, GraphError> {
                if fields.len() != want + 1 {
                    return Err(GraphError::Parse(String::from(line)));
                }
                fields[1..]
                    .iter()
                    .map(|s| s.parse::<u32>().map_err(|_| GraphError::Parse(String::from(line))))
                    .collect()
            };
            match fields[0] {
                "v" => {
                    let ns = nums(2)?;
                    vertices.push(v(ns[0], ns[1]));
                }
                "e" => {
                    let ns = nums(4)?;
                    edges.push((v(ns[0], ns[1]), v(ns[2], ns[3])));
                }
                _ => return Err(GraphError::Parse(String::from(line))),
            }
        }
        Graph::new(vertices, edges)
    }
}

/// Builds one of the base graphs (all vertices in layer 0).
pub fn make_base(kind: BaseKind) -> Result<Graph, GraphError> {
    let vertices_0 = |m: u32| (0..m).map(|i| v(i, 0)).collect::<Vec<_>>();
    match kind {
        BaseKind::Path(m) => {
            if m < 1 {
                return Err(GraphError::InvalidBaseSize(kind));
            }
            let edges = (1..m).map(|i| (v(i - 1, 0), v(i, 0)));
            Graph::new(vertices_0(m), edges)
        }
        BaseKind::Cycle(m) => {
            if m < 3 {
                return Err(GraphError::InvalidBaseSize(kind));
            }
            let edges = (0..m).map(|i| (v(i, 0), v((i + 1) % m, 0)));
            Graph::new(vertices_0(m), edges)
        }
        BaseKind::Complete(m) => {
            if m < 1 {
                return Err(GraphError::InvalidBaseSize(kind));
            }
            let mut edges = Vec::new();
            for i in 0..m {
                for j in (i + 1)..m {
                    edges.push((v(i, 0), v(j, 0)));
                }
            }
            Graph::new(vertices_0(m), edges)
        }
        BaseKind::Star(leaves) => {
            if leaves < 1 {
                return Err(GraphError::InvalidBaseSize(kind));
            }
            let edges = (1..=leaves).map(|i| (v(0, 0), v(i, 0)));
            Graph::new(vertices_0(leaves + 1), edges)
        }
        BaseKind::CompleteMinusEdge(m) => {
            if m < 2 {
                return Err(GraphError::InvalidBaseSize(kind));
            }
            let complete = make_base(BaseKind::Complete(m))?;
            let edges = complete.edges().filter(|&e| e != (v(0, 0), v(1, 0)));
            Graph::new(complete.vertices().to_vec(), edges)
        }
    }
}

/// Cartesian product of a base graph with the path `P_n`: `n` layered copies
/// of the base plus rung edges between same-base vertices of consecutive
/// layers. `|V| = n * |V(base)|`, `|E| = n * |E(base)| + (n-1) * |V(base)|`.
pub fn product_with_path(base: &Graph, n: u32) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::NoLayers);
    }
    for &w in base.vertices() {
        if w.layer != 0 {
            return Err(GraphError::NotABaseVertex(w));
        }
    }
    let mut vertices = Vec::with_capacity(base.vertex_count() * n as usize);
    let mut edges = Vec::new();
    for layer in 0..n {
        for &w in base.vertices() {
            vertices.push(v(w.base_index, layer));
        }
        for (a, b) in base.edges() {
            edges.push((v(a.base_index, layer), v(b.base_index, layer)));
        }
        if layer + 1 < n {
            for &w in base.vertices() {
                edges.push((v(w.base_index, layer), v(w.base_index, layer + 1)));
            }
        }
    }
    Graph::new(vertices, edges)
}

/// Returns the graph with the listed vertices (and incident edges) removed.
/// The input is untouched; deleting a vertex that is absent is an error.
pub fn remove_vertices(graph: &Graph, defects: &[VertexLabel]) -> Result<Graph, GraphError> {
    let mut gone = BTreeSet::new();
    for &d in defects {
        if !graph.contains_vertex(d) {
            return Err(GraphError::UnknownVertex(d));
        }
        gone.insert(d);
    }
    let vertices = graph
        .vertices()
        .iter()
        .copied()
        .filter(|w| !gone.contains(w))
        .collect();
    let edges = graph
        .edges()
        .filter(|(a, b)| !gone.contains(a) && !gone.contains(b));
    Graph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_graph_shapes() {
        let c4 = make_base(BaseKind::Cycle(4)).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));

        let w4 = make_base(BaseKind::CompleteMinusEdge(4)).unwrap();
        assert_eq!((w4.vertex_count(), w4.edge_count()), (4, 5));
        // The removed edge is {0, 1}: those two have degree 2, the others 3.
        assert!(!w4.has_edge(v(0, 0), v(1, 0)));
        assert_eq!(w4.degree(v(0, 0)), 2);
        assert_eq!(w4.degree(v(2, 0)), 3);

        let star = make_base(BaseKind::Star(3)).unwrap();
        assert_eq!((star.vertex_count(), star.edge_count()), (4, 3));
        assert_eq!(star.degree(v(0, 0)), 3);

        let k4 = make_base(BaseKind::Complete(4)).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
    }

    #[test]
    fn base_graph_size_limits() {
        assert!(matches!(
            make_base(BaseKind::Cycle(2)),
            Err(GraphError::InvalidBaseSize(_))
        ));
        assert!(matches!(
            make_base(BaseKind::Path(0)),
            Err(GraphError::InvalidBaseSize(_))
        ));
        assert!(matches!(
            make_base(BaseKind::CompleteMinusEdge(1)),
            Err(GraphError::InvalidBaseSize(_))
        ));
    }

    #[test]
    fn product_counts_and_degenerate_case() {
        let c4 = make_base(BaseKind::Cycle(4)).unwrap();
        assert_eq!(product_with_path(&c4, 1).unwrap(), c4);

        let k4 = make_base(BaseKind::Complete(4)).unwrap();
        let k4p2 = product_with_path(&k4, 2).unwrap();
        assert_eq!((k4p2.vertex_count(), k4p2.edge_count()), (8, 16));

        let p3 = make_base(BaseKind::Path(3)).unwrap();
        let p3p4 = product_with_path(&p3, 4).unwrap();
        assert_eq!((p3p4.vertex_count(), p3p4.edge_count()), (12, 17));

        assert_eq!(product_with_path(&c4, 0), Err(GraphError::NoLayers));
    }

    #[test]
    fn product_edge_count_law() {
        let bases = [
            BaseKind::Path(2),
            BaseKind::Path(3),
            BaseKind::Cycle(3),
            BaseKind::Cycle(4),
            BaseKind::Complete(4),
            BaseKind::CompleteMinusEdge(4),
            BaseKind::Star(3),
        ];
        for kind in bases {
            let base = make_base(kind).unwrap();
            for n in 1..=8u32 {
                let p = product_with_path(&base, n).unwrap();
                assert_eq!(p.vertex_count(), base.vertex_count() * n as usize);
                assert_eq!(
                    p.edge_count(),
                    base.edge_count() * n as usize + base.vertex_count() * (n as usize - 1),
                );
            }
        }
    }

    #[test]
    fn vertex_removal() {
        let c4 = make_base(BaseKind::Cycle(4)).unwrap();
        let trimmed = remove_vertices(&c4, &[v(0, 0), v(1, 0)]).unwrap();
        assert_eq!((trimmed.vertex_count(), trimmed.edge_count()), (2, 1));

        let k4 = make_base(BaseKind::Complete(4)).unwrap();
        let pair = remove_vertices(&k4, &[v(2, 0), v(3, 0)]).unwrap();
        assert_eq!((pair.vertex_count(), pair.edge_count()), (2, 1));

        // In K4 minus the edge {0,1}, deleting the two degree-3 vertices
        // leaves the non-adjacent pair {0,1}.
        let w4 = make_base(BaseKind::CompleteMinusEdge(4)).unwrap();
        let isolated = remove_vertices(&w4, &[v(2, 0), v(3, 0)]).unwrap();
        assert_eq!((isolated.vertex_count(), isolated.edge_count()), (2, 0));

        assert_eq!(remove_vertices(&c4, &[]).unwrap(), c4);
        assert_eq!(
            remove_vertices(&c4, &[v(9, 9)]),
            Err(GraphError::UnknownVertex(v(9, 9)))
        );
    }

    #[test]
    fn text_round_trip() {
        let w4 = make_base(BaseKind::CompleteMinusEdge(4)).unwrap();
        let grid = product_with_path(&w4, 3).unwrap();
        let text = grid.to_text();
        assert_eq!(Graph::from_text(&text).unwrap(), grid);

        // Line order does not matter; rendering canonicalizes.
        let shuffled = "e 0 0 1 0\nv 1 0\nv 0 0\n";
        let parsed = Graph::from_text(shuffled).unwrap();
        assert_eq!(parsed.to_text(), "v 0 0\nv 1 0\ne 0 0 1 0\n");

        assert!(matches!(
            Graph::from_text("x 1 2\n"),
            Err(GraphError::Parse(_))
        ));
        assert!(matches!(
            Graph::from_text("v 0 0\ne 0 0 5 5\n"),
            Err(GraphError::UnknownEndpoint(_))
        ));
    }
}
