//! Finite simple undirected graphs and the metric primitives built on them.

mod bits;
mod family;
pub mod generators;
mod metric;

pub(crate) use bits::{lex_cmp, mask_to_vec, vec_to_mask, BitGraph};
pub use family::{FamilyComponent, GraphFamily, HostRef, ManifestEntry, SubgraphRef};
pub(crate) use metric::bfs_from;
pub use metric::{
    bfs_distances, components_within, connected_components, cycle_rank, diameter, girth,
    growth_function, is_connected, is_forest, largest_component_within, Girth,
};

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable simple graph on the vertex ids `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted; adjacency lists are
/// sorted ascending.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edges(raw.vertex_count, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            vertex_count: g.n,
            edges: g.edges,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut norm = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::precondition(format!(
                    "edge #{i} ({u}, {v}) has a vertex id outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::precondition(format!(
                    "edge #{i} is a self-loop at {u}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::precondition(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(n, norm))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(
                    line_no,
                    format!("expected two integers, found {:?}", line),
                ));
            }
            let a: usize = fields[0]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("not an integer: {:?}", fields[0])))?;
            let b: usize = fields[1]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("not an integer: {:?}", fields[1])))?;
            let Some((n, _)) = header else {
                header = Some((a, b));
                continue;
            };
            if a >= n || b >= n {
                return Err(Error::parse(
                    line_no,
                    format!("vertex id out of range in edge ({a}, {b}); n = {n}"),
                ));
            }
            if a == b {
                return Err(Error::parse(line_no, format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::parse(line_no, format!("duplicate edge ({a}, {b})")));
            }
            edges.push(e);
        }
        let (n, m) = header.ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
        if edges.len() != m {
            return Err(Error::parse(
                text.lines().count().max(1),
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        edges.sort_unstable();
        Ok(Self::from_sorted_unique(n, edges))
    }

    /// Canonical edge-list text; `Graph::parse` inverts it.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Induced subgraph on `vertices` (any order, duplicates ignored).
    /// Returns the subgraph and the map from its ids to host ids, which is sorted.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
            }
        }
        edges.sort_unstable();
        (Self::from_sorted_unique(map.len(), edges), map)
    }

    /// Disjoint union, relabelling the second graph after the first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_sorted_unique(self.n + other.n, edges)
    }

    pub(crate) fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        match vs.iter().find(|&&v| v >= self.n) {
            Some(v) => Err(Error::precondition(format!(
                "vertex id {v} outside 0..{}",
                self.n
            ))),
            None => Ok(()),
        }
    }
}
