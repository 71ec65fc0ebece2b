//! Immutable simple undirected graphs with dense integer vertex ids.

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::set::VertexSet;

pub type Vertex = usize;

/// Default vertex cap for [`is_isomorphic_small`].
pub const DEFAULT_ISO_CUTOFF: usize = 12;

/// A simple undirected graph. Vertices are `0..n`; adjacency lists are kept
/// sorted so neighbor scans are deterministic and set-intersection counting
/// is linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<VertexLabel>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn from_edges(
        name: impl Into<String>,
        n: usize,
        edges: &[(Vertex, Vertex)],
    ) -> Result<Graph> {
        Self::new(name, n, edges, None)
    }

    /// Same as [`Graph::from_edges`] with a per-vertex label array.
    pub fn from_edges_labeled(
        name: impl Into<String>,
        n: usize,
        edges: &[(Vertex, Vertex)],
        labels: Vec<VertexLabel>,
    ) -> Result<Graph> {
        Self::new(name, n, edges, Some(labels))
    }

    fn new(
        name: impl Into<String>,
        n: usize,
        edges: &[(Vertex, Vertex)],
        labels: Option<Vec<VertexLabel>>,
    ) -> Result<Graph> {
        if let Some(ref ls) = labels {
            if ls.len() != n {
                return Err(Error::AmbientMismatch {
                    left: ls.len(),
                    right: n,
                });
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge { u: v, v: w[0] });
            }
        }
        Ok(Graph {
            name: name.into(),
            adjacency,
            labels,
            edge_count: edges.len(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// Edges as sorted `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<VertexLabel> {
        self.labels.as_ref().map(|ls| ls[v])
    }

    /// Id of the vertex carrying `label`, if any.
    pub fn vertex_with_label(&self, label: VertexLabel) -> Option<Vertex> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|&l| l == label))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    /// `|N(v) ∩ s|`.
    pub fn neighbors_in(&self, v: Vertex, s: &VertexSet) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_ambient(s)?;
        Ok(self.adjacency[v].iter().filter(|&&u| s.contains(u)).count())
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub(crate) fn check_ambient(&self, s: &VertexSet) -> Result<()> {
        if s.ambient() == self.n() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: s.ambient(),
                right: self.n(),
            })
        }
    }
}

/// An induced subgraph together with the id maps in both directions.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_sub[old]` is the new id of `old`, when `old` was kept.
    pub to_sub: Vec<Option<Vertex>>,
    /// `to_parent[new]` is the original id of `new`.
    pub to_parent: Vec<Vertex>,
}

/// The subgraph of `g` induced by `s`, with vertices renumbered in ascending
/// original-id order and labels carried over.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Subgraph> {
    g.check_ambient(s)?;
    let to_parent: Vec<Vertex> = s.iter().collect();
    let mut to_sub = vec![None; g.n()];
    for (new, &old) in to_parent.iter().enumerate() {
        to_sub[old] = Some(new);
    }
    let mut edges = Vec::new();
    for (new_u, &old_u) in to_parent.iter().enumerate() {
        for &old_v in g.neighbors(old_u) {
            if old_v > old_u {
                if let Some(new_v) = to_sub[old_v] {
                    edges.push((new_u, new_v));
                }
            }
        }
    }
    let name = format!("{}[{}]", g.name(), to_parent.len());
    let graph = match g.labels() {
        Some(ls) => Graph::from_edges_labeled(
            name,
            to_parent.len(),
            &edges,
            to_parent.iter().map(|&old| ls[old]).collect(),
        )?,
        None => Graph::from_edges(name, to_parent.len(), &edges)?,
    };
    Ok(Subgraph {
        graph,
        to_sub,
        to_parent,
    })
}

/// Whether `seq` visits distinct vertices forming an induced path of `g`:
/// consecutive entries adjacent, non-consecutive entries non-adjacent.
pub fn is_induced_path(g: &Graph, seq: &[Vertex]) -> bool {
    if seq.is_empty() || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for (i, &u) in seq.iter().enumerate() {
        for &v in &seq[i + 1..] {
            if u == v {
                return false;
            }
        }
        for (j, &v) in seq.iter().enumerate() {
            let adjacent = g.neighbors(u).binary_search(&v).is_ok();
            let consecutive = i.abs_diff(j) == 1;
            if adjacent != consecutive && i != j {
                return false;
            }
        }
    }
    true
}

/// Exhaustive isomorphism test for small graphs with degree pruning, at the
/// default cutoff of [`DEFAULT_ISO_CUTOFF`] vertices.
pub fn is_isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool> {
    is_isomorphic_with_cutoff(g1, g2, DEFAULT_ISO_CUTOFF)
}

pub fn is_isomorphic_with_cutoff(g1: &Graph, g2: &Graph, cutoff: usize) -> Result<bool> {
    let n = g1.n().max(g2.n());
    if n > cutoff {
        return Err(Error::CapExceeded {
            operation: "isomorphism search",
            n,
            cap: cutoff,
        });
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut deg1: Vec<usize> = (0..g1.n()).map(|v| g1.neighbors(v).len()).collect();
    let mut deg2: Vec<usize> = (0..g2.n()).map(|v| g2.neighbors(v).len()).collect();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if deg1 != deg2 {
        return Ok(false);
    }
    let mut mapping = vec![usize::MAX; g1.n()];
    let mut used = vec![false; g2.n()];
    Ok(extend_isomorphism(g1, g2, 0, &mut mapping, &mut used))
}

fn extend_isomorphism(
    g1: &Graph,
    g2: &Graph,
    v: Vertex,
    mapping: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
) -> bool {
    if v == g1.n() {
        return true;
    }
    'candidates: for w in 0..g2.n() {
        if used[w] || g1.neighbors(v).len() != g2.neighbors(w).len() {
            continue;
        }
        // Edges between v and already-mapped vertices must map exactly.
        for u in 0..v {
            let adj1 = g1.neighbors(v).binary_search(&u).is_ok();
            let adj2 = g2.neighbors(w).binary_search(&mapping[u]).is_ok();
            if adj1 != adj2 {
                continue 'candidates;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if extend_isomorphism(g1, g2, v + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(format!("P{n}"), n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(format!("C{n}"), n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges("g", 3, &[(0, 0)]).unwrap_err(),
            Error::SelfLoop { u: 0, v: 0 }
        );
        assert!(matches!(
            Graph::from_edges("g", 3, &[(0, 5)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 5, .. }
        ));
        assert!(matches!(
            Graph::from_edges("g", 3, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge { .. }
        ));
    }

    #[test]
    fn degree_on_path() {
        let p3 = path(3);
        assert_eq!(p3.degree(1).unwrap(), 2);
        assert_eq!(p3.degree(0).unwrap(), 1);
        assert!(p3.degree(3).is_err());
    }

    #[test]
    fn neighbors_in_counts() {
        let k3 = cycle(3);
        let s = VertexSet::from_ids(3, [1, 2]);
        assert_eq!(k3.neighbors_in(0, &s).unwrap(), 2);
        let isolated = Graph::from_edges("g", 2, &[]).unwrap();
        assert_eq!(
            isolated
                .neighbors_in(0, &VertexSet::from_ids(2, [1]))
                .unwrap(),
            0
        );
        let full = VertexSet::full(3);
        for v in 0..3 {
            assert_eq!(
                k3.neighbors_in(v, &full).unwrap(),
                k3.degree(v).unwrap(),
                "neighbors_in over V must equal degree"
            );
        }
    }

    #[test]
    fn induced_full_set_is_identity() {
        let c4 = cycle(4);
        let sub = induced_subgraph(&c4, &VertexSet::full(4)).unwrap();
        assert_eq!(sub.to_parent, vec![0, 1, 2, 3]);
        assert_eq!(sub.graph.edges(), c4.edges());
        assert!(is_isomorphic_small(&sub.graph, &c4).unwrap());
    }

    #[test]
    fn induced_cycle_minus_vertex_is_path() {
        let c4 = cycle(4);
        let sub = induced_subgraph(&c4, &VertexSet::from_ids(4, [0, 1, 2])).unwrap();
        assert!(is_isomorphic_small(&sub.graph, &path(3)).unwrap());
    }

    #[test]
    fn induced_ambient_mismatch() {
        let c4 = cycle(4);
        assert!(matches!(
            induced_subgraph(&c4, &VertexSet::empty(5)).unwrap_err(),
            Error::AmbientMismatch { .. }
        ));
    }

    #[test]
    fn isomorphism_basics() {
        // P_3 relabeled: 1-0-2.
        let relabeled = Graph::from_edges("h", 3, &[(1, 0), (0, 2)]).unwrap();
        assert!(is_isomorphic_small(&path(3), &relabeled).unwrap());
        assert!(!is_isomorphic_small(&path(3), &cycle(3)).unwrap());
        assert!(!is_isomorphic_small(&path(4), &path(3)).unwrap());
        // Same degree sequence, different structure: C_6 vs two triangles.
        let two_triangles =
            Graph::from_edges("2K3", 6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert!(!is_isomorphic_small(&cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn isomorphism_cutoff() {
        let big = path(13);
        assert!(matches!(
            is_isomorphic_small(&big, &big).unwrap_err(),
            Error::CapExceeded { .. }
        ));
        assert!(is_isomorphic_with_cutoff(&big, &big, 13).unwrap());
    }

    #[test]
    fn induced_path_predicate() {
        let c5 = cycle(5);
        assert!(is_induced_path(&c5, &[1, 2, 3]));
        assert!(!is_induced_path(&c5, &[0, 1, 2, 3, 4])); // closes a cycle
        assert!(!is_induced_path(&c5, &[0, 2])); // not adjacent
        assert!(is_induced_path(&c5, &[4]));
        assert!(!is_induced_path(&c5, &[]));
    }

    #[test]
    fn handshake_identity() {
        for g in [path(7), cycle(6)] {
            let total: usize = (0..g.n()).map(|v| g.degree(v).unwrap()).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }
}
