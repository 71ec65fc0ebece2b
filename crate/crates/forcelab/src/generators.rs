//! Parametric constructors for the graph families under study.
//!
//! Vertex orderings are canonical so identical parameters always produce
//! byte-identical edge lists:
//!
//! * peony: `c`, then hubs `u_1..u_m`, then spokes `v_{i,j,k}` in
//!   lexicographic `(i, j, k)` order;
//! * web / cycle-path product: grid vertices `v_{i,j}` in lexicographic
//!   `(i, j)` order, then pendants `p_1..p_m`;
//! * paths and cycles: `v_1..v_n` in order.
//!
//! All wraparound is explicit `mod m` arithmetic on 1-based indices.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::label::VertexLabel;
use crate::set::VertexSet;

/// Parameters of the peony family `Py(m, r, s)`: `m` stations, `r` layers
/// per station, `s` vertices per layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeonyParams {
    pub m: usize,
    pub r: usize,
    pub s: usize,
}

impl PeonyParams {
    /// Validates `m >= 3`, `r >= 2`, `s >= 1`. Smaller values would either
    /// collapse the modular hub arithmetic into multi-edges or remove the
    /// two-distinct-layers structure the family is defined around.
    pub fn new(m: usize, r: usize, s: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidParameter {
                name: "m",
                value: m,
                bound: "m >= 3",
            });
        }
        if r < 2 {
            return Err(Error::InvalidParameter {
                name: "r",
                value: r,
                bound: "r >= 2",
            });
        }
        if s < 1 {
            return Err(Error::InvalidParameter {
                name: "s",
                value: s,
                bound: "s >= 1",
            });
        }
        Ok(PeonyParams { m, r, s })
    }

    /// Total vertex count `1 + m + m*r*s`.
    pub fn vertex_count(&self) -> usize {
        1 + self.m + self.m * self.r * self.s
    }

    /// Id of the center `c`.
    pub fn center(&self) -> Vertex {
        0
    }

    /// Id of hub `u_i`, `1 <= i <= m`.
    pub fn hub(&self, i: usize) -> Vertex {
        assert!((1..=self.m).contains(&i), "hub index {i} out of 1..={}", self.m);
        i
    }

    /// Id of hub `u_i` with wraparound, so `hub_wrapped(0) = u_m` and
    /// `hub_wrapped(m + 1) = u_1`.
    pub fn hub_wrapped(&self, i: usize) -> Vertex {
        self.hub((i + self.m - 1) % self.m + 1)
    }

    /// Id of spoke `v_{i,j,k}`, all indices 1-based.
    pub fn spoke(&self, i: usize, j: usize, k: usize) -> Vertex {
        assert!((1..=self.m).contains(&i), "station index {i} out of 1..={}", self.m);
        assert!((1..=self.r).contains(&j), "layer index {j} out of 1..={}", self.r);
        assert!((1..=self.s).contains(&k), "position index {k} out of 1..={}", self.s);
        1 + self.m + ((i - 1) * self.r + (j - 1)) * self.s + (k - 1)
    }
}

/// Parameters of the web family `Wb(m, r)`: a cycle of length `m` producted
/// with a path of length `r`, plus one pendant per outer vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WebParams {
    pub m: usize,
    pub r: usize,
}

impl WebParams {
    pub fn new(m: usize, r: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidParameter {
                name: "m",
                value: m,
                bound: "m >= 3",
            });
        }
        if r < 1 {
            return Err(Error::InvalidParameter {
                name: "r",
                value: r,
                bound: "r >= 1",
            });
        }
        Ok(WebParams { m, r })
    }

    /// Total vertex count `m*r + m`.
    pub fn vertex_count(&self) -> usize {
        self.m * self.r + self.m
    }

    /// Id of grid vertex `v_{i,j}`, 1-based.
    pub fn grid(&self, i: usize, j: usize) -> Vertex {
        assert!((1..=self.m).contains(&i), "column index {i} out of 1..={}", self.m);
        assert!((1..=self.r).contains(&j), "row index {j} out of 1..={}", self.r);
        (i - 1) * self.r + (j - 1)
    }

    /// Id of pendant `p_i`, 1-based.
    pub fn pendant(&self, i: usize) -> Vertex {
        assert!((1..=self.m).contains(&i), "pendant index {i} out of 1..={}", self.m);
        self.m * self.r + (i - 1)
    }

    /// The grid part `{v_{i,j}}` as a set.
    pub fn grid_set(&self) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), 0..self.m * self.r)
    }

    /// The pendant part `{p_i}` as a set.
    pub fn pendant_set(&self) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), self.m * self.r..self.vertex_count())
    }
}

/// Builds `Py(m, r, s)`: center joined to every hub, and consecutive hubs
/// `u_i`, `u_{i+1}` joined by the `r` internally disjoint layer paths
/// `v_{i,j,1} .. v_{i,j,s}` of station `i` (indices wrap mod `m`).
pub fn make_peony(p: PeonyParams) -> Graph {
    let mut edges = Vec::with_capacity(p.m + p.m * p.r * (p.s + 1));
    for i in 1..=p.m {
        edges.push((p.center(), p.hub(i)));
    }
    for i in 1..=p.m {
        for j in 1..=p.r {
            edges.push((p.hub(i), p.spoke(i, j, 1)));
            edges.push((p.hub_wrapped(i + 1), p.spoke(i, j, p.s)));
            for k in 1..p.s {
                edges.push((p.spoke(i, j, k), p.spoke(i, j, k + 1)));
            }
        }
    }
    let mut labels = Vec::with_capacity(p.vertex_count());
    labels.push(VertexLabel::Center);
    labels.extend((1..=p.m).map(VertexLabel::Hub));
    for i in 1..=p.m {
        for j in 1..=p.r {
            for k in 1..=p.s {
                labels.push(VertexLabel::Spoke(i, j, k));
            }
        }
    }
    Graph::from_edges_labeled(
        format!("Py({},{},{})", p.m, p.r, p.s),
        p.vertex_count(),
        &edges,
        labels,
    )
    .expect("peony construction is internally consistent")
}

/// Builds `Wb(m, r)`: the cycle-path product grid plus one pendant `p_i`
/// attached to each outer vertex `v_{i,1}`.
pub fn make_web(p: WebParams) -> Graph {
    let mut edges = grid_edges(p.m, p.r, |i, j| p.grid(i, j));
    for i in 1..=p.m {
        edges.push((p.pendant(i), p.grid(i, 1)));
    }
    let mut labels = Vec::with_capacity(p.vertex_count());
    for i in 1..=p.m {
        for j in 1..=p.r {
            labels.push(VertexLabel::Grid(i, j));
        }
    }
    labels.extend((1..=p.m).map(VertexLabel::Pendant));
    Graph::from_edges_labeled(
        format!("Wb({},{})", p.m, p.r),
        p.vertex_count(),
        &edges,
        labels,
    )
    .expect("web construction is internally consistent")
}

/// Builds the product of a cycle `C_m` with a path `P_r`: vertex `(i, j)` is
/// adjacent to `(i, j±1)` and to `(i±1 mod m, j)`.
pub fn make_cycle_path_product(m: usize, r: usize) -> Result<Graph> {
    let p = WebParams::new(m, r)?; // same parameter bounds as the web family
    let edges = grid_edges(m, r, |i, j| p.grid(i, j));
    let mut labels = Vec::with_capacity(m * r);
    for i in 1..=m {
        for j in 1..=r {
            labels.push(VertexLabel::Grid(i, j));
        }
    }
    Graph::from_edges_labeled(format!("C{m}xP{r}"), m * r, &edges, labels)
}

fn grid_edges(m: usize, r: usize, id: impl Fn(usize, usize) -> Vertex) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in 1..r {
            edges.push((id(i, j), id(i, j + 1)));
        }
    }
    for j in 1..=r {
        for i in 1..m {
            edges.push((id(i, j), id(i + 1, j)));
        }
        edges.push((id(1, j), id(m, j)));
    }
    edges
}

/// The path graph `P_n`, `n >= 1`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n,
            bound: "n >= 1",
        });
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges_labeled(
        format!("P{n}"),
        n,
        &edges,
        (1..=n).map(VertexLabel::Plain).collect(),
    )
}

/// The cycle graph `C_n`, `n >= 3`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n,
            bound: "n >= 3",
        });
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::from_edges_labeled(
        format!("C{n}"),
        n,
        &edges,
        (1..=n).map(VertexLabel::Plain).collect(),
    )
}

/// Station `S_i = {u_i} ∪ {v_{i,j,k}}` of a peony graph.
pub fn station(p: PeonyParams, i: usize) -> Result<VertexSet> {
    check_index("i", i, p.m)?;
    let mut s = VertexSet::empty(p.vertex_count());
    s.insert(p.hub(i));
    for j in 1..=p.r {
        for k in 1..=p.s {
            s.insert(p.spoke(i, j, k));
        }
    }
    Ok(s)
}

/// Layer `S_{i,j} = {v_{i,j,k}}_{k=1..s}` of a peony graph.
pub fn layer(p: PeonyParams, i: usize, j: usize) -> Result<VertexSet> {
    check_index("i", i, p.m)?;
    check_index("j", j, p.r)?;
    Ok(VertexSet::from_ids(
        p.vertex_count(),
        (1..=p.s).map(|k| p.spoke(i, j, k)),
    ))
}

fn check_index(name: &'static str, value: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { name, value, max })
    }
}
