#![forbid(unsafe_code)]

//! Zero forcing on simple undirected graphs.
//!
//! A blue vertex with exactly one white neighbor forces it blue; the zero
//! forcing number Z(G) is the smallest initial blue set that colors the
//! whole graph. This crate provides:
//!
//! * the propagation engine: closures, relaxed chronologies, chain sets,
//!   terminus, and restriction to induced subgraphs ([`forcing`]);
//! * forts (sets no outside vertex sees exactly once), fort extraction from
//!   stalled closures, and minimal-fort enumeration ([`forts`]);
//! * two independent exact solvers for Z(G) — lexicographic exhaustion and
//!   a lazy fort-collection branch and bound — plus an exact path cover
//!   number ([`solver`]);
//! * generators for the peony family `Py(m,r,s)`, the web family
//!   `Wb(m,r)`, cycle-path products, paths, and cycles ([`generators`]);
//! * the known closed-form forcing sets of those families, executed and
//!   checked rather than assumed ([`constructions`]);
//! * verification sweeps against the closed forms `Z(Py(m,r,s)) = m(r-1)+3`
//!   and `Z(Wb(m,r)) = max(ceil(m/2), min(m, 2r))` ([`verify`]);
//! * the edge-list and JSON interchange formats ([`io`]).

pub mod constructions;
pub mod error;
pub mod forcing;
pub mod forts;
pub mod generators;
pub mod graph;
pub mod io;
pub mod label;
pub mod set;
pub mod solver;
pub mod verify;

mod combi;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use label::VertexLabel;
pub use set::VertexSet;
