//! File formats: the edge-list interchange format, the label sidecar, and
//! the JSON documents emitted by the CLI.
//!
//! Edge-list format: a header line `n e`, then `e` lines `u v` with 0-based
//! whitespace-separated endpoints. Lines starting with `#` and blank lines
//! are ignored. Labels travel in a JSON sidecar `{"labels": ["c", "u1", ...]}`.

use crate::error::{Error, Result};
use crate::forcing::Chronology;
use crate::forts::Fort;
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::solver::SolveReport;
use serde::{Deserialize, Serialize};

/// Parses the edge-list format into `(n, edges)`.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two fields, got {}", fields.len()),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid integer {:?}", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid integer {:?}", fields[1]),
        })?;
        match header {
            None => header = Some((a, b)),
            Some((_, e)) => {
                if edges.len() == e {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("more than the declared {e} edges"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, e) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n e` header line".into(),
    })?;
    if edges.len() != e {
        return Err(Error::Parse {
            line: 0,
            message: format!("declared {e} edges but found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

/// Parses an edge list (plus optional label sidecar JSON) into a graph.
pub fn graph_from_edge_list(
    name: impl Into<String>,
    text: &str,
    labels_json: Option<&str>,
) -> Result<Graph> {
    let (n, edges) = parse_edge_list(text)?;
    match labels_json {
        Some(json) => {
            let labels = parse_labels_sidecar(json, n)?;
            Graph::from_edges_labeled(name, n, &edges, labels)
        }
        None => Graph::from_edges(name, n, &edges),
    }
}

/// Canonical edge-list serialization: name comment, header, then edges as
/// `min max` pairs in ascending order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# {}\n{} {}\n", g.name(), g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct LabelsSidecar {
    labels: Vec<String>,
}

/// The label sidecar for a labeled graph, if it has labels.
pub fn labels_sidecar_json(g: &Graph) -> Option<String> {
    g.labels().map(|ls| {
        let doc = LabelsSidecar {
            labels: ls.iter().map(|l| l.to_string()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("sidecar serializes")
    })
}

pub fn parse_labels_sidecar(json: &str, n: usize) -> Result<Vec<VertexLabel>> {
    let doc: LabelsSidecar = serde_json::from_str(json).map_err(|e| Error::Parse {
        line: 0,
        message: format!("label sidecar: {e}"),
    })?;
    if doc.labels.len() != n {
        return Err(Error::Parse {
            line: 0,
            message: format!("sidecar has {} labels for {} vertices", doc.labels.len(), n),
        });
    }
    doc.labels
        .iter()
        .map(|s| {
            s.parse().map_err(|e| Error::Parse {
                line: 0,
                message: format!("{e}"),
            })
        })
        .collect()
}

/// Whole-graph JSON document: `{"name", "n", "edges", "labels"?}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub name: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            name: g.name().to_string(),
            n: g.n(),
            edges: g.edges(),
            labels: g
                .labels()
                .map(|ls| ls.iter().map(|l| l.to_string()).collect()),
        }
    }
}

impl GraphDoc {
    pub fn into_graph(self) -> Result<Graph> {
        match self.labels {
            Some(ls) => {
                let labels = ls
                    .iter()
                    .map(|s| {
                        s.parse().map_err(|e| Error::Parse {
                            line: 0,
                            message: format!("{e}"),
                        })
                    })
                    .collect::<Result<Vec<VertexLabel>>>()?;
                Graph::from_edges_labeled(self.name, self.n, &self.edges, labels)
            }
            None => Graph::from_edges(self.name, self.n, &self.edges),
        }
    }
}

pub fn graph_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphDoc::from(g)).expect("graph serializes")
}

pub fn graph_from_json(json: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(json).map_err(|e| Error::Parse {
        line: 0,
        message: format!("graph json: {e}"),
    })?;
    doc.into_graph()
}

/// Chronology trace document:
/// `{"initial": [ids], "steps": [[{"from": u, "to": v}, ...], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct TraceDoc {
    pub initial: Vec<usize>,
    pub steps: Vec<Vec<ForceDoc>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ForceDoc {
    pub from: usize,
    pub to: usize,
}

impl From<&Chronology> for TraceDoc {
    fn from(c: &Chronology) -> Self {
        TraceDoc {
            initial: c.initial().to_vec(),
            steps: c
                .steps()
                .iter()
                .map(|step| {
                    step.iter()
                        .map(|f| ForceDoc {
                            from: f.from,
                            to: f.to,
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn trace_json(c: &Chronology) -> String {
    serde_json::to_string_pretty(&TraceDoc::from(c)).expect("trace serializes")
}

/// Solve report document: `{"graph", "z", "witness", "algorithm",
/// "lower_bound_forts", "stats"}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SolveDoc {
    pub graph: String,
    pub z: usize,
    pub witness: Vec<usize>,
    pub algorithm: String,
    pub lower_bound_forts: Vec<Vec<usize>>,
    pub stats: StatsDoc,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StatsDoc {
    pub nodes: u64,
    pub closures: u64,
    pub wall_ms: u64,
}

pub fn solve_doc(graph_name: &str, report: &SolveReport) -> SolveDoc {
    SolveDoc {
        graph: graph_name.to_string(),
        z: report.z,
        witness: report.witness.to_vec(),
        algorithm: report.algorithm.as_str().to_string(),
        lower_bound_forts: report
            .lower_bound_forts
            .iter()
            .map(|f| f.vertices.to_vec())
            .collect(),
        stats: StatsDoc {
            nodes: report.stats.nodes,
            closures: report.stats.closures,
            wall_ms: report.stats.wall_ms,
        },
    }
}

pub fn solve_json(graph_name: &str, report: &SolveReport) -> String {
    serde_json::to_string_pretty(&solve_doc(graph_name, report)).expect("report serializes")
}

/// Fort listing document: `{"graph", "minimal_forts", "count"}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct FortsDoc {
    pub graph: String,
    pub minimal_forts: Vec<Vec<usize>>,
    pub count: usize,
}

pub fn forts_json(graph_name: &str, forts: &[Fort]) -> String {
    let doc = FortsDoc {
        graph: graph_name.to_string(),
        minimal_forts: forts.iter().map(|f| f.vertices.to_vec()).collect(),
        count: forts.len(),
    };
    serde_json::to_string_pretty(&doc).expect("forts serialize")
}
