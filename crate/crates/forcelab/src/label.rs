//! Semantic vertex labels for the generated graph families.
//!
//! Labels are a parallel annotation, never the storage key: algorithms index
//! vertices by dense 0-based ids, and labels only carry the generator's
//! naming scheme (`c`, `u3`, `v2_1_4`, `p5`, ...). All label indices are
//! 1-based to match that scheme.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// The center vertex `c` of a peony graph.
    Center,
    /// Hub `u_i`.
    Hub(usize),
    /// Spoke `v_{i,j,k}`: station `i`, layer `j`, position `k`.
    Spoke(usize, usize, usize),
    /// Pendant `p_i` of a web graph.
    Pendant(usize),
    /// Grid vertex `v_{i,j}` of a web graph or cycle/path product.
    Grid(usize, usize),
    /// Plain `v_i` for paths, cycles, and unlabeled inputs.
    Plain(usize),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexLabel::Center => write!(f, "c"),
            VertexLabel::Hub(i) => write!(f, "u{i}"),
            VertexLabel::Spoke(i, j, k) => write!(f, "v{i}_{j}_{k}"),
            VertexLabel::Pendant(i) => write!(f, "p{i}"),
            VertexLabel::Grid(i, j) => write!(f, "v{i}_{j}"),
            VertexLabel::Plain(i) => write!(f, "v{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLabelError(pub String);

impl fmt::Display for ParseLabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognized vertex label {:?}", self.0)
    }
}

impl std::error::Error for ParseLabelError {}

impl FromStr for VertexLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseLabelError(s.to_string());
        if s == "c" {
            return Ok(VertexLabel::Center);
        }
        let (head, rest) = s.split_at(s.len().min(1));
        match head {
            "u" => rest.parse().map(VertexLabel::Hub).map_err(|_| bad()),
            "p" => rest.parse().map(VertexLabel::Pendant).map_err(|_| bad()),
            "v" => {
                let parts: Vec<&str> = rest.split('_').collect();
                let nums: Vec<usize> = parts
                    .iter()
                    .map(|p| p.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad())?;
                match nums.as_slice() {
                    [i] => Ok(VertexLabel::Plain(*i)),
                    [i, j] => Ok(VertexLabel::Grid(*i, *j)),
                    [i, j, k] => Ok(VertexLabel::Spoke(*i, *j, *k)),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}
