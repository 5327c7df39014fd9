//! Text formats: graph6 (up to 62 vertices), a plain edge list with an
//! `n <count>` header, and an adjacency-list JSON object.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError, Vertex};

/// Largest order expressible with the single-byte graph6 size prefix.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 string")]
    EmptyGraph6,
    #[error("graph6 supports at most {GRAPH6_MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidGraph6Byte(u8),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Graph6Length { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid graph JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(FormatError::TooManyVertices(n));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (&head, body) = bytes.split_first().ok_or(FormatError::EmptyGraph6)?;
    if !(63..=126).contains(&head) {
        return Err(FormatError::InvalidGraph6Byte(head));
    }
    let n = (head - 63) as usize;
    if n > GRAPH6_MAX_VERTICES {
        return Err(FormatError::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Graph6Length { expected, found: body.len() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::InvalidGraph6Byte(byte));
            }
            if ((byte - 63) >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if let Some(&last) = body.last() {
        let used = bits - (expected - 1) * 6;
        if !(63..=126).contains(&last) || (last - 63) & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(FormatError::InvalidGraph6Byte(last));
        }
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses `n <count>` followed by one `u v` pair per line.
///
/// Blank lines and lines starting with `#` are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut count = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| FormatError::EdgeList { line: idx + 1, message: message.into() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (count, fields.as_slice()) {
            (None, ["n", c]) => count = Some(c.parse::<usize>().map_err(|_| err("bad vertex count"))?),
            (None, _) => return Err(err("expected header `n <count>`")),
            (Some(_), [u, v]) => {
                let u = u.parse::<Vertex>().map_err(|_| err("bad vertex"))?;
                let v = v.parse::<Vertex>().map_err(|_| err("bad vertex"))?;
                edges.push((u, v));
            }
            (Some(_), _) => return Err(err("expected `u v`")),
        }
    }
    let n = count.ok_or(FormatError::EdgeList { line: 0, message: "missing header".into() })?;
    Ok(Graph::new(n, &edges)?)
}

/// Adjacency-list view used for JSON emission.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertex_count: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub adjacency: Vec<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self {
            vertex_count: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            adjacency: (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect(),
            graph6: to_graph6(g).ok(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = FormatError;

    fn try_from(j: &GraphJson) -> Result<Self, FormatError> {
        let edges: Vec<_> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::new(j.vertex_count, &edges)?;
        let consistent = j.adjacency.len() == g.vertex_count()
            && j.adjacency.iter().enumerate().all(|(v, list)| {
                let mut sorted = list.clone();
                sorted.sort_unstable();
                sorted.iter().copied().eq(g.neighbors(v))
            });
        if !consistent {
            return Err(FormatError::Json("adjacency disagrees with edge list".into()));
        }
        Ok(g)
    }
}

pub fn to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphJson::from(g)).expect("graph JSON is serializable")
}

pub fn from_json(text: &str) -> Result<Graph, FormatError> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    Graph::try_from(&j)
}
