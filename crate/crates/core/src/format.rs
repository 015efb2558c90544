//! Graph and coloring serialization.
//!
//! * graph6: the standard one-line ASCII encoding (upper triangle, column by
//!   column, six bits per printable byte offset by 63).
//! * edge list: a header line `n m` followed by one `u v` line per edge in
//!   canonical order.
//! * coloring documents: JSON `{"n": .., "edges": [[u, v, color], ..]}` with an
//!   optional `provenance` object.
//! * cover documents: JSON `{"source_n": .., "target_n": .., "assignment": [..]}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let shifts: &[usize] = if n < 63 {
        &[0]
    } else if n < 258_048 {
        out.push('~');
        &[12, 6, 0]
    } else {
        out.push_str("~~");
        &[30, 24, 18, 12, 6, 0]
    };
    for &shift in shifts {
        out.push((((n >> shift) & 63) as u8 + 63) as char);
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bad = |msg: &str| Error::MalformedGraph6(format!("{msg} in `{text}`"));
    if text.is_empty() {
        return Err(bad("empty string"));
    }
    let mut data = Vec::with_capacity(text.len());
    for b in text.bytes() {
        if !(63..=126).contains(&b) {
            return Err(bad("byte outside 63..=126"));
        }
        data.push(b - 63);
    }
    let (n, body) = if data[0] < 63 {
        (data[0] as usize, &data[1..])
    } else if data.len() >= 2 && data[1] == 63 {
        if data.len() < 8 {
            return Err(bad("truncated size field"));
        }
        let n = data[2..8]
            .iter()
            .fold(0usize, |acc, &x| (acc << 6) | x as usize);
        (n, &data[8..])
    } else {
        if data.len() < 4 {
            return Err(bad("truncated size field"));
        }
        let n = data[1..4]
            .iter()
            .fold(0usize, |acc, &x| (acc << 6) | x as usize);
        (n, &data[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("adjacency length does not match vertex count"));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    Graph::new(n, pairs)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::MalformedEdgeList(msg);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(format!("expected two integers, got `{line}`"))),
        }
    };
    let header = lines
        .next()
        .ok_or_else(|| bad("missing `n m` header".into()))?;
    let (n, m) = pair(header)?;
    let pairs = lines.map(pair).collect::<Result<Vec<_>>>()?;
    if pairs.len() != m {
        return Err(bad(format!(
            "header promises {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::new(n, pairs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            other => Err(Error::BadParameter(format!(
                "unknown graph format `{other}`"
            ))),
        }
    }
}

/// Parses a single graph. For graph6 the first non-empty line is used.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line.trim())
        }
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Parses a file of graph6 strings, one per line; blank lines are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub method: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub palette_size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoringDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex, Color)>,
}

impl ColoringDocument {
    pub fn new(g: &Graph, c: &EdgeColoring) -> Result<ColoringDocument> {
        c.check_total_on(g)?;
        Ok(ColoringDocument {
            provenance: None,
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| (u, v, c.color(e)))
                .collect(),
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> ColoringDocument {
        self.provenance = Some(provenance);
        self
    }

    /// Rebuilds the graph and re-indexes the colors by canonical edge id.
    pub fn to_graph_coloring(&self) -> Result<(Graph, EdgeColoring)> {
        let g = Graph::new(self.n, self.edges.iter().map(|&(u, v, _)| (u, v)))?;
        let mut c = EdgeColoring::uncolored(g.m());
        for &(u, v, color) in &self.edges {
            c.set(g.edge_between(u, v).expect("edge was just inserted"), color);
        }
        Ok((g, c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<ColoringDocument> {
        serde_json::from_str(text)
            .map_err(|e| Error::BadParameter(format!("coloring document: {e}")))
    }
}

/// Serialized form of a vertex map between two graphs.
///
/// `source_edges` is optional so documents can be written without repeating
/// the source graph; it is needed to lift a coloring from the file alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverDocument {
    pub source_n: usize,
    pub target_n: usize,
    pub assignment: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_edges: Option<Vec<(Vertex, Vertex)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_edges: Option<Vec<(Vertex, Vertex)>>,
}

impl CoverDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<CoverDocument> {
        serde_json::from_str(text).map_err(|e| Error::BadParameter(format!("cover document: {e}")))
    }
}
