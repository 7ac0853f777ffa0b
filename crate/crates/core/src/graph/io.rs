//! graph6 and plain edge-list formats.
//!
//! graph6 follows McKay's layout: a size prefix followed by the upper
//! triangle of the adjacency matrix in column order, six bits per byte,
//! each byte offset by 63.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge line {line}: `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidGraph6Byte(u8),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Graph6Length { expected: usize, found: usize },
    #[error("input is not valid UTF-8")]
    NotUtf8,
}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Loop(v) => ParseError::Loop(v),
            GraphError::DuplicateEdge(a, b) => ParseError::DuplicateEdge(a, b),
            GraphError::VertexOutOfRange { vertex, n } => {
                ParseError::VertexOutOfRange { vertex, n }
            }
            other => ParseError::MalformedHeader(other.to_string()),
        }
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => from_graph6(bytes),
        Format::EdgeList => {
            let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotUtf8)?;
            from_edgelist(text)
        }
    }
}

/// Guesses the format: edge lists start with a decimal header line.
pub fn sniff_format(bytes: &[u8]) -> Format {
    let first = bytes
        .split(|&b| b == b'\n')
        .map(|l| l.trim_ascii())
        .find(|l| !l.is_empty());
    match first {
        Some(line)
            if line
                .iter()
                .all(|b| b.is_ascii_digit() || b.is_ascii_whitespace()) =>
        {
            Format::EdgeList
        }
        _ => Format::Graph6,
    }
}

const HEADER: &[u8] = b">>graph6<<";

pub fn from_graph6(bytes: &[u8]) -> Result<Graph, ParseError> {
    let mut data = bytes.trim_ascii();
    if let Some(rest) = data.strip_prefix(HEADER) {
        data = rest;
    }
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(ParseError::InvalidGraph6Byte(b));
        }
    }
    let (n, body) = decode_size(data)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::Graph6Length {
            expected,
            found: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

fn decode_size(data: &[u8]) -> Result<(usize, &[u8]), ParseError> {
    let short = |d: &[u8]| {
        d.iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    match data {
        [] => Err(ParseError::MalformedHeader("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((short(&rest[..6]), &rest[6..])),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => {
            Ok((short(&rest[..3]), &rest[3..]))
        }
        [126, ..] => Err(ParseError::MalformedHeader("truncated graph6 size".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and `#` comments
/// are ignored.
pub fn from_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::MalformedHeader("missing `n m` line".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(ParseError::MalformedHeader(header.to_string()));
    };
    let n: usize = n
        .parse()
        .map_err(|_| ParseError::MalformedHeader(header.to_string()))?;
    let m: usize = m
        .parse()
        .map_err(|_| ParseError::MalformedHeader(header.to_string()))?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut it = text.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => edges.push((a, b)),
            _ => {
                return Err(ParseError::MalformedEdge {
                    line,
                    text: text.to_string(),
                })
            }
        }
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}
