//! Text formats: the line-oriented edge list and graph6.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, most
//! significant bit first, each byte offset by 63. The vertex count prefix
//! `N(n)` is one byte for `n <= 62`, `126` plus three bytes up to 258047,
//! and `126 126` plus six bytes beyond that.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: u64 = (1 << 36) - 1;

/// Parses the edge-list format: `#` comment lines and blank lines are
/// ignored, the first data line holds the vertex count, and every further
/// data line is a pair `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| GraphError::EdgeList { line, message };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let Some(n) = n else {
            if tokens.len() != 1 {
                return Err(err(format!("expected a vertex count, found {trimmed:?}")));
            }
            n = Some(parse_index(tokens[0]).map_err(err)?);
            continue;
        };
        if tokens.len() != 2 {
            return Err(err(format!("expected \"u v\", found {trimmed:?}")));
        }
        let u = parse_index(tokens[0]).map_err(err)?;
        let v = parse_index(tokens[1]).map_err(err)?;
        for w in [u, v] {
            if w >= n {
                return Err(err(format!("vertex {w} out of range for n = {n}")));
            }
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let Some(n) = n else {
        return Err(GraphError::EdgeList {
            line: text.lines().count().max(1),
            message: "missing vertex count".into(),
        });
    };
    Graph::new(n, edges)
}

fn parse_index(token: &str) -> Result<usize, String> {
    token
        .parse::<usize>()
        .map_err(|_| format!("malformed token {token:?}"))
}

/// Renders a graph in the edge-list format, newline-terminated.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(GraphError::Graph6(format!(
            "invalid character {:?} at offset {pos}",
            char::from(bytes[pos])
        )));
    }
    let (n, body) = decode_order(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(GraphError::Graph6(format!(
            "truncated edge data: expected {expected} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(GraphError::Graph6(format!(
            "trailing data: expected {expected} bytes, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(GraphError::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let malformed = || GraphError::Graph6("malformed vertex count".into());
    let word = |digits: &[u8]| {
        digits
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - BIAS), &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        let digits = bytes.get(2..8).ok_or_else(malformed)?;
        let n = word(digits);
        if n <= MAX_MEDIUM as u64 {
            return Err(malformed());
        }
        let n = usize::try_from(n).map_err(|_| malformed())?;
        return Ok((n, &bytes[8..]));
    }
    let digits = bytes.get(1..4).ok_or_else(malformed)?;
    let n = word(digits) as usize;
    if n <= MAX_SHORT {
        return Err(malformed());
    }
    Ok((n, &bytes[4..]))
}

/// Encodes a graph as graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_word = |out: &mut Vec<u8>, value: u64, digits: u32| {
        for i in (0..digits).rev() {
            out.push(BIAS + ((value >> (6 * i)) & 0x3f) as u8);
        }
    };
    if n <= MAX_SHORT {
        out.push(BIAS + n as u8);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        push_word(&mut out, n as u64, 3);
    } else {
        assert!(n as u64 <= MAX_LONG, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        push_word(&mut out, n as u64, 6);
    }

    let mut current = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            current = (current << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + current);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (current << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
