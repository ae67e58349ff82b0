//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the encoding used by nauty's `showg`/`geng`: a size header
//! followed by the upper triangle of the adjacency matrix, column by column,
//! packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const MAX_SHORT_N: usize = 62;
const MAX_MEDIUM_N: usize = 258_047;
const MAX_LONG_N: usize = 68_719_476_735;

/// Decodes one graph6 line (an optional `>>graph6<<` header and trailing
/// newline are accepted).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {:#04x} at offset {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = decode_size(bytes)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated payload: {n} vertices need {needed} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after a {n}-vertex payload",
            body.len() - needed
        )));
    }
    let mut bit = 0usize;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_zero_based(n, edges))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - 63), &bytes[1..]));
    }
    if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(Error::Graph6(
                "malformed header: truncated 8-byte size".into(),
            ));
        }
        let n = value(&bytes[2..8]);
        if n <= MAX_MEDIUM_N {
            return Err(Error::Graph6(format!(
                "malformed header: n = {n} uses the long form"
            )));
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Error::Graph6(
            "malformed header: truncated 4-byte size".into(),
        ));
    }
    let n = value(&bytes[1..4]);
    if n <= MAX_SHORT_N {
        return Err(Error::Graph6(format!(
            "malformed header: n = {n} uses the medium form"
        )));
    }
    Ok((n, &bytes[4..]))
}

/// Encodes a graph as a single graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_LONG_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    let push_digits = |out: &mut Vec<u8>, value: usize, digits: usize| {
        for k in (0..digits).rev() {
            out.push(((value >> (6 * k)) & 0x3f) as u8 + 63);
        }
    };
    if n <= MAX_SHORT_N {
        out.push(n as u8 + 63);
    } else if n <= MAX_MEDIUM_N {
        out.push(126);
        push_digits(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_digits(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads a multi-graph graph6 file: one graph per line, so the 1-based line
/// number is the graph index. Blank lines are rejected except at the end.
pub fn read_graph6_collection(text: &str) -> Result<Vec<Graph>> {
    let body = text.trim_end();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.lines()
        .enumerate()
        .map(|(k, line)| {
            from_graph6(line.trim_end()).map_err(|e| match e {
                Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", k + 1)),
                other => other,
            })
        })
        .collect()
}

/// Parses one or more edge-list blocks: a `n m` line followed by `m` lines
/// `u v` with 1-based endpoints. `#` starts a comment.
pub fn read_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut graphs = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let (n, m) = parse_pair(header, line_no)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines.next().ok_or_else(|| {
                Error::EdgeList(format!(
                    "graph starting at line {line_no} declares {m} edges but the input ends early"
                ))
            })?;
            edges.push(parse_pair(line, line_no)?);
        }
        let g = Graph::from_edge_list(n, &edges)
            .map_err(|e| Error::EdgeList(format!("graph starting at line {line_no}: {e}")))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace().map(str::parse::<usize>);
    match (fields.next(), fields.next(), fields.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!(
            "line {line_no}: expected two non-negative integers, got {line:?}"
        ))),
    }
}

/// Writes the edge-list form parsed by [`read_edge_lists`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}
