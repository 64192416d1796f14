//! graph6 and plain edge-list text formats.
//!
//! graph6 packs the upper adjacency triangle, column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), into 6-bit big-endian chunks, each
//! offset by 63. The vertex count precedes it as one byte `n + 63` for
//! `n <= 62`, or `~` followed by three 6-bit bytes for larger `n`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. Surrounding whitespace and an optional `>>graph6<<`
/// header are ignored. `line_no` is only used in error messages.
pub fn parse_graph6_line(text: &str, line_no: usize) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(line_no, "empty graph6 string"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(
            line_no,
            format!("character {:?} at offset {pos} outside 63..=126", bytes[pos] as char),
        ));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::parse(line_no, "8-byte size form not supported"));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::parse(line_no, "truncated size field"));
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            line_no,
            format!("{n} vertices exceeds the supported {MAX_VERTICES}"),
        ));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            line_no,
            format!("expected {expected} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Error::parse(line_no, "nonzero padding bits"));
    }
    let mut g = Graph::empty(n).map_err(|e| Error::parse(line_no, e.to_string()))?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge_mut(u, v).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses graph6 text, one graph per non-blank line.
pub fn parse_graph6(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != HEADER)
        .map(|(i, l)| parse_graph6_line(l, i + 1))
        .collect()
}

/// Encodes a graph as a single graph6 string (no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12u32, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses the edge-list format: the first non-comment line holds `n`, each
/// further line one edge `u v`. `#` starts a comment; duplicates collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("not a vertex id: {s:?}")))
        };
        match &mut g {
            None => {
                let [n] = fields[..] else {
                    return Err(Error::parse(line_no, "expected the vertex count"));
                };
                g = Some(Graph::empty(num(n)?).map_err(|e| Error::parse(line_no, e.to_string()))?);
            }
            Some(g) => {
                let [u, v] = fields[..] else {
                    return Err(Error::parse(line_no, "expected an edge `u v`"));
                };
                g.add_edge_mut(num(u)?, num(v)?)
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
            }
        }
    }
    g.ok_or_else(|| Error::parse(1, "missing vertex count"))
}

/// Writes the edge-list format, edges in graph6 order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
