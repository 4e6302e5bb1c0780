use super::{CubicGraph, GraphBuilder};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let bad = || Error::Graph6("truncated order field".into());
    let val = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Error::Graph6(format!("byte {b} outside the printable range")))
        }
    };
    match bytes.first() {
        None => Err(Error::Graph6("empty input".into())),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                let rest = bytes.get(2..8).ok_or_else(bad)?;
                let mut n = 0;
                for &b in rest {
                    n = (n << 6) | val(b)?;
                }
                Ok((n, &bytes[8..]))
            } else {
                let rest = bytes.get(1..4).ok_or_else(bad)?;
                let mut n = 0;
                for &b in rest {
                    n = (n << 6) | val(b)?;
                }
                Ok((n, &bytes[4..]))
            }
        }
        Some(&b) => Ok((val(b)?, &bytes[1..])),
    }
}

/// Decodes one graph6 line into a closed cubic graph.
///
/// Edges are numbered by `(min, max)` endpoint order, so darts at each vertex
/// appear in ascending neighbour order.
pub fn parse_graph6(text: &str) -> Result<CubicGraph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let (n, payload) = decode_order(line.as_bytes())?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if payload.len() != need {
        return Err(Error::Graph6(format!("expected {need} payload bytes for {n} vertices, got {}", payload.len())));
    }
    let mut adj = vec![false; n * n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = payload[k / 6];
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {b} outside the printable range")));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                adj[i * n + j] = true;
            }
            k += 1;
        }
    }
    if let Some(&last) = payload.last() {
        let used = bits - (need - 1) * 6;
        if used < 6 && (last - 63) & ((1 << (6 - used)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if adj[i * n + j] {
                b.edge(i, j)?;
            }
        }
    }
    b.build()
}

/// Parses a newline separated list, skipping blank lines.
pub fn parse_graph6_list(text: &str) -> Result<Vec<CubicGraph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

/// Encodes a closed simple graph.
pub fn to_graph6(g: &CubicGraph) -> Result<String> {
    g.require_closed()?;
    if !g.is_simple() {
        return Err(Error::Graph6("graph6 cannot carry loops or parallel edges".into()));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut adj = vec![false; n * n];
    for (u, v) in g.edge_list() {
        adj[u.min(v) * n + u.max(v)] = true;
    }
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}
