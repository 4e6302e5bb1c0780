//! Line-oriented multipole text format.
//!
//! ```text
//! mpole <n_vertices> <n_semiedges>
//! e <u> <v>            full edge
//! s <u> <connector>    dangling edge at u, free end in <connector>
//! i <connector> <connector>   isolated edge, both ends free
//! c <connector> <end>...      order of connectors and of their ends
//! ```
//!
//! Edge lines are written in edge-id order. The k-th edge line owns ends
//! 2k and 2k+1; the free end of an `s` line is 2k+1. Without `c` lines
//! connectors are ordered by first appearance. Blank lines and `#`
//! comments are ignored.

use super::{Connector, CubicGraph, Multipole};
use crate::error::{Error, Result};

pub fn parse_native(text: &str) -> Result<Multipole> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: &str| Error::Native { line, msg: msg.to_string() };
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 3 || h[0] != "mpole" {
        return Err(err(hline, "expected `mpole <n_vertices> <n_semiedges>`"));
    }
    let num = |line: usize, s: &str| s.parse::<usize>().map_err(|_| err(line, &format!("bad integer `{s}`")));
    let n = num(hline, h[1])?;
    let n_semi = num(hline, h[2])?;

    let mut ends: Vec<Option<usize>> = Vec::new();
    let mut order: Vec<(usize, String, Vec<usize>)> = Vec::new();
    let mut connectors: Vec<Connector> = Vec::new();
    let attach = |name: &str, dart: usize, connectors: &mut Vec<Connector>| match connectors
        .iter_mut()
        .find(|c| c.name == name)
    {
        Some(c) => c.darts.push(dart),
        None => connectors.push(Connector { name: name.to_string(), darts: vec![dart] }),
    };
    for (ln, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.as_slice() {
            ["e", u, v] => {
                let (u, v) = (num(ln, u)?, num(ln, v)?);
                if u >= n || v >= n {
                    return Err(err(ln, "vertex out of range"));
                }
                ends.extend([Some(u), Some(v)]);
            }
            ["s", u, c] => {
                let u = num(ln, u)?;
                if u >= n {
                    return Err(err(ln, "vertex out of range"));
                }
                ends.extend([Some(u), None]);
                attach(c, ends.len() - 1, &mut connectors);
            }
            ["i", a, b] => {
                ends.extend([None, None]);
                attach(a, ends.len() - 2, &mut connectors);
                attach(b, ends.len() - 1, &mut connectors);
            }
            ["c", name, rest @ ..] => {
                let darts = rest.iter().map(|d| num(ln, d)).collect::<Result<Vec<_>>>()?;
                order.push((ln, name.to_string(), darts));
            }
            _ => return Err(err(ln, "expected `e u v`, `s u name`, `i name name` or `c name ends`")),
        }
    }
    let semi = ends.iter().filter(|e| e.is_none()).count();
    if semi != n_semi {
        return Err(err(hline, &format!("header declares {n_semi} semiedges, found {semi}")));
    }
    if !order.is_empty() {
        let mut sorted = Vec::with_capacity(connectors.len());
        for (ln, name, mut darts) in order {
            let pos = connectors.iter().position(|c| c.name == name).ok_or_else(|| err(ln, "unknown connector"))?;
            let c = connectors.swap_remove(pos);
            let (mut have, mut want) = (c.darts.clone(), darts.clone());
            have.sort_unstable();
            want.sort_unstable();
            if have != want {
                return Err(err(ln, "ends do not match the connector"));
            }
            sorted.push(Connector { name, darts: std::mem::take(&mut darts) });
        }
        if let Some(c) = connectors.first() {
            return Err(err(hline, &format!("connector `{}` missing from the order", c.name)));
        }
        connectors = sorted;
    }
    let g = CubicGraph::from_parts(ends, n).map_err(|e| err(hline, &e.to_string()))?;
    Multipole::new(g, connectors)
}

/// Serialises a multipole; connector names must not contain whitespace.
pub fn to_native(m: &Multipole) -> String {
    let g = m.graph();
    let mut owner = vec![""; g.dart_count()];
    for c in m.connectors() {
        for &d in &c.darts {
            owner[d] = &c.name;
        }
    }
    let mut out = format!("mpole {} {}\n", g.vertex_count(), g.semiedge_count());
    for e in 0..g.edge_count() {
        let line = match g.endpoints(e) {
            [Some(u), Some(v)] => format!("e {u} {v}\n"),
            [Some(u), None] => format!("s {u} {}\n", owner[2 * e + 1]),
            [None, Some(u)] => format!("s {u} {}\n", owner[2 * e]),
            [None, None] => format!("i {} {}\n", owner[2 * e], owner[2 * e + 1]),
        };
        out.push_str(&line);
    }
    // an `s` line always puts its free end second
    let written = |d: usize| match g.endpoints(d / 2) {
        [None, None] => d,
        _ => d | 1,
    };
    for c in m.connectors() {
        out.push_str(&format!("c {}", c.name));
        for &d in &c.darts {
            out.push_str(&format!(" {}", written(d)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::delete_vertices;
    use crate::named;

    #[test]
    fn round_trip_closed() {
        let m = Multipole::from(named::petersen());
        let text = to_native(&m);
        assert!(text.starts_with("mpole 10 0\n"));
        assert_eq!(parse_native(&text).unwrap(), m);
    }

    #[test]
    fn round_trip_pole() {
        let p = delete_vertices(&named::petersen(), &[0, 1]).unwrap().pole;
        let again = parse_native(&to_native(&p)).unwrap();
        assert_eq!(again.shape(), p.shape());
        assert_eq!(to_native(&again), to_native(&p));
    }

    #[test]
    fn rejects_bad_counts() {
        assert!(parse_native("mpole 2 0\ne 0 1\n").is_err());
        assert!(parse_native("mpole 1 1\ns 0 A\ne 0 0\n").is_ok());
        assert!(parse_native("mpole 1 2\ns 0 A\ne 0 0\n").is_err());
        assert!(parse_native("graph 1 1\n").is_err());
    }

    #[test]
    fn isolated_edge_pole() {
        let m = parse_native("mpole 0 2\ni A B\n").unwrap();
        assert_eq!(m.shape(), vec![1, 1]);
        assert_eq!(m.graph().edge_count(), 1);
    }
}
