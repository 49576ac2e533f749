//! Edge-list and graph6 text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertex
//! indices. Parallel edges repeat lines. Blank lines and lines starting with
//! `#` are skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let nums = parse_pair(hl, header)?;
    let (n, m) = (nums.0 as usize, nums.1 as usize);
    let mut pairs = Vec::with_capacity(m);
    for (ln, l) in lines {
        let (u, v) = parse_pair(ln, l)?;
        if u as usize >= n || v as usize >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(ln, "loop"));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(parse_err(
            0,
            format!("expected {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::from_edges(n, &pairs)
}

fn parse_pair(ln: usize, l: &str) -> Result<(u32, u32)> {
    let mut it = l.split_whitespace();
    let mut next = || -> Result<u32> {
        it.next()
            .ok_or_else(|| parse_err(ln, "expected two integers"))?
            .parse()
            .map_err(|e| parse_err(ln, format!("{e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(ln, "trailing tokens"));
    }
    Ok((a, b))
}

/// Writes `g` with vertices renumbered by position and edges in id order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (a, b) in g.index_pairs() {
        writeln!(s, "{a} {b}").unwrap();
    }
    s
}

/// Reads one graph6 string (simple graphs, order < 258048).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "byte outside graph6 range"));
    }
    let (n, rest) = match bytes.first() {
        None => return Err(parse_err(1, "empty graph6 string")),
        Some(126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(parse_err(1, "unsupported graph6 order"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != need {
        return Err(parse_err(
            1,
            format!("expected {need} data bytes, found {}", rest.len()),
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i as u32, j as u32));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &pairs)
}

/// graph6 encoding of the simplification of `g`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in g.index_pairs() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for row in adj.iter().take(j) {
            acc = acc << 1 | row[j] as u8;
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
    String::from_utf8(out).expect("ascii")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::iso::are_isomorphic;

    #[test]
    fn edge_list_round_trip_keeps_parallel_edges() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "2 3\n0 1\n0 1\n0 1\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("2 1\n0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n1 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_edge_list("# k2\n2 1\n\n0 1\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn graph6_known_strings() {
        // K4 is "C~", the Petersen graph "IheA@GUAo"
        assert_eq!(write_graph6(&families::k4()), "C~");
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert!(are_isomorphic(&p, &families::petersen()).is_some());
    }

    #[test]
    fn graph6_round_trip() {
        for g in [families::petersen(), families::bicorn(), families::c6bar()] {
            let back = parse_graph6(&write_graph6(&g)).unwrap();
            let sorted = |h: &Graph| {
                let mut v: Vec<_> = h
                    .index_pairs()
                    .into_iter()
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                v.sort();
                v
            };
            assert_eq!(sorted(&back), sorted(&g));
        }
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
    }
}
