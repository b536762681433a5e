//! Text formats.
//!
//! The canonical interchange format is the edge list: a header line `n m`
//! followed by `m` lines `u v` with `0 <= u < v < n`, ASCII decimal,
//! LF-terminated. graph6 (the 6-bit ASCII encoding with 63-offset bytes and
//! upper-triangle bit order) is supported for corpus interoperability.
//!
//! Orientation witnesses reuse the edge-list shape with each line read as the
//! arc `tail head`; cover files carry one clique per line with `#` comments.

use crate::cover::EdgeCliqueCover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown graph format {other:?}"),
            }),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Graph6 => write_graph6(g),
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| err(line, format!("invalid {what} {tok:?}")))
}

/// Parses the canonical edge-list format. Lines after the `m`-th edge must be
/// empty; endpoint order `u < v` is enforced.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut toks = header.split_ascii_whitespace();
    let n = parse_usize(
        toks.next().ok_or_else(|| err(1, "missing vertex count"))?,
        1,
        "vertex count",
    )?;
    let m = parse_usize(
        toks.next().ok_or_else(|| err(1, "missing edge count"))?,
        1,
        "edge count",
    )?;
    if toks.next().is_some() {
        return Err(err(1, "trailing tokens after header"));
    }

    let mut g = Graph::empty(n);
    let mut read = 0;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if read == m {
            return Err(err(lineno, format!("more than {m} edge lines")));
        }
        let mut toks = line.split_ascii_whitespace();
        let u = parse_usize(toks.next().unwrap(), lineno, "vertex label")?;
        let v = parse_usize(
            toks.next()
                .ok_or_else(|| err(lineno, "missing second endpoint"))?,
            lineno,
            "vertex label",
        )?;
        if toks.next().is_some() {
            return Err(err(lineno, "trailing tokens after edge"));
        }
        if u >= n || v >= n {
            return Err(err(lineno, format!("vertex label out of range (n = {n})")));
        }
        if u == v {
            return Err(err(lineno, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(err(
                lineno,
                format!("edge {u} {v} not in canonical order u < v"),
            ));
        }
        if g.has_edge(u, v) {
            return Err(err(lineno, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        read += 1;
    }
    if read != m {
        return Err(err(
            text.lines().count(),
            format!("expected {m} edges, found {read}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one graph6-encoded graph (optionally prefixed by the standard
/// `>>graph6<<` header). Byte positions in errors are 0-based within the
/// encoded line.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| err(1, "empty graph6 input"))?;
    let line = line.trim_end();
    let data = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = data.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                1,
                format!("invalid graph6 byte 0x{b:02x} at byte {pos}"),
            ));
        }
    }
    let six: Vec<u8> = bytes.iter().map(|&b| b - 63).collect();
    let (n, header_len) = if six.is_empty() {
        return Err(err(1, "empty graph6 input"));
    } else if six[0] != 63 {
        (six[0] as usize, 1)
    } else if six.len() >= 4 && six[1] != 63 {
        (
            ((six[1] as usize) << 12) | ((six[2] as usize) << 6) | six[3] as usize,
            4,
        )
    } else if six.len() >= 8 {
        let mut v = 0usize;
        for &b in &six[2..8] {
            v = (v << 6) | b as usize;
        }
        (v, 8)
    } else {
        return Err(err(1, "truncated graph6 size header"));
    };

    let bits_needed = n * n.saturating_sub(1) / 2;
    let body = &six[header_len..];
    if body.len() != bits_needed.div_ceil(6) {
        return Err(err(
            1,
            format!(
                "graph6 body has {} bytes, expected {} for n = {n}",
                body.len(),
                bits_needed.div_ceil(6)
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut pos = 0;
    for v in 1..n {
        for u in 0..v {
            let bit = body[pos / 6] >> (5 - pos % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v);
            }
            pos += 1;
        }
    }
    // Padding bits must be zero.
    for extra in pos..body.len() * 6 {
        if body[extra / 6] >> (5 - extra % 6) & 1 != 0 {
            return Err(err(
                1,
                format!("nonzero padding bit at byte {}", header_len + extra / 6),
            ));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut six: Vec<u8> = Vec::new();
    if n <= 62 {
        six.push(n as u8);
    } else if n <= 258047 {
        six.push(63);
        six.push((n >> 12) as u8 & 63);
        six.push((n >> 6) as u8 & 63);
        six.push(n as u8 & 63);
    } else {
        six.push(63);
        six.push(63);
        for shift in (0..36).step_by(6).rev() {
            six.push((n >> shift) as u8 & 63);
        }
    }
    let header_len = six.len();
    let bits = n * n.saturating_sub(1) / 2;
    six.resize(header_len + bits.div_ceil(6), 0);
    let mut pos = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                six[header_len + pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    six.into_iter().map(|b| (b + 63) as char).collect()
}

/// Parses an orientation witness for `base`: header `n m`, then `m` lines
/// `tail head`, one per edge of the base graph.
pub fn parse_orientation(text: &str, base: &Graph) -> Result<Orientation> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut toks = header.split_ascii_whitespace();
    let n = parse_usize(
        toks.next().ok_or_else(|| err(1, "missing vertex count"))?,
        1,
        "vertex count",
    )?;
    let m = parse_usize(
        toks.next().ok_or_else(|| err(1, "missing arc count"))?,
        1,
        "arc count",
    )?;
    if n != base.n() || m != base.edge_count() {
        return Err(err(
            1,
            format!(
                "orientation header {n} {m} does not match graph with {} vertices and {} edges",
                base.n(),
                base.edge_count()
            ),
        ));
    }
    let mut arcs = Vec::with_capacity(m);
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut toks = line.split_ascii_whitespace();
        let t = parse_usize(toks.next().unwrap(), lineno, "vertex label")?;
        let h = parse_usize(
            toks.next().ok_or_else(|| err(lineno, "missing arc head"))?,
            lineno,
            "vertex label",
        )?;
        if !base.has_edge(t, h) {
            return Err(err(lineno, format!("{t} {h} is not an edge of the graph")));
        }
        arcs.push((t, h));
    }
    Orientation::from_arcs(base.clone(), &arcs)
}

pub fn write_orientation(d: &Orientation) -> String {
    let mut out = format!("{} {}\n", d.base().n(), d.base().edge_count());
    for (t, h) in d.arcs() {
        out.push_str(&format!("{t} {h}\n"));
    }
    out
}

/// Parses a vertex-indexed cover file: one line per set `C_i` (space-separated
/// vertex labels), `#` starting a comment, exactly `n` set lines.
pub fn parse_cover(text: &str, n: usize) -> Result<EdgeCliqueCover> {
    let mut sets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut set = std::collections::BTreeSet::new();
        for tok in line.split_ascii_whitespace() {
            let v = parse_usize(tok, lineno, "vertex label")?;
            if v >= n {
                return Err(err(
                    lineno,
                    format!("vertex label {v} out of range (n = {n})"),
                ));
            }
            set.insert(v);
        }
        sets.push(set);
    }
    if sets.len() != n {
        return Err(err(
            text.lines().count(),
            format!("cover has {} sets, expected {n}", sets.len()),
        ));
    }
    Ok(EdgeCliqueCover { sets })
}

pub fn write_cover(cover: &EdgeCliqueCover) -> String {
    let mut out = String::new();
    for set in &cover.sets {
        let toks: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}
