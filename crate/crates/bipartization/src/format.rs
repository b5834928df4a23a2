//! Serialization: graph6 (bit-exact, short and long form), edge-list and
//! weighting text files, and DOT export.

use std::fmt::Write as _;

use crate::bipartize::BipartiteGraph;
use crate::cliques::{Clique, CliqueWeighting};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in the 3-byte long form.
pub const MAX_GRAPH6_N: usize = 258_047;

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Number of body bytes for a graph of order n.
fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Strict: canonical size prefix, exact body length,
/// zero padding bits, every byte in the printable 63..=126 range.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    parse_graph6_at(line, 1)
}

fn parse_graph6_at(text: &str, lineno: usize) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(lineno, 1, "empty graph6 record"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(lineno, i + 1, format!("byte {b} outside graph6 range")));
        }
    }
    let (n, body_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(parse_err(lineno, 2, "8-byte size prefix not supported"));
        }
        if bytes.len() < 4 {
            return Err(parse_err(lineno, bytes.len(), "truncated long-form size prefix"));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        if n < 63 {
            return Err(parse_err(lineno, 2, "non-canonical long-form size prefix"));
        }
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let expected = body_start + body_len(n);
    if bytes.len() < expected {
        return Err(parse_err(lineno, bytes.len() + 1, "truncated adjacency bit-vector"));
    }
    if bytes.len() > expected {
        return Err(parse_err(lineno, expected + 1, "trailing bytes after adjacency bit-vector"));
    }
    let mut g = Graph::empty(n);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut k = 0usize; // bit index over the column-major upper triangle
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[body_start + k / 6];
            let bit = (byte - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v).expect("indices are in range");
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    for k in nbits..body_len(n) * 6 {
        let byte = bytes[body_start + k / 6];
        if (byte - 63) >> (5 - k % 6) & 1 == 1 {
            return Err(parse_err(lineno, body_start + k / 6 + 1, "non-zero padding bit"));
        }
    }
    Ok(g)
}

/// Writes the canonical graph6 line for g.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Error::SizeLimit {
            what: "graph6 encoding".into(),
            limit: MAX_GRAPH6_N as u64,
        });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// Parses a whole graph6 corpus: one record per line, blank lines and the
/// conventional `>>graph6<<` header ignored.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() || line.starts_with(">>graph6<<") {
            continue;
        }
        graphs.push(parse_graph6_at(line, i + 1)?);
    }
    Ok(graphs)
}

fn parse_usize(tok: &str, line: usize, col: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("invalid {what} `{tok}`")))
}

/// Strips a trailing comment and surrounding whitespace.
fn effective(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses an edge-list file: first line `n`, then one `u v` pair per line.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = effective(raw);
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        match g.as_mut() {
            None => {
                let n = parse_usize(line, lineno, 1, "vertex count")?;
                g = Some(Graph::empty(n));
            }
            Some(g) => {
                let mut it = line.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(parse_err(lineno, 1, "expected `u v`")),
                };
                let u = parse_usize(u, lineno, 1, "vertex id")?;
                let v = parse_usize(v, lineno, 1, "vertex id")?;
                g.add_edge(u, v)
                    .map_err(|e| parse_err(lineno, 1, e.to_string()))?;
            }
        }
    }
    g.ok_or_else(|| parse_err(1, 1, "missing vertex count line"))
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a string cannot fail");
    }
    out
}

/// Parses a weighting file over host h: one `v1,v2,...,vk : w` entry per
/// line, `#` comments and blank lines ignored. Semantic errors (non-clique
/// keys, duplicates, non-positive weights) carry the offending line number.
pub fn parse_weighting(text: &str, h: &Graph) -> Result<CliqueWeighting> {
    let mut pairs: Vec<(Vec<usize>, u64)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = effective(raw);
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, 1, "expected `v1,v2,... : w`"))?;
        let mut vertices = Vec::new();
        for tok in key.split(',') {
            vertices.push(parse_usize(tok.trim(), lineno, 1, "vertex id")?);
        }
        let clique = Clique::new(h, &vertices)
            .map_err(|e| parse_err(lineno, 1, e.to_string()))?;
        if !seen.insert(clique) {
            return Err(parse_err(lineno, 1, format!("duplicate key `{}`", key.trim())));
        }
        let w: u64 = value
            .trim()
            .parse()
            .map_err(|_| parse_err(lineno, 1, format!("invalid weight `{}`", value.trim())))?;
        if w == 0 {
            return Err(parse_err(lineno, 1, "weight must be positive"));
        }
        pairs.push((vertices, w));
    }
    CliqueWeighting::from_pairs(h, &pairs)
}

/// Renders a weighting in the format accepted by [`parse_weighting`].
pub fn write_weighting(f: &CliqueWeighting) -> String {
    let mut out = String::new();
    for (k, w) in f.iter() {
        if w == 0 {
            continue;
        }
        let key: Vec<String> = k.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "{} : {w}", key.join(",")).expect("writing to a string cannot fail");
    }
    out
}

/// DOT export of a plain graph.
pub fn export_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").expect("writing to a string cannot fail");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a string cannot fail");
    }
    out.push('}');
    out.push('\n');
    out
}

/// DOT export of a bipartite graph with two visually distinct sides:
/// filled A-side, hollow B-side with (K, i) labels when present, and
/// same-rank hints per side.
pub fn export_dot_bipartite(g: &BipartiteGraph) -> String {
    let mut out = String::from("graph {\n");
    let rank = |vs: &crate::graph::VertexSet| {
        vs.iter()
            .map(|v| format!("{v};"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "  {{ rank=same; {} }}", rank(g.side_a()))
        .expect("writing to a string cannot fail");
    writeln!(out, "  {{ rank=same; {} }}", rank(g.side_b()))
        .expect("writing to a string cannot fail");
    for v in g.side_a().iter() {
        writeln!(out, "  {v} [shape=circle, style=filled, fillcolor=black, label=\"{v}\"];")
            .expect("writing to a string cannot fail");
    }
    for v in g.side_b().iter() {
        let label = match g.b_labels().and_then(|m| m.get(&v)) {
            Some((k, i)) => format!("({k}, {i})"),
            None => v.to_string(),
        };
        writeln!(out, "  {v} [shape=circle, label=\"{label}\"];")
            .expect("writing to a string cannot fail");
    }
    for (u, v) in g.graph().edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a string cannot fail");
    }
    out.push('}');
    out.push('\n');
    out
}
