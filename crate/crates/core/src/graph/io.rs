//! graph6, DOT and plain edge-list formats.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` in McKay's graph6 format (no header, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_sixes(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_sixes(&mut out, n as u64, 6);
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_sixes(out: &mut Vec<u8>, value: u64, groups: u32) {
    for k in (0..groups).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Parse(format!("graph6: invalid byte 0x{bad:02x}")));
    }
    let six = |b: u8| u64::from(b - 63);

    let (n, body) = match bytes {
        [] => return Err(Error::Parse("graph6: empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("graph6: truncated size field".into()));
            }
            let n = rest[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n as usize, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("graph6: truncated size field".into()));
            }
            let n = rest[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n as usize, &rest[3..])
        }
        [first, rest @ ..] => (six(*first) as usize, rest),
    };

    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6: expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::Parse("graph6: non-zero padding bits".into()));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Edge-list text: a first line `n m`, then `m` lines `u v`.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list: missing header line".into()))?;
    let (n, m) = parse_pair(header)?;
    let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "edge list: header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace().map(str::parse::<usize>);
    match (fields.next(), fields.next(), fields.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!("edge list: bad line {line:?}"))),
    }
}

/// Graphviz DOT rendering.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
