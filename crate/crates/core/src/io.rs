//! Text formats: edge lists, graph6, cover JSON and NAE instances.

use serde::{Deserialize, Serialize};

use crate::constructions::{Literal, NaeInstance};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::tessellation::{Tessellation, TessellationCover};

/// Version stamped into every JSON document.
pub const SCHEMA: u32 = 1;

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let [n, m] = numbers::<2>(hl, header)?;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = numbers::<2>(line, l)?;
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range for n = {n}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(hl, format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

fn numbers<const K: usize>(line: usize, text: &str) -> Result<[usize; K]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != K {
        return Err(Error::parse(line, format!("expected {K} integers, got {:?}", text)));
    }
    let mut out = [0; K];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p
            .parse()
            .map_err(|_| Error::parse(line, format!("not a non-negative integer: {p:?}")))?;
    }
    Ok(out)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Decodes one graph6 string (an optional `>>graph6<<` prefix is allowed).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, format!("invalid graph6 byte {b}")));
    }
    let field = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (field(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (field(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(Error::parse(1, "truncated graph6 size")),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::parse(1, format!("graph6 body has {} bytes, expected {}", body.len(), bits.div_ceil(6))));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_field = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push((value >> (6 * i) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_field(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_field(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Edge list or graph6, whichever the text looks like.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with(">>graph6<<") || (first.split_whitespace().count() == 1 && !first.is_empty()) {
        parse_graph6(first)
    } else {
        parse_graph(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDocument {
    #[serde(default = "schema")]
    pub schema: u32,
    pub n: usize,
    pub tessellations: TessellationCover,
}

fn schema() -> u32 {
    SCHEMA
}

pub fn cover_to_json(n: usize, cover: &TessellationCover) -> String {
    serde_json::to_string(&CoverDocument {
        schema: SCHEMA,
        n,
        tessellations: cover.clone(),
    })
    .expect("cover serialises")
}

/// Reads a cover document, normalising each tessellation.
pub fn parse_cover_json(text: &str) -> Result<(usize, TessellationCover)> {
    let doc: CoverDocument = serde_json::from_str(text)?;
    if doc.schema != SCHEMA {
        return Err(Error::parse(1, format!("unsupported schema {}", doc.schema)));
    }
    let ts = doc
        .tessellations
        .into_inner()
        .into_iter()
        .map(|t| Tessellation::new(t.cliques().iter().map(|c| c.vertices().to_vec())))
        .collect();
    Ok((doc.n, TessellationCover::new(ts)))
}

/// Parses `p nae3 <vars> <clauses>` followed by one clause per line of three
/// signed 1-based literals, optionally closed by `0`. Lines starting with
/// `c` are comments.
pub fn parse_nae(text: &str) -> Result<NaeInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if let Some(rest) = l.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts.as_slice() {
                ["nae3", v, c] => {
                    let v = v.parse().map_err(|_| Error::parse(line, "bad variable count"))?;
                    let c = c.parse().map_err(|_| Error::parse(line, "bad clause count"))?;
                    header = Some((v, c));
                }
                _ => return Err(Error::parse(line, "expected header `p nae3 <vars> <clauses>`")),
            }
            continue;
        }
        let (vars, _) = header.ok_or_else(|| Error::parse(line, "clause before header"))?;
        let mut lits: Vec<i64> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad literal {t:?}"))))
            .collect::<Result<_>>()?;
        if lits.last() == Some(&0) {
            lits.pop();
        }
        if lits.len() != 3 {
            return Err(Error::parse(line, "a clause needs exactly three literals"));
        }
        let mut clause = [Literal::pos(0); 3];
        for (slot, &x) in clause.iter_mut().zip(&lits) {
            let var = x.unsigned_abs() as usize;
            if x == 0 || var > vars {
                return Err(Error::parse(line, format!("literal {x} out of range")));
            }
            *slot = Literal { var: var - 1, negated: x < 0 };
        }
        clauses.push(clause);
    }
    let (vars, count) = header.ok_or_else(|| Error::parse(1, "missing header"))?;
    if clauses.len() != count {
        return Err(Error::parse(1, format!("header promises {count} clauses, found {}", clauses.len())));
    }
    NaeInstance::new(vars, clauses)
}

pub fn write_nae(i: &NaeInstance) -> String {
    let mut s = format!("p nae3 {} {}\n", i.var_count, i.clauses.len());
    for c in &i.clauses {
        let lits: Vec<String> = c
            .iter()
            .map(|l| {
                let v = l.var as i64 + 1;
                (if l.negated { -v } else { v }).to_string()
            })
            .collect();
        s.push_str(&format!("{} 0\n", lits.join(" ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_graph("3 3\n0 1\n1 2\n0 2").unwrap(), complete(3));
        let c4 = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4, cycle(4));
        match parse_graph("2 2\n0 1\n0 1") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph("2 1\n0 0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 5"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_graph(&write_graph(&petersen())).unwrap(), petersen());
    }

    #[test]
    fn graph6_known_strings() {
        // Standard encodings: K3 = "Bw", C4 = "Cr", Petersen = "IheA@GUAo".
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(write_graph6(&complete(3)), "Bw");
        assert_eq!(parse_graph6("Cr").unwrap().m(), 4);
        let p = parse_graph6(">>graph6<<IheA@GUAo").unwrap();
        assert!(crate::graph::are_isomorphic(&p, &petersen()));
        let big = cycle(70);
        assert_eq!(parse_graph6(&write_graph6(&big)).unwrap(), big);
        assert!(parse_graph6("C").is_err());
    }

    #[test]
    fn cover_round_trip() {
        let cover = TessellationCover::new(vec![
            Tessellation::new([vec![0, 1, 2]]),
            Tessellation::new([vec![0, 1, 3]]),
        ]);
        let text = cover_to_json(4, &cover);
        assert_eq!(text, r#"{"schema":1,"n":4,"tessellations":[[[0,1,2]],[[0,1,3]]]}"#);
        assert_eq!(parse_cover_json(&text).unwrap(), (4, cover));
        let (n, c) = parse_cover_json(r#"{"n":3,"tessellations":[[[2,0],[1]]]}"#).unwrap();
        assert_eq!((n, serde_json::to_string(&c).unwrap()), (3, "[[[0,2]]]".into()));
    }

    #[test]
    fn nae_round_trip() {
        let i = parse_nae("c example\np nae3 3 2\n1 -2 3 0\n-1 2 -3\n").unwrap();
        assert_eq!(i.clauses[0], [Literal::pos(0), Literal::neg(1), Literal::pos(2)]);
        assert_eq!(parse_nae(&write_nae(&i)).unwrap(), i);
        assert!(parse_nae("p nae3 2 1\n1 2 3\n").is_err());
        assert!(parse_nae("p nae3 3 2\n1 2 3\n").is_err());
    }
}
