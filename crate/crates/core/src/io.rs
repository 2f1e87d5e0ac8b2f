//! Text formats.
//!
//! Edge list: a header line `p <n> <m>` followed by `m` lines `<u> <v>` with
//! 0-based ids. Lines starting with `#` and blank lines are ignored; fields
//! are whitespace separated. Set files hold whitespace-separated ids;
//! partition files hold one set per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_id(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a vertex id, found `{tok}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `p <n> <m>` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["p", n, m] => (parse_id(hline, n)?, parse_id(hline, m)?),
        _ => return Err(parse_err(hline, "expected header `p <n> <m>`")),
    };
    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(parse_err(line, "expected `<u> <v>`"));
        };
        edges.push((parse_id(line, u)?, parse_id(line, v)?));
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    // build incrementally so a structural error names its line
    Graph::from_edge_list(n, &edges).map_err(|err| {
        let line = locate(n, &edges, &err).map_or(hline, |i| edge_lines[i]);
        parse_err(line, err.to_string())
    })
}

fn locate(n: usize, edges: &[(usize, usize)], err: &Error) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    edges.iter().position(|&(u, v)| match err {
        Error::SelfLoop(_) => u == v,
        Error::VertexOutOfRange(_) => u >= n || v >= n,
        Error::DuplicateEdge(..) => !seen.insert((u.min(v), u.max(v))),
        _ => false,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut s = VertexSet::new(n);
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            let v = parse_id(line, tok)?;
            if v >= n {
                return Err(parse_err(
                    line,
                    format!("vertex {v} out of range for n = {n}"),
                ));
            }
            s.insert(v);
        }
    }
    Ok(s)
}

pub fn parse_partition(text: &str, n: usize) -> Result<Vec<VertexSet>> {
    let mut sets = Vec::new();
    for (line, l) in content_lines(text) {
        let mut s = VertexSet::new(n);
        for tok in l.split_whitespace() {
            let v = parse_id(line, tok)?;
            if v >= n {
                return Err(parse_err(
                    line,
                    format!("vertex {v} out of range for n = {n}"),
                ));
            }
            s.insert(v);
        }
        sets.push(s);
    }
    Ok(sets)
}

pub fn write_set(s: &VertexSet) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    ids.join(" ")
}

pub fn write_partition(sets: &[VertexSet]) -> String {
    let mut out = String::new();
    for s in sets {
        out.push_str(&write_set(s));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# path\np 3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_edge_list("p 3 2\n0 1\n2 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "self-loop at vertex 2".into()
            }
        );
        let err = parse_edge_list("p 3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_edge_list("p 3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("p 3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn set_files() {
        let s = parse_set("0\n2\n", 5).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2]);
        assert!(parse_set("7\n", 5).is_err());
        let p = parse_partition("0 3\n1 4\n2 5\n", 6).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(write_partition(&p), "0 3\n1 4\n2 5\n");
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = vec![];
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i % bits.len()] { edges.push((u, v)); }
                    i += 1;
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let text = write_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_edge_list(&back), text);
        }
    }
}
