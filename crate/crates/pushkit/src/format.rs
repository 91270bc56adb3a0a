//! Text formats for the three graph kinds.
//!
//! A file is one header line followed by one body line per edge:
//!
//! ```text
//! oriented 4 4      # kind, vertex count, edge count
//! 0 1               # arc 0 -> 1
//! 1 2
//! 2 3
//! 0 3
//! ```
//!
//! `graph` bodies hold `u v` edges, `oriented` bodies `u v` arcs, and
//! `signed` bodies `u v +` or `u v -`. Everything after `#` is a comment
//! and blank lines are skipped. Writers emit the canonical form: header,
//! then edges ascending, one per line. Parsing a canonical serialization
//! returns the original graph exactly.

use std::collections::BTreeMap;
use std::fmt;

use pushcore::homo::VertexMapping;
use pushcore::{OrientedGraph, Sign, SignedGraph, SimpleGraph};

/// A parse failure pinned to a 1-based input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn fail<T>(line: usize, message: String) -> Result<T, ParseError> {
    Err(ParseError { line, message })
}

/// A meaningful input line: its original 1-based number and its tokens.
type Line<'a> = (usize, Vec<&'a str>);

/// Comment-stripped, non-blank lines with their original line numbers.
fn meaningful(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let code = raw.split('#').next().unwrap_or("").trim();
            if code.is_empty() {
                None
            } else {
                Some((i + 1, code.split_whitespace().collect()))
            }
        })
        .collect()
}

/// The header keyword of the first meaningful line, for format dispatch.
pub fn sniff_kind(text: &str) -> Option<String> {
    meaningful(text)
        .first()
        .map(|(_, toks)| toks[0].to_string())
}

fn parse_count(tok: &str, what: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError {
        line,
        message: format!("{what} is not a number: `{tok}`"),
    })
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v: usize = tok.parse().map_err(|_| ParseError {
        line,
        message: format!("not a vertex number: `{tok}`"),
    })?;
    if v >= n {
        return fail(line, format!("vertex {v} out of range 0..{n}"));
    }
    Ok(v)
}

/// Header plus body lines, with the declared edge count enforced.
fn split_header<'a>(
    lines: &'a [Line<'a>],
    kind: &str,
) -> Result<(usize, &'a [Line<'a>]), ParseError> {
    let Some((line, toks)) = lines.first() else {
        return fail(
            1,
            format!("empty input, expected a `{kind} <vertices> <edges>` header"),
        );
    };
    if toks[0] != kind {
        return fail(
            *line,
            format!(
                "expected a `{kind} <vertices> <edges>` header, found `{}`",
                toks[0]
            ),
        );
    }
    if toks.len() != 3 {
        return fail(*line, format!("expected `{kind} <vertices> <edges>`"));
    }
    let n = parse_count(toks[1], "vertex count", *line)?;
    let m = parse_count(toks[2], "edge count", *line)?;
    let body = &lines[1..];
    if body.len() != m {
        return fail(
            *line,
            format!("header declares {m} edges but the body has {}", body.len()),
        );
    }
    Ok((n, body))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let lines = meaningful(text);
    let (n, body) = split_header(&lines, "graph")?;
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges = Vec::with_capacity(body.len());
    for (line, toks) in body {
        if toks.len() != 2 {
            return fail(*line, "expected `u v`".into());
        }
        let u = parse_vertex(toks[0], n, *line)?;
        let v = parse_vertex(toks[1], n, *line)?;
        if u == v {
            return fail(*line, format!("self-loop at vertex {u}"));
        }
        if let Some(first) = seen.insert((u.min(v), u.max(v)), *line) {
            return fail(
                *line,
                format!("duplicate edge {u} {v} (first on line {first})"),
            );
        }
        edges.push((u, v));
    }
    SimpleGraph::new(n, edges).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn parse_oriented(text: &str) -> Result<OrientedGraph, ParseError> {
    let lines = meaningful(text);
    let (n, body) = split_header(&lines, "oriented")?;
    let mut seen: BTreeMap<(usize, usize), (usize, bool)> = BTreeMap::new();
    let mut arcs = Vec::with_capacity(body.len());
    for (line, toks) in body {
        if toks.len() != 2 {
            return fail(*line, "expected `u v` for an arc u -> v".into());
        }
        let u = parse_vertex(toks[0], n, *line)?;
        let v = parse_vertex(toks[1], n, *line)?;
        if u == v {
            return fail(*line, format!("self-loop at vertex {u}"));
        }
        let key = (u.min(v), u.max(v));
        if let Some((first, fwd)) = seen.insert(key, (*line, u < v)) {
            let msg = if fwd == (u < v) {
                format!("duplicate arc {u} {v} (first on line {first})")
            } else {
                format!(
                    "arcs in both directions between {} and {} (other on line {first})",
                    key.0, key.1
                )
            };
            return fail(*line, msg);
        }
        arcs.push((u, v));
    }
    OrientedGraph::new(n, arcs).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn parse_signed(text: &str) -> Result<SignedGraph, ParseError> {
    let lines = meaningful(text);
    let (n, body) = split_header(&lines, "signed")?;
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges = Vec::with_capacity(body.len());
    for (line, toks) in body {
        if toks.len() != 3 {
            return fail(*line, "expected `u v +` or `u v -`".into());
        }
        let u = parse_vertex(toks[0], n, *line)?;
        let v = parse_vertex(toks[1], n, *line)?;
        if u == v {
            return fail(*line, format!("self-loop at vertex {u}"));
        }
        let sign = match toks[2] {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return fail(*line, format!("sign must be `+` or `-`, found `{other}`")),
        };
        if let Some(first) = seen.insert((u.min(v), u.max(v)), *line) {
            return fail(
                *line,
                format!("duplicate edge {u} {v} (first on line {first})"),
            );
        }
        edges.push((u, v, sign));
    }
    SignedGraph::new(n, edges).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_oriented(g: &OrientedGraph) -> String {
    let mut out = format!("oriented {} {}\n", g.vertex_count(), g.arc_count());
    for &(u, v) in g.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_signed(g: &SignedGraph) -> String {
    let mut out = format!("signed {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v, sign) in g.edges() {
        out.push_str(&format!("{u} {v} {sign}\n"));
    }
    out
}

/// One-line display form, used when listing many graphs.
pub fn oriented_line(g: &OrientedGraph) -> String {
    let arcs: Vec<String> = g.arcs().iter().map(|&(u, v)| format!("{u}>{v}")).collect();
    format!("oriented {}: {}", g.vertex_count(), arcs.join(" "))
}

/// A comma-separated vertex list, as used by `--set` and `--walk`.
/// The empty string is the empty list.
pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse()
                .map_err(|_| format!("not a vertex number: `{tok}`"))
        })
        .collect()
}

/// A mapping file: one `source,target` pair per line, comments allowed.
/// Every source vertex must be mapped exactly once.
pub fn parse_mapping(
    text: &str,
    source_count: usize,
    target_count: usize,
) -> Result<VertexMapping, ParseError> {
    let mut image: Vec<Option<usize>> = vec![None; source_count];
    let mut last_line = 1;
    for (line, toks) in meaningful(text) {
        last_line = line;
        let joined = toks.join("");
        let Some((s, t)) = joined.split_once(',') else {
            return fail(line, "expected `source,target`".into());
        };
        let s = parse_vertex(s.trim(), source_count, line)?;
        let t = parse_vertex(t.trim(), target_count, line)?;
        if image[s].is_some() {
            return fail(line, format!("source vertex {s} mapped twice"));
        }
        image[s] = Some(t);
    }
    let mut out = Vec::with_capacity(source_count);
    for (s, slot) in image.into_iter().enumerate() {
        match slot {
            Some(t) => out.push(t),
            None => return fail(last_line, format!("source vertex {s} has no mapping")),
        }
    }
    VertexMapping::new(out, target_count).map_err(|e| ParseError {
        line: last_line,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_are_exact() {
        let g = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);

        let o = g.orientation_from_mask(0b0101).unwrap();
        assert_eq!(parse_oriented(&write_oriented(&o)).unwrap(), o);

        let s = SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 2, Sign::Minus)]).unwrap();
        assert_eq!(parse_signed(&write_signed(&s)).unwrap(), s);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a triangle\n\ngraph 3 3   # header\n0 1\n1 2 # last two\n0 2\n";
        assert_eq!(parse_graph(text).unwrap(), SimpleGraph::complete(3));
    }

    #[test]
    fn diagnostics_name_the_offending_line() {
        let err = parse_graph("graph 3 2\n0 1\n0 3\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("out of range"));

        let err = parse_graph("graph 3 2\n0 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("declares 2"));

        let err = parse_oriented("oriented 3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("both directions"));

        let err = parse_signed("signed 2 1\n0 1 ?\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("sign"));
    }

    #[test]
    fn header_kinds_do_not_mix() {
        let err = parse_oriented("graph 2 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("expected a `oriented"));
        assert_eq!(sniff_kind("graph 2 1\n0 1\n").as_deref(), Some("graph"));
    }

    #[test]
    fn mapping_files_demand_total_maps() {
        let f = parse_mapping("0,2\n1,0\n", 2, 3).unwrap();
        assert_eq!(f.images(), &[2, 0]);

        let err = parse_mapping("0,1\n0,2\n", 2, 3).unwrap_err();
        assert!(err.message.contains("mapped twice"));

        let err = parse_mapping("0,1\n", 2, 3).unwrap_err();
        assert!(err.message.contains("has no mapping"));
    }

    #[test]
    fn vertex_lists_parse_loosely() {
        assert_eq!(parse_vertex_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_vertex_list("0, 2,5").unwrap(), vec![0, 2, 5]);
        assert!(parse_vertex_list("0,x").is_err());
    }
}
