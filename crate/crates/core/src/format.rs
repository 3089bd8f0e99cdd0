//! Line-oriented coloring file format.
//!
//! ```text
//! # comments run to end of line
//! host complete 5
//! e 0 1 2 c 0
//! e 0 1 3 c 1
//! ...
//! ```
//!
//! Every host edge must appear exactly once. Colors are re-normalized on load
//! and the writer emits edges in [`EdgeId`](crate::hypergraph::EdgeId) order.

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::error::{ParseError, ParseErrorKind};
use crate::hypergraph::HostGraph;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub(crate) fn parse_u32(tok: &str, line: usize, what: &str) -> Result<u32, ParseError> {
    tok.parse::<u32>().map_err(|_| {
        ParseError::new(line, ParseErrorKind::Malformed(format!("{what} {tok:?} is not a non-negative integer")))
    })
}

pub fn parse_host_line(tokens: &[&str], line: usize) -> Result<HostGraph, ParseError> {
    let bad = |msg: String| ParseError::new(line, ParseErrorKind::BadHost(msg));
    match tokens {
        ["host", "complete", n] => {
            HostGraph::complete(parse_u32(n, line, "vertex count")?).map_err(|e| bad(e.to_string()))
        }
        ["host", "tripartite", a, b, c] => HostGraph::tripartite(
            parse_u32(a, line, "part size")?,
            parse_u32(b, line, "part size")?,
            parse_u32(c, line, "part size")?,
        )
        .map_err(|e| bad(e.to_string())),
        _ => Err(bad(format!(
            "expected `host complete <n>` or `host tripartite <n1> <n2> <n3>`, got `{}`",
            tokens.join(" ")
        ))),
    }
}

pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut lines = content_lines(text);
    let (host_line, tokens) = lines.next().ok_or(ParseError::new(0, ParseErrorKind::Empty))?;
    let host = parse_host_line(&tokens, host_line)?;
    let mut colors: Vec<Option<Color>> = vec![None; host.edge_count()];
    let mut last_line = host_line;
    for (line, tokens) in lines {
        last_line = line;
        let [a, b, c, col] = match tokens.as_slice() {
            ["e", a, b, c, "c", col] => [*a, *b, *c, *col],
            _ => {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::Malformed(format!("expected `e <v1> <v2> <v3> c <color>`, got `{}`", tokens.join(" "))),
                ))
            }
        };
        let triple = [parse_u32(a, line, "vertex")?, parse_u32(b, line, "vertex")?, parse_u32(c, line, "vertex")?];
        let color = parse_u32(col, line, "color")?;
        let id = host.edge_rank(triple).map_err(|_| ParseError::new(line, ParseErrorKind::NonEdge(triple)))?;
        let slot = &mut colors[id.index()];
        if slot.is_some() {
            return Err(ParseError::new(line, ParseErrorKind::DuplicateEdge(host.triple(id))));
        }
        *slot = Some(color);
    }
    let mut out = Vec::with_capacity(colors.len());
    for (i, c) in colors.into_iter().enumerate() {
        match c {
            Some(c) => out.push(c),
            None => {
                return Err(ParseError::new(last_line, ParseErrorKind::MissingEdge(host.edges()[i])));
            }
        }
    }
    Ok(Coloring::new(host, out).expect("length checked"))
}

pub fn write_coloring(c: &Coloring) -> String {
    let host = c.host();
    let mut out = String::with_capacity(24 + host.edge_count() * 16);
    writeln!(out, "host {host}").unwrap();
    for (t, col) in host.edges().iter().zip(c.colors()) {
        writeln!(out, "e {} {} {} c {}", t[0], t[1], t[2], col).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_bytes() {
        let h = HostGraph::tripartite(2, 1, 2).unwrap();
        let c = Coloring::new(h, vec![4, 4, 1, 7]).unwrap();
        let text = write_coloring(&c);
        assert_eq!(
            text,
            "host tripartite 2 1 2\ne 0 2 3 c 0\ne 1 2 3 c 0\ne 0 2 4 c 1\ne 1 2 4 c 2\n"
        );
        let back = parse_coloring(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(write_coloring(&back), text);
    }

    #[test]
    fn parser_normalizes_and_accepts_comments() {
        let text = "# a K4\nhost complete 4\ne 1 2 3 c 9 # last\ne 0 1 2 c 5\n\ne 0 1 3 c 5\ne 0 2 3 c 9\n";
        let c = parse_coloring(text).unwrap();
        assert_eq!(c.colors(), &[0, 0, 1, 1]);
    }

    #[test]
    fn parser_errors_carry_line_numbers() {
        let dup = "host complete 3\ne 0 1 2 c 0\ne 2 1 0 c 0\n";
        let err = parse_coloring(dup).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.reason, ParseErrorKind::DuplicateEdge([0, 1, 2])));

        let missing = "host complete 4\ne 0 1 2 c 0\n";
        assert!(matches!(parse_coloring(missing).unwrap_err().reason, ParseErrorKind::MissingEdge(_)));

        let non_edge = "host tripartite 1 1 1\ne 0 1 1 c 0\n";
        let err = parse_coloring(non_edge).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.reason, ParseErrorKind::NonEdge(_)));

        let malformed = "host complete 3\ne 0 1 2 color 0\n";
        assert!(matches!(parse_coloring(malformed).unwrap_err().reason, ParseErrorKind::Malformed(_)));

        let bad_host = "host complete 2\n";
        assert!(matches!(parse_coloring(bad_host).unwrap_err().reason, ParseErrorKind::BadHost(_)));

        let negative = "host complete 3\ne 0 1 2 c -1\n";
        assert_eq!(parse_coloring(negative).unwrap_err().line, 2);
        assert!(matches!(parse_coloring("# nothing\n").unwrap_err().reason, ParseErrorKind::Empty));
    }
}
