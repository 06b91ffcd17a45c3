//! Text formats for graphs (`floodgraph v1`) and certificates (`floodcert v1`).
//!
//! ```text
//! floodgraph v1 n=3 c=2
//! colours: 0 1 0
//! edge: 0 1
//! edge: 1 2
//! ```
//!
//! ```text
//! floodcert v1
//! move: 1 0
//! final: 0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Certificates may also
//! carry a `target: <v> <v> ...` line.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::cert::Certificate;
use crate::engine::Move;
use crate::error::ParseError;
use crate::graph::{Colour, ColouredGraph, Graph};

pub const GRAPH_HEADER: &str = "floodgraph v1";
pub const CERT_HEADER: &str = "floodcert v1";

pub fn write_graph(g: &ColouredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{GRAPH_HEADER} n={} c={}", g.n(), g.c()).unwrap();
    out.push_str("colours:");
    for d in g.colouring() {
        write!(out, " {d}").unwrap();
    }
    out.push('\n');
    for &(u, v) in g.graph().edges() {
        writeln!(out, "edge: {u} {v}").unwrap();
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| ParseError::at(line, format!("invalid {what} `{tok}`")))
}

fn parse_colour(line: usize, tok: &str) -> Result<Colour, ParseError> {
    parse_num::<u8>(line, tok, "colour").map(Colour)
}

pub fn parse_graph(text: &str) -> Result<ColouredGraph, ParseError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| ParseError::at(1, "empty input"))?;
    let rest = header
        .strip_prefix(GRAPH_HEADER)
        .ok_or_else(|| ParseError::at(ln, format!("expected `{GRAPH_HEADER}` header")))?;
    let mut n = None;
    let mut c = None;
    for tok in rest.split_whitespace() {
        match tok.split_once('=') {
            Some(("n", v)) => n = Some(parse_num::<usize>(ln, v, "vertex count")?),
            Some(("c", v)) => c = Some(parse_num::<usize>(ln, v, "colour count")?),
            _ => return Err(ParseError::at(ln, format!("unexpected header field `{tok}`"))),
        }
    }
    let n = n.ok_or_else(|| ParseError::at(ln, "missing n="))?;
    let c = c.ok_or_else(|| ParseError::at(ln, "missing c="))?;
    let mut colouring = None;
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let (key, body) =
            line.split_once(':').ok_or_else(|| ParseError::at(ln, format!("expected `key: value`, got `{line}`")))?;
        match key.trim() {
            "colours" => {
                if colouring.is_some() {
                    return Err(ParseError::at(ln, "duplicate colours line"));
                }
                let cols = body.split_whitespace().map(|t| parse_colour(ln, t)).collect::<Result<Vec<_>, _>>()?;
                colouring = Some(cols);
            }
            "edge" => {
                let toks: Vec<&str> = body.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(ParseError::at(ln, "edge needs two endpoints"));
                }
                edges.push((parse_num(ln, toks[0], "vertex")?, parse_num(ln, toks[1], "vertex")?));
            }
            other => return Err(ParseError::at(ln, format!("unknown key `{other}`"))),
        }
    }
    let colouring = colouring.ok_or_else(|| ParseError::at(ln, "missing colours line"))?;
    let shape = Graph::new(n, edges)?;
    Ok(ColouredGraph::new(Arc::new(shape), colouring, c)?)
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "{CERT_HEADER}").unwrap();
    if let Some(t) = &cert.claimed_target {
        out.push_str("target:");
        for v in t {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for m in &cert.moves {
        writeln!(out, "move: {} {}", m.vertex, m.colour).unwrap();
    }
    if let Some(d) = cert.claimed_final_colour {
        writeln!(out, "final: {d}").unwrap();
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| ParseError::at(1, "empty input"))?;
    if header != CERT_HEADER {
        return Err(ParseError::at(ln, format!("expected `{CERT_HEADER}` header")));
    }
    let mut cert = Certificate::default();
    for (ln, line) in lines {
        let (key, body) =
            line.split_once(':').ok_or_else(|| ParseError::at(ln, format!("expected `key: value`, got `{line}`")))?;
        let toks: Vec<&str> = body.split_whitespace().collect();
        match key.trim() {
            "move" => {
                if toks.len() != 2 {
                    return Err(ParseError::at(ln, "move needs a vertex and a colour"));
                }
                cert.moves.push(Move::new(parse_num(ln, toks[0], "vertex")?, parse_colour(ln, toks[1])?));
            }
            "final" => {
                if toks.len() != 1 || cert.claimed_final_colour.is_some() {
                    return Err(ParseError::at(ln, "final needs exactly one colour, once"));
                }
                cert.claimed_final_colour = Some(parse_colour(ln, toks[0])?);
            }
            "target" => {
                if cert.claimed_target.is_some() {
                    return Err(ParseError::at(ln, "duplicate target line"));
                }
                cert.claimed_target =
                    Some(toks.iter().map(|t| parse_num(ln, t, "vertex")).collect::<Result<Vec<_>, _>>()?);
            }
            other => return Err(ParseError::at(ln, format!("unknown key `{other}`"))),
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_coloured_graph, colours};

    #[test]
    fn graph_round_trip() {
        let g = build_coloured_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], colours(&[0, 1, 2, 1])).unwrap();
        let text = write_graph(&g);
        assert!(text.starts_with("floodgraph v1 n=4 c=3\ncolours: 0 1 2 1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn certificate_round_trip() {
        let cert = Certificate::new(vec![Move::new(2, Colour(1)), Move::new(0, Colour(0))])
            .with_final_colour(Colour(0))
            .with_target(vec![0, 3]);
        let text = write_certificate(&cert);
        assert_eq!(parse_certificate(&text).unwrap(), cert);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("floodgraph v1 n=2 c=2\ncolours: 0 1\nedge: 0 x\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        assert!(parse_graph("floodgraph v2 n=2 c=2\n").is_err());
        assert!(matches!(
            parse_graph("floodgraph v1 n=2 c=2\ncolours: 0 1\n"),
            Err(ParseError::Graph(crate::error::GraphError::DisconnectedGraph))
        ));
        assert!(parse_certificate("floodcert v1\nmove: 1\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let cert = parse_certificate("# hi\nfloodcert v1\n\nmove: 0 1\n").unwrap();
        assert_eq!(cert.moves, vec![Move::new(0, Colour(1))]);
    }
}
