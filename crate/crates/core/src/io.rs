//! Edge-list text format and DOT export.
//!
//! Edge lists start with a header line `n m`, followed by `m` lines `u v`
//! with `1 <= u < v <= n`. Blank lines are ignored and `#` starts a comment
//! that runs to the end of the line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected two integers, found {} tokens", toks.len()),
            });
        }
        match header {
            None => {
                let n = parse_usize(toks[0], line, "vertex count")?;
                let m = parse_usize(toks[1], line, "edge count")?;
                if n == 0 {
                    return Err(Error::Parse {
                        line,
                        msg: "vertex count must be positive".into(),
                    });
                }
                header = Some((n, m, line));
            }
            Some((n, m, _)) => {
                let u = parse_usize(toks[0], line, "vertex")?;
                let v = parse_usize(toks[1], line, "vertex")?;
                let bad = |msg: String| Err(Error::Parse { line, msg });
                if u == 0 || v == 0 || u > n || v > n {
                    return bad(format!("edge {u} {v} leaves the range 1..={n}"));
                }
                if u >= v {
                    return bad(format!("edge {u} {v} must be listed with u < v"));
                }
                if edges.len() == m {
                    return bad(format!("more than the declared {m} edges"));
                }
                if edges.contains(&(u, v)) {
                    return bad(format!("duplicate edge {u} {v}"));
                }
                edges.push((u, v));
            }
        }
    }
    let Some((n, m, hline)) = header else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing \"n m\" header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges but {} were listed", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT rendering with vertices and edges in ascending order.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let text = "# example\n6 5\n\n1 3\n2 3 # spoke\n3 4\n4 5\n4 6\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edges(), vec![(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("3 2\n1 2\n\n2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        let err = parse_edge_list("3 1\n3 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("3 2\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_edge_list("3 1\n1 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn dot_is_stable() {
        let dot = to_dot(&Graph::path(3), "L3");
        assert_eq!(dot, "graph L3 {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n");
    }
}
