//! Text edge-list format.
//!
//! ```text
//! p <n> <m>
//! c <free-form comment>
//! e <u> <v>
//! ```
//!
//! Vertex indices are 1-based. Blank lines and lines starting with `c` are
//! ignored on read. The `p` line must precede every `e` line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Writes `g` canonically: the `p` line, then `comments` (each prefixed
/// with `c `), then edges sorted by `(u, v)`.
pub fn write_edge_list<S: AsRef<str>>(g: &Graph, comments: &[S]) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.order(), g.size()).unwrap();
    for c in comments {
        writeln!(out, "c {}", c.as_ref()).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let mut tokens = line.split_ascii_whitespace();
        let tag = tokens.next().unwrap();
        let nums = tokens
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("expected integer, got `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        match (tag, header) {
            ("p", None) => match nums[..] {
                [n, m] => {
                    if n == 0 {
                        return Err(err("graph order must be at least 1".into()));
                    }
                    header = Some((n, m));
                }
                _ => return Err(err("expected `p <n> <m>`".into())),
            },
            ("p", Some(_)) => return Err(err("duplicate `p` line".into())),
            ("e", None) => return Err(err("edge before `p` line".into())),
            ("e", Some((n, _))) => match nums[..] {
                [u, v] => {
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(err(format!("vertex out of range 1..={n}")));
                    }
                    edges.push((u - 1, v - 1, line_no));
                }
                _ => return Err(err("expected `e <u> <v>`".into())),
            },
            _ => return Err(err(format!("unknown line type `{tag}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing `p` line".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    // Re-run validation edge by edge so errors carry a line number.
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in &edges {
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at {}", u + 1),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {} {}", u + 1, v + 1),
            });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}
