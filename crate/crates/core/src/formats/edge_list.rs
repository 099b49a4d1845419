//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored. Line numbers in
//! errors are 1-based.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::EdgeList {
            line: lineno,
            reason: format!("expected two integers, found {} fields", fields.len()),
        });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::EdgeList {
            line: lineno,
            reason: format!("'{s}' is not a non-negative integer"),
        })
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn decode(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing 'n m' header".into(),
    })?;
    let (n, m) = parse_pair(header, header_line)?;

    let mut g = Graph::empty(n);
    let mut count = 0;
    let mut last_line = header_line;
    for (lineno, line) in lines {
        last_line = lineno;
        let (u, v) = parse_pair(line, lineno)?;
        let fail = |reason: String| Error::EdgeList { line: lineno, reason };
        if count == m {
            return Err(fail(format!("more than the declared {m} edges")));
        }
        if u >= n || v >= n {
            return Err(fail(format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(fail(format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(fail(format!("duplicate edge {u} {v}")));
        }
        g.toggle_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::EdgeList {
            line: last_line,
            reason: format!("declared {m} edges, found {count}"),
        });
    }
    Ok(g)
}

pub fn encode(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
