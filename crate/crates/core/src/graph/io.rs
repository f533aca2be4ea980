//! Edge-list text format.
//!
//! ```text
//! # comment
//! n e
//! u v        (e lines, 0 <= u < v < n)
//! ```

use std::fmt::Write as _;

use super::{Graph, MultiGraph};
use crate::error::{Error, Result};

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_fields<const N: usize>(line: usize, s: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::Parse {
            line,
            message: format!("expected {N} fields, found {}", fields.len()),
        });
    }
    let mut out = [0usize; N];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            message: format!("'{f}' is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing 'n e' header".into(),
    })?;
    let [n, e] = parse_fields::<2>(hl, header)?;
    let mut edges = Vec::with_capacity(e);
    for (ln, l) in lines {
        let [u, v] = parse_fields::<2>(ln, l)?;
        if !(u < v && v < n) {
            return Err(Error::Parse {
                line: ln,
                message: format!("edge '{u} {v}' violates 0 <= u < v < {n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != e {
        return Err(Error::Parse {
            line: hl,
            message: format!("header declares {e} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges).map_err(|err| Error::Parse {
        line: hl,
        message: err.to_string(),
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// `n p` header followed by one `u v mult` line per distinct pair.
pub fn write_multigraph(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.pairs().len());
    for &(u, v, w) in g.pairs() {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::p3_witness;

    #[test]
    fn round_trip() {
        let g = p3_witness();
        let text = write_edge_list(&g);
        assert!(text.starts_with("10 10\n0 1\n"));
        assert_eq!(read_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_are_ignored() {
        let g = read_edge_list("# triangle\n3 3\n0 1\n# middle\n0 2\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn malformed_input() {
        let err = read_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = read_edge_list("3 1\n2 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = read_edge_list("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(read_edge_list("3 1\n0 x\n").is_err());
        assert!(read_edge_list("").is_err());
    }
}
