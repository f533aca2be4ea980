use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families.
///
/// `Path(l)` has `l` edges and `l + 1` vertices, `Star(l)` has `l` rays.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            NamedGraph::Complete(l) => {
                positive("complete", l)?;
                let edges = (0..l).flat_map(|u| (u + 1..l).map(move |v| (u, v)));
                Graph::new(l, edges)
            }
            NamedGraph::CompleteBipartite(a, b) => {
                positive("complete-bipartite", a)?;
                positive("complete-bipartite", b)?;
                let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
                Graph::new(a + b, edges)
            }
            NamedGraph::Path(l) => {
                positive("path", l)?;
                Graph::new(l + 1, (0..l).map(|i| (i, i + 1)))
            }
            NamedGraph::Cycle(l) => {
                if l < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "cycle length must be at least 3, got {l}"
                    )));
                }
                Graph::new(l, (0..l).map(|i| (i, (i + 1) % l)))
            }
            NamedGraph::Star(l) => {
                positive("star", l)?;
                Graph::new(l + 1, (1..=l).map(|i| (0, i)))
            }
        }
    }
}

fn positive(kind: &str, x: usize) -> Result<()> {
    if x == 0 {
        return Err(Error::InvalidParameter(format!(
            "{kind} parameter must be positive"
        )));
    }
    Ok(())
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(l) => write!(f, "complete:{l}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            NamedGraph::Path(l) => write!(f, "path:{l}"),
            NamedGraph::Cycle(l) => write!(f, "cycle:{l}"),
            NamedGraph::Star(l) => write!(f, "star:{l}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Parses `complete:L`, `complete-bipartite:A,B`, `path:L`, `cycle:L`, `star:L`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse graph family '{s}'"));
        let (kind, params) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind, nums.as_slice()) {
            ("complete", [l]) => Ok(NamedGraph::Complete(*l)),
            ("complete-bipartite", [a, b]) => Ok(NamedGraph::CompleteBipartite(*a, *b)),
            ("path", [l]) => Ok(NamedGraph::Path(*l)),
            ("cycle", [l]) => Ok(NamedGraph::Cycle(*l)),
            ("star", [l]) => Ok(NamedGraph::Star(*l)),
            _ => Err(bad()),
        }
    }
}

/// The 5-cycle on `0..5` with a pendant edge `{i, i + 5}` at every cycle vertex.
pub fn p3_witness() -> Graph {
    let cycle = (0..5).map(|i| (i, (i + 1) % 5));
    let pendants = (0..5).map(|i| (i, i + 5));
    Graph::new(10, cycle.chain(pendants)).expect("fixed construction is valid")
}
