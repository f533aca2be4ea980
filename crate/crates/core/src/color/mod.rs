//! Edge colorings: monochromatic-pattern detection, the exhaustive Ramsey
//! verifier, greedy back-degree colorings, the three partition engines and
//! star-coloring extraction.

mod detect;
mod engines;
mod greedy;
mod search;
mod star;

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::io::{data_lines, parse_fields};
use crate::graph::{Graph, NamedGraph};

pub use detect::{find_copy, find_mono_copy, MonoCopy, EXPLICIT_PATTERN_LIMIT};
pub use engines::{biclique_free_partition, cycle_free_partition, path_free_partition, EngineOptions};
pub use greedy::greedy_backdegree_coloring;
pub use search::{ffree_coloring_small, is_ramsey, RamseyVerdict, SearchOptions, SMALL_COLORING_EDGE_LIMIT};
pub use star::{extract_star_coloring, is_centered_star_coloring, StarColoring};

/// A forbidden subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `l` edges.
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Biclique(usize, usize),
    /// `l` rays.
    Star(usize),
    Explicit(Graph),
}

impl Pattern {
    /// The pattern as a graph. Biclique sides are `0..a` and `a..a+b`,
    /// paths and cycles are numbered along the walk, stars have centre `0`.
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Pattern::Path(l) => NamedGraph::Path(*l).build(),
            Pattern::Cycle(l) => NamedGraph::Cycle(*l).build(),
            Pattern::Clique(l) => NamedGraph::Complete(*l).build(),
            Pattern::Biclique(a, b) => NamedGraph::CompleteBipartite(*a, *b).build(),
            Pattern::Star(l) => NamedGraph::Star(*l).build(),
            Pattern::Explicit(g) => Ok(g.clone()),
        }
    }

    /// Checks the parameters.
    pub fn validate(&self) -> Result<()> {
        match self {
            Pattern::Clique(l) if *l < 2 => Err(Error::InvalidParameter(format!(
                "clique pattern needs at least 2 vertices, got {l}"
            ))),
            Pattern::Explicit(g) if g.edge_count() == 0 => Err(Error::InvalidParameter(
                "explicit pattern must have at least one edge".into(),
            )),
            Pattern::Explicit(g) if g.vertex_count() > EXPLICIT_PATTERN_LIMIT => {
                Err(Error::SizeLimit(format!(
                    "explicit patterns are limited to {EXPLICIT_PATTERN_LIMIT} vertices, got {}",
                    g.vertex_count()
                )))
            }
            Pattern::Explicit(_) => Ok(()),
            other => other.to_graph().map(|_| ()),
        }
    }

    /// Whether every copy of the pattern contains a cycle.
    pub fn has_cycle(&self) -> bool {
        match self {
            Pattern::Path(_) | Pattern::Star(_) => false,
            Pattern::Cycle(_) => true,
            Pattern::Clique(l) => *l >= 3,
            Pattern::Biclique(a, b) => *a >= 2 && *b >= 2,
            Pattern::Explicit(g) => !crate::decompose::is_forest(g.vertex_count(), g.edges()),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(l) => write!(f, "path:{l}"),
            Pattern::Cycle(l) => write!(f, "cycle:{l}"),
            Pattern::Clique(l) => write!(f, "clique:{l}"),
            Pattern::Biclique(a, b) => write!(f, "biclique:{a},{b}"),
            Pattern::Star(l) => write!(f, "star:{l}"),
            Pattern::Explicit(g) => write!(f, "explicit({} vertices, {} edges)", g.vertex_count(), g.edge_count()),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// `path:L | cycle:L | clique:L | biclique:A,B | star:L`. Explicit
    /// patterns (`file:PATH`) are resolved by the caller.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse pattern '{s}'"));
        let (kind, params) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let p = match (kind, nums.as_slice()) {
            ("path", [l]) => Pattern::Path(*l),
            ("cycle", [l]) => Pattern::Cycle(*l),
            ("clique", [l]) => Pattern::Clique(*l),
            ("biclique", [a, b]) => Pattern::Biclique(*a, *b),
            ("star", [l]) => Pattern::Star(*l),
            _ => return Err(bad()),
        };
        p.validate()?;
        Ok(p)
    }
}

/// An assignment of colors `0..r` to the edges of `host`, indexed like
/// `host.edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    r: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(host: Graph, r: usize, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != host.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "{} colors for {} edges",
                colors.len(),
                host.edge_count()
            )));
        }
        if let Some(c) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::InvalidParameter(format!("color {c} out of range 0..{r}")));
        }
        Ok(EdgeColoring { host, r, colors })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.host.edge_index(u, v).map(|i| self.colors[i])
    }

    /// Edges of color `c`.
    pub fn class(&self, c: usize) -> Vec<(usize, usize)> {
        self.host
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|&(_, &x)| x == c)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn class_graph(&self, c: usize) -> Graph {
        Graph::new(self.host.vertex_count(), self.class(c)).expect("subgraph of a valid graph")
    }

    /// Applies a permutation of the colors: `c` becomes `perm[c]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        EdgeColoring::new(
            self.host.clone(),
            self.r,
            self.colors.iter().map(|&c| perm[c]).collect(),
        )
    }

    /// `n e r` header, then one `u v c` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.host.vertex_count(), self.host.edge_count(), self.r);
        for (&(u, v), c) in self.host.edges().iter().zip(&self.colors) {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (hl, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing 'n e r' header".into(),
        })?;
        let [n, e, r] = parse_fields::<3>(hl, header)?;
        let mut edges = Vec::with_capacity(e);
        let mut by_edge = Vec::with_capacity(e);
        for (ln, l) in lines {
            let [u, v, c] = parse_fields::<3>(ln, l)?;
            if !(u < v && v < n) {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("edge '{u} {v}' violates 0 <= u < v < {n}"),
                });
            }
            if c >= r {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("color {c} out of range 0..{r}"),
                });
            }
            edges.push((u, v));
            by_edge.push(((u, v), c));
        }
        if edges.len() != e {
            return Err(Error::Parse {
                line: hl,
                message: format!("header declares {e} edges, found {}", edges.len()),
            });
        }
        let host = Graph::new(n, edges).map_err(|err| Error::Parse {
            line: hl,
            message: err.to_string(),
        })?;
        let mut colors = vec![0; e];
        for ((u, v), c) in by_edge {
            colors[host.edge_index(u, v).expect("edge was inserted")] = c;
        }
        EdgeColoring::new(host, r, colors)
    }
}

/// Mutable adjacency lists for a growing or shrinking edge set. Edges are
/// removed in reverse insertion order.
#[derive(Clone, Debug)]
pub(crate) struct Adjacency {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Adjacency {
    pub(crate) fn new(n: usize) -> Self {
        Adjacency {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    pub(crate) fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut a = Adjacency::new(n);
        for &(u, v) in edges {
            a.push(u, v);
        }
        a
    }

    pub(crate) fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.edges
    }

    pub(crate) fn push(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges += 1;
    }

    pub(crate) fn pop(&mut self, u: usize, v: usize) {
        let a = self.adj[u].pop();
        let b = self.adj[v].pop();
        debug_assert_eq!((a, b), (Some(v), Some(u)));
        self.edges -= 1;
    }

    pub(crate) fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub(crate) fn adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].contains(&b)
    }

    pub(crate) fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn is_forest(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut components = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        self.edges + components == self.n()
    }
}

/// Edges ordered by breadth-first search from vertex 0 (then from the
/// next unvisited vertex): the edges to each newly scanned vertex's
/// neighbours in ascending order, each edge once.
pub(crate) fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut taken = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                let e = g.edge_index(x, y).expect("neighbour edge exists");
                if !taken[e] {
                    taken[e] = true;
                    order.push(e);
                }
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}
