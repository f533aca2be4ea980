//! Exhaustive search for edge colorings without a monochromatic pattern.
//!
//! Edges are decided in breadth-first order from vertex 0. The first edge
//! gets color 0 and a color `c + 1` is only used after color `c`, so each
//! coloring is visited once up to color permutation. The first few edge
//! decisions form prefixes that are searched in parallel; the result is the
//! good coloring of the lexicographically first successful prefix, so
//! certificates do not depend on the thread count.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::detect::copy_through;
use super::{bfs_edge_order, find_mono_copy, Adjacency, EdgeColoring, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph handed to [`ffree_coloring_small`].
pub const SMALL_COLORING_EDGE_LIMIT: usize = 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of color assignments tried.
    pub budget: u64,
    /// Edge decisions enumerated before the parallel split.
    pub parallel_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 1_000_000_000,
            parallel_depth: 3,
        }
    }
}

/// Outcome of [`is_ramsey`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyVerdict {
    pub is_ramsey: bool,
    /// A good coloring when `is_ramsey` is false.
    pub certificate: Option<EdgeColoring>,
    /// Color assignments tried.
    pub nodes: u64,
    /// Number of parallel prefixes after symmetry breaking.
    pub prefixes: usize,
}

enum Outcome {
    Found(Vec<usize>),
    Empty,
    Exhausted,
    Cancelled,
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Pattern,
    r: usize,
    order: Vec<usize>,
    nodes: AtomicU64,
    budget: u64,
    best: AtomicUsize,
}

struct State {
    classes: Vec<Adjacency>,
    colors: Vec<usize>,
    used: usize,
}

impl Search<'_> {
    fn state(&self) -> State {
        State {
            classes: (0..self.r).map(|_| Adjacency::new(self.g.vertex_count())).collect(),
            colors: vec![usize::MAX; self.g.edge_count()],
            used: 0,
        }
    }

    /// Colors `order[pos]` with `c`; `false` if that closes a monochromatic copy.
    fn try_color(&self, st: &mut State, pos: usize, c: usize) -> bool {
        let e = self.order[pos];
        let (u, v) = self.g.edges()[e];
        st.classes[c].push(u, v);
        if copy_through(&st.classes[c], self.pattern, u, v).is_some() {
            st.classes[c].pop(u, v);
            return false;
        }
        st.colors[e] = c;
        true
    }

    fn uncolor(&self, st: &mut State, pos: usize, c: usize) {
        let e = self.order[pos];
        let (u, v) = self.g.edges()[e];
        st.classes[c].pop(u, v);
        st.colors[e] = usize::MAX;
    }

    /// Canonical prefixes of length `depth` without a monochromatic copy.
    fn prefixes(&self, depth: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut st = self.state();
        let mut prefix = Vec::new();
        self.collect_prefixes(&mut st, &mut prefix, depth, &mut out);
        out
    }

    fn collect_prefixes(&self, st: &mut State, prefix: &mut Vec<usize>, depth: usize, out: &mut Vec<Vec<usize>>) {
        let pos = prefix.len();
        if pos == depth {
            out.push(prefix.clone());
            return;
        }
        let used = st.used;
        for c in 0..=used.min(self.r - 1) {
            if self.try_color(st, pos, c) {
                st.used = used.max(c + 1);
                prefix.push(c);
                self.collect_prefixes(st, prefix, depth, out);
                prefix.pop();
                st.used = used;
                self.uncolor(st, pos, c);
            }
        }
    }

    fn run_prefix(&self, index: usize, prefix: &[usize]) -> Outcome {
        if self.best.load(Ordering::Relaxed) < index {
            return Outcome::Cancelled;
        }
        let mut st = self.state();
        for (pos, &c) in prefix.iter().enumerate() {
            let ok = self.try_color(&mut st, pos, c);
            debug_assert!(ok);
            st.used = st.used.max(c + 1);
        }
        let out = self.dfs(&mut st, prefix.len(), index);
        if let Outcome::Found(_) = out {
            self.best.fetch_min(index, Ordering::Relaxed);
        }
        out
    }

    fn dfs(&self, st: &mut State, pos: usize, index: usize) -> Outcome {
        if pos == self.order.len() {
            return Outcome::Found(st.colors.clone());
        }
        let used = st.used;
        for c in 0..=used.min(self.r - 1) {
            let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if n > self.budget {
                return Outcome::Exhausted;
            }
            if n % 4096 == 0 && self.best.load(Ordering::Relaxed) < index {
                return Outcome::Cancelled;
            }
            if !self.try_color(st, pos, c) {
                continue;
            }
            st.used = used.max(c + 1);
            let out = self.dfs(st, pos + 1, index);
            st.used = used;
            self.uncolor(st, pos, c);
            if !matches!(out, Outcome::Empty) {
                return out;
            }
        }
        Outcome::Empty
    }
}

/// Searches for an `r`-coloring of `g` without a monochromatic `pattern`.
/// `Ok(None)` means no such coloring exists.
fn good_coloring(g: &Graph, pattern: &Pattern, r: usize, opts: SearchOptions) -> Result<(Option<EdgeColoring>, u64, usize)> {
    pattern.validate()?;
    if r == 0 {
        return Err(Error::InvalidParameter("need at least one color".into()));
    }
    let search = Search {
        g,
        pattern,
        r,
        order: bfs_edge_order(g),
        nodes: AtomicU64::new(0),
        budget: opts.budget,
        best: AtomicUsize::new(usize::MAX),
    };
    let depth = opts.parallel_depth.min(g.edge_count());
    let prefixes = search.prefixes(depth);
    let outcomes: Vec<Outcome> = prefixes
        .par_iter()
        .enumerate()
        .map(|(i, p)| search.run_prefix(i, p))
        .collect();
    let nodes = search.nodes.load(Ordering::Relaxed);
    for out in outcomes {
        match out {
            Outcome::Found(colors) => {
                let coloring = EdgeColoring::new(g.clone(), r, colors)?;
                if let Some(copy) = find_mono_copy(&coloring, pattern)? {
                    return Err(Error::Internal(format!(
                        "search returned a coloring with a monochromatic copy in color {}",
                        copy.color
                    )));
                }
                return Ok((Some(coloring), nodes, prefixes.len()));
            }
            Outcome::Exhausted => return Err(Error::BudgetExhausted { nodes }),
            Outcome::Empty => {}
            Outcome::Cancelled => {
                return Err(Error::Internal("prefix cancelled before a result".into()))
            }
        }
    }
    Ok((None, nodes, prefixes.len()))
}

/// Whether every `r`-coloring of `g` has a monochromatic copy of `pattern`.
pub fn is_ramsey(g: &Graph, pattern: &Pattern, r: usize, opts: SearchOptions) -> Result<RamseyVerdict> {
    let (certificate, nodes, prefixes) = good_coloring(g, pattern, r, opts)?;
    Ok(RamseyVerdict {
        is_ramsey: certificate.is_none(),
        certificate,
        nodes,
        prefixes,
    })
}

/// An `r`-coloring of a small graph without a monochromatic `pattern`, or
/// `None` if there is none. At most [`SMALL_COLORING_EDGE_LIMIT`] edges.
pub fn ffree_coloring_small(h: &Graph, pattern: &Pattern, r: usize, opts: SearchOptions) -> Result<Option<EdgeColoring>> {
    if h.edge_count() > SMALL_COLORING_EDGE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "exhaustive coloring is limited to {SMALL_COLORING_EDGE_LIMIT} edges, graph has {}",
            h.edge_count()
        )));
    }
    Ok(good_coloring(h, pattern, r, opts)?.0)
}
