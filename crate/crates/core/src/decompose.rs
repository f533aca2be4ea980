//! Forest partitions, star-forest splits, acyclic orientations and the
//! diameter-bounded arboricity `a_d`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeMultiset, Graph, MultiGraph};
use crate::parameters::m1_density;
use crate::rational::ceil_u64;

/// A partition of a multigraph's edges into forests. Each class holds
/// distinct vertex pairs `(u, v)` with `u < v`; a pair of multiplicity `t`
/// appears in exactly `t` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestPartition {
    pub host: MultiGraph,
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl ForestPartition {
    /// Checks that the classes are forests and partition the host's edges.
    pub fn verify(&self) -> Result<()> {
        let n = self.host.vertex_count();
        let mut count = std::collections::BTreeMap::new();
        for (i, class) in self.classes.iter().enumerate() {
            if !is_forest(n, class) {
                return Err(Error::Internal(format!("class {i} is not a forest")));
            }
            for &(u, v) in class {
                *count.entry((u.min(v), u.max(v))).or_insert(0u64) += 1;
            }
        }
        let host: std::collections::BTreeMap<(usize, usize), u64> =
            self.host.pairs().iter().map(|&(u, v, w)| ((u, v), w)).collect();
        if count != host {
            return Err(Error::Internal(
                "forest classes do not partition the edges".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ForestPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            write!(f, "class {i}:")?;
            for (u, v) in class {
                write!(f, " {u}-{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Union-find acyclicity test; parallel pairs count as a cycle.
pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in edges {
        if u >= n || v >= n || u == v {
            return false;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Every component is a star: each edge has an endpoint of degree one.
pub fn is_star_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    if !is_forest(n, edges) {
        return false;
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    edges.iter().all(|&(u, v)| deg[u] == 1 || deg[v] == 1)
}

/// One forest of the partition under construction.
struct Class {
    adj: Vec<Vec<(usize, usize)>>, // (neighbour, unit)
}

impl Class {
    fn new(n: usize) -> Self {
        Class {
            adj: vec![Vec::new(); n],
        }
    }

    /// Units on the tree path from `u` to `v`, or `None` if disconnected.
    fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                let mut units = Vec::new();
                let mut y = v;
                while let Some((p, unit)) = prev[y] {
                    units.push(unit);
                    y = p;
                }
                return Some(units);
            }
            for &(y, unit) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, unit));
                    queue.push_back(y);
                }
            }
        }
        None
    }

    fn insert(&mut self, (u, v): (usize, usize), unit: usize) {
        self.adj[u].push((v, unit));
        self.adj[v].push((u, unit));
    }

    fn remove(&mut self, (u, v): (usize, usize), unit: usize) {
        self.adj[u].retain(|&(_, x)| x != unit);
        self.adj[v].retain(|&(_, x)| x != unit);
    }
}

/// Incremental matroid-partition state over edge units.
struct Partitioner {
    n: usize,
    units: Vec<(usize, usize)>,
    owner: Vec<Option<usize>>,
    classes: Vec<Class>,
}

impl Partitioner {
    /// Tries to place `start` by an augmenting path; `false` if every class
    /// is blocked.
    fn insert(&mut self, start: usize) -> bool {
        let mut label: Vec<Option<(usize, usize)>> = vec![None; self.units.len()]; // (pred, class)
        let mut visited = vec![false; self.units.len()];
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let (u, v) = self.units[x];
            for c in 0..self.classes.len() {
                if self.owner[x] == Some(c) {
                    continue;
                }
                match self.classes[c].path(u, v) {
                    None => {
                        self.augment(x, c, &label);
                        return true;
                    }
                    Some(cycle) => {
                        for y in cycle {
                            if !visited[y] {
                                visited[y] = true;
                                label[y] = Some((x, c));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment(&mut self, mut x: usize, mut target: usize, label: &[Option<(usize, usize)>]) {
        loop {
            if let Some(old) = self.owner[x] {
                self.classes[old].remove(self.units[x], x);
            }
            self.classes[target].insert(self.units[x], x);
            self.owner[x] = Some(target);
            match label[x] {
                Some((pred, class)) => {
                    x = pred;
                    target = class;
                }
                None => return,
            }
        }
    }
}

fn partition_units(g: &MultiGraph, limit: Option<usize>) -> Result<ForestPartition> {
    let n = g.vertex_count();
    let units: Vec<(usize, usize)> = g
        .pairs()
        .iter()
        .flat_map(|&(u, v, w)| std::iter::repeat_n((u, v), w as usize))
        .collect();
    let mut p = Partitioner {
        n,
        owner: vec![None; units.len()],
        units,
        classes: Vec::new(),
    };
    if let Some(r) = limit {
        p.classes = (0..r).map(|_| Class::new(n)).collect();
    }
    for unit in 0..p.units.len() {
        if p.insert(unit) {
            continue;
        }
        match limit {
            Some(r) => {
                return Err(Error::PreconditionViolated(format!(
                    "edges do not fit into {r} forests"
                )))
            }
            None => {
                p.classes.push(Class::new(p.n));
                let placed = p.insert(unit);
                debug_assert!(placed);
            }
        }
    }
    let mut classes = vec![Vec::new(); p.classes.len()];
    for (unit, owner) in p.owner.iter().enumerate() {
        let c = owner.expect("every unit is placed");
        classes[c].push(p.units[unit]);
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    Ok(ForestPartition {
        host: g.clone(),
        classes,
    })
}

/// Partitions the edges into the minimum number of forests, which equals
/// `ceil(m1(G))` (zero for edgeless graphs).
pub fn nash_williams<G: EdgeMultiset + ?Sized>(g: &G) -> ForestPartition {
    let mg = MultiGraph::new(g.vertex_count(), g.weighted_pairs()).expect("valid multiset");
    partition_units(&mg, None).expect("unbounded partition always succeeds")
}

/// Partitions the edges into exactly `r` forests (some possibly empty).
pub fn nash_williams_into<G: EdgeMultiset + ?Sized>(g: &G, r: usize) -> Result<ForestPartition> {
    let mg = MultiGraph::new(g.vertex_count(), g.weighted_pairs())?;
    partition_units(&mg, Some(r))
}

/// Splits a forest on vertices `0..n` into two star forests: each tree is
/// rooted at its smallest vertex and the edge from a parent at depth `d`
/// goes to class `d mod 2`.
pub fn split_into_star_forests(
    n: usize,
    forest: &[(usize, usize)],
) -> Result<[Vec<(usize, usize)>; 2]> {
    if !is_forest(n, forest) {
        return Err(Error::NotAForest(format!(
            "{} edges on {n} vertices contain a cycle or an invalid pair",
            forest.len()
        )));
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in forest {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut depth = vec![usize::MAX; n];
    let mut out: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    out[depth[x] % 2].push((x.min(y), x.max(y)));
                    queue.push_back(y);
                }
            }
        }
    }
    out[0].sort_unstable();
    out[1].sort_unstable();
    Ok(out)
}

/// An acyclic orientation: every arc points forward in `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub n: usize,
    /// `(from, to, multiplicity)`.
    pub arcs: Vec<(usize, usize, u64)>,
    /// Topological order of the vertices.
    pub order: Vec<usize>,
    pub max_in_degree: u64,
}

impl Orientation {
    pub fn in_degrees(&self) -> Vec<u64> {
        let mut d = vec![0; self.n];
        for &(_, v, w) in &self.arcs {
            d[v] += w;
        }
        d
    }

    /// Checks the order is a permutation, arcs point forward, the arcs
    /// cover `host` exactly and the recorded maximum in-degree is right.
    pub fn verify<G: EdgeMultiset + ?Sized>(&self, host: &G) -> Result<()> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= self.n || pos[v] != usize::MAX {
                return Err(Error::Internal("order is not a permutation".into()));
            }
            pos[v] = i;
        }
        if self.order.len() != self.n || self.n != host.vertex_count() {
            return Err(Error::Internal("order does not cover the host".into()));
        }
        let mut undirected: Vec<(usize, usize, u64)> = Vec::new();
        for &(u, v, w) in &self.arcs {
            if pos[u] >= pos[v] {
                return Err(Error::Internal(format!("arc {u}->{v} points backwards")));
            }
            undirected.push((u.min(v), u.max(v), w));
        }
        undirected.sort_unstable();
        if undirected != host.weighted_pairs() {
            return Err(Error::Internal("arcs do not match host edges".into()));
        }
        let max = self.in_degrees().into_iter().max().unwrap_or(0);
        if max != self.max_in_degree {
            return Err(Error::Internal("recorded in-degree is wrong".into()));
        }
        Ok(())
    }
}

/// Acyclic orientation with every in-degree at most `k`, by peeling a
/// vertex of current degree at most `k` (smallest id first) and orienting
/// its remaining edges toward it.
///
/// Succeeds exactly when the degeneracy (with multiplicity) is at most `k`.
/// On failure the error carries the `(k+1)`-core that blocked peeling.
pub fn acyclic_orient<G: EdgeMultiset + ?Sized>(g: &G, k: u64) -> Result<Orientation> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("k must be at least 1, got {k}")));
    }
    let n = g.vertex_count();
    let pairs = g.weighted_pairs();
    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    let mut deg = vec![0u64; n];
    for &(u, v, w) in &pairs {
        adj[u].push((v, w));
        adj[v].push((u, w));
        deg[u] += w;
        deg[v] += w;
    }
    let mut queue: BTreeSet<(u64, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    let mut arcs = Vec::with_capacity(pairs.len());
    let mut max_in = 0;
    while let Some(&(d, v)) = queue.iter().next() {
        if d > k {
            let core: Vec<usize> = (0..n).filter(|&x| !removed[x]).collect();
            return Err(Error::Infeasible { k, core });
        }
        queue.remove(&(d, v));
        removed[v] = true;
        peeled.push(v);
        max_in = max_in.max(d);
        for &(y, w) in &adj[v] {
            if !removed[y] {
                arcs.push((y, v, w));
                queue.remove(&(deg[y], y));
                deg[y] -= w;
                queue.insert((deg[y], y));
            }
        }
    }
    peeled.reverse();
    arcs.sort_unstable();
    Ok(Orientation {
        n,
        arcs,
        order: peeled,
        max_in_degree: max_in,
    })
}

/// Diameter bound for [`a_d_exact`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

/// Size caps for the exhaustive `a_d` search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for AdLimits {
    fn default() -> Self {
        AdLimits {
            max_vertices: 10,
            max_edges: 15,
        }
    }
}

/// Minimum number of forests, each with all components of diameter at
/// most `d`, partitioning `E(G)`. `Diameter::Infinite` gives the
/// arboricity `ceil(m1(G))`.
pub fn a_d_exact(g: &Graph, d: Diameter, limits: AdLimits) -> Result<usize> {
    let arboricity = if g.edge_count() == 0 {
        0
    } else {
        let m1 = m1_density(g)?.value;
        ceil_u64(&m1).expect("arboricity fits in u64") as usize
    };
    let d = match d {
        Diameter::Infinite => return Ok(arboricity),
        Diameter::Finite(d) if d < 2 => {
            return Err(Error::InvalidParameter(format!(
                "diameter bound must be at least 2, got {d}"
            )))
        }
        Diameter::Finite(d) => d,
    };
    let (n, e) = (g.vertex_count(), g.edge_count());
    if n > limits.max_vertices || e > limits.max_edges {
        return Err(Error::SizeLimit(format!(
            "a_d search is limited to {} vertices and {} edges, graph has {n} and {e}",
            limits.max_vertices, limits.max_edges
        )));
    }
    if n > 32 {
        return Err(Error::SizeLimit("a_d search supports at most 32 vertices".into()));
    }
    if e == 0 {
        return Ok(0);
    }
    // two star forests per forest always suffice
    for t in arboricity..2 * arboricity {
        if DiameterSearch::new(g, t, d).solve() {
            return Ok(t);
        }
    }
    Ok(2 * arboricity)
}

const FAR: u8 = u8::MAX;

/// Backtracking over class assignments with canonical class introduction,
/// most-constrained-edge ordering and forward checking.
struct DiameterSearch<'a> {
    g: &'a Graph,
    t: usize,
    d: usize,
    /// `dist[c][x * n + y]`, `FAR` when in different components.
    dist: Vec<Vec<u8>>,
    assigned: Vec<bool>,
    used: usize,
}

impl<'a> DiameterSearch<'a> {
    fn new(g: &'a Graph, t: usize, d: usize) -> Self {
        let n = g.vertex_count();
        let mut blank = vec![FAR; n * n];
        for x in 0..n {
            blank[x * n + x] = 0;
        }
        DiameterSearch {
            g,
            t,
            d,
            dist: vec![blank; t],
            assigned: vec![false; g.edge_count()],
            used: 0,
        }
    }

    fn fits(&self, c: usize, (u, v): (usize, usize)) -> bool {
        let n = self.g.vertex_count();
        let dist = &self.dist[c];
        if dist[u * n + v] != FAR {
            return false;
        }
        let ecc = |x: usize| {
            (0..n)
                .filter_map(|y| (dist[x * n + y] != FAR).then_some(dist[x * n + y] as usize))
                .max()
                .unwrap_or(0)
        };
        ecc(u) + 1 + ecc(v) <= self.d
    }

    fn join(&mut self, c: usize, (u, v): (usize, usize)) {
        let n = self.g.vertex_count();
        let dist = &mut self.dist[c];
        let side_u: Vec<usize> = (0..n).filter(|&x| dist[x * n + u] != FAR).collect();
        let side_v: Vec<usize> = (0..n).filter(|&y| dist[v * n + y] != FAR).collect();
        for &x in &side_u {
            for &y in &side_v {
                let l = dist[x * n + u] + 1 + dist[v * n + y];
                dist[x * n + y] = l;
                dist[y * n + x] = l;
            }
        }
    }

    /// Classes an unassigned edge could still join.
    fn options(&self, e: usize) -> Vec<usize> {
        let edge = self.g.edges()[e];
        let mut out: Vec<usize> = (0..self.used).filter(|&c| self.fits(c, edge)).collect();
        if self.used < self.t {
            out.push(self.used);
        }
        out
    }

    fn solve(&mut self) -> bool {
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for e in 0..self.assigned.len() {
            if self.assigned[e] {
                continue;
            }
            let opts = self.options(e);
            if opts.is_empty() {
                return false;
            }
            if pick.as_ref().is_none_or(|p| opts.len() < p.1.len()) {
                let single = opts.len() == 1;
                pick = Some((e, opts));
                if single {
                    break;
                }
            }
        }
        let Some((e, opts)) = pick else {
            return true;
        };
        let edge = self.g.edges()[e];
        self.assigned[e] = true;
        for c in opts {
            let saved = self.dist[c].clone();
            let saved_used = self.used;
            self.join(c, edge);
            if c == self.used {
                self.used += 1;
            }
            if self.solve() {
                return true;
            }
            self.dist[c] = saved;
            self.used = saved_used;
        }
        self.assigned[e] = false;
        false
    }
}
