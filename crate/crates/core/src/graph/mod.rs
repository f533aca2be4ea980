//! Simple graphs, loopless multigraphs, and the structural operations shared
//! by every other module.
//!
//! Vertices are dense ids `0..n`. Every operation that relabels vertices
//! returns the relabeling so certificates can be pulled back to the host.

pub(crate) mod io;
mod named;

pub use io::{read_edge_list, write_edge_list, write_multigraph};
pub use named::{p3_witness, NamedGraph};

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v` and sorted, so the
/// position of an edge in [`Graph::edges`] is a stable edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "parallel edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The graph as a multigraph with every multiplicity equal to one.
    pub fn to_multigraph(&self) -> MultiGraph {
        MultiGraph::from_sorted_pairs(self.n, self.edges.iter().map(|&(u, v)| (u, v, 1)).collect())
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring `side[v] ∈ {0, 1}` if the graph is bipartite.
    /// Each component's smallest vertex gets side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

/// A loopless multigraph. Multiplicities are stored explicitly per vertex pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    pairs: Vec<(usize, usize, u64)>,
}

impl MultiGraph {
    /// Builds a multigraph; repeated pairs have their multiplicities summed.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut acc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (u, v, w) in pairs {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "pair {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if w > 0 {
                *acc.entry((u.min(v), u.max(v))).or_insert(0) += w;
            }
        }
        Ok(Self::from_sorted_pairs(
            n,
            acc.into_iter().map(|((u, v), w)| (u, v, w)).collect(),
        ))
    }

    fn from_sorted_pairs(n: usize, pairs: Vec<(usize, usize, u64)>) -> Self {
        MultiGraph { n, pairs }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distinct vertex pairs with their multiplicities, sorted.
    pub fn pairs(&self) -> &[(usize, usize, u64)] {
        &self.pairs
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.pairs.iter().map(|p| p.2).sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        let key = (u.min(v), u.max(v));
        self.pairs
            .binary_search_by(|p| (p.0, p.1).cmp(&key))
            .map(|i| self.pairs[i].2)
            .unwrap_or(0)
    }

    /// Degree of every vertex, counting multiplicity.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0; self.n];
        for &(u, v, w) in &self.pairs {
            deg[u] += w;
            deg[v] += w;
        }
        deg
    }

    /// Neighbour lists `(neighbour, multiplicity)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, w) in &self.pairs {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        adj
    }

    /// The underlying simple graph if every multiplicity is one.
    pub fn to_simple(&self) -> Option<Graph> {
        if self.pairs.iter().any(|p| p.2 != 1) {
            return None;
        }
        Some(Graph::from_sorted(
            self.n,
            self.pairs.iter().map(|&(u, v, _)| (u, v)).collect(),
        ))
    }
}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> Self {
        g.to_multigraph()
    }
}

/// Anything that can be viewed as a weighted edge multiset on `0..n`.
/// Implemented by [`Graph`] (all weights one) and [`MultiGraph`].
pub trait EdgeMultiset {
    fn vertex_count(&self) -> usize;
    fn weighted_pairs(&self) -> Vec<(usize, usize, u64)>;
}

impl EdgeMultiset for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn weighted_pairs(&self) -> Vec<(usize, usize, u64)> {
        self.edges.iter().map(|&(u, v)| (u, v, 1)).collect()
    }
}

impl EdgeMultiset for MultiGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn weighted_pairs(&self) -> Vec<(usize, usize, u64)> {
        self.pairs.clone()
    }
}

/// Pairwise-disjoint nonempty vertex subsets of a host graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFamily {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl VertexFamily {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        let mut normalized = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::InvalidFamily(format!("set {i} is empty")));
            }
            for &v in &set {
                if v >= n {
                    return Err(Error::InvalidFamily(format!(
                        "set {i} contains vertex {v} outside 0..{n}"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidFamily(format!(
                        "sets {} and {i} share vertex {v}",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
            normalized.push(set);
        }
        Ok(VertexFamily {
            n,
            sets: normalized,
        })
    }

    pub fn empty(n: usize) -> Self {
        VertexFamily {
            n,
            sets: Vec::new(),
        }
    }

    pub fn host_vertex_count(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Induced subgraph on `subset` (sorted and deduplicated first).
///
/// Returns the subgraph and `map`, where `map[i]` is the host vertex that
/// became vertex `i`.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut map: Vec<usize> = subset.to_vec();
    map.sort_unstable();
    map.dedup();
    if let Some(&v) = map.iter().find(|&&v| v >= g.n) {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} is not in the host graph"
        )));
    }
    let mut local = vec![usize::MAX; g.n];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let mut edges = Vec::new();
    for &(u, v) in &g.edges {
        if local[u] != usize::MAX && local[v] != usize::MAX {
            edges.push((local[u], local[v]));
        }
    }
    // local ids preserve the host order, so the edge list is still sorted
    Ok((Graph::from_sorted(map.len(), edges), map))
}

/// Contracts every set of `family` into a single vertex.
///
/// Edges inside a set vanish; all other edges survive with multiplicity.
/// New ids are assigned in order of each group's smallest host vertex; the
/// returned map sends host vertices to contracted vertices.
pub fn contract_family<G: EdgeMultiset + ?Sized>(
    g: &G,
    family: &VertexFamily,
) -> Result<(MultiGraph, Vec<usize>)> {
    let n = g.vertex_count();
    if family.n != n {
        return Err(Error::InvalidFamily(format!(
            "family is defined on {} vertices, host has {n}",
            family.n
        )));
    }
    let mut group = vec![usize::MAX; n];
    for (i, set) in family.sets.iter().enumerate() {
        for &v in set {
            group[v] = i;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut group_id = vec![usize::MAX; family.sets.len()];
    let mut next = 0;
    for v in 0..n {
        if map[v] != usize::MAX {
            continue;
        }
        match group[v] {
            usize::MAX => {
                map[v] = next;
            }
            gi => {
                group_id[gi] = next;
                for &w in &family.sets[gi] {
                    map[w] = next;
                }
            }
        }
        next += 1;
    }
    let pairs = g
        .weighted_pairs()
        .into_iter()
        .filter(|&(u, v, _)| map[u] != map[v])
        .map(|(u, v, w)| (map[u], map[v], w));
    Ok((MultiGraph::new(next, pairs)?, map))
}

/// A vertex ordering together with the degeneracy it certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    /// `order[i]` has at most `degeneracy` neighbours among `order[..i]`.
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

/// Minimum-degree peeling with ties broken by smallest vertex id.
///
/// The returned order is the reverse peeling order, so the back-degree of
/// each vertex equals its degree at the moment it was peeled.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let mut deg = g.degree_sequence();
    let mut queue: BTreeSet<(usize, usize)> = (0..g.n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; g.n];
    let mut peeled = Vec::with_capacity(g.n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        peeled.push(v);
        for &w in &g.adj[v] {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    peeled.reverse();
    DegeneracyOrder {
        order: peeled,
        degeneracy,
    }
}
