//! Brute-force oracles and graph generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparse_ramsey::rational::ratio;
use sparse_ramsey::{Graph, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A uniformly shuffled random forest: each vertex after the first joins
/// an earlier one with probability `p`.
pub fn random_forest(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let mut edges = Vec::new();
    for i in 1..n {
        if rng.random_bool(p) {
            let j = rng.random_range(0..i);
            edges.push((perm[i], perm[j]));
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).tuple_combinations()).unwrap()
}

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn inner(adj: &[u32], mask: u32) -> i128 {
    let mut e = 0;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        e += (adj[v as usize] & rest).count_ones() as i128;
    }
    e
}

pub fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `max f(e(H), v(H))` over vertex subsets with at least `min` vertices.
fn subset_max(g: &Graph, min: usize, f: impl Fn(i128, i128) -> Rational) -> Option<Rational> {
    let n = g.vertex_count();
    let adj = adjacency_masks(g);
    let mut best: Option<Rational> = None;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < min.max(1) {
            continue;
        }
        let x = f(inner(&adj, mask), size as i128);
        if best.as_ref().is_none_or(|b| x > *b) {
            best = Some(x);
        }
    }
    best
}

pub fn oracle_m(g: &Graph) -> Rational {
    subset_max(g, 1, |e, v| ratio(e, v)).unwrap_or_else(|| ratio(0, 1))
}

pub fn oracle_m1(g: &Graph) -> Option<Rational> {
    subset_max(g, 2, |e, v| ratio(e, v - 1))
}

/// `0` when the graph has fewer than `k` vertices.
pub fn oracle_m1k(g: &Graph, k: usize) -> Rational {
    subset_max(g, k.max(2), |e, v| ratio(e, v - 1)).unwrap_or_else(|| ratio(0, 1))
}

pub fn oracle_m2(g: &Graph) -> Option<Rational> {
    subset_max(g, 3, |e, v| ratio(e - 1, v - 2))
}

/// `e(S) > r(|S| - 1)`.
pub fn is_dense(g: &Graph, set: &[usize], r: u64) -> bool {
    let adj = adjacency_masks(g);
    let mask = set.iter().fold(0u32, |m, &v| m | 1 << v);
    inner(&adj, mask) > (r as i128) * (set.len() as i128 - 1)
}

/// Dense sets with no dense strict superset.
pub fn oracle_maximal_dense(g: &Graph, r: u64) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj = adjacency_masks(g);
    let dense: Vec<u32> = (1u32..(1u32 << n))
        .filter(|&m| m.count_ones() >= 2 && inner(&adj, m) > r as i128 * (m.count_ones() as i128 - 1))
        .collect();
    dense
        .iter()
        .copied()
        .filter(|&m| !dense.iter().any(|&t| t != m && t & m == m))
        .map(mask_vertices)
        .collect()
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, edges).unwrap()
    })
}

/// Canonical code of a graph on at most 7 vertices: the least edge bitmask
/// over relabelings that respect a degree-based vertex partition.
fn canonical_code(n: usize, adj: &[u32]) -> u32 {
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = mask_vertices(adj[v]).into_iter().map(|u| deg[u]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let per_cell: Vec<Vec<Vec<usize>>> = cells
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()).collect())
        .collect();
    let mut best = u32::MAX;
    for choice in per_cell.iter().multi_cartesian_product() {
        let perm: Vec<usize> = choice.into_iter().flatten().copied().collect();
        let mut code = 0u32;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[perm[i]] >> perm[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    }
    if n == 0 {
        0
    } else {
        best
    }
}

fn from_code(n: usize, code: u32) -> Graph {
    let edges = (0..n)
        .tuple_combinations()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, p)| p);
    Graph::new(n, edges).unwrap()
}

/// One representative per isomorphism class, for each order `1..=max_n`
/// (at most 7).
pub fn iso_classes(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 7);
    let mut out: Vec<Vec<Graph>> = vec![vec![Graph::empty(1)]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for g in &out[n - 2] {
            for nb in 0u32..(1 << (n - 1)) {
                let mut adj = adjacency_masks(g);
                adj.push(nb);
                for u in mask_vertices(nb) {
                    adj[u] |= 1 << (n - 1);
                }
                let code = canonical_code(n, &adj);
                if seen.insert(code) {
                    level.push(from_code(n, code));
                }
            }
        }
        out.push(level);
    }
    out
}

/// Whether `host` contains a subgraph isomorphic to `pattern`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    let pn = pattern.vertex_count();
    if pn > host.vertex_count() {
        return false;
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; host.vertex_count()];
    extend(host, pattern, 0, &mut map, &mut used)
}

fn extend(host: &Graph, pattern: &Graph, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if i == pattern.vertex_count() {
        return true;
    }
    for x in 0..host.vertex_count() {
        if used[x] || host.degree(x) < pattern.degree(i) {
            continue;
        }
        let fits = pattern
            .neighbors(i)
            .iter()
            .filter(|&&j| j < i)
            .all(|&j| host.has_edge(map[j], x));
        if !fits {
            continue;
        }
        map[i] = x;
        used[x] = true;
        if extend(host, pattern, i + 1, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[i] = usize::MAX;
    false
}

/// Whether every component of the forest has diameter at most `d`.
pub fn forest_diameter_at_most(n: usize, edges: &[(usize, usize)], d: usize) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n).all(|s| {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        dist.iter().all(|&x| x == usize::MAX || x <= d)
    })
}
