//! Exact graph parameters: the densities `m`, `m1`, `m1(., k)`, `m2`, the
//! bipartite degree parameter `d(F)`, chromatic and clique numbers.
//!
//! `m` and `m1` are computed by parametric max-closure (a min-cut per
//! candidate ratio, Dinkelbach style), so they scale to graphs with
//! thousands of edges. `m1(., k)` for `k >= 3` is a branch-and-bound over
//! vertex subsets that uses the same closure as its pruning bound; `m2`
//! enumerates subsets.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::flow::max_closure;
use crate::graph::{degeneracy_order, EdgeMultiset, Graph};
use crate::rational::{ratio, Rational};

/// Largest host for which `m1_k_density` with `k >= 3` is supported.
pub const M1K_EXACT_LIMIT: usize = 24;
/// Largest pattern for which `m2_density` enumerates subsets.
pub const M2_LIMIT: usize = 20;
pub const CHROMATIC_LIMIT: usize = 16;
pub const CLIQUE_LIMIT: usize = 20;

/// A maximum density value together with a vertex set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityWitness {
    pub value: Rational,
    /// Sorted vertex ids. Empty when the maximization range was empty.
    pub witness: Vec<usize>,
}

/// Total multiplicity of pairs with both ends in `set`.
pub fn inner_edges<G: EdgeMultiset + ?Sized>(g: &G, set: &[usize]) -> u64 {
    let mut mark = vec![false; g.vertex_count()];
    for &v in set {
        mark[v] = true;
    }
    g.weighted_pairs()
        .iter()
        .filter(|&&(u, v, _)| mark[u] && mark[v])
        .map(|p| p.2)
        .sum()
}

/// `m(G) = max e(H)/v(H)` over nonempty subgraphs; `0` for edgeless graphs.
pub fn m_density<G: EdgeMultiset + ?Sized>(g: &G) -> DensityWitness {
    let n = g.vertex_count();
    let pairs = g.weighted_pairs();
    let total: u64 = pairs.iter().map(|p| p.2).sum();
    if total == 0 {
        return DensityWitness {
            value: ratio(0, 1),
            witness: Vec::new(),
        };
    }
    let allowed = vec![true; n];
    let forced = vec![false; n];
    let mut witness: Vec<usize> = (0..n).collect();
    let (mut e, mut v) = (total as i64, n as i64);
    loop {
        let c = max_closure(n, &pairs, &allowed, &forced, e, v);
        if c.value <= 0 {
            break;
        }
        e = c.inner_weight as i64;
        v = c.vertices.len() as i64;
        witness = c.vertices;
    }
    DensityWitness {
        value: ratio(e as i128, v as i128),
        witness,
    }
}

/// `m1(G) = max e(H)/(v(H)-1)` over subgraphs with at least two vertices.
pub fn m1_density<G: EdgeMultiset + ?Sized>(g: &G) -> Result<DensityWitness> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::ParameterUndefined(format!(
            "m1 needs at least 2 vertices, graph has {n}"
        )));
    }
    let allowed = vec![true; n];
    Ok(m1_within(n, &g.weighted_pairs(), &allowed))
}

/// m1 over the `allowed` vertices (at least two of them).
pub(crate) fn m1_within(n: usize, pairs: &[(usize, usize, u64)], allowed: &[bool]) -> DensityWitness {
    let all: Vec<usize> = (0..n).filter(|&v| allowed[v]).collect();
    let inside: Vec<(usize, usize, u64)> = pairs
        .iter()
        .copied()
        .filter(|&(u, v, _)| allowed[u] && allowed[v])
        .collect();
    let total: u64 = inside.iter().map(|p| p.2).sum();
    let mut best_set = all.clone();
    let (mut e, mut d) = (total as i64, all.len() as i64 - 1);
    if let Some(&(u, v, w)) = inside
        .iter()
        .max_by(|a, b| a.2.cmp(&b.2).then(b.0.cmp(&a.0)).then(b.1.cmp(&a.1)))
    {
        if (w as i64) * d > e {
            e = w as i64;
            d = 1;
            best_set = vec![u, v];
        }
    }
    let none = vec![false; n];
    loop {
        // d*w(T) - e*|T| > 0 already beats e/d
        let c = max_closure(n, &inside, allowed, &none, e, d);
        if c.value > 0 {
            e = c.inner_weight as i64;
            d = c.vertices.len() as i64 - 1;
            best_set = c.vertices;
            continue;
        }
        // exact test: one anchored vertex is free, so the closure charges |T| - 1
        let mut improved: Option<(i128, Vec<usize>, u64)> = None;
        for &x in &all {
            let mut forced = none.clone();
            forced[x] = true;
            let c = max_closure(n, &inside, allowed, &forced, e, d);
            if c.value > 0 && improved.as_ref().is_none_or(|b| c.value > b.0) {
                improved = Some((c.value, c.vertices, c.inner_weight));
            }
        }
        match improved {
            Some((_, set, w)) => {
                e = w as i64;
                d = set.len() as i64 - 1;
                best_set = set;
            }
            None => break,
        }
    }
    DensityWitness {
        value: ratio(e as i128, d as i128),
        witness: best_set,
    }
}

/// `m1(G, k) = max e(H)/(v(H)-1)` over subgraphs with at least `k` vertices.
///
/// When `v(G) < k` the range is empty and the value is `0` with an empty
/// witness (a convention, see [`DensityWitness::witness`]). Exact support
/// for `k >= 3` is limited to [`M1K_EXACT_LIMIT`] vertices.
pub fn m1_k_density(g: &Graph, k: usize) -> Result<DensityWitness> {
    m1_k_density_multi(g, k)
}

/// [`m1_k_density`] for any edge multiset.
pub fn m1_k_density_multi<G: EdgeMultiset + ?Sized>(g: &G, k: usize) -> Result<DensityWitness> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "m1(G, k) needs k >= 2, got {k}"
        )));
    }
    let n = g.vertex_count();
    if n < k {
        return Ok(DensityWitness {
            value: ratio(0, 1),
            witness: Vec::new(),
        });
    }
    if k == 2 {
        return m1_density(g);
    }
    let unconstrained = m1_density(g)?;
    if unconstrained.witness.len() >= k {
        return Ok(unconstrained);
    }
    if n > M1K_EXACT_LIMIT {
        return Err(Error::SizeLimit(format!(
            "m1(G, k) with k >= 3 is exact only up to {M1K_EXACT_LIMIT} vertices, graph has {n}"
        )));
    }
    let pairs = g.weighted_pairs();
    let total: u64 = pairs.iter().map(|p| p.2).sum();
    let mut search = SizedSearch {
        n,
        k,
        pairs: &pairs,
        best_e: total as i64,
        best_d: n as i64 - 1,
        best_set: (0..n).collect(),
    };
    let mut order: Vec<usize> = (0..n).collect();
    let deg = {
        let mut d = vec![0u64; n];
        for &(u, v, w) in &pairs {
            d[u] += w;
            d[v] += w;
        }
        d
    };
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut included = Vec::new();
    let mut candidate = vec![true; n];
    search.branch(&order, 0, &mut included, &mut candidate);
    let mut witness = search.best_set;
    witness.sort_unstable();
    Ok(DensityWitness {
        value: ratio(search.best_e as i128, search.best_d as i128),
        witness,
    })
}

struct SizedSearch<'a> {
    n: usize,
    k: usize,
    pairs: &'a [(usize, usize, u64)],
    best_e: i64,
    best_d: i64,
    best_set: Vec<usize>,
}

impl SizedSearch<'_> {
    /// `candidate[v]`: v is included or still undecided.
    fn branch(
        &mut self,
        order: &[usize],
        depth: usize,
        included: &mut Vec<usize>,
        candidate: &mut [bool],
    ) {
        let live = candidate.iter().filter(|&&c| c).count();
        if live < self.k {
            return;
        }
        if !included.is_empty() {
            // bound: best superset of `included` inside the live vertices,
            // ignoring the size constraint
            loop {
                let mut forced = vec![false; self.n];
                for &v in included.iter() {
                    forced[v] = true;
                }
                let c = max_closure(self.n, self.pairs, candidate, &forced, self.best_e, self.best_d);
                let value = c.value - (included.len() as i128 - 1) * self.best_e as i128;
                if value <= 0 {
                    return;
                }
                if c.vertices.len() >= self.k {
                    self.best_e = c.inner_weight as i64;
                    self.best_d = c.vertices.len() as i64 - 1;
                    self.best_set = c.vertices;
                    continue;
                }
                break;
            }
        }
        let Some(pos) = (depth..order.len()).find(|&i| {
            let v = order[i];
            candidate[v] && !included.contains(&v)
        }) else {
            return;
        };
        let v = order[pos];
        included.push(v);
        self.branch(order, pos + 1, included, candidate);
        included.pop();
        candidate[v] = false;
        self.branch(order, pos + 1, included, candidate);
        candidate[v] = true;
    }
}

/// `m2(F) = max (e(H)-1)/(v(H)-2)` over subgraphs with at least 3 vertices.
pub fn m2_density(f: &Graph) -> Result<DensityWitness> {
    let n = f.vertex_count();
    if n < 3 {
        return Err(Error::ParameterUndefined(format!(
            "m2 needs at least 3 vertices, graph has {n}"
        )));
    }
    if n > M2_LIMIT {
        return Err(Error::SizeLimit(format!(
            "m2 enumerates subsets only up to {M2_LIMIT} vertices, graph has {n}"
        )));
    }
    let adj = adjacency_masks(f);
    let mut best: Option<(i128, i128, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as i128;
        if size < 3 {
            continue;
        }
        let e = inner_count(&adj, mask) as i128;
        let (num, den) = (e - 1, size - 2);
        let better = match &best {
            None => true,
            Some((bn, bd, bset)) => match (num * bd).cmp(&(bn * den)) {
                Ordering::Greater => true,
                Ordering::Equal => mask_to_vec(mask) < *bset,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((num, den, mask_to_vec(mask)));
        }
    }
    let (num, den, witness) = best.expect("n >= 3 gives at least one subset");
    Ok(DensityWitness {
        value: ratio(num, den),
        witness,
    })
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn inner_count(adj: &[u32], mask: u32) -> u32 {
    let mut twice = 0;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        twice += (adj[v] & mask).count_ones();
        m &= m - 1;
    }
    twice / 2
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// `d(F) = min(max degree over A, max degree over B)` for a bipartition `(A, B)`.
pub fn d_bipartite(f: &Graph, a: &[usize], b: &[usize]) -> Result<usize> {
    let n = f.vertex_count();
    let mut side = vec![u8::MAX; n];
    for (s, set) in [(0u8, a), (1u8, b)] {
        for &v in set {
            if v >= n {
                return Err(Error::InvalidBipartition(format!("vertex {v} is out of range")));
            }
            if side[v] != u8::MAX {
                return Err(Error::InvalidBipartition(format!("vertex {v} is on both sides")));
            }
            side[v] = s;
        }
    }
    if let Some(v) = side.iter().position(|&s| s == u8::MAX) {
        return Err(Error::InvalidBipartition(format!("vertex {v} is on neither side")));
    }
    if let Some(&(u, v)) = f.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
        return Err(Error::InvalidBipartition(format!(
            "edge {u}-{v} lies inside one side"
        )));
    }
    let max_on = |s: u8| {
        (0..n)
            .filter(|&v| side[v] == s)
            .map(|v| f.degree(v))
            .max()
            .unwrap_or(0)
    };
    Ok(max_on(0).min(max_on(1)))
}

/// `d(F)` minimized over every bipartition of `F` (components may be
/// flipped independently). `None` if `F` is not bipartite.
pub fn d_parameter(f: &Graph) -> Option<usize> {
    let side = f.bipartition()?;
    let comps: Vec<Vec<usize>> = f
        .components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    // per component: (max degree on side 0, max degree on side 1)
    let maxima: Vec<(usize, usize)> = comps
        .iter()
        .map(|c| {
            let m = |s: u8| c.iter().filter(|&&v| side[v] == s).map(|&v| f.degree(v)).max().unwrap_or(0);
            (m(0), m(1))
        })
        .collect();
    if maxima.is_empty() {
        return Some(0);
    }
    if maxima.len() > 16 {
        // components are interchangeable only up to their degree pairs; the
        // unflipped bipartition is still a valid (possibly weaker) choice
        let a = maxima.iter().map(|m| m.0).max().unwrap_or(0);
        let b = maxima.iter().map(|m| m.1).max().unwrap_or(0);
        return Some(a.min(b));
    }
    let mut best = usize::MAX;
    for flips in 0u32..(1 << maxima.len()) {
        let (mut a, mut b) = (0, 0);
        for (i, &(x, y)) in maxima.iter().enumerate() {
            let (x, y) = if flips >> i & 1 == 1 { (y, x) } else { (x, y) };
            a = a.max(x);
            b = b.max(y);
        }
        best = best.min(a.min(b));
    }
    Some(best)
}

/// Exact chromatic number by backtracking (at most [`CHROMATIC_LIMIT`] vertices).
pub fn chromatic_number(f: &Graph) -> Result<usize> {
    let n = f.vertex_count();
    if n > CHROMATIC_LIMIT {
        return Err(Error::SizeLimit(format!(
            "chromatic number is exact only up to {CHROMATIC_LIMIT} vertices, graph has {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    if f.edge_count() == 0 {
        return Ok(1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f.degree(b).cmp(&f.degree(a)).then(a.cmp(&b)));
    let lower = clique_number(f)?;
    for k in lower.max(2)..=n {
        let mut colour = vec![usize::MAX; n];
        if colourable(f, &order, 0, k, 0, &mut colour) {
            return Ok(k);
        }
    }
    Ok(n)
}

fn colourable(
    f: &Graph,
    order: &[usize],
    i: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // a fresh colour is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        if f.neighbors(v).iter().all(|&w| colour[w] != c) {
            colour[v] = c;
            if colourable(f, order, i + 1, k, used.max(c + 1), colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}

/// Exact clique number (at most [`CLIQUE_LIMIT`] vertices).
pub fn clique_number(f: &Graph) -> Result<usize> {
    let n = f.vertex_count();
    if n > CLIQUE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "clique number is exact only up to {CLIQUE_LIMIT} vertices, graph has {n}"
        )));
    }
    let adj = adjacency_masks(f);
    fn grow(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, rest & adj[v], size + 1, best);
        }
    }
    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    grow(&adj, all, 0, &mut best);
    Ok(best)
}

/// `max over H of min degree(H)`, i.e. the degeneracy.
pub fn max_min_degree(f: &Graph) -> usize {
    degeneracy_order(f).degeneracy
}
