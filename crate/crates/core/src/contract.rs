//! Contraction of maximal over-dense subgraphs until `m1 <= r`.
//!
//! A vertex set `H` is *dense* when `e(H) > r (v(H) - 1)` and *maximal*
//! when no proper superset (connected or not) is dense.

use crate::error::{Error, Result};
use crate::flow::max_closure;
use crate::graph::{contract_family, EdgeMultiset, MultiGraph, VertexFamily};
use crate::parameters::{inner_edges, m1_density, m1_within};
use crate::rational::integer;

/// The family of contracted sets together with the contracted multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionCertificate {
    /// Pairwise disjoint vertex sets of the original graph.
    pub family: VertexFamily,
    pub contracted: MultiGraph,
    /// Original vertex to contracted vertex.
    pub map: Vec<usize>,
    pub r: u64,
    pub rounds: usize,
    /// Chosen sets that contained an already contracted vertex.
    pub provenance_merges: usize,
}

impl ContractionCertificate {
    /// Re-checks every invariant against the original graph.
    pub fn verify<G: EdgeMultiset + ?Sized>(&self, g: &G) -> Result<()> {
        let fresh = VertexFamily::new(g.vertex_count(), self.family.sets().to_vec())?;
        for set in fresh.sets() {
            let e = inner_edges(g, set);
            if e <= self.r * (set.len() as u64 - 1) {
                return Err(Error::Internal(format!(
                    "family member {set:?} is not dense for r = {}",
                    self.r
                )));
            }
        }
        let (contracted, map) = contract_family(g, &fresh)?;
        if contracted != self.contracted || map != self.map {
            return Err(Error::Internal("contracted graph does not match family".into()));
        }
        if contracted.vertex_count() >= 2
            && m1_density(&contracted)?.value > integer(self.r as i128)
        {
            return Err(Error::Internal("contracted graph still has m1 > r".into()));
        }
        Ok(())
    }
}

/// A maximal dense vertex set of `g` for the bound `r`, grown from the
/// densest `m1` witness; `None` when `m1(G) <= r`.
pub fn find_maximal_dense<G: EdgeMultiset + ?Sized>(g: &G, r: u64) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let pairs = g.weighted_pairs();
    let seed = m1_within(n, &pairs, &vec![true; n]);
    if seed.value <= integer(r as i128) {
        return None;
    }
    Some(grow_maximal(n, &pairs, seed.witness, r))
}

/// Extends a dense set until no proper superset is dense.
///
/// `H` is contracted to a super-vertex `x` credited with `c = e(H) - r(v(H)-1)`;
/// a dense proper superset through `y` exists iff the closure forcing
/// `{x, y}` has value `- r > -c`.
fn grow_maximal(n: usize, pairs: &[(usize, usize, u64)], mut h: Vec<usize>, r: u64) -> Vec<usize> {
    let r = r as i64;
    loop {
        let mut inside = vec![false; n];
        for &v in &h {
            inside[v] = true;
        }
        let e_h = pairs
            .iter()
            .filter(|&&(u, v, _)| inside[u] && inside[v])
            .map(|p| p.2)
            .sum::<u64>() as i64;
        let c = e_h - r * (h.len() as i64 - 1);
        debug_assert!(c > 0);
        // auxiliary graph: outside vertices keep their ids, x = n
        let x = n;
        let mut aux: Vec<(usize, usize, u64)> = Vec::new();
        for &(u, v, w) in pairs {
            match (inside[u], inside[v]) {
                (true, true) => {}
                (true, false) => aux.push((v, x, w)),
                (false, true) => aux.push((u, x, w)),
                (false, false) => aux.push((u, v, w)),
            }
        }
        let mut allowed = vec![true; n + 1];
        for &v in &h {
            allowed[v] = false;
        }
        let mut grown = None;
        for y in (0..n).filter(|&y| !inside[y]) {
            let mut forced = vec![false; n + 1];
            forced[x] = true;
            forced[y] = true;
            let cl = max_closure(n + 1, &aux, &allowed, &forced, r, 1);
            if cl.value - r as i128 > -(c as i128) {
                grown = Some(cl.vertices);
                break;
            }
        }
        match grown {
            Some(vs) => {
                h.extend(vs.into_iter().filter(|&v| v != x));
                h.sort_unstable();
            }
            None => return h,
        }
    }
}

/// Repeatedly contracts a maximal family of disjoint maximal dense sets
/// until the multigraph has `m1 <= r`.
pub fn contract_dense<G: EdgeMultiset + ?Sized>(g: &G, r: u64) -> Result<ContractionCertificate> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!("r must be at least 1, got {r}")));
    }
    let n0 = g.vertex_count();
    let mut current = MultiGraph::new(n0, g.weighted_pairs())?;
    let mut groups: Vec<Vec<usize>> = (0..n0).map(|v| vec![v]).collect();
    let mut rounds = 0;
    let mut provenance_merges = 0;
    loop {
        let chosen = disjoint_maximal_sets(&current, r);
        if chosen.is_empty() {
            break;
        }
        rounds += 1;
        provenance_merges += chosen
            .iter()
            .filter(|set| set.iter().any(|&v| groups[v].len() > 1))
            .count();
        let family = VertexFamily::new(current.vertex_count(), chosen)?;
        let (next, map) = contract_family(&current, &family)?;
        if next.vertex_count() >= current.vertex_count() {
            return Err(Error::Internal("contraction round did not shrink the graph".into()));
        }
        let mut merged = vec![Vec::new(); next.vertex_count()];
        for (old, group) in groups.into_iter().enumerate() {
            merged[map[old]].extend(group);
        }
        for group in &mut merged {
            group.sort_unstable();
        }
        groups = merged;
        current = next;
    }
    let mut sets: Vec<Vec<usize>> = groups.into_iter().filter(|s| s.len() > 1).collect();
    sets.sort();
    let family = VertexFamily::new(n0, sets)?;
    let (contracted, map) = contract_family(g, &family)?;
    Ok(ContractionCertificate {
        family,
        contracted,
        map,
        r,
        rounds,
        provenance_merges,
    })
}

/// Maximal dense sets found one after another, each seeded in the vertices
/// not yet covered; stops at the first one meeting an earlier set.
fn disjoint_maximal_sets(g: &MultiGraph, r: u64) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let pairs = g.weighted_pairs();
    let mut free = vec![true; n];
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    loop {
        if free.iter().filter(|&&f| f).count() < 2 {
            break;
        }
        let seed = m1_within(n, &pairs, &free);
        if seed.value <= integer(r as i128) {
            break;
        }
        let set = grow_maximal(n, &pairs, seed.witness, r);
        if set.iter().any(|&v| !free[v]) {
            break;
        }
        for &v in &set {
            free[v] = false;
        }
        chosen.push(set);
    }
    chosen
}
