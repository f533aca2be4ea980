//! Partition engines: contract the over-dense parts, color each part
//! exhaustively, split the contracted multigraph into forests and pull
//! everything back to the original edges.

use std::collections::{BTreeMap, VecDeque};

use super::{ffree_coloring_small, find_mono_copy, EdgeColoring, Pattern, SearchOptions};
use crate::contract::{contract_dense, ContractionCertificate};
use crate::decompose::{nash_williams_into, split_into_star_forests, ForestPartition};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};
use crate::parameters::{m1_k_density, M1K_EXACT_LIMIT};
use crate::rational::integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    pub search: SearchOptions,
    /// Hosts up to this many vertices get the exact `m1(G, R)` check.
    pub exact_precondition_limit: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            search: SearchOptions::default(),
            exact_precondition_limit: M1K_EXACT_LIMIT,
        }
    }
}

/// An `r`-coloring without a monochromatic `C_l`. Requires
/// `m1(G, R) <= r` for a value `R <= R(C_l, r)`.
pub fn cycle_free_partition(g: &Graph, l: usize, r: usize, ramsey: usize, opts: EngineOptions) -> Result<EdgeColoring> {
    if l < 3 || r < 1 {
        return Err(Error::InvalidParameter(format!("need l >= 3 and r >= 1, got l = {l}, r = {r}")));
    }
    let pattern = Pattern::Cycle(l);
    let (cert, forests) = prepare(g, r as u64, r, ramsey, opts)?;
    let parts = color_parts(g, &cert, &pattern, r, opts)?;
    let pair_colors = forests
        .classes
        .iter()
        .enumerate()
        .flat_map(|(j, class)| class.iter().map(move |&p| (p, j)))
        .collect();
    finish(g, &cert, parts, pair_colors, r, &pattern)
}

/// An `r`-coloring without a monochromatic `K_{a,b}`, `b >= (a-1)^2 + 1`.
/// Requires `m1(G, R) <= r(a-1)` for a value `R <= R(K_{a,b}, r)`.
pub fn biclique_free_partition(
    g: &Graph,
    a: usize,
    b: usize,
    r: usize,
    ramsey: usize,
    opts: EngineOptions,
) -> Result<EdgeColoring> {
    if a < 2 || r < 1 {
        return Err(Error::InvalidParameter(format!("need a >= 2 and r >= 1, got a = {a}, r = {r}")));
    }
    if b < (a - 1) * (a - 1) + 1 {
        return Err(Error::InvalidParameter(format!(
            "need b >= (a-1)^2 + 1 = {}, got b = {b}",
            (a - 1) * (a - 1) + 1
        )));
    }
    let pattern = Pattern::Biclique(a, b);
    let target = r * (a - 1);
    let (cert, forests) = prepare(g, target as u64, target, ramsey, opts)?;
    let parts = color_parts(g, &cert, &pattern, r, opts)?;
    let pair_colors = forests
        .classes
        .iter()
        .enumerate()
        .flat_map(|(j, class)| class.iter().map(move |&p| (p, j / (a - 1))))
        .collect();
    finish(g, &cert, parts, pair_colors, r, &pattern)
}

/// An `r`-coloring without a monochromatic `P_l`. Requires
/// `m1(G, R) <= floor(r/2)` for a value `R <= R(P_{floor(l/3)}, r)`.
pub fn path_free_partition(g: &Graph, l: usize, r: usize, ramsey: usize, opts: EngineOptions) -> Result<EdgeColoring> {
    if l < 3 || r < 2 {
        return Err(Error::InvalidParameter(format!("need l >= 3 and r >= 2, got l = {l}, r = {r}")));
    }
    let pattern = Pattern::Path(l);
    let half = r / 2;
    let (cert, forests) = prepare(g, half as u64, half, ramsey, opts)?;
    let parts = color_parts(g, &cert, &Pattern::Path(l / 3), r, opts)?;
    let n = cert.contracted.vertex_count();
    let mut pair_colors = Vec::new();
    for (j, class) in forests.classes.iter().enumerate() {
        let [even, odd] = split_into_star_forests(n, class)?;
        pair_colors.extend(even.into_iter().map(|p| (p, 2 * j)));
        pair_colors.extend(odd.into_iter().map(|p| (p, 2 * j + 1)));
    }
    finish(g, &cert, parts, pair_colors, r, &pattern)
}

/// Checks the density precondition, contracts, and splits the contracted
/// multigraph into `forests` forests.
fn prepare(
    g: &Graph,
    target: u64,
    forests: usize,
    ramsey: usize,
    opts: EngineOptions,
) -> Result<(ContractionCertificate, ForestPartition)> {
    if ramsey < 2 {
        return Err(Error::InvalidParameter(format!("Ramsey value must be at least 2, got {ramsey}")));
    }
    if g.vertex_count() <= opts.exact_precondition_limit {
        let m = m1_k_density(g, ramsey)?.value;
        if m > integer(target as i128) {
            return Err(Error::PreconditionViolated(format!(
                "m1(G, {ramsey}) = {m} exceeds {target}"
            )));
        }
    }
    let cert = contract_dense(g, target)?;
    if let Some(set) = cert.family.sets().iter().find(|s| s.len() >= ramsey) {
        return Err(Error::PreconditionViolated(format!(
            "dense part with {} vertices is not smaller than {ramsey}, so m1(G, {ramsey}) > {target}",
            set.len()
        )));
    }
    let partition = nash_williams_into(&cert.contracted, forests)?;
    Ok((cert, partition))
}

/// Colors of the edges inside the contracted parts, keyed by edge index.
fn color_parts(
    g: &Graph,
    cert: &ContractionCertificate,
    pattern: &Pattern,
    r: usize,
    opts: EngineOptions,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for set in cert.family.sets() {
        let (h, back) = induced_subgraph(g, set)?;
        let coloring = ffree_coloring_small(&h, pattern, r, opts.search)?.ok_or_else(|| {
            Error::PreconditionViolated(format!(
                "part {set:?} has no {r}-coloring without a monochromatic {pattern}; the supplied Ramsey value is too large"
            ))
        })?;
        for (&(u, v), &c) in h.edges().iter().zip(coloring.colors()) {
            let e = g.edge_index(back[u], back[v]).expect("induced edge exists in host");
            out.push((e, c));
        }
    }
    Ok(out)
}

/// Distributes the colored contracted pairs over the original edges between
/// the corresponding parts and self-certifies the result.
fn finish(
    g: &Graph,
    cert: &ContractionCertificate,
    parts: Vec<(usize, usize)>,
    pair_colors: Vec<((usize, usize), usize)>,
    r: usize,
    pattern: &Pattern,
) -> Result<EdgeColoring> {
    let mut between: BTreeMap<(usize, usize), VecDeque<usize>> = BTreeMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (cert.map[u], cert.map[v]);
        if a != b {
            between.entry((a.min(b), a.max(b))).or_default().push_back(e);
        }
    }
    let mut colors = vec![usize::MAX; g.edge_count()];
    for (e, c) in parts {
        colors[e] = c;
    }
    for (pair, c) in pair_colors {
        let e = between
            .get_mut(&pair)
            .and_then(VecDeque::pop_front)
            .ok_or_else(|| Error::Internal(format!("forest pair {pair:?} has no edge left")))?;
        colors[e] = c;
    }
    if colors.contains(&usize::MAX) {
        return Err(Error::Internal("an edge was left uncolored".into()));
    }
    let coloring = EdgeColoring::new(g.clone(), r, colors)?;
    if let Some(copy) = find_mono_copy(&coloring, pattern)? {
        return Err(Error::Internal(format!(
            "engine output has a monochromatic {pattern} in color {} on {:?}",
            copy.color, copy.vertices
        )));
    }
    Ok(coloring)
}
