use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph};
use crate::parameters::m_density;
use crate::rational::ratio;

/// Colors the edges so that every color class is `(delta - 1)`-degenerate.
///
/// Vertices are taken in degeneracy order; the edges back to earlier
/// vertices are handed out `delta - 1` per color. Requires
/// `m(G) < (r(delta - 1) + 1) / 2`.
pub fn greedy_backdegree_coloring(g: &Graph, r: usize, delta: usize) -> Result<EdgeColoring> {
    if r < 1 || delta < 2 {
        return Err(Error::InvalidParameter(format!(
            "need r >= 1 and delta >= 2, got r = {r}, delta = {delta}"
        )));
    }
    let cap = r * (delta - 1);
    let threshold = ratio(cap as i128 + 1, 2);
    let m = m_density(g).value;
    if m >= threshold {
        return Err(Error::PreconditionViolated(format!(
            "m(G) = {m} is not below {threshold}"
        )));
    }
    let order = degeneracy_order(g);
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut colors = vec![0; g.edge_count()];
    for &v in &order.order {
        let back: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]).collect();
        if back.len() > cap {
            return Err(Error::PreconditionViolated(format!(
                "vertex {v} has {} earlier neighbours, more than r(delta - 1) = {cap}",
                back.len()
            )));
        }
        for (i, u) in back.into_iter().enumerate() {
            colors[g.edge_index(u, v).expect("neighbour edge exists")] = i / (delta - 1);
        }
    }
    EdgeColoring::new(g.clone(), r, colors)
}
