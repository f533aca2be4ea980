//! Specialised subgraph detectors, in a full form and an anchored form that
//! only looks for copies through one given edge.

use super::{Adjacency, EdgeColoring, Pattern};
use crate::error::Result;
use crate::graph::Graph;

/// Largest explicit pattern accepted by the detectors.
pub const EXPLICIT_PATTERN_LIMIT: usize = 10;

/// A monochromatic copy: `vertices[i]` is the image of pattern vertex `i`
/// (see [`Pattern::to_graph`] for the pattern numbering).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoCopy {
    pub color: usize,
    pub vertices: Vec<usize>,
}

/// A monochromatic copy of `pattern`, searching colors in increasing order.
pub fn find_mono_copy(coloring: &EdgeColoring, pattern: &Pattern) -> Result<Option<MonoCopy>> {
    pattern.validate()?;
    let n = coloring.host().vertex_count();
    for color in 0..coloring.r() {
        let class = Adjacency::from_edges(n, &coloring.class(color));
        if let Some(vertices) = copy_in(&class, pattern) {
            return Ok(Some(MonoCopy { color, vertices }));
        }
    }
    Ok(None)
}

/// A copy of `pattern` in `g`.
pub fn find_copy(g: &Graph, pattern: &Pattern) -> Result<Option<Vec<usize>>> {
    pattern.validate()?;
    Ok(copy_in(&Adjacency::from_edges(g.vertex_count(), g.edges()), pattern))
}

pub(crate) fn copy_in(g: &Adjacency, pattern: &Pattern) -> Option<Vec<usize>> {
    let pattern_edges = match pattern {
        Pattern::Explicit(f) => f.edge_count(),
        other => other.to_graph().map(|f| f.edge_count()).unwrap_or(0),
    };
    if g.edge_count() < pattern_edges {
        return None;
    }
    match pattern {
        Pattern::Star(l) => {
            let c = (0..g.n()).find(|&v| g.degree(v) >= *l)?;
            let mut out = vec![c];
            out.extend(g.neighbors(c).iter().take(*l));
            Some(out)
        }
        _ if pattern.has_cycle() && g.is_forest() => None,
        Pattern::Path(l) if g.is_forest() => {
            let path = longest_forest_path(g);
            (path.len() > *l).then(|| path[..=*l].to_vec())
        }
        _ => {
            let mut edges = g.edges();
            edges.sort_unstable();
            edges.into_iter().find_map(|(u, v)| copy_through(g, pattern, u, v))
        }
    }
}

/// A copy of `pattern` in `g` that uses the edge `{u, v}` (which must be
/// present in `g`).
pub(crate) fn copy_through(g: &Adjacency, pattern: &Pattern, u: usize, v: usize) -> Option<Vec<usize>> {
    match pattern {
        Pattern::Path(l) => path_through(g, *l, u, v),
        Pattern::Cycle(l) => cycle_through(g, *l, u, v),
        Pattern::Clique(l) => clique_through(g, *l, u, v),
        Pattern::Biclique(a, b) => {
            biclique_through(g, *a, *b, u, v).or_else(|| biclique_through(g, *a, *b, v, u))
        }
        Pattern::Star(l) => [(u, v), (v, u)].into_iter().find_map(|(c, x)| {
            (g.degree(c) >= *l).then(|| {
                let mut out = vec![c, x];
                out.extend(g.neighbors(c).iter().filter(|&&y| y != x).take(l - 1));
                out
            })
        }),
        Pattern::Explicit(f) => explicit_through(g, f, u, v),
    }
}

/// Vertices of a longest path in a forest (two sweeps per component).
fn longest_forest_path(g: &Adjacency) -> Vec<usize> {
    let n = g.n();
    let bfs = |s: usize| {
        let mut prev = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        let mut last = s;
        while let Some(x) = queue.pop_front() {
            last = x;
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (last, prev, dist)
    };
    let mut seen = vec![false; n];
    let mut best: Vec<usize> = Vec::new();
    for s in 0..n {
        if seen[s] || g.degree(s) == 0 {
            continue;
        }
        let (a, _, dist) = bfs(s);
        for (x, d) in dist.iter().enumerate() {
            if *d != usize::MAX {
                seen[x] = true;
            }
        }
        let (b, prev, _) = bfs(a);
        let mut path = vec![b];
        let mut x = b;
        while x != a {
            x = prev[x];
            path.push(x);
        }
        if path.len() > best.len() {
            best = path;
        }
    }
    best
}

/// Simple walks of exactly `len` edges from `from`, avoiding `used`;
/// `visit` returns `true` to stop.
fn extend_paths(
    g: &Adjacency,
    from: usize,
    len: usize,
    used: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if len == 0 {
        return visit(used);
    }
    for &y in g.neighbors(from) {
        if used.contains(&y) {
            continue;
        }
        used.push(y);
        if extend_paths(g, y, len - 1, used, visit) {
            return true;
        }
        used.pop();
    }
    false
}

fn path_through(g: &Adjacency, l: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    for left in 0..l {
        let right = l - 1 - left;
        let mut found = None;
        let mut used = vec![v, u];
        extend_paths(g, u, left, &mut used, &mut |left_walk| {
            // left_walk = [v, u, ...] ; reversed tail gives the start of the path
            let mut head: Vec<usize> = left_walk[1..].iter().rev().copied().collect();
            head.push(v);
            let mut used2 = left_walk.to_vec();
            let mut result = None;
            extend_paths(g, v, right, &mut used2, &mut |walk| {
                let mut p = head.clone();
                p.extend_from_slice(&walk[left_walk.len()..]);
                result = Some(p);
                true
            });
            if let Some(p) = result {
                found = Some(p);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn cycle_through(g: &Adjacency, l: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    fn go(g: &Adjacency, l: usize, u: usize, path: &mut Vec<usize>) -> bool {
        let x = *path.last().expect("path starts with u, v");
        if path.len() == l {
            return g.adjacent(x, u);
        }
        for &y in g.neighbors(x) {
            if path.contains(&y) {
                continue;
            }
            path.push(y);
            if go(g, l, u, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![u, v];
    go(g, l, u, &mut path).then_some(path)
}

fn clique_through(g: &Adjacency, l: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    let cand: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| w != v && g.adjacent(w, v)).collect();
    fn grow(g: &Adjacency, cand: &[usize], need: usize, chosen: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        for (i, &w) in cand.iter().enumerate() {
            if cand.len() - i < need {
                return false;
            }
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&x| g.adjacent(w, x)).collect();
            chosen.push(w);
            if grow(g, &next, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = vec![u, v];
    grow(g, &cand, l.saturating_sub(2), &mut chosen).then_some(chosen)
}

/// Copy with `u` on the `a` side and `v` on the `b` side.
fn biclique_through(g: &Adjacency, a: usize, b: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    let others: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
    let common_of = |side: &[usize]| -> Vec<usize> {
        g.neighbors(side[0])
            .iter()
            .copied()
            .filter(|&y| side[1..].iter().all(|&x| g.adjacent(x, y)))
            .collect()
    };
    fn choose(
        others: &[usize],
        start: usize,
        need: usize,
        side: &mut Vec<usize>,
        check: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if need == 0 {
            return check(side);
        }
        for i in start..others.len() {
            if others.len() - i < need {
                return false;
            }
            side.push(others[i]);
            if choose(others, i + 1, need - 1, side, check) {
                return true;
            }
            side.pop();
        }
        false
    }
    let mut found = None;
    let mut side = vec![u];
    choose(&others, 0, a - 1, &mut side, &mut |side| {
        let common = common_of(side);
        if common.len() < b || !common.contains(&v) {
            return false;
        }
        let mut out = side.to_vec();
        out.push(v);
        out.extend(common.iter().copied().filter(|&y| y != v).take(b - 1));
        found = Some(out);
        true
    });
    found
}

fn explicit_through(g: &Adjacency, f: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
    let k = f.vertex_count();
    for &(i, j) in f.edges() {
        for (x, y) in [(u, v), (v, u)] {
            if g.degree(x) < f.degree(i) || g.degree(y) < f.degree(j) {
                continue;
            }
            // pattern vertices in BFS order from the anchored edge
            let mut order = vec![i, j];
            let mut placed = vec![false; k];
            placed[i] = true;
            placed[j] = true;
            let mut head = 0;
            loop {
                while head < order.len() {
                    let p = order[head];
                    head += 1;
                    for &q in f.neighbors(p) {
                        if !placed[q] {
                            placed[q] = true;
                            order.push(q);
                        }
                    }
                }
                match (0..k).find(|&q| !placed[q]) {
                    Some(q) => {
                        placed[q] = true;
                        order.push(q);
                    }
                    None => break,
                }
            }
            let mut image = vec![usize::MAX; k];
            image[i] = x;
            image[j] = y;
            if embed(g, f, &order, 2, &mut image) {
                return Some(image);
            }
        }
    }
    None
}

fn embed(g: &Adjacency, f: &Graph, order: &[usize], at: usize, image: &mut [usize]) -> bool {
    if at == order.len() {
        return true;
    }
    let p = order[at];
    let anchor = f.neighbors(p).iter().find(|&&q| image[q] != usize::MAX).copied();
    let candidates: Vec<usize> = match anchor {
        Some(q) => g.neighbors(image[q]).to_vec(),
        None => (0..g.n()).collect(),
    };
    for x in candidates {
        if image.contains(&x) || g.degree(x) < f.degree(p) {
            continue;
        }
        if f.neighbors(p).iter().any(|&q| image[q] != usize::MAX && !g.adjacent(image[q], x)) {
            continue;
        }
        image[p] = x;
        if embed(g, f, order, at + 1, image) {
            return true;
        }
        image[p] = usize::MAX;
    }
    false
}
