use std::collections::BTreeMap;

use super::EdgeColoring;
use crate::constructions::{Fiber, FiberedGraph};
use crate::error::{Error, Result};

/// `A` and `B` such that the coloring of `G[A ∪ B]` is an `A`-centered star
/// coloring: all edges at `a[i]` have color `colors[i]`, and these colors
/// are distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarColoring {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub colors: Vec<usize>,
}

/// Whether every `{a[i], v}` with `v` in `b` is an edge of color `c_i` for
/// distinct colors `c_i`.
pub fn is_centered_star_coloring(coloring: &EdgeColoring, a: &[usize], b: &[usize]) -> bool {
    let mut centre_colors: Vec<Option<usize>> = vec![None; a.len()];
    for &v in b {
        for (i, &u) in a.iter().enumerate() {
            let Some(c) = coloring.color_of(u, v) else { return false };
            match centre_colors[i] {
                None => centre_colors[i] = Some(c),
                Some(x) if x != c => return false,
                _ => {}
            }
        }
    }
    let mut seen: Vec<usize> = centre_colors.into_iter().flatten().collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Colors of the edges from `v` to `subset`, in subset order.
fn fiber_colors(coloring: &EdgeColoring, subset: &[usize], v: usize) -> Vec<usize> {
    subset
        .iter()
        .map(|&a| coloring.color_of(a, v).expect("fiber edge exists"))
        .collect()
}

fn distinct(colors: &[usize]) -> bool {
    let mut s = colors.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// A base pair `{a1, a2}` with edges of the same color to some fiber vertex.
fn repeated_pair(coloring: &EdgeColoring, fiber: &Fiber) -> Option<(usize, usize)> {
    for &v in &fiber.vertices {
        let colors = fiber_colors(coloring, &fiber.subset, v);
        for i in 0..colors.len() {
            for j in i + 1..colors.len() {
                if colors[i] == colors[j] {
                    return Some((fiber.subset[i], fiber.subset[j]));
                }
            }
        }
    }
    None
}

/// Groups the fiber vertices by the color sequence they see; `Some` if one
/// group has at least `s` vertices.
fn pigeonhole(coloring: &EdgeColoring, fiber: &Fiber, s: usize) -> Option<StarColoring> {
    // grouping by the ordered color sequence refines grouping by color set
    let mut groups: BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for &v in &fiber.vertices {
        let order = fiber_colors(coloring, &fiber.subset, v);
        let mut set = order.clone();
        set.sort_unstable();
        groups.entry((set, order)).or_default().push(v);
    }
    let ((_, order), members) = groups.into_iter().max_by(|x, y| x.1.len().cmp(&y.1.len()).then(y.0.cmp(&x.0)))?;
    (members.len() >= s).then(|| StarColoring {
        a: fiber.subset.clone(),
        b: members[..s].to_vec(),
        colors: order,
    })
}

/// Finds `A` and `B ⊆ M(A)` with `|B| = s` such that the coloring of
/// `G[A ∪ B]` is an `A`-centered star coloring.
///
/// The base graph `P` collects, for independent `k`-sets `A` whose fiber
/// has a vertex with two equally colored edges, one such pair. The first
/// independent `k`-set with a fiber in which every vertex sees `k`
/// distinct colors is split by color sequence. If that set does not carry
/// `s` equal vertices, every such fiber is tried.
pub fn extract_star_coloring(fg: &FiberedGraph, coloring: &EdgeColoring, l: usize, s: usize) -> Result<StarColoring> {
    if l < 3 || s < 1 {
        return Err(Error::InvalidParameter(format!("need l >= 3 and s >= 1, got l = {l}, s = {s}")));
    }
    fg.verify()?;
    if coloring.host() != &fg.graph {
        return Err(Error::InvalidStructure("coloring is not a coloring of the fibered graph".into()));
    }
    let n = fg.n;
    let mut p = vec![vec![false; n]; n];
    let mut first = None;
    for (i, fiber) in fg.fibers.iter().enumerate() {
        let independent = fiber
            .subset
            .iter()
            .enumerate()
            .all(|(x, &u)| fiber.subset[x + 1..].iter().all(|&v| !p[u][v]));
        if !independent {
            continue;
        }
        match repeated_pair(coloring, fiber) {
            Some((a1, a2)) => {
                p[a1][a2] = true;
                p[a2][a1] = true;
            }
            None => {
                first = Some(i);
                break;
            }
        }
    }
    let colorful = |f: &Fiber| f.vertices.iter().all(|&v| distinct(&fiber_colors(coloring, &f.subset, v)));
    let candidates = first
        .into_iter()
        .chain((0..fg.fibers.len()).filter(|&i| Some(i) != first && colorful(&fg.fibers[i])));
    let mut any = false;
    for i in candidates {
        any = true;
        if let Some(star) = pigeonhole(coloring, &fg.fibers[i], s) {
            return Ok(star);
        }
    }
    if any {
        Err(Error::NotFound(format!(
            "no fiber has {s} vertices with the same color sequence; m = {} is below C(r,k) k! s",
            fg.m
        )))
    } else {
        Err(Error::NotFound(format!(
            "no fiber sees k distinct colors at every vertex; n = {} is below the Ramsey threshold for P_{l}",
            fg.n
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_gnkm;

    fn coloring(fg: &FiberedGraph, f: impl Fn(usize, usize) -> usize, r: usize) -> EdgeColoring {
        let colors = fg.graph.edges().iter().map(|&(u, v)| f(u, v)).collect();
        EdgeColoring::new(fg.graph.clone(), r, colors).unwrap()
    }

    #[test]
    fn fixed_order() {
        let fg = build_gnkm(3, 2, 4, 1000).unwrap();
        // the smaller base vertex always gets color 0
        let c = coloring(
            &fg,
            |u, v| {
                let fiber = fg.fibers.iter().find(|f| f.vertices.contains(&v)).unwrap();
                usize::from(fiber.subset[0] != u)
            },
            2,
        );
        let star = extract_star_coloring(&fg, &c, 3, 3).unwrap();
        assert_eq!(star.a, vec![0, 1]);
        assert_eq!(star.b, vec![3, 4, 5]);
        assert_eq!(star.colors, vec![0, 1]);
        assert!(is_centered_star_coloring(&c, &star.a, &star.b));
        assert!(extract_star_coloring(&fg, &c, 3, 5).is_err());
    }

    #[test]
    fn skips_monochromatic_fibers() {
        let fg = build_gnkm(3, 2, 2, 1000).unwrap();
        // fiber {0,1} is monochromatic, so {0,1} becomes an edge of P and
        // {0,2} is the first independent colorful set
        let c = coloring(&fg, |u, v| if v <= 4 { 0 } else { usize::from(u == 0) }, 2);
        let star = extract_star_coloring(&fg, &c, 3, 2).unwrap();
        assert_eq!(star.a, vec![0, 2]);
        assert_eq!(star.colors, vec![1, 0]);
    }

    #[test]
    fn not_found() {
        let fg = build_gnkm(3, 2, 1, 1000).unwrap();
        let c = coloring(&fg, |u, v| (u + v) % 2, 2);
        assert!(matches!(extract_star_coloring(&fg, &c, 3, 2), Err(Error::NotFound(_))));
        let mono = coloring(&fg, |_, _| 0, 2);
        assert!(matches!(extract_star_coloring(&fg, &mono, 3, 1), Err(Error::NotFound(_))));
    }

    #[test]
    fn invalid_structure() {
        let fg = build_gnkm(3, 2, 1, 1000).unwrap();
        let other = build_gnkm(3, 1, 1, 1000).unwrap();
        let c = coloring(&other, |_, _| 0, 2);
        assert!(matches!(extract_star_coloring(&fg, &c, 3, 1), Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn predicate() {
        let fg = build_gnkm(2, 2, 3, 1000).unwrap();
        let c = coloring(&fg, |u, _| u, 2);
        assert!(is_centered_star_coloring(&c, &[0, 1], &[2, 3, 4]));
        let c = coloring(&fg, |u, v| if v == 4 { 1 - u } else { u }, 2);
        assert!(!is_centered_star_coloring(&c, &[0, 1], &[2, 3, 4]));
        assert!(is_centered_star_coloring(&c, &[0, 1], &[2, 3]));
        let c = coloring(&fg, |_, _| 0, 2);
        assert!(!is_centered_star_coloring(&c, &[0, 1], &[2]));
    }
}
