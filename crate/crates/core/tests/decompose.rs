mod common;

use common::*;
use rand::Rng;
use sparse_ramsey::decompose::{
    a_d_exact, acyclic_orient, is_forest, nash_williams, nash_williams_into, AdLimits, Diameter,
};
use sparse_ramsey::parameters::{m1_density, max_min_degree};
use sparse_ramsey::rational::ceil_u64;
use sparse_ramsey::{Graph, MultiGraph};

/// Fewest classes of forests with components of diameter at most `d`,
/// by trying every assignment.
fn brute_a_d(g: &Graph, d: Option<usize>) -> usize {
    let e = g.edges();
    if e.is_empty() {
        return 0;
    }
    let n = g.vertex_count();
    for t in 1..=e.len() {
        let mut assign = vec![0usize; e.len()];
        loop {
            let ok = (0..t).all(|c| {
                let class: Vec<_> = e.iter().zip(&assign).filter(|(_, &a)| a == c).map(|(&x, _)| x).collect();
                is_forest(n, &class) && d.is_none_or(|d| forest_diameter_at_most(n, &class, d))
            });
            if ok {
                return t;
            }
            let mut i = 0;
            while i < assign.len() && assign[i] == t - 1 {
                assign[i] = 0;
                i += 1;
            }
            if i == assign.len() {
                break;
            }
            assign[i] += 1;
        }
    }
    unreachable!()
}

#[test]
fn a_d_matches_brute_force() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 40 {
        let n = r.random_range(3..=6);
        let g = random_graph(&mut r, n, 0.5);
        if g.edge_count() > 9 {
            continue;
        }
        checked += 1;
        for d in [Some(2), Some(3), None] {
            let dd = d.map_or(Diameter::Infinite, Diameter::Finite);
            assert_eq!(a_d_exact(&g, dd, AdLimits::default()).unwrap(), brute_a_d(&g, d), "{:?} d = {d:?}", g.edges());
        }
    }
}

#[test]
fn a_d_rejects_bad_input() {
    assert!(a_d_exact(&complete(7), Diameter::Finite(2), AdLimits::default()).is_err());
    assert!(a_d_exact(&complete(3), Diameter::Finite(1), AdLimits::default()).is_err());
}

#[test]
fn forests_are_tight() {
    let mut r = rng(22);
    for _ in 0..60 {
        let n = r.random_range(2..=25);
        let p = r.random_range(0.05..0.9);
        let g = random_graph(&mut r, n, p);
        let part = nash_williams(&g);
        part.verify().unwrap();
        let a = if g.edge_count() == 0 { 0 } else { ceil_u64(&m1_density(&g).unwrap().value).unwrap() as usize };
        assert_eq!(part.classes.len(), a);
        if a > 1 {
            assert!(nash_williams_into(&g, a - 1).is_err());
        }
        assert!(nash_williams_into(&g, a + 1).is_ok());
    }
}

#[test]
fn multigraph_forests() {
    let mg = MultiGraph::new(3, [(0, 1, 3), (1, 2, 1)]).unwrap();
    let part = nash_williams(&mg);
    part.verify().unwrap();
    assert_eq!(part.classes.len(), 3);
}

#[test]
fn orientation_threshold_is_degeneracy() {
    let mut r = rng(23);
    for _ in 0..200 {
        let n = r.random_range(1..=30);
        let p = r.random_range(0.05..0.7);
        let g = random_graph(&mut r, n, p);
        let d = (max_min_degree(&g) as u64).max(1);
        let o = acyclic_orient(&g, d).unwrap();
        o.verify(&g).unwrap();
        assert!(o.max_in_degree <= d);
        if d > 1 {
            assert!(acyclic_orient(&g, d - 1).is_err());
        }
    }
}
