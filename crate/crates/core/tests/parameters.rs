mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use sparse_ramsey::parameters::{inner_edges, m1_density, m1_k_density, m2_density, m_density};
use sparse_ramsey::rational::ratio;
use sparse_ramsey::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn witnesses_attain_values(g in arb_graph(11)) {
        let m = m_density(&g);
        if g.edge_count() > 0 {
            prop_assert_eq!(ratio(inner_edges(&g, &m.witness) as i128, m.witness.len() as i128), m.value.clone());
        }
        let m1 = m1_density(&g).unwrap();
        let h = m1.witness.len() as i128;
        prop_assert_eq!(ratio(inner_edges(&g, &m1.witness) as i128, h - 1), m1.value.clone());
        prop_assert!(m1.value >= m.value);
    }

    #[test]
    fn matches_oracles(g in arb_graph(9)) {
        prop_assert_eq!(m_density(&g).value, oracle_m(&g));
        prop_assert_eq!(Some(m1_density(&g).unwrap().value), oracle_m1(&g));
        for k in 2..=4 {
            prop_assert_eq!(m1_k_density(&g, k).unwrap().value, oracle_m1k(&g, k));
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_density(g in arb_graph(10), u in 0usize..10, v in 0usize..10) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let bigger = Graph::new(n, g.edges().iter().copied().chain([(u.min(v), u.max(v))])).unwrap();
        prop_assert!(m_density(&bigger).value >= m_density(&g).value);
        prop_assert!(m1_density(&bigger).unwrap().value >= m1_density(&g).unwrap().value);
    }
}

#[test]
fn m1k_is_monotone_in_k() {
    let mut r = rng(11);
    for _ in 0..100 {
        let n = r.random_range(3..=12);
        let p = r.random_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        let values: Vec<_> = (2..=n).map(|k| m1_k_density(&g, k).unwrap().value).collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(values[0], m1_density(&g).unwrap().value);
    }
}

#[test]
fn m2_matches_oracle_on_random_graphs() {
    let mut r = rng(12);
    for _ in 0..150 {
        let n = r.random_range(3..=10);
        let p = r.random_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        assert_eq!(m2_density(&g).ok().map(|w| w.value), oracle_m2(&g));
    }
}
