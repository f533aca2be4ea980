//! Acceptance suite. Every test prints one `criterion N: PASS|FAIL` line.

mod common;

use std::io::Write;

use common::*;
use rand::Rng;
use sparse_ramsey::bounds::{best_interval, lower_bounds, ramsey_lower, upper_bounds, Family, RamseyKey, RamseyTable, Rule};
use sparse_ramsey::color::{
    biclique_free_partition, cycle_free_partition, is_ramsey, path_free_partition, EdgeColoring, EngineOptions,
    Pattern, SearchOptions,
};
use sparse_ramsey::constructions::{build_gnkm, build_gstar, gnkm_density_check, GStarParams};
use sparse_ramsey::decompose::{
    a_d_exact, acyclic_orient, is_forest, is_star_forest, nash_williams, split_into_star_forests, AdLimits,
    Diameter, ForestPartition,
};
use sparse_ramsey::graph::{p3_witness, NamedGraph};
use sparse_ramsey::parameters::{inner_edges, m1_density, m1_k_density, m2_density, m_density, max_min_degree};
use sparse_ramsey::rational::{ceil_u64, integer, ratio};
use sparse_ramsey::{Graph, Rational};

/// Written to the process stdout so the line shows without `--nocapture`.
fn report(n: u32, ok: bool, detail: &str) {
    let line = format!("criterion {n}: {} - {detail}\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
    assert!(ok, "criterion {n} failed: {detail}");
}

fn named(s: &str) -> Graph {
    s.parse::<NamedGraph>().unwrap().build().unwrap()
}

/// Density parameters against the oracles; returns a description of the
/// first mismatch.
fn density_mismatch(g: &Graph) -> Option<String> {
    let n = g.vertex_count();
    if m_density(g).value != oracle_m(g) {
        return Some(format!("m on {:?}", g.edges()));
    }
    match (m1_density(g).ok().map(|w| w.value), oracle_m1(g)) {
        (a, b) if a == b => {}
        _ => return Some(format!("m1 on {n} vertices {:?}", g.edges())),
    }
    for k in 3..=5 {
        if m1_k_density(g, k).map(|w| w.value).ok() != Some(oracle_m1k(g, k)) {
            return Some(format!("m1(G, {k}) on {n} vertices {:?}", g.edges()));
        }
    }
    if m2_density(g).ok().map(|w| w.value) != oracle_m2(g) {
        return Some(format!("m2 on {n} vertices {:?}", g.edges()));
    }
    None
}

#[test]
fn criterion_01_density_oracles() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=6 {
        for g in all_graphs(n) {
            checked += 1;
            bad.extend(density_mismatch(&g));
        }
    }
    let labelled = checked;
    let mut r = rng(1);
    for _ in 0..300 {
        let n = r.random_range(7..=9);
        let p = r.random_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        checked += 1;
        bad.extend(density_mismatch(&g));
    }
    report(
        1,
        bad.is_empty(),
        &format!(
            "m, m1, m1(G,k) for k in 3..=5 and m2 equal subset enumeration on {labelled} labelled graphs with <= 6 vertices and {} random graphs on 7-9 vertices ({} mismatches{})",
            checked - labelled,
            bad.len(),
            bad.first().map(|b| format!(", first: {b}")).unwrap_or_default()
        ),
    );
}

/// The random graphs of criteria 2 and 10 with their forest partitions.
fn nash_williams_sample() -> Vec<(Graph, ForestPartition)> {
    let mut r = rng(2);
    (0..500)
        .map(|i| {
            let n = r.random_range(2..=40);
            let p = ((i % 25) + 1) as f64 / 25.0;
            let g = random_graph(&mut r, n, p);
            let partition = nash_williams(&g);
            (g, partition)
        })
        .collect()
}

#[test]
fn criterion_02_nash_williams_certificates() {
    let mut bad = Vec::new();
    for (g, part) in nash_williams_sample() {
        let n = g.vertex_count();
        let w = m1_density(&g).unwrap();
        let arboricity = ceil_u64(&w.value).unwrap() as usize;
        let mut all: Vec<(usize, usize)> = part.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        let ok = part.classes.len() == arboricity
            && part.classes.iter().all(|c| is_forest(n, c))
            && all == g.edges()
            && part.verify().is_ok();
        // no partition into arboricity - 1 forests fits the witness
        let h = w.witness.len() as u64;
        let e = inner_edges(&g, &w.witness);
        let tight = g.edge_count() == 0 || e > (arboricity as u64 - 1) * (h - 1);
        if !ok || !tight {
            bad.push(format!("n = {n}, e = {}", g.edge_count()));
        }
    }
    report(
        2,
        bad.is_empty(),
        &format!(
            "500 random graphs on <= 40 vertices split into exactly ceil(m1) forests, witness bound e(H) > (ceil(m1)-1)(v(H)-1) holds ({} failures)",
            bad.len()
        ),
    );
}

#[test]
fn criterion_03_p3_density_one() {
    let g = p3_witness();
    let m = m_density(&g).value;
    let verdict = is_ramsey(&g, &Pattern::Path(3), 2, SearchOptions::default()).unwrap();
    let empty = RamseyTable::default();
    let r_edge = ramsey_lower(&empty, &RamseyKey::diagonal(Family::path(1).unwrap(), 2));
    let lower = lower_bounds(&Pattern::Path(3), 2, &empty).unwrap();
    let path_lower = lower.iter().find(|t| t.rule == Rule::PathLower).map(|t| t.value.clone());
    let ok = m == integer(1)
        && verdict.is_ramsey
        && r_edge.value == 2.into()
        && path_lower == Some(integer(1));
    report(
        3,
        ok,
        &format!(
            "5-cycle with pendant edges: m = {m}, Ramsey for P_3 with 2 colors = {} ({} nodes); path lower bound with R(P_1,2) = {} gives {:?}",
            verdict.is_ramsey, verdict.nodes, r_edge.value, path_lower.map(|v| v.to_string())
        ),
    );
}

#[test]
fn criterion_04_fibered_graphs_are_sparse() {
    let mut bad = Vec::new();
    let mut small = 0;
    for n in 1..=7 {
        for k in 1..=n {
            for m in 1..=3 {
                let fg = build_gnkm(n, k, m, usize::MAX).unwrap();
                small += 1;
                match gnkm_density_check(&fg) {
                    Ok(v) if v < integer(k as i128) => {}
                    other => bad.push(format!("G({n},{k},{m}): {other:?}")),
                }
            }
        }
    }
    let large = [(20, 3, 3), (30, 2, 5), (50, 3, 1), (12, 6, 100), (17, 4, 40)];
    let mut sizes = Vec::new();
    for (n, k, m) in large {
        let fg = build_gnkm(n, k, m, 100_000).unwrap();
        sizes.push(fg.graph.vertex_count());
        match acyclic_orient(&fg.graph, k as u64) {
            Ok(o) if o.verify(&fg.graph).is_ok() && o.max_in_degree <= k as u64 => {}
            other => bad.push(format!("G({n},{k},{m}) orientation: {:?}", other.err())),
        }
    }
    let gstar = build_gstar(
        &GStarParams {
            l: 6,
            k: 2,
            r: 2,
            n: vec![6, 6, 6],
            s: vec![1, 1, 1],
            m: vec![4, 4, 3],
            relax: true,
        },
        100_000,
    )
    .unwrap();
    sizes.push(gstar.graph.vertex_count());
    if acyclic_orient(&gstar.graph, 2).and_then(|o| o.verify(&gstar.graph)).is_err() {
        bad.push("G* orientation".into());
    }
    report(
        4,
        bad.is_empty(),
        &format!(
            "m(G(n,k,m)) < k exactly for {small} builds with n <= 7, m <= 3; in-degree-k acyclic orientations verified on builds with {sizes:?} vertices ({} failures{})",
            bad.len(),
            bad.first().map(|b| format!(", first: {b}")).unwrap_or_default()
        ),
    );
}

#[test]
fn criterion_05_verifier_matches_known_values() {
    let opts = SearchOptions::default();
    let mut results = Vec::new();
    for (pattern, name) in [(Pattern::Clique(3), "K3"), (Pattern::Cycle(4), "C4")] {
        for (n, want) in [(5, false), (6, true)] {
            let got = is_ramsey(&complete(n), &pattern, 2, opts).map(|v| v.is_ramsey);
            results.push((format!("K{n} -> {name}"), got == Ok(want), got));
        }
    }
    let ok = results.iter().all(|r| r.1);
    let detail: Vec<String> = results.iter().map(|(s, _, got)| format!("{s}: {got:?}")).collect();
    report(5, ok, &format!("2-color verifier: {}", detail.join(", ")));
}

#[test]
fn criterion_06_bounds_regression() {
    let t = RamseyTable::seed();
    let mut bad = Vec::new();
    let mut check = |label: String, ok: bool| {
        if !ok {
            bad.push(label);
        }
    };
    let k3 = best_interval(&Pattern::Clique(3), 2, &t).unwrap();
    check(format!("K3: {k3}"), k3.to_string() == "5/2 <= m* <= 5/2");
    let c4 = best_interval(&Pattern::Cycle(4), 2, &t).unwrap();
    check(format!("C4: {c4}"), c4.to_string() == "11/6 <= m* <= 21/10");
    for l in 2..=5 {
        for r in 2..=3 {
            let i = best_interval(&Pattern::Star(l), r, &t).unwrap();
            let tt = (r * (l - 1) + 1) as i128;
            let want = ratio(tt, tt + 1);
            check(format!("star {l}, r = {r}: {i}"), i.lower.value == want && i.is_exact());
        }
    }
    let even_cycle = |l: usize, r: usize, table: &RamseyTable| -> (Rational, Rational, bool) {
        let low = lower_bounds(&Pattern::Cycle(l), r, table).unwrap();
        let up = upper_bounds(&Pattern::Cycle(l), r, table).unwrap();
        let lo = low.iter().find(|x| x.rule == Rule::EvenCycleLower).unwrap().value.clone();
        let u = up.iter().find(|x| x.rule == Rule::BipartiteDegree).unwrap();
        (lo, u.value.clone(), u.strict)
    };
    for (l, r, want) in [(4, 2, ratio(11, 6)), (4, 3, ratio(31, 11)), (6, 2, ratio(15, 8))] {
        let got = even_cycle(l, r, &t);
        check(format!("C{l}, r = {r}: {got:?}"), got == (want, integer(r as i128 + 1), true));
    }
    let fallback = even_cycle(6, 2, &RamseyTable::default());
    check(format!("C6 fallback: {fallback:?}"), fallback.0 == ratio(11, 6));
    let low = lower_bounds(&Pattern::Biclique(2, 2), 2, &t).unwrap();
    let up = upper_bounds(&Pattern::Biclique(2, 2), 2, &t).unwrap();
    let l1 = low.iter().find(|x| x.rule == Rule::BicliqueLower).map(|x| x.value.clone());
    let u1 = up.iter().find(|x| x.rule == Rule::BipartiteDegree).map(|x| (x.value.clone(), x.strict));
    check(
        format!("K22: {l1:?} {u1:?}"),
        l1 == Some(ratio(11, 6)) && u1 == Some((integer(3), true)),
    );
    report(
        6,
        bad.is_empty(),
        &format!(
            "K3 [5/2, 5/2], C4 [11/6, 21/10], stars exact, even cycles r - eps < m* < r + 1, K_(2,2) with 2 colors ({} mismatches: {bad:?})",
            bad.len()
        ),
    );
}

/// Random graphs accepted by `keep`, `count` of them.
fn sample(seed: u64, count: usize, mut make: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Graph, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let g = make(&mut r);
        if g.edge_count() > 0 && keep(&g) {
            out.push(g);
        }
    }
    out
}

/// A sparse random graph with a few planted dense blobs.
fn planted(r: &mut rand_chacha::ChaCha8Rng, blob: usize) -> Graph {
    let n = r.random_range(6..=16);
    let mut edges: Vec<(usize, usize)> = random_graph(r, n, 2.2 / n as f64).edges().to_vec();
    for _ in 0..r.random_range(0..=2) {
        let mut vs: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            vs.swap(i, r.random_range(0..=i));
        }
        let size = blob.min(n);
        for i in 0..size {
            for j in i + 1..size {
                if r.random_bool(0.9) {
                    edges.push((vs[i].min(vs[j]), vs[i].max(vs[j])));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges).unwrap()
}

fn violations(c: &EdgeColoring, pattern: &Pattern) -> usize {
    let p = pattern.to_graph().unwrap();
    (0..c.r()).filter(|&col| contains_subgraph(&c.class_graph(col), &p)).count()
}

#[test]
fn criterion_07_engines_are_sound() {
    let opts = EngineOptions::default();
    let mut lines = Vec::new();
    let mut total_bad = 0;
    let mut run = |name: &str, graphs: Vec<Graph>, pattern: Pattern, f: &dyn Fn(&Graph) -> sparse_ramsey::Result<EdgeColoring>| {
        let mut bad = 0;
        let mut errors = 0;
        for g in &graphs {
            match f(g) {
                Ok(c) => bad += violations(&c, &pattern),
                Err(_) => errors += 1,
            }
        }
        total_bad += bad + errors;
        lines.push(format!("{name}: {} graphs, {bad} violations, {errors} errors", graphs.len()));
    };
    let below = ratio(11, 6);
    let cyc = sample(71, 100, |r| planted(r, 5), |g| m_density(g).value < below);
    run("cycle-free (4,2)", cyc, Pattern::Cycle(4), &|g| cycle_free_partition(g, 4, 2, 6, opts));
    let bic = sample(72, 100, |r| planted(r, 5), |g| m_density(g).value < below);
    run("biclique-free (2,2,2)", bic, Pattern::Biclique(2, 2), &|g| biclique_free_partition(g, 2, 2, 2, 6, opts));
    let forests = sample(73, 100, |r| {
        let n = r.random_range(5..=30);
        random_forest(r, n, 0.9)
    }, |g| m1_density(g).unwrap().value <= integer(1));
    run("path-free (3,2)", forests, Pattern::Path(3), &|g| path_free_partition(g, 3, 2, 2, opts));
    let two = sample(74, 100, |r| planted(r, 4), |g| m1_k_density(g, 5).unwrap().value <= integer(2));
    run("path-free (6,4)", two, Pattern::Path(6), &|g| path_free_partition(g, 6, 4, 5, opts));
    report(7, total_bad == 0, &lines.join("; "));
}

#[test]
fn criterion_08_sparse_graphs_have_small_m1k() {
    let mut r = rng(8);
    let mut premises = 0;
    let mut counter = Vec::new();
    for _ in 0..2000 {
        let n = r.random_range(2..=12);
        let p = r.random_range(0.05..0.95);
        let g = random_graph(&mut r, n, p);
        let m = m_density(&g).value;
        for k in 2..=8usize {
            for rr in 1..=4usize {
                let den = k.max(2 * rr + 1) as i128;
                let threshold = integer(rr as i128) - ratio(rr as i128 - 1, den);
                if m < threshold {
                    premises += 1;
                    let m1k = m1_k_density(&g, k).unwrap().value;
                    if m1k > integer(rr as i128) {
                        counter.push(format!("k = {k}, r = {rr}, m = {m}, m1k = {m1k}, {:?}", g.edges()));
                    }
                }
            }
        }
    }
    report(
        8,
        counter.is_empty(),
        &format!(
            "m(G) < r - (r-1)/max(k, 2r+1) implies m1(G,k) <= r: {premises} premises over 2000 random graphs, {} counterexamples",
            counter.len()
        ),
    );
}

#[test]
fn criterion_09_orientation_iff_m1() {
    let classes = iso_classes(7);
    let mut checked = 0;
    let mut counter: Vec<(usize, u64, String)> = Vec::new();
    let mut degeneracy_mismatch = 0;
    for g in classes.iter().flatten().filter(|g| g.vertex_count() >= 2) {
        let m1 = m1_density(g).unwrap().value;
        for k in 1..=6u64 {
            checked += 1;
            let oriented = acyclic_orient(g, k).is_ok();
            if oriented != (max_min_degree(g) as u64 <= k) {
                degeneracy_mismatch += 1;
            }
            if oriented != (m1 <= integer(k as i128)) {
                counter.push((g.vertex_count(), k, format!("{:?} (m1 = {m1})", g.edges())));
            }
        }
    }
    counter.sort();
    for (_, k, g) in counter.iter().take(3) {
        let _ = writeln!(std::io::stdout().lock(), "  counterexample: k = {k}, edges {g}");
    }
    report(
        9,
        counter.is_empty(),
        &format!(
            "acyclic in-degree-k orientation exists iff m1(G) <= k on {} graphs with <= 7 vertices, k in 1..=6: {} of {checked} pairs disagree (orientation exists iff degeneracy <= k: {degeneracy_mismatch} disagreements)",
            classes.iter().flatten().count(),
            counter.len()
        ),
    );
}

#[test]
fn criterion_10_star_split_and_bounded_diameter() {
    let mut bad = Vec::new();
    let mut forests = 0;
    for (g, part) in nash_williams_sample() {
        let n = g.vertex_count();
        for class in &part.classes {
            forests += 1;
            let [a, b] = split_into_star_forests(n, class).unwrap();
            let mut union: Vec<_> = a.iter().chain(&b).copied().collect();
            union.sort_unstable();
            let mut want = class.clone();
            want.sort_unstable();
            if !(is_star_forest(n, &a) && is_star_forest(n, &b) && union == want) {
                bad.push(format!("star split on {n} vertices"));
            }
        }
    }
    let limits = AdLimits {
        max_vertices: 7,
        max_edges: 21,
    };
    let a2_p3 = a_d_exact(&named("path:3"), Diameter::Finite(2), limits).unwrap();
    let a2_star = a_d_exact(&named("star:5"), Diameter::Finite(2), limits).unwrap();
    if a2_p3 != 2 || a2_star != 1 {
        bad.push(format!("a2(P3) = {a2_p3}, a2(star) = {a2_star}"));
    }
    let classes = iso_classes(7);
    let mut pairs = 0;
    for g in classes.iter().flatten().filter(|g| g.edge_count() > 0) {
        let inf = a_d_exact(g, Diameter::Infinite, limits).unwrap();
        for d in 2..=4 {
            pairs += 1;
            let ad = a_d_exact(g, Diameter::Finite(d), limits).unwrap();
            if ad > 2 * inf {
                bad.push(format!("a_{d} = {ad} > 2 a_inf = {} on {:?}", 2 * inf, g.edges()));
            }
        }
    }
    report(
        10,
        bad.is_empty(),
        &format!(
            "{forests} forests split into two star forests; a2(P3) = {a2_p3}, a2(star) = {a2_star}; a_d <= 2 a_inf on {pairs} (graph, d) pairs with <= 7 vertices ({} failures)",
            bad.len()
        ),
    );
}

#[test]
fn iso_class_counts() {
    let counts: Vec<usize> = iso_classes(7).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
}
