//! Dinic max-flow and the max-weight closure problem built on it.
//!
//! The closure problem solved here: choose a vertex set `T` containing a
//! given forced set `F`, maximizing
//!
//! ```text
//!     q * w(T) - p * |T \ F|
//! ```
//!
//! where `w(T)` is the total multiplicity of pairs with both ends in `T`.
//! It is the project-selection network: one node per pair (profit `q*w`),
//! one node per vertex (cost `p`), infinite arcs from a pair to its ends.

use std::collections::VecDeque;

const INF: i64 = i64::MAX / 4;

struct Arc {
    to: usize,
    cap: i64,
}

pub(crate) struct Dinic {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub(crate) fn new(nodes: usize) -> Self {
        Dinic {
            arcs: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.head[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.head[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.head[x] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[x] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, pushed: i64) -> i64 {
        if x == t {
            return pushed;
        }
        while self.iter[x] < self.head[x].len() {
            let a = self.head[x][self.iter[x]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[x] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            self.iter[x] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Nodes that can still reach `t` in the residual network.
    pub(crate) fn reaches_sink(&self, t: usize) -> Vec<bool> {
        // reverse adjacency over residual arcs: x -> y usable iff cap(x->y) > 0
        let mut seen = vec![false; self.head.len()];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(y) = stack.pop() {
            for &a in &self.head[y] {
                // arc a goes y -> x; its partner a^1 goes x -> y
                let x = self.arcs[a].to;
                if !seen[x] && self.arcs[a ^ 1].cap > 0 {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        seen
    }
}

/// Result of a closure computation: the maximal optimal vertex set and its
/// objective value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Closure {
    pub value: i128,
    pub vertices: Vec<usize>,
    /// Total multiplicity of pairs inside `vertices`.
    pub inner_weight: u64,
}

/// Solves the closure problem described in the module docs over the
/// vertices with `allowed[v]` set. Forced vertices must be allowed.
pub(crate) fn max_closure(
    n: usize,
    pairs: &[(usize, usize, u64)],
    allowed: &[bool],
    forced: &[bool],
    p: i64,
    q: i64,
) -> Closure {
    let inside: Vec<&(usize, usize, u64)> = pairs
        .iter()
        .filter(|&&(u, v, _)| allowed[u] && allowed[v])
        .collect();
    let s = n + inside.len();
    let t = s + 1;
    let mut net = Dinic::new(t + 1);
    for (i, &&(u, v, w)) in inside.iter().enumerate() {
        net.add_arc(s, n + i, q * w as i64);
        net.add_arc(n + i, u, INF);
        net.add_arc(n + i, v, INF);
    }
    for v in 0..n {
        if !allowed[v] {
            continue;
        }
        if forced[v] {
            net.add_arc(s, v, INF);
        } else if p > 0 {
            net.add_arc(v, t, p);
        }
    }
    net.max_flow(s, t);
    let sink_side = net.reaches_sink(t);
    let vertices: Vec<usize> = (0..n).filter(|&v| allowed[v] && !sink_side[v]).collect();
    let mut in_set = vec![false; n];
    for &v in &vertices {
        in_set[v] = true;
    }
    let inner_weight: u64 = pairs
        .iter()
        .filter(|&&(u, v, _)| in_set[u] && in_set[v])
        .map(|p| p.2)
        .sum();
    let paid = vertices.iter().filter(|&&v| !forced[v]).count() as i128;
    Closure {
        value: q as i128 * inner_weight as i128 - p as i128 * paid,
        vertices,
        inner_weight,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dinic_small_network() {
        let mut net = Dinic::new(4);
        net.add_arc(0, 1, 3);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 2, 5);
        net.add_arc(1, 3, 2);
        net.add_arc(2, 3, 3);
        assert_eq!(net.max_flow(0, 3), 5);
    }

    #[test]
    fn closure_picks_dense_part() {
        // K4 on 0..4 plus a pendant path 3-4-5
        let mut pairs = vec![];
        for u in 0..4 {
            for v in u + 1..4 {
                pairs.push((u, v, 1));
            }
        }
        pairs.push((3, 4, 1));
        pairs.push((4, 5, 1));
        let all = vec![true; 6];
        let none = vec![false; 6];
        // lambda = 1: K4 gives 6 - 4 = 2, adding 4 gives 7 - 5 = 2, adding 5 gives 8 - 6 = 2
        let c = max_closure(6, &pairs, &all, &none, 1, 1);
        assert_eq!(c.value, 2);
        assert_eq!(c.vertices, vec![0, 1, 2, 3, 4, 5]);
        // lambda = 3/2: only K4 reaches 0 (6 - 6), so the optimum is empty or K4
        let c = max_closure(6, &pairs, &all, &none, 3, 2);
        assert_eq!(c.value, 0);
        assert_eq!(c.vertices, vec![0, 1, 2, 3]);
        // forcing vertex 5 for free
        let mut forced = none.clone();
        forced[5] = true;
        let c = max_closure(6, &pairs, &all, &forced, 2, 1);
        assert!(c.vertices.contains(&5));
    }
}
