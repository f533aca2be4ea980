//! Sparse Ramsey constructions: the fibered graphs `G(n, k, m)`, the
//! layered graph `G*` built by gluing fibered graphs onto fibers, and the
//! complete bipartite witnesses for bicliques.
//!
//! `G(n, k, m)` has a base set `N = [n]` and, for every `k`-subset `A` of
//! `N`, a fiber `M(A)` of `m` vertices each adjacent to exactly `A`.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::bounds::{ramsey_upper_u64, Family, RamseyKey, RamseyTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, NamedGraph};
use crate::parameters::m_density;
use crate::rational::{integer, ratio, Rational};

/// Default vertex budget for generated graphs.
pub const DEFAULT_VERTEX_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    /// The `k` base vertices every fiber vertex is joined to.
    pub subset: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// `G(n, k, m)` with its fiber index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberedGraph {
    pub graph: Graph,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    /// In lexicographic order of `subset`.
    pub fibers: Vec<Fiber>,
}

impl FiberedGraph {
    /// The base vertices `0..n`.
    pub fn base(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn fiber(&self, subset: &[usize]) -> Option<&Fiber> {
        self.fibers
            .binary_search_by(|f| f.subset.as_slice().cmp(subset))
            .ok()
            .map(|i| &self.fibers[i])
    }

    /// One line `a1 .. ak: v1 .. vm` per fiber.
    pub fn sidecar(&self) -> String {
        let mut out = String::new();
        write_fibers(&mut out, &self.fibers);
        out
    }

    pub fn verify(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidStructure(m));
        let expected = binomial_checked(self.n, self.k).and_then(|c| c.checked_mul(self.m));
        if expected.and_then(|x| x.checked_add(self.n)) != Some(self.graph.vertex_count()) {
            return bad(format!("vertex count {} is not n + C(n,k) m", self.graph.vertex_count()));
        }
        if self.fibers.len() != binomial_checked(self.n, self.k).unwrap_or(0) {
            return bad("wrong number of fibers".into());
        }
        for f in &self.fibers {
            if f.subset.len() != self.k || f.vertices.len() != self.m {
                return bad(format!("fiber {:?} has the wrong shape", f.subset));
            }
            for &v in &f.vertices {
                if self.graph.neighbors(v) != f.subset.as_slice() {
                    return bad(format!("fiber vertex {v} is not joined to exactly {:?}", f.subset));
                }
            }
        }
        Ok(())
    }
}

fn write_fibers(out: &mut String, fibers: &[Fiber]) {
    for f in fibers {
        let _ = writeln!(out, "{}: {}", f.subset.iter().join(" "), f.vertices.iter().join(" "));
    }
}

fn binomial_checked(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    usize::try_from(acc).ok()
}

fn factorial_checked(k: usize) -> Option<usize> {
    (1..=k).try_fold(1usize, |acc, i| acc.checked_mul(i))
}

fn budget_error(what: &str, needed: Option<usize>, max: usize) -> Error {
    match needed {
        Some(v) => Error::SizeLimit(format!("{what} needs {v} vertices, budget is {max}")),
        None => Error::SizeLimit(format!("{what} needs more than {} vertices, budget is {max}", usize::MAX)),
    }
}

/// Appends fibers over `base` (base vertices listed in order) to `edges`,
/// numbering new vertices from `next`.
fn attach_fibers(base: &[usize], k: usize, m: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) -> Vec<Fiber> {
    let mut fibers = Vec::new();
    for subset in base.iter().copied().combinations(k) {
        let vertices: Vec<usize> = (*next..*next + m).collect();
        *next += m;
        for &v in &vertices {
            edges.extend(subset.iter().map(|&a| (a, v)));
        }
        fibers.push(Fiber { subset, vertices });
    }
    fibers
}

/// `G(n, k, m)` with `N = 0..n` followed by the fibers in lexicographic
/// subset order, each fiber numbered by copy index.
pub fn build_gnkm(n: usize, k: usize, m: usize, max_vertices: usize) -> Result<FiberedGraph> {
    if k < 1 || k > n || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= n and m >= 1, got n = {n}, k = {k}, m = {m}"
        )));
    }
    let total = binomial_checked(n, k)
        .and_then(|c| c.checked_mul(m))
        .and_then(|x| x.checked_add(n));
    if total.is_none_or(|t| t > max_vertices) {
        return Err(budget_error(&format!("G({n},{k},{m})"), total, max_vertices));
    }
    let mut next = n;
    let mut edges = Vec::new();
    let base: Vec<usize> = (0..n).collect();
    let fibers = attach_fibers(&base, k, m, &mut next, &mut edges);
    let graph = Graph::new(next, edges)?;
    Ok(FiberedGraph { graph, n, k, m, fibers })
}

/// `m(G(n, k, m))`, checked to be below `k` together with the bound
/// `k|B| / (|A| + |B|)` on the witness with base part `A` and fiber part `B`.
pub fn gnkm_density_check(g: &FiberedGraph) -> Result<Rational> {
    let w = m_density(&g.graph);
    let a = w.witness.iter().filter(|&&v| v < g.n).count() as i128;
    let b = w.witness.len() as i128 - a;
    let k = g.k as i128;
    if !w.witness.is_empty() && w.value > ratio(k * b, a + b) {
        return Err(Error::Internal(format!(
            "density {} exceeds k|B|/(|A|+|B|) = {}",
            w.value,
            ratio(k * b, a + b)
        )));
    }
    if w.value >= integer(k) {
        return Err(Error::Internal(format!("m(G({},{},{})) = {} is not below k", g.n, g.k, g.m, w.value)));
    }
    Ok(w.value)
}

/// The generalized Ramsey instance with `r` copies of `P_{ceil(l/2)}` and one `K_k`.
pub fn paths_ramsey_key(l: usize, k: usize, r: usize) -> Result<RamseyKey> {
    let mut families = vec![Family::path(l.div_ceil(2))?; r];
    families.push(Family::clique(k)?);
    Ok(RamseyKey::new(families))
}

/// `(n, m)` with `n` the known upper bound on the generalized Ramsey
/// number for `r` copies of `P_{ceil(l/2)}` and `K_k`, and
/// `m = C(r, k) k! s`.
pub fn paths_parameters(l: usize, k: usize, r: usize, s: usize, table: &RamseyTable) -> Result<(usize, usize)> {
    if l < 3 || k < 2 || r < k || s < 1 {
        return Err(Error::InvalidParameter(format!(
            "need l >= 3, k >= 2, r >= k and s >= 1, got l = {l}, k = {k}, r = {r}, s = {s}"
        )));
    }
    let key = paths_ramsey_key(l, k, r)?;
    let n = ramsey_upper_u64(table, &key).ok_or_else(|| Error::TableMiss(key.to_string()))?;
    let n = usize::try_from(n).map_err(|_| Error::SizeLimit(format!("{key} = {n} does not fit")))?;
    let m = binomial_checked(r, k)
        .zip(factorial_checked(k))
        .and_then(|(c, f)| c.checked_mul(f))
        .and_then(|x| x.checked_mul(s))
        .ok_or_else(|| Error::SizeLimit(format!("C({r},{k}) {k}! {s} overflows")))?;
    Ok((n, m))
}

/// Parameter sequences for `G*`, one entry per level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStarParams {
    pub l: usize,
    pub k: usize,
    pub r: usize,
    pub n: Vec<usize>,
    pub s: Vec<usize>,
    pub m: Vec<usize>,
    /// Skip the consistency checks between the sequences.
    pub relax: bool,
}

impl GStarParams {
    pub fn levels(&self) -> usize {
        self.l.div_ceil(2)
    }

    /// The defining sequences with `n` taken from the table.
    pub fn canonical(l: usize, k: usize, r: usize, table: &RamseyTable) -> Result<GStarParams> {
        let levels = l.div_ceil(2);
        let (n, _) = paths_parameters(l, k, r, 1, table)?;
        let mut s = vec![n; levels];
        s[0] = (k + 1) * n;
        s[levels - 1] = 1;
        let unit = binomial_checked(r, k)
            .zip(factorial_checked(k))
            .and_then(|(c, f)| c.checked_mul(f))
            .ok_or_else(|| Error::SizeLimit("C(r,k) k! overflows".into()))?;
        let m = s
            .iter()
            .map(|&si| unit.checked_mul(si).ok_or_else(|| Error::SizeLimit("m overflows".into())))
            .collect::<Result<_>>()?;
        Ok(GStarParams {
            l,
            k,
            r,
            n: vec![n; levels],
            s,
            m,
            relax: false,
        })
    }

    /// Whether the sequences satisfy the defining relations.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        let levels = self.levels();
        if self.l < 3 || self.k < 1 {
            return bad(format!("need l >= 3 and k >= 1, got l = {}, k = {}", self.l, self.k));
        }
        for (name, seq) in [("n", &self.n), ("s", &self.s), ("m", &self.m)] {
            if seq.len() != levels {
                return bad(format!("sequence {name} needs {levels} entries, got {}", seq.len()));
            }
        }
        if self.n[0] < self.k || self.m.iter().any(|&m| m < 1) || self.m[..levels - 1].iter().any(|&m| m < self.k) {
            return bad("n_1 and every m_i below the last level must be at least k; all m_i positive".into());
        }
        if self.relax {
            return Ok(());
        }
        if self.n.iter().any(|&x| x != self.n[0]) {
            return bad(format!("n must be constant, got {:?}", self.n));
        }
        let mut want = vec![0; levels];
        for i in 0..levels {
            want[i] = if i == levels - 1 {
                1
            } else if i == 0 {
                (self.k + 1) * self.n[1]
            } else {
                self.n[i + 1]
            };
        }
        if self.s != want {
            return bad(format!("s must be {want:?}, got {:?}", self.s));
        }
        let unit = binomial_checked(self.r, self.k).unwrap_or(0) * factorial_checked(self.k).unwrap_or(0);
        let want_m: Vec<usize> = self.s.iter().map(|&si| unit * si).collect();
        if self.m != want_m {
            return bad(format!("m must be C(r,k) k! s = {want_m:?}, got {:?}", self.m));
        }
        Ok(())
    }
}

/// A copy of `G(m_i, k, m_{i+1})` glued onto a fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedCopy {
    /// The fiber playing the role of the base set.
    pub base: Vec<usize>,
    pub fibers: Vec<Fiber>,
}

/// `G*` with its levels. Level 0 holds the base copy `G(n_1, k, m_1)`;
/// level `i` holds the copies glued onto the fibers of level `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStarGraph {
    pub graph: Graph,
    pub params: GStarParams,
    /// `false` when built from relaxed sequences.
    pub canonical: bool,
    pub levels: Vec<Vec<GluedCopy>>,
}

impl GStarGraph {
    /// The fiber sets of level `i` (zero-based).
    pub fn fiber_sets(&self, i: usize) -> Vec<&[usize]> {
        self.levels[i]
            .iter()
            .flat_map(|c| c.fibers.iter().map(|f| f.vertices.as_slice()))
            .collect()
    }

    /// `# level i` headers followed by fiber lines.
    pub fn sidecar(&self) -> String {
        let mut out = String::new();
        if !self.canonical {
            out.push_str("# non-canonical parameters\n");
        }
        for (i, level) in self.levels.iter().enumerate() {
            let _ = writeln!(out, "# level {}", i + 1);
            for copy in level {
                write_fibers(&mut out, &copy.fibers);
            }
        }
        out
    }
}

/// Builds `G*`.
pub fn build_gstar(params: &GStarParams, max_vertices: usize) -> Result<GStarGraph> {
    params.check()?;
    let levels = params.levels();
    let k = params.k;
    // vertex count first
    let mut total = Some(params.n[0]);
    let mut fibers = binomial_checked(params.n[0], k);
    total = total.zip(fibers.and_then(|f| f.checked_mul(params.m[0]))).and_then(|(a, b)| a.checked_add(b));
    for i in 1..levels {
        let per_copy = binomial_checked(params.m[i - 1], k);
        fibers = fibers.zip(per_copy).and_then(|(a, b)| a.checked_mul(b));
        total = total
            .zip(fibers.and_then(|f| f.checked_mul(params.m[i])))
            .and_then(|(a, b)| a.checked_add(b));
    }
    if total.is_none_or(|t| t > max_vertices) {
        return Err(budget_error("G*", total, max_vertices));
    }

    let mut next = params.n[0];
    let mut edges = Vec::new();
    let base: Vec<usize> = (0..params.n[0]).collect();
    let first = attach_fibers(&base, k, params.m[0], &mut next, &mut edges);
    let mut out = vec![vec![GluedCopy { base, fibers: first }]];
    for i in 1..levels {
        let hosts: Vec<Vec<usize>> = out[i - 1]
            .iter()
            .flat_map(|c| c.fibers.iter().map(|f| f.vertices.clone()))
            .collect();
        let level = hosts
            .into_iter()
            .map(|base| {
                let fibers = attach_fibers(&base, k, params.m[i], &mut next, &mut edges);
                GluedCopy { base, fibers }
            })
            .collect();
        out.push(level);
    }
    let graph = Graph::new(next, edges)?;
    Ok(GStarGraph {
        graph,
        params: params.clone(),
        canonical: !params.relax,
        levels: out,
    })
}

/// `K_{p,q}` with `p = r(a-1)+1` and `q = r(b-1) C(p, a) + 1`.
pub fn kpq_witness(a: usize, b: usize, r: usize, max_vertices: usize) -> Result<Graph> {
    let (p, q) = kpq_sides(a, b, r)?;
    let total = q.and_then(|q| q.checked_add(p));
    if total.is_none_or(|t| t > max_vertices) {
        return Err(budget_error(&format!("K_{{p,q}} for a = {a}, b = {b}, r = {r}"), total, max_vertices));
    }
    NamedGraph::CompleteBipartite(p, q.expect("checked above")).build()
}

/// The side sizes of [`kpq_witness`]; `q` is `None` on overflow.
pub fn kpq_sides(a: usize, b: usize, r: usize) -> Result<(usize, Option<usize>)> {
    if a < 1 || b < 1 || r < 1 {
        return Err(Error::InvalidParameter(format!(
            "need a, b, r >= 1, got a = {a}, b = {b}, r = {r}"
        )));
    }
    let p = r * (a - 1) + 1;
    let q = binomial_checked(p, a)
        .and_then(|c| c.checked_mul(r * (b - 1)))
        .and_then(|x| x.checked_add(1));
    Ok((p, q))
}

/// `ceil((1 - 1/L) r + 1/L)` with `L = ceil(l/2)`.
pub fn gstar_k_formula(l: usize, r: usize) -> Result<usize> {
    if l < 3 || r < 2 {
        return Err(Error::InvalidParameter(format!("need l >= 3 and r >= 2, got l = {l}, r = {r}")));
    }
    let h = l.div_ceil(2);
    let k = ((h - 1) * r + 1).div_ceil(h);
    if (r as i128) - (r as i128 - k as i128) * (h as i128) < 1 {
        return Err(Error::Internal(format!("r - (r - k) L < 1 for l = {l}, r = {r}, k = {k}")));
    }
    Ok(k)
}
