//! Bounds on the Ramsey density `m*(F, r)`: the infimum of `m(G)` over
//! graphs `G` such that every `r`-coloring of `E(G)` has a monochromatic `F`.

mod table;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::color::Pattern;
use crate::error::{Error, Result};
use crate::parameters::{chromatic_number, clique_number, d_parameter, m2_density, max_min_degree};
use crate::rational::{ratio, Rational};

pub use table::{Family, LowerEntry, RamseyKey, RamseyTable, TableEntry, UpperEntry};

/// The rule that produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `(chi(F) - 1)^r / 2`
    Chromatic,
    /// `(r/2) m2(F)`
    TwoDensity,
    /// `(r(degeneracy(F) - 1) + 1) / 2`
    Degeneracy,
    /// `(R(K_omega, r) - 1) / 2`
    CliqueRamsey,
    /// `r(a-1) - eps` for `K_{a,b}`
    BicliqueLower,
    /// `r - eps` for even cycles
    EvenCycleLower,
    /// `2^(r-1)` for odd cycles
    OddCycleLower,
    /// `floor(r/2) - eps` for paths
    PathLower,
    /// exact value for stars
    StarExact,
    /// `r(d(F) - 1) + 1`, strict
    BipartiteDegree,
    /// `m(K_R) = (R - 1) / 2` with `R` an upper bound on `R(F, r)`
    CompleteHost,
    /// `pq/(p+q)` for the complete bipartite host
    CompleteBipartiteHost,
    /// the path construction bound, strict
    PathConstruction,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Chromatic => "chromatic",
            Rule::TwoDensity => "two-density",
            Rule::Degeneracy => "degeneracy",
            Rule::CliqueRamsey => "clique-ramsey",
            Rule::BicliqueLower => "biclique-lower",
            Rule::EvenCycleLower => "even-cycle-lower",
            Rule::OddCycleLower => "odd-cycle-lower",
            Rule::PathLower => "path-lower",
            Rule::StarExact => "star-exact",
            Rule::BipartiteDegree => "bipartite-degree",
            Rule::CompleteHost => "complete-host",
            Rule::CompleteBipartiteHost => "complete-bipartite-host",
            Rule::PathConstruction => "path-construction",
        })
    }
}

/// One evaluated bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTerm {
    pub value: Rational,
    pub rule: Rule,
    /// Upper bounds only: `m* < value` rather than `m* <= value`.
    pub strict: bool,
    /// Ramsey values consumed, with their sources.
    pub inputs: Vec<String>,
}

impl BoundTerm {
    fn new(value: Rational, rule: Rule) -> BoundTerm {
        BoundTerm {
            value,
            rule,
            strict: false,
            inputs: Vec::new(),
        }
    }

    fn strict(mut self) -> BoundTerm {
        self.strict = true;
        self
    }

    fn input(mut self, s: String) -> BoundTerm {
        self.inputs.push(s);
        self
    }
}

impl fmt::Display for BoundTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rule, self.value)?;
        if self.strict {
            f.write_str(" (strict)")?;
        }
        if !self.inputs.is_empty() {
            write!(f, " using {}", self.inputs.join("; "))?;
        }
        Ok(())
    }
}

/// The best known interval for `m*(F, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInterval {
    pub lower: BoundTerm,
    /// `None` when no upper bound applies.
    pub upper: Option<BoundTerm>,
}

impl BoundInterval {
    pub fn is_exact(&self) -> bool {
        self.upper.as_ref().is_some_and(|u| u.value == self.lower.value)
    }
}

impl fmt::Display for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.upper {
            Some(u) => write!(
                f,
                "{} <= m* {} {}",
                self.lower.value,
                if u.strict { "<" } else { "<=" },
                u.value
            ),
            None => write!(f, "{} <= m*", self.lower.value),
        }
    }
}

/// A bound on a Ramsey number and where it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyValue {
    pub value: BigInt,
    pub source: String,
}

impl RamseyValue {
    fn new(value: impl Into<BigInt>, source: impl Into<String>) -> RamseyValue {
        RamseyValue {
            value: value.into(),
            source: source.into(),
        }
    }
}

fn keep_max(best: &mut RamseyValue, cand: RamseyValue) {
    if cand.value > best.value {
        *best = cand;
    }
}

fn keep_min(best: &mut Option<RamseyValue>, cand: RamseyValue) {
    if best.as_ref().is_none_or(|b| cand.value < b.value) {
        *best = Some(cand);
    }
}

/// `R(K_{1,n_1}, ..., K_{1,n_s})`.
fn star_ramsey(rays: &[usize]) -> BigInt {
    let sum: usize = rays.iter().map(|&n| n - 1).sum();
    let even = rays.iter().filter(|&&n| n % 2 == 0).count();
    let extra = if even > 0 && even % 2 == 0 { 1 } else { 2 };
    BigInt::from(sum + extra)
}

fn star_rays(key: &RamseyKey) -> Option<Vec<usize>> {
    key.families()
        .iter()
        .map(|f| match f {
            Family::Star(l) => Some(*l),
            _ => None,
        })
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// A rounded-down evaluation of the general lower bound
/// `(2 pi sqrt(ab))^(1/(a+b)) ((a+b)/e^2) r^((ab-1)/(a+b))` on `R(K_{a,b}, r)`.
fn biclique_general_lower(a: usize, b: usize, r: usize) -> BigInt {
    let scale = BigInt::from(1_000_000u32);
    let sqrt_ab = Rational::new((BigInt::from(a * b) * &scale * &scale).sqrt(), scale);
    let pi = ratio(333, 106);
    let e2 = ratio(73892, 10000);
    let base = Rational::from_integer(BigInt::from(a + b)) / e2;
    let s = a + b;
    let y = Rational::from_integer(BigInt::from(2)) * pi * sqrt_ab
        * num_traits::pow(base, s)
        * Rational::from_integer(num_traits::pow(BigInt::from(r), a * b - 1));
    (y.numer() / y.denom()).nth_root(s as u32)
}

/// The largest known lower bound on a Ramsey number. Always at least the
/// vertex count of every pattern.
pub fn ramsey_lower(table: &RamseyTable, key: &RamseyKey) -> RamseyValue {
    let v = key.families().iter().map(Family::vertex_count).max().unwrap_or(2).max(2);
    let mut best = RamseyValue::new(v, "vertex count");
    if let Some(e) = table.lower(key) {
        keep_max(&mut best, RamseyValue::new(e.value, e.source));
    }
    if let Some(rays) = star_rays(key) {
        keep_max(&mut best, RamseyValue::new(star_ramsey(&rays), "star formula"));
    }
    if let Some(f) = key.diagonal_family() {
        let r = key.families().len();
        for fewer in 2..r {
            if let Some(e) = table.lower(&RamseyKey::diagonal(f, fewer)) {
                keep_max(&mut best, RamseyValue::new(e.value, format!("{} with {fewer} colors", e.source)));
            }
        }
        match f {
            Family::Cycle(l) => keep_max(
                &mut best,
                RamseyValue::new((r - 1) * (l - 2) + 2, "general cycle lower bound"),
            ),
            Family::Biclique(a, b) => keep_max(
                &mut best,
                RamseyValue::new(biclique_general_lower(a, b, r), "general biclique lower bound"),
            ),
            _ => {}
        }
        if f == Family::Cycle(4) {
            keep_max(
                &mut best,
                RamseyValue::new(biclique_general_lower(2, 2, r), "general biclique lower bound"),
            );
        }
    }
    best
}

/// The smallest known upper bound on a Ramsey number, if any.
pub fn ramsey_upper(table: &RamseyTable, key: &RamseyKey) -> Option<RamseyValue> {
    let mut best = None;
    if let Some(e) = table.upper(key) {
        keep_min(&mut best, RamseyValue::new(e.value, e.source));
    }
    if let Some(rays) = star_rays(key) {
        keep_min(&mut best, RamseyValue::new(star_ramsey(&rays), "star formula"));
    }
    if let Some(f) = key.diagonal_family() {
        let r = key.families().len();
        if let Family::Cycle(l) = f {
            if l % 2 == 1 {
                keep_min(
                    &mut best,
                    RamseyValue::new(factorial(r + 2) * l, "factorial odd cycle bound"),
                );
            }
        }
        let clique = RamseyKey::diagonal(Family::clique(f.vertex_count()).expect("at least 2 vertices"), r);
        if clique != *key {
            if let Some(e) = table.upper(&clique) {
                keep_min(&mut best, RamseyValue::new(e.value, format!("{clique} <= {} [{}]", e.value, e.source)));
            }
        }
    }
    best
}

fn lower_input(key: &RamseyKey, v: &RamseyValue) -> String {
    format!("{key} >= {} [{}]", v.value, v.source)
}

fn upper_input(key: &RamseyKey, v: &RamseyValue) -> String {
    format!("{key} <= {} [{}]", v.value, v.source)
}

/// Graph invariants of a pattern needed by the general rules.
struct Invariants {
    vertices: usize,
    chromatic: usize,
    m2: Option<Rational>,
    degeneracy: usize,
    clique: usize,
    d: Option<usize>,
}

fn invariants(pattern: &Pattern, family: Option<Family>) -> Result<Invariants> {
    if let (Some(f), false) = (family, matches!(pattern, Pattern::Explicit(_))) {
        return Ok(family_invariants(f));
    }
    let g = pattern.to_graph()?;
    Ok(Invariants {
        vertices: g.vertex_count(),
        chromatic: chromatic_number(&g)?,
        m2: m2_density(&g).ok().map(|w| w.value),
        degeneracy: max_min_degree(&g),
        clique: clique_number(&g)?,
        d: d_parameter(&g),
    })
}

fn family_invariants(f: Family) -> Invariants {
    let vertices = f.vertex_count();
    let (chromatic, m2, degeneracy, clique, d) = match f {
        Family::Star(1) => (2, None, 1, 2, Some(1)),
        Family::Star(_) => (2, Some(ratio(1, 1)), 1, 2, Some(1)),
        Family::Path(_) => (2, Some(ratio(1, 1)), 1, 2, Some(2)),
        Family::Cycle(l) => {
            let m2 = Some(ratio(l as i128 - 1, l as i128 - 2));
            if l % 2 == 0 {
                (2, m2, 2, 2, Some(2))
            } else {
                (3, m2, 2, if l == 3 { 3 } else { 2 }, None)
            }
        }
        Family::Clique(l) => (l, Some(ratio(l as i128 + 1, 2)), l - 1, l, None),
        Family::Biclique(a, b) => {
            let m2 = ratio((a * b) as i128 - 1, (a + b) as i128 - 2);
            (2, Some(m2), a, 2, Some(a))
        }
    };
    Invariants {
        vertices,
        chromatic,
        m2,
        degeneracy,
        clique,
        d,
    }
}

fn as_biclique(f: Family) -> Option<(usize, usize)> {
    match f {
        Family::Biclique(a, b) => Some((a, b)),
        Family::Cycle(4) => Some((2, 2)),
        _ => None,
    }
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("need r >= 2, got {r}")));
    }
    Ok(())
}

fn rat(x: impl Into<BigInt>) -> Rational {
    Rational::from_integer(x.into())
}

/// `top - (top - 1) / max(R, 2 top + 1)` with `R` a lower bound on the
/// relevant Ramsey number.
fn epsilon_bound(top: usize, ramsey: &RamseyValue, rule: Rule) -> Result<Rational> {
    let den = ramsey.value.clone().max(BigInt::from(2 * top + 1));
    let eps = Rational::new(BigInt::from(top - 1), den);
    if eps >= ratio(1, 2) {
        return Err(Error::Internal(format!("{rule}: epsilon {eps} is not below 1/2")));
    }
    Ok(rat(top) - eps)
}

/// Every applicable lower bound on `m*(F, r)`.
pub fn lower_bounds(pattern: &Pattern, r: usize, table: &RamseyTable) -> Result<Vec<BoundTerm>> {
    check_r(r)?;
    pattern.validate()?;
    let family = Family::of_pattern(pattern)?;
    let inv = invariants(pattern, family)?;
    let mut out = Vec::new();

    out.push(BoundTerm::new(
        Rational::new(num_traits::pow(BigInt::from(inv.chromatic - 1), r), BigInt::from(2)),
        Rule::Chromatic,
    ));
    if let Some(m2) = &inv.m2 {
        if *m2 >= rat(3) || (r == 2 && *m2 > rat(1)) {
            out.push(BoundTerm::new(ratio(r as i128, 2) * m2, Rule::TwoDensity));
        }
    }
    out.push(BoundTerm::new(
        ratio((r * (inv.degeneracy - 1) + 1) as i128, 2),
        Rule::Degeneracy,
    ));
    let clique_key = RamseyKey::diagonal(Family::clique(inv.clique)?, r);
    let rk = ramsey_lower(table, &clique_key);
    out.push(
        BoundTerm::new(Rational::new(&rk.value - 1, BigInt::from(2)), Rule::CliqueRamsey)
            .input(lower_input(&clique_key, &rk)),
    );

    let Some(f) = family else { return Ok(out) };
    let key = RamseyKey::diagonal(f, r);
    if let Some((a, b)) = as_biclique(f) {
        if b > (a - 1) * (a - 1) {
            let rv = ramsey_lower(table, &key);
            let value = epsilon_bound(r * (a - 1), &rv, Rule::BicliqueLower)?;
            out.push(BoundTerm::new(value, Rule::BicliqueLower).input(lower_input(&key, &rv)));
        }
    }
    match f {
        Family::Cycle(l) if l % 2 == 0 => {
            let rv = ramsey_lower(table, &key);
            let value = epsilon_bound(r, &rv, Rule::EvenCycleLower)?;
            out.push(BoundTerm::new(value, Rule::EvenCycleLower).input(lower_input(&key, &rv)));
        }
        Family::Cycle(_) => {
            out.push(BoundTerm::new(rat(num_traits::pow(BigInt::from(2), r - 1)), Rule::OddCycleLower));
        }
        Family::Path(l) => {
            let short = RamseyKey::diagonal(Family::path(l / 3)?, r);
            let rv = ramsey_lower(table, &short);
            let value = epsilon_bound(r / 2, &rv, Rule::PathLower)?;
            out.push(BoundTerm::new(value, Rule::PathLower).input(lower_input(&short, &rv)));
        }
        Family::Star(l) => out.push(BoundTerm::new(star_exact(l, r), Rule::StarExact)),
        _ => {}
    }
    Ok(out)
}

fn star_exact(l: usize, r: usize) -> Rational {
    let t = (r * (l - 1) + 1) as i128;
    ratio(t, t + 1)
}

/// Every applicable upper bound on `m*(F, r)`.
pub fn upper_bounds(pattern: &Pattern, r: usize, table: &RamseyTable) -> Result<Vec<BoundTerm>> {
    check_r(r)?;
    pattern.validate()?;
    let family = Family::of_pattern(pattern)?;
    let inv = invariants(pattern, family)?;
    let mut out = Vec::new();

    if let Some(d) = inv.d {
        out.push(BoundTerm::new(rat(r * (d.max(1) - 1) + 1), Rule::BipartiteDegree).strict());
    }
    let key = match family {
        Some(f) => Some(RamseyKey::diagonal(f, r)),
        None => Family::clique(inv.vertices)
            .ok()
            .map(|k| RamseyKey::diagonal(k, r)),
    };
    if let Some(key) = key {
        if let Some(rv) = ramsey_upper(table, &key) {
            let term = BoundTerm::new(Rational::new(&rv.value - 1, BigInt::from(2)), Rule::CompleteHost);
            let label = if family.is_some() {
                upper_input(&key, &rv)
            } else {
                format!("R(F, {r}) <= {key} <= {} [{}]", rv.value, rv.source)
            };
            out.push(term.input(label));
        }
    }

    let Some(f) = family else { return Ok(out) };
    if let Some((a, b)) = as_biclique(f) {
        let p = r * (a - 1) + 1;
        let q = BigInt::from(r * (b - 1)) * binomial(p, a) + 1;
        let value = Rational::new(BigInt::from(p) * &q, BigInt::from(p) + &q);
        out.push(BoundTerm::new(value, Rule::CompleteBipartiteHost));
    }
    match f {
        Family::Path(l) => {
            let h = l.div_ceil(2);
            let k = ((h - 1) * r + 1).div_ceil(h);
            out.push(BoundTerm::new(rat(k), Rule::PathConstruction).strict());
        }
        Family::Star(l) => out.push(BoundTerm::new(star_exact(l, r), Rule::StarExact)),
        _ => {}
    }
    Ok(out)
}

/// The largest lower bound and the smallest upper bound, with sources.
pub fn best_interval(pattern: &Pattern, r: usize, table: &RamseyTable) -> Result<BoundInterval> {
    let lowers = lower_bounds(pattern, r, table)?;
    let uppers = upper_bounds(pattern, r, table)?;
    let mut lower = lowers
        .first()
        .cloned()
        .ok_or_else(|| Error::Internal("no lower bound applies".into()))?;
    for t in lowers.into_iter().skip(1) {
        if t.value > lower.value {
            lower = t;
        }
    }
    let mut upper: Option<BoundTerm> = None;
    for t in uppers {
        let better = match &upper {
            None => true,
            Some(u) => t.value < u.value || (t.value == u.value && t.strict && !u.strict),
        };
        if better {
            upper = Some(t);
        }
    }
    if let Some(u) = &upper {
        if lower.value > u.value || (lower.value == u.value && u.strict) {
            return Err(Error::Inconsistent(format!(
                "lower bound {} ({}) against upper bound {} ({})",
                lower.value, lower.rule, u, u.rule
            )));
        }
    }
    Ok(BoundInterval { lower, upper })
}

/// [`ramsey_upper`] as a machine integer.
pub fn ramsey_upper_u64(table: &RamseyTable, key: &RamseyKey) -> Option<u64> {
    u64::try_from(&ramsey_upper(table, key)?.value).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, NamedGraph};

    fn seed() -> RamseyTable {
        RamseyTable::seed()
    }

    fn interval(p: Pattern, r: usize) -> BoundInterval {
        best_interval(&p, r, &seed()).unwrap()
    }

    fn find(terms: &[BoundTerm], rule: Rule) -> Rational {
        terms.iter().find(|t| t.rule == rule).unwrap().value.clone()
    }

    #[test]
    fn triangle_collapses() {
        let i = interval(Pattern::Clique(3), 2);
        assert_eq!(i.lower.value, ratio(5, 2));
        assert!(i.is_exact());
        assert_eq!(i.to_string(), "5/2 <= m* <= 5/2");
    }

    #[test]
    fn four_cycle_interval() {
        for p in [Pattern::Cycle(4), Pattern::Biclique(2, 2)] {
            let i = interval(p, 2);
            assert_eq!(i.to_string(), "11/6 <= m* <= 21/10");
            assert_eq!(i.upper.unwrap().rule, Rule::CompleteBipartiteHost);
        }
    }

    #[test]
    fn cycle_terms() {
        let t = seed();
        let low = lower_bounds(&Pattern::Cycle(4), 3, &t).unwrap();
        assert_eq!(find(&low, Rule::EvenCycleLower), ratio(31, 11));
        let low = lower_bounds(&Pattern::Cycle(6), 2, &t).unwrap();
        assert_eq!(find(&low, Rule::EvenCycleLower), ratio(15, 8));
        let up = upper_bounds(&Pattern::Cycle(6), 3, &t).unwrap();
        let u1 = up.iter().find(|x| x.rule == Rule::BipartiteDegree).unwrap();
        assert_eq!((u1.value.clone(), u1.strict), (ratio(4, 1), true));
        let low = lower_bounds(&Pattern::Cycle(6), 2, &RamseyTable::default()).unwrap();
        assert_eq!(find(&low, Rule::EvenCycleLower), ratio(11, 6));
        let low = lower_bounds(&Pattern::Cycle(5), 3, &t).unwrap();
        assert_eq!(find(&low, Rule::OddCycleLower), ratio(4, 1));
        assert!(upper_bounds(&Pattern::Cycle(5), 3, &t).unwrap().iter().all(|x| x.rule != Rule::BipartiteDegree));
    }

    #[test]
    fn path_and_star() {
        let i = interval(Pattern::Path(3), 2);
        assert_eq!(i.lower.value, ratio(1, 1));
        let up = upper_bounds(&Pattern::Path(3), 2, &seed()).unwrap();
        assert_eq!(find(&up, Rule::PathConstruction), ratio(2, 1));
        let i = interval(Pattern::Star(5), 2);
        assert_eq!(i.lower.value, ratio(9, 10));
        assert!(i.is_exact());
        let i = interval(Pattern::Path(1), 3);
        assert_eq!(i.to_string(), "1/2 <= m* <= 1/2");
    }

    #[test]
    fn biclique_terms() {
        let t = seed();
        let low = lower_bounds(&Pattern::Biclique(2, 3), 2, &t).unwrap();
        // R(K_{2,3}, 2) = 10
        assert_eq!(find(&low, Rule::BicliqueLower), ratio(19, 10));
        let up = upper_bounds(&Pattern::Biclique(2, 2), 3, &t).unwrap();
        // p = 4, q = 3 * 6 + 1 = 19
        assert_eq!(find(&up, Rule::CompleteBipartiteHost), ratio(76, 23));
        assert!(lower_bounds(&Pattern::Biclique(3, 4), 2, &t)
            .unwrap()
            .iter()
            .all(|x| x.rule != Rule::BicliqueLower));
    }

    #[test]
    fn closed_forms_match_graph_invariants() {
        let families = [
            Family::Star(1),
            Family::Star(3),
            Family::Path(3),
            Family::Path(5),
            Family::Cycle(3),
            Family::Cycle(4),
            Family::Cycle(5),
            Family::Cycle(8),
            Family::Clique(4),
            Family::Clique(6),
            Family::Biclique(2, 3),
            Family::Biclique(3, 3),
            Family::Biclique(2, 5),
        ];
        for f in families {
            let a = family_invariants(f);
            let g = f.to_pattern().to_graph().unwrap();
            assert_eq!(a.vertices, g.vertex_count(), "{f}");
            assert_eq!(a.chromatic, chromatic_number(&g).unwrap(), "{f}");
            assert_eq!(a.m2, m2_density(&g).ok().map(|w| w.value), "{f}");
            assert_eq!(a.degeneracy, max_min_degree(&g), "{f}");
            assert_eq!(a.clique, clique_number(&g).unwrap(), "{f}");
            assert_eq!(a.d, d_parameter(&g), "{f}");
        }
    }

    #[test]
    fn explicit_patterns() {
        let k4 = NamedGraph::Complete(4).build().unwrap();
        let named = interval(Pattern::Clique(4), 2);
        assert_eq!(interval(Pattern::Explicit(k4), 2), named);
        // K4 minus an edge: not a named family
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let i = interval(Pattern::Explicit(g), 2);
        assert_eq!(i.lower.value, ratio(5, 2));
        let u = i.upper.unwrap();
        assert_eq!(u.value, ratio(17, 2));
        assert_eq!(u.rule, Rule::CompleteHost);
    }

    #[test]
    fn star_formula() {
        assert_eq!(star_ramsey(&[2, 2]), BigInt::from(3));
        assert_eq!(star_ramsey(&[2, 2, 2]), BigInt::from(5));
        assert_eq!(star_ramsey(&[2, 2, 2, 2]), BigInt::from(5));
        assert_eq!(star_ramsey(&[1, 1]), BigInt::from(2));
        assert_eq!(star_ramsey(&[3, 3]), BigInt::from(6));
        // every seeded star value agrees with the formula
        let t = seed();
        for e in t.entries() {
            if let Some(rays) = star_rays(&e.key) {
                assert_eq!(BigInt::from(e.lower), star_ramsey(&rays), "{}", e.key);
            }
        }
    }

    #[test]
    fn fallbacks_stay_below_known_values() {
        let t = seed();
        for e in t.entries() {
            let fallback = ramsey_lower(&RamseyTable::default(), &e.key);
            assert!(fallback.value <= BigInt::from(e.lower), "{} {}", e.key, fallback.value);
            if let (Some(up), Some(f)) = (ramsey_upper(&RamseyTable::default(), &e.key), e.upper) {
                assert!(up.value >= BigInt::from(f), "{}", e.key);
            }
        }
        assert!(biclique_general_lower(10, 10, 10) > BigInt::from(1000));
    }

    #[test]
    fn rejects_one_color() {
        assert!(best_interval(&Pattern::Cycle(4), 1, &seed()).is_err());
    }

    #[test]
    fn inconsistency_is_reported() {
        let bad = RamseyTable::parse("cycle 4 | r=2 | 2 2 | \"wrong\"").unwrap();
        assert!(matches!(
            best_interval(&Pattern::Cycle(4), 2, &bad),
            Err(Error::Inconsistent(_))
        ));
    }
}
