//! Known small Ramsey numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::color::Pattern;
use crate::error::{Error, Result};
use crate::graph::Graph;

const SEED: &str = include_str!("../../data/ramsey_seed.table");

/// A pattern family up to isomorphism. Constructed through [`Family::new`]
/// style helpers so that isomorphic descriptions compare equal: single
/// edges and two-edge paths are stars, `K_3` is `C_3`, `K_{2,2}` is `C_4`
/// and biclique sides are sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Star(usize),
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Biclique(usize, usize),
}

impl Family {
    pub fn star(l: usize) -> Result<Family> {
        if l == 0 {
            return Err(Error::InvalidParameter("a star needs at least one edge".into()));
        }
        Ok(Family::Star(l))
    }

    pub fn path(l: usize) -> Result<Family> {
        match l {
            0 => Err(Error::InvalidParameter("a path needs at least one edge".into())),
            1 | 2 => Ok(Family::Star(l)),
            _ => Ok(Family::Path(l)),
        }
    }

    pub fn cycle(l: usize) -> Result<Family> {
        if l < 3 {
            return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {l}")));
        }
        Ok(Family::Cycle(l))
    }

    pub fn clique(l: usize) -> Result<Family> {
        match l {
            0 | 1 => Err(Error::InvalidParameter(format!("a clique needs at least 2 vertices, got {l}"))),
            2 => Ok(Family::Star(1)),
            3 => Ok(Family::Cycle(3)),
            _ => Ok(Family::Clique(l)),
        }
    }

    pub fn biclique(a: usize, b: usize) -> Result<Family> {
        let (a, b) = (a.min(b), a.max(b));
        match (a, b) {
            (0, _) => Err(Error::InvalidParameter("biclique sides must be non-empty".into())),
            (1, b) => Ok(Family::Star(b)),
            (2, 2) => Ok(Family::Cycle(4)),
            _ => Ok(Family::Biclique(a, b)),
        }
    }

    /// The family of a pattern; `None` for explicit graphs outside the
    /// named families.
    pub fn of_pattern(p: &Pattern) -> Result<Option<Family>> {
        Ok(Some(match p {
            Pattern::Path(l) => Family::path(*l)?,
            Pattern::Cycle(l) => Family::cycle(*l)?,
            Pattern::Clique(l) => Family::clique(*l)?,
            Pattern::Biclique(a, b) => Family::biclique(*a, *b)?,
            Pattern::Star(l) => Family::star(*l)?,
            Pattern::Explicit(g) => return Ok(Family::recognize(g)),
        }))
    }

    /// Recognizes a named family. Graphs with isolated vertices are not
    /// recognized.
    pub fn recognize(g: &Graph) -> Option<Family> {
        let n = g.vertex_count();
        let e = g.edge_count();
        if e == 0 || g.components().len() != 1 {
            return None;
        }
        let degrees = g.degree_sequence();
        if e == n * (n - 1) / 2 {
            return Family::clique(n).ok();
        }
        if e + 1 == n {
            if degrees.iter().all(|&d| d <= 2) {
                return Family::path(e).ok();
            }
            if degrees.iter().any(|&d| d == e) {
                return Family::star(e).ok();
            }
            return None;
        }
        if e == n && degrees.iter().all(|&d| d == 2) {
            return Family::cycle(n).ok();
        }
        let side = g.bipartition()?;
        let a = side.iter().filter(|&&s| s == 0).count();
        if a * (n - a) == e {
            return Family::biclique(a, n - a).ok();
        }
        None
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Star(l) => l + 1,
            Family::Path(l) => l + 1,
            Family::Cycle(l) | Family::Clique(l) => l,
            Family::Biclique(a, b) => a + b,
        }
    }

    pub fn to_pattern(self) -> Pattern {
        match self {
            Family::Star(l) => Pattern::Star(l),
            Family::Path(l) => Pattern::Path(l),
            Family::Cycle(l) => Pattern::Cycle(l),
            Family::Clique(l) => Pattern::Clique(l),
            Family::Biclique(a, b) => Pattern::Biclique(a, b),
        }
    }

    fn parse(kind: &str, params: &[usize]) -> Option<Result<Family>> {
        Some(match (kind, params) {
            ("star", [l]) => Family::star(*l),
            ("path", [l]) => Family::path(*l),
            ("cycle", [l]) => Family::cycle(*l),
            ("clique", [l]) => Family::clique(*l),
            ("biclique", [a, b]) => Family::biclique(*a, *b),
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_pattern().fmt(f)
    }
}

/// One Ramsey instance: the pattern forbidden in each color. `R(F, r)` is
/// `F` repeated `r` times.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RamseyKey(Vec<Family>);

impl RamseyKey {
    pub fn new(mut families: Vec<Family>) -> RamseyKey {
        families.sort();
        RamseyKey(families)
    }

    pub fn diagonal(f: Family, r: usize) -> RamseyKey {
        RamseyKey(vec![f; r])
    }

    pub fn families(&self) -> &[Family] {
        &self.0
    }

    /// `Some(F)` if every color forbids the same `F`.
    pub fn diagonal_family(&self) -> Option<Family> {
        let first = *self.0.first()?;
        self.0.iter().all(|&f| f == first).then_some(first)
    }
}

impl fmt::Display for RamseyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = self.diagonal_family() {
            return write!(f, "R({d}, {})", self.0.len());
        }
        let parts: Vec<String> = self.0.iter().map(Family::to_string).collect();
        write!(f, "R({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub key: RamseyKey,
    pub lower: u64,
    pub upper: Option<u64>,
    pub source: String,
    pub line: usize,
}

/// A value usable only as a lower bound on a Ramsey number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerEntry {
    pub value: u64,
    pub source: String,
}

/// A value usable only as an upper bound on a Ramsey number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperEntry {
    pub value: u64,
    pub source: String,
}

/// An immutable table of Ramsey numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RamseyTable {
    entries: BTreeMap<RamseyKey, TableEntry>,
}

impl RamseyTable {
    /// The bundled table of small classical values.
    pub fn seed() -> RamseyTable {
        RamseyTable::parse(SEED).expect("bundled table parses")
    }

    pub fn load(path: &Path) -> Result<RamseyTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        RamseyTable::parse(&text)
    }

    /// Parses lines `kind params | r=R | lower upper | source`.
    pub fn parse(text: &str) -> Result<RamseyTable> {
        let mut table = RamseyTable::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let entry = parse_line(content, line)?;
            table.insert(entry)?;
        }
        Ok(table)
    }

    fn insert(&mut self, entry: TableEntry) -> Result<()> {
        if let Some(old) = self.entries.get(&entry.key) {
            if old.lower != entry.lower || old.upper != entry.upper {
                return Err(Error::TableContradiction {
                    line: entry.line,
                    message: format!(
                        "{} was given as {} at line {}",
                        entry.key,
                        range(old.lower, old.upper),
                        old.line
                    ),
                });
            }
            return Ok(());
        }
        self.entries.insert(entry.key.clone(), entry);
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lower(&self, key: &RamseyKey) -> Option<LowerEntry> {
        self.entries.get(key).map(|e| LowerEntry {
            value: e.lower,
            source: e.source.clone(),
        })
    }

    pub fn upper(&self, key: &RamseyKey) -> Option<UpperEntry> {
        let e = self.entries.get(key)?;
        Some(UpperEntry {
            value: e.upper?,
            source: e.source.clone(),
        })
    }

    /// A copy with the lower entry of `key` replaced.
    pub fn with_lower(&self, key: &RamseyKey, lower: u64) -> RamseyTable {
        let mut t = self.clone();
        if let Some(e) = t.entries.get_mut(key) {
            e.lower = lower;
        }
        t
    }
}

fn range(lower: u64, upper: Option<u64>) -> String {
    match upper {
        Some(u) => format!("{lower} {u}"),
        None => format!("{lower} ?"),
    }
}

fn parse_line(content: &str, line: usize) -> Result<TableEntry> {
    let err = |message: String| Error::TableParse { line, message };
    let fields: Vec<&str> = content.splitn(4, '|').map(str::trim).collect();
    let [pattern, r_field, values, source] = fields[..] else {
        return Err(err("expected 'kind params | r=R | lower upper | source'".into()));
    };
    let r: usize = r_field
        .strip_prefix("r=")
        .and_then(|x| x.trim().parse().ok())
        .filter(|&r| r >= 1)
        .ok_or_else(|| err(format!("bad color count '{r_field}'")))?;
    let key = parse_key(pattern, r).map_err(|m| err(m))?;
    let mut vals = values.split_whitespace();
    let (Some(lo), Some(up), None) = (vals.next(), vals.next(), vals.next()) else {
        return Err(err(format!("expected 'lower upper', got '{values}'")));
    };
    let lower: u64 = lo.parse().map_err(|_| err(format!("bad lower bound '{lo}'")))?;
    let upper: Option<u64> = match up {
        "?" => None,
        u => Some(u.parse().map_err(|_| err(format!("bad upper bound '{u}'")))?),
    };
    if lower < 2 {
        return Err(err(format!("lower bound {lower} is below 2")));
    }
    if let Some(u) = upper {
        if lower > u {
            return Err(Error::TableContradiction {
                line,
                message: format!("lower bound {lower} exceeds upper bound {u}"),
            });
        }
    }
    let source = source.trim_matches('"').to_string();
    Ok(TableEntry {
        key,
        lower,
        upper,
        source,
        line,
    })
}

fn parse_family(kind: &str, params: &str) -> std::result::Result<Family, String> {
    let nums: Vec<usize> = params
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| format!("bad parameters '{params}' for {kind}"))?;
    match Family::parse(kind, &nums) {
        Some(f) => f.map_err(|e| e.to_string()),
        None => Err(format!("unknown pattern '{kind} {params}'")),
    }
}

fn parse_key(pattern: &str, r: usize) -> std::result::Result<RamseyKey, String> {
    let (kind, params) = pattern.split_once(char::is_whitespace).unwrap_or((pattern, ""));
    if kind != "generalized" {
        return Ok(RamseyKey::diagonal(parse_family(kind, params.trim())?, r));
    }
    let families = params
        .split_whitespace()
        .map(|spec| {
            let (k, p) = spec.split_once(':').ok_or_else(|| format!("bad component '{spec}'"))?;
            parse_family(k, p)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if families.len() != r + 1 {
        return Err(format!(
            "generalized entry with r={r} needs {} components, got {}",
            r + 1,
            families.len()
        ));
    }
    Ok(RamseyKey::new(families))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn seed_parses() {
        let t = RamseyTable::seed();
        assert!(t.len() >= 20);
        let c4 = RamseyKey::diagonal(Family::Cycle(4), 2);
        assert_eq!(t.lower(&c4).unwrap().value, 6);
        assert_eq!(t.upper(&c4).unwrap().value, 6);
        let k5 = RamseyKey::diagonal(Family::Clique(5), 2);
        assert_eq!(t.upper(&k5).unwrap().value, 48);
    }

    #[test]
    fn equivalent_descriptions_share_a_key() {
        let t = RamseyTable::parse("biclique 2,2 | r=2 | 6 6 | \"x\"\ncycle 4 | r=2 | 6 6 | \"y\"").unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(Family::biclique(3, 1).unwrap(), Family::Star(3));
        assert_eq!(Family::path(2).unwrap(), Family::Star(2));
        assert_eq!(Family::clique(3).unwrap(), Family::Cycle(3));
        assert_eq!(Family::biclique(4, 2).unwrap(), Family::Biclique(2, 4));
        let t = RamseyTable::parse("biclique 2 3 | r=2 | 10 10 | \"x\"").unwrap();
        assert!(t.lower(&RamseyKey::diagonal(Family::Biclique(2, 3), 2)).is_some());
    }

    #[test]
    fn stored_entries() {
        let t = RamseyTable::parse("cycle 4 | r=2 | 6 6 | \"R(C_4,2)=6\"").unwrap();
        let e = t.entries().next().unwrap();
        assert_eq!(e.source, "R(C_4,2)=6");
        let t = RamseyTable::parse("clique 5 | r=3 | 162 ? | \"x\"").unwrap();
        let key = RamseyKey::diagonal(Family::Clique(5), 3);
        assert_eq!(t.lower(&key).unwrap().value, 162);
        assert_eq!(t.upper(&key), None);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            RamseyTable::parse("cycle 4 | r=2 | 7 6 | \"x\""),
            Err(Error::TableContradiction { line: 1, .. })
        ));
        assert!(matches!(
            RamseyTable::parse("# c\ncycle 4 | r=2 | 6 6 | \"x\"\nbiclique 2,2 | r=2 | 5 6 | \"y\""),
            Err(Error::TableContradiction { line: 3, .. })
        ));
        assert!(matches!(
            RamseyTable::parse("\ncycle 4 | r=2 | 6"),
            Err(Error::TableParse { line: 2, .. })
        ));
        assert!(matches!(
            RamseyTable::parse("wheel 4 | r=2 | 6 6 | \"x\""),
            Err(Error::TableParse { line: 1, .. })
        ));
        assert!(matches!(
            RamseyTable::parse("cycle 4 | r=2 | 1 6 | \"x\""),
            Err(Error::TableParse { line: 1, .. })
        ));
        assert!(matches!(
            RamseyTable::parse("generalized path:2 clique:2 | r=2 | 3 3 | \"x\""),
            Err(Error::TableParse { line: 1, .. })
        ));
    }

    #[test]
    fn generalized_keys_are_sorted() {
        let t = RamseyTable::seed();
        let key = RamseyKey::new(vec![Family::clique(2).unwrap(), Family::Star(2), Family::Star(2)]);
        assert_eq!(t.upper(&key).unwrap().value, 3);
        assert_eq!(key.to_string(), "R(star:1, star:2, star:2)");
    }

    #[test]
    fn recognition() {
        let cases = [
            ("complete:4", Some(Family::Clique(4))),
            ("complete:3", Some(Family::Cycle(3))),
            ("cycle:6", Some(Family::Cycle(6))),
            ("path:5", Some(Family::Path(5))),
            ("path:2", Some(Family::Star(2))),
            ("star:4", Some(Family::Star(4))),
            ("complete-bipartite:3,2", Some(Family::Biclique(2, 3))),
            ("complete-bipartite:2,2", Some(Family::Cycle(4))),
        ];
        for (s, want) in cases {
            let g = s.parse::<NamedGraph>().unwrap().build().unwrap();
            assert_eq!(Family::recognize(&g), want, "{s}");
        }
        let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(Family::recognize(&spider), None);
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(Family::recognize(&two_edges), None);
    }
}
