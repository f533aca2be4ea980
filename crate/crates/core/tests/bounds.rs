
use sparse_ramsey::bounds::{best_interval, lower_bounds, ramsey_lower, Family, RamseyKey, RamseyTable};
use sparse_ramsey::color::Pattern;
use sparse_ramsey::Error;

fn families() -> Vec<Family> {
    vec![
        Family::clique(3).unwrap(),
        Family::clique(4).unwrap(),
        Family::cycle(4).unwrap(),
        Family::cycle(5).unwrap(),
        Family::cycle(6).unwrap(),
        Family::path(2).unwrap(),
        Family::path(3).unwrap(),
        Family::biclique(2, 3).unwrap(),
        Family::star(3).unwrap(),
    ]
}

fn best_lower(p: &Pattern, r: usize, t: &RamseyTable) -> sparse_ramsey::Rational {
    lower_bounds(p, r, t).unwrap().into_iter().map(|b| b.value).max().unwrap()
}

#[test]
fn smaller_table_values_never_raise_lower_bounds() {
    let seed = RamseyTable::seed();
    for entry in seed.entries() {
        let key = entry.key.clone();
        let Some(f) = key.diagonal_family() else { continue };
        let r = key.families().len();
        let p = f.to_pattern();
        let before = best_lower(&p, r, &seed);
        let poisoned = seed.with_lower(&key, f.vertex_count() as u64);
        assert!(best_lower(&p, r, &poisoned) <= before, "{key}");
    }
}

#[test]
fn lower_bound_grows_with_colors() {
    let seed = RamseyTable::seed();
    for f in families() {
        let p = f.to_pattern();
        let values: Vec<_> = (2..=5).map(|r| best_lower(&p, r, &seed)).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{f:?}: {values:?}");
        let ramsey: Vec<_> = (2..=5).map(|r| ramsey_lower(&seed, &RamseyKey::diagonal(f, r)).value).collect();
        assert!(ramsey.windows(2).all(|w| w[0] <= w[1]), "{f:?}");
    }
}

#[test]
fn intervals_are_consistent() {
    let seed = RamseyTable::seed();
    for f in families() {
        for r in 2..=4 {
            let i = best_interval(&f.to_pattern(), r, &seed).unwrap();
            if let Some(u) = &i.upper {
                assert!(i.lower.value <= u.value);
            }
        }
    }
}

#[test]
fn table_errors_carry_line_numbers() {
    let err = RamseyTable::parse("clique 3 | r=2 | 6 6 | a\nclique 3 | r=2 | 7 7 | b\n").unwrap_err();
    assert!(matches!(err, Error::TableContradiction { line: 2, .. }), "{err:?}");
    let err = RamseyTable::parse("# comment\nnonsense\n").unwrap_err();
    assert!(matches!(err, Error::TableParse { line: 2, .. }), "{err:?}");
    assert!(best_interval(&Pattern::Cycle(4), 1, &RamseyTable::seed()).is_err());
}
