//! Term-operation clones of a structure, with representative terms.
//!
//! The `n`-ary term operations of a structure are the smallest set of
//! [`FunctionTable`]s containing the `n` projections and the constant table
//! for each constant of the structure, closed under pointwise negation and
//! disjunction when those symbols are present. Everything a formula over the
//! structure can denote at arity `n` is in this set, so it is the universe
//! from which justifications and generalizations are drawn.

use std::collections::{BTreeMap, BTreeSet};

use crate::formula::{check_arity, ArityError, Formula, FunctionTable, StructureSpec};

/// All `n`-ary term operations of a structure, each paired with a
/// minimal-size admissible formula denoting it.
///
/// Entries are ordered by discovery: ascending representative size, ties
/// broken by the formula ordering (constants < variables < negations <
/// disjunctions, lexicographically). The ordering is deterministic, so
/// explanations render the same way on every run.
#[derive(Debug, Clone)]
pub struct TermFunctionSet {
    structure: StructureSpec,
    arity: u8,
    entries: Vec<(FunctionTable, Formula)>,
    index: BTreeMap<FunctionTable, usize>,
}

impl TermFunctionSet {
    pub fn structure(&self) -> &StructureSpec {
        &self.structure
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, table: &FunctionTable) -> bool {
        self.index.contains_key(table)
    }

    /// Minimal-size admissible formula denoting `table`, if the table is a
    /// term operation of the structure.
    pub fn representative(&self, table: &FunctionTable) -> Option<&Formula> {
        self.index.get(table).map(|&i| &self.entries[i].1)
    }

    /// Entries in discovery order.
    pub fn iter(&self) -> impl Iterator<Item = (&FunctionTable, &Formula)> {
        self.entries.iter().map(|(t, f)| (t, f))
    }

    pub fn tables(&self) -> impl Iterator<Item = &FunctionTable> {
        self.entries.iter().map(|(t, _)| t)
    }

    pub fn table_set(&self) -> BTreeSet<FunctionTable> {
        self.index.keys().copied().collect()
    }
}

/// Closure on tables only, without representative bookkeeping. This is all
/// the proportion engine needs, and it stays cheap at the arity cap.
pub(crate) fn table_closure(
    s: &StructureSpec,
    n: u8,
) -> Result<BTreeSet<FunctionTable>, ArityError> {
    check_arity(n)?;
    let mut set = BTreeSet::new();
    for var in 0..n {
        set.insert(FunctionTable::projection(n, var)?);
    }
    for c in s.consts() {
        set.insert(FunctionTable::constant(n, c)?);
    }
    loop {
        let mut fresh: Vec<FunctionTable> = Vec::new();
        for t in &set {
            if s.has_neg() {
                let u = t.negate();
                if !set.contains(&u) {
                    fresh.push(u);
                }
            }
            if s.has_or() {
                for t2 in &set {
                    let u = t.join(t2);
                    if !set.contains(&u) {
                        fresh.push(u);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return Ok(set);
        }
        set.extend(fresh);
    }
}

/// Enumerates the `n`-ary term operations of `s` as a fixed point of the
/// closure, assigning each table a minimal-size representative formula.
///
/// Terminates because at most `2^2^n` tables exist; `n` must lie in
/// `1..=ARITY_CAP`.
pub fn enumerate_term_functions(s: &StructureSpec, n: u8) -> Result<TermFunctionSet, ArityError> {
    let universe = table_closure(s, n)?;

    let mut entries: Vec<(FunctionTable, Formula)> = Vec::with_capacity(universe.len());
    let mut index: BTreeMap<FunctionTable, usize> = BTreeMap::new();
    // Representatives found so far, bucketed by formula size. A minimal
    // formula only ever needs minimal subformulas, so composing known
    // representatives by ascending size finds a minimal-size formula for
    // every reachable table; sorting each size class settles ties.
    let mut by_size: Vec<Vec<(FunctionTable, Formula)>> = vec![Vec::new(); 2];

    let mut seeds: Vec<Formula> = s.consts().into_iter().map(Formula::Const).collect();
    seeds.extend((0..n as usize).map(Formula::Var));
    seeds.sort();
    for f in seeds {
        let t = f.lower(n)?;
        adopt(&mut entries, &mut index, &mut by_size, t, f);
    }

    let mut size = 2usize;
    while index.len() < universe.len() {
        let mut candidates: Vec<(Formula, FunctionTable)> = Vec::new();
        if s.has_neg() {
            for (t, f) in &by_size[size - 1] {
                candidates.push((Formula::not(f.clone()), t.negate()));
            }
        }
        if s.has_or() {
            for left_size in 1..size.saturating_sub(1) {
                let right_size = size - 1 - left_size;
                for (t1, f1) in &by_size[left_size] {
                    for (t2, f2) in &by_size[right_size] {
                        candidates.push((Formula::or(f1.clone(), f2.clone()), t1.join(t2)));
                    }
                }
            }
        }
        candidates.sort_by(|x, y| x.0.cmp(&y.0));
        by_size.push(Vec::new());
        for (f, t) in candidates {
            adopt(&mut entries, &mut index, &mut by_size, t, f);
        }
        size += 1;
        assert!(
            size < 256,
            "representative search failed to converge for {s} at arity {n}"
        );
    }

    Ok(TermFunctionSet {
        structure: *s,
        arity: n,
        entries,
        index,
    })
}

fn adopt(
    entries: &mut Vec<(FunctionTable, Formula)>,
    index: &mut BTreeMap<FunctionTable, usize>,
    by_size: &mut Vec<Vec<(FunctionTable, Formula)>>,
    table: FunctionTable,
    formula: Formula,
) {
    if index.contains_key(&table) {
        return;
    }
    let size = formula.size();
    while by_size.len() <= size {
        by_size.push(Vec::new());
    }
    by_size[size].push((table, formula.clone()));
    index.insert(table, entries.len());
    entries.push((table, formula));
}

/// Generalizations of `a`: the `n`-ary term operations attaining `a` under
/// some assignment.
pub fn generalizations(
    s: &StructureSpec,
    a: bool,
    n: u8,
) -> Result<BTreeSet<FunctionTable>, ArityError> {
    Ok(table_closure(s, n)?
        .into_iter()
        .filter(|t| t.attains(a))
        .collect())
}

/// Common generalizations of `a` and `c`: term operations attaining both.
pub fn common_generalizations(
    s: &StructureSpec,
    a: bool,
    c: bool,
    n: u8,
) -> Result<BTreeSet<FunctionTable>, ArityError> {
    Ok(table_closure(s, n)?
        .into_iter()
        .filter(|t| t.attains(a) && t.attains(c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ARITY_CAP;

    fn spec(text: &str) -> StructureSpec {
        text.parse().unwrap()
    }

    fn table(values: &[bool]) -> FunctionTable {
        FunctionTable::from_values(values).unwrap()
    }

    #[test]
    fn bare_universe_has_only_the_projection() {
        let tfs = enumerate_term_functions(&spec("B"), 1).unwrap();
        assert_eq!(tfs.table_set(), BTreeSet::from([table(&[false, true])]));
        assert_eq!(
            tfs.representative(&table(&[false, true]))
                .unwrap()
                .to_string(),
            "z0"
        );
    }

    #[test]
    fn negation_closes_to_two_unary_tables() {
        let tfs = enumerate_term_functions(&spec("B,neg"), 1).unwrap();
        assert_eq!(
            tfs.table_set(),
            BTreeSet::from([table(&[false, true]), table(&[true, false])])
        );
    }

    #[test]
    fn full_signature_is_functionally_complete_at_arity_two() {
        let tfs = enumerate_term_functions(&spec("B,or,neg"), 2).unwrap();
        assert_eq!(tfs.len(), 16);
    }

    #[test]
    fn or_only_clone_is_the_joins_of_variable_sets() {
        let tfs = enumerate_term_functions(&spec("B,or"), 2).unwrap();
        // z0, z1, z0|z1
        assert_eq!(tfs.len(), 3);
        assert!(tfs.contains(&table(&[false, true, true, true])));
    }

    #[test]
    fn representatives_are_admissible_minimal_terms() {
        for s in StructureSpec::all() {
            for n in 1..=2u8 {
                let tfs = enumerate_term_functions(&s, n).unwrap();
                for (t, f) in tfs.iter() {
                    assert_eq!(&f.lower(n).unwrap(), t, "{s} arity {n}: {f}");
                    assert!(f.admissible_in(&s), "{s} arity {n}: {f}");
                }
            }
        }
        // spot-check minimality: constant 1 from | and ~ alone
        let tfs = enumerate_term_functions(&spec("B,or,neg"), 1).unwrap();
        assert_eq!(
            tfs.representative(&table(&[true, true]))
                .unwrap()
                .to_string(),
            "z0 | ~z0"
        );
        assert_eq!(
            tfs.representative(&table(&[false, false]))
                .unwrap()
                .to_string(),
            "~(z0 | ~z0)"
        );
    }

    #[test]
    fn signature_monotonicity() {
        let all = StructureSpec::all();
        for s in &all {
            for s2 in &all {
                if !s.is_substructure_of(s2) {
                    continue;
                }
                for n in 1..=2u8 {
                    let small = table_closure(s, n).unwrap();
                    let large = table_closure(s2, n).unwrap();
                    assert!(small.is_subset(&large), "{s} vs {s2} at arity {n}");
                }
            }
        }
    }

    #[test]
    fn cardinality_bounds() {
        for s in StructureSpec::all() {
            for n in 1..=ARITY_CAP {
                let count = table_closure(&s, n).unwrap().len();
                assert!(count <= 1 << (1 << n), "{s} arity {n}: {count}");
            }
        }
    }

    #[test]
    fn generalization_examples() {
        // constants give the element a name
        assert_eq!(
            generalizations(&spec("B,0"), false, 1).unwrap(),
            BTreeSet::from([table(&[false, false]), table(&[false, true])])
        );
        assert_eq!(
            generalizations(&spec("B,0"), true, 1).unwrap(),
            BTreeSet::from([table(&[false, true])])
        );
        // in the full signature, gen(1) is exactly the satisfiable tables
        let full = spec("B,or,neg,0,1");
        for n in 1..=2u8 {
            let sat = generalizations(&full, true, n).unwrap();
            let expected: BTreeSet<_> = table_closure(&full, n)
                .unwrap()
                .into_iter()
                .filter(|t| t.attains(true))
                .collect();
            assert_eq!(sat, expected);
            assert_eq!(sat.len(), (1usize << (1 << n)) - 1);
        }
    }

    #[test]
    fn common_generalization_examples() {
        // only one table exists in the bare structure
        assert_eq!(
            common_generalizations(&spec("B"), false, true, 1).unwrap(),
            BTreeSet::from([table(&[false, true])])
        );
        // both unary tables of B,neg attain 0
        assert_eq!(
            common_generalizations(&spec("B,neg"), false, false, 1).unwrap(),
            BTreeSet::from([table(&[false, true]), table(&[true, false])])
        );
        // satisfiable-and-falsifiable in the full signature
        let full = spec("B,or,neg,0,1");
        let both = common_generalizations(&full, false, true, 2).unwrap();
        assert_eq!(both.len(), 14);
        for t in &both {
            assert!(t.attains(false) && t.attains(true));
        }
    }

    #[test]
    fn generalizations_cover_and_intersect_as_expected() {
        for s in StructureSpec::all() {
            for n in 1..=2u8 {
                let all: BTreeSet<_> = table_closure(&s, n).unwrap();
                let gen0 = generalizations(&s, false, n).unwrap();
                let gen1 = generalizations(&s, true, n).unwrap();
                let union: BTreeSet<_> = gen0.union(&gen1).copied().collect();
                assert_eq!(union, all, "{s} arity {n}");
                let meet: BTreeSet<_> = gen0.intersection(&gen1).copied().collect();
                let attaining: BTreeSet<_> = all
                    .iter()
                    .filter(|t| t.attains(false) && t.attains(true))
                    .copied()
                    .collect();
                assert_eq!(meet, attaining, "{s} arity {n}");
            }
        }
    }

    #[test]
    fn rejects_arity_outside_range() {
        assert!(enumerate_term_functions(&spec("B"), 0).is_err());
        assert!(enumerate_term_functions(&spec("B"), ARITY_CAP + 1).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_formula() -> impl Strategy<Value = Formula> {
            let leaf = prop_oneof![
                any::<bool>().prop_map(Formula::Const),
                (0usize..2).prop_map(Formula::Var),
            ];
            leaf.prop_recursive(3, 16, 2, |inner| {
                prop_oneof![
                    inner.clone().prop_map(Formula::not),
                    (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::or(f, g)),
                    (inner.clone(), inner).prop_map(|(f, g)| Formula::and(f, g)),
                ]
            })
        }

        proptest! {
            // whatever an admissible formula denotes is a term operation
            #[test]
            fn admissible_formulas_lower_into_the_clone(f in arb_formula()) {
                let table = f.lower(2).unwrap();
                for s in StructureSpec::all() {
                    if f.admissible_in(&s) {
                        prop_assert!(
                            table_closure(&s, 2).unwrap().contains(&table),
                            "{s}: {f}"
                        );
                    }
                }
            }
        }
    }
}
