//! Closed-form proportion operators of Klein and Miclet, and the
//! side-by-side comparison table.
//!
//! Both operators are implemented directly from their defining formulas and
//! never call into the engine, so agreement between a column here and an
//! engine column is a genuine cross-check.

use crate::engine::{proportion_grid, Quadruple};
use crate::formula::{ArityError, StructureSpec};

/// Klein's operator: `(a <-> b) <-> (c <-> d)`.
pub fn klein(a: bool, b: bool, c: bool, d: bool) -> bool {
    (a == b) == (c == d)
}

/// Miclet's operator: Klein's, further requiring `(a ^ b) -> (a <-> c)`.
pub fn miclet(a: bool, b: bool, c: bool, d: bool) -> bool {
    klein(a, b, c, d) && (a == b || a == c)
}

/// One row of the comparison: both closed forms next to the engine verdicts
/// in the negation-only and full-signature structures (constants `{0, 1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComparisonRow {
    pub quadruple: Quadruple,
    pub miclet: bool,
    pub klein: bool,
    pub neg_structure: bool,
    pub full_structure: bool,
}

/// All sixteen rows in table order, engine columns computed at arity `n`.
pub fn comparison_table(n: u8) -> Result<Vec<ComparisonRow>, ArityError> {
    let neg: StructureSpec = "B,neg,0,1".parse().expect("fixed spec");
    let full: StructureSpec = "B,or,neg,0,1".parse().expect("fixed spec");
    let neg_grid = proportion_grid(&neg, n)?;
    let full_grid = proportion_grid(&full, n)?;
    Ok(Quadruple::all()
        .map(|q| ComparisonRow {
            quadruple: q,
            miclet: miclet(q.a, q.b, q.c, q.d),
            klein: klein(q.a, q.b, q.c, q.d),
            neg_structure: neg_grid[q.row_index()],
            full_structure: full_grid[q.row_index()],
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ARITY;

    fn bit(v: u8) -> bool {
        v == 1
    }

    #[test]
    fn klein_examples() {
        assert!(klein(bit(0), bit(1), bit(1), bit(0)));
        assert!(!klein(bit(1), bit(0), bit(0), bit(0)));
        for a in [false, true] {
            for c in [false, true] {
                assert!(klein(a, a, c, c));
            }
        }
    }

    #[test]
    fn miclet_examples() {
        assert!(!miclet(bit(0), bit(1), bit(1), bit(0)));
        assert!(miclet(bit(1), bit(0), bit(1), bit(0)));
        assert!(!miclet(bit(1), bit(0), bit(0), bit(1)));
    }

    #[test]
    fn miclet_strictly_refines_klein() {
        let mut strict = Vec::new();
        for q in Quadruple::all() {
            let m = miclet(q.a, q.b, q.c, q.d);
            let k = klein(q.a, q.b, q.c, q.d);
            assert!(!m || k, "{q}");
            if k && !m {
                strict.push(q);
            }
        }
        assert_eq!(
            strict,
            vec![
                Quadruple::new(false, true, true, false),
                Quadruple::new(true, false, false, true),
            ]
        );
    }

    #[test]
    fn klein_matches_engine_with_negation_for_every_constant_set() {
        for consts in ["", ",0", ",1", ",0,1"] {
            for funcs in ["neg", "or,neg"] {
                let s: StructureSpec = format!("B,{funcs}{consts}").parse().unwrap();
                let grid = proportion_grid(&s, DEFAULT_ARITY).unwrap();
                for q in Quadruple::all() {
                    assert_eq!(grid[q.row_index()], klein(q.a, q.b, q.c, q.d), "{s} {q}");
                }
            }
        }
    }

    #[test]
    fn comparison_table_is_consistent() {
        let rows = comparison_table(DEFAULT_ARITY).unwrap();
        assert_eq!(rows.len(), 16);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.quadruple, Quadruple::from_row_index(i));
            assert_eq!(row.klein, row.neg_structure);
            assert_eq!(row.klein, row.full_structure);
        }
    }
}
