//! Exhaustive audit of candidate proportion axioms per structure.
//!
//! Four of these (symmetry, reflexivity, outer reflexivity, determinism) hold
//! in every structure; the rest are properties that a given structure may or
//! may not satisfy, which is easy to check exhaustively over a two-element
//! universe. Monotonicity is a schema over structure inclusions, so it is a
//! separate binary check over an explicit pair.

use std::fmt;

use thiserror::Error;

use crate::engine::{proportion_grid, Quadruple};
use crate::formula::{ArityError, StructureSpec};

/// The nine per-structure axioms, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    /// `a:b::c:d  <=>  b:a::d:c`
    Symmetry,
    /// `a:a::c:c`
    Reflexivity,
    /// `a:b::a:b`
    OuterReflexivity,
    /// `a:a::a:d  <=>  d = a`
    Determinism,
    /// `a:b::c:d and c:d::e:f  =>  a:b::e:f`
    OuterTransitivity,
    /// `a:b::c:d  <=>  c:d::a:b`
    OuterSymmetry,
    /// `a:b::c:d  <=>  a:c::b:d`
    CentralPermutation,
    /// `a:a::c:d  =>  d = c`
    StrongReflexivity,
    /// `a:b::a:d  =>  d = b`
    StrongOuterReflexivity,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::Symmetry,
        AxiomId::Reflexivity,
        AxiomId::OuterReflexivity,
        AxiomId::Determinism,
        AxiomId::OuterTransitivity,
        AxiomId::OuterSymmetry,
        AxiomId::CentralPermutation,
        AxiomId::StrongReflexivity,
        AxiomId::StrongOuterReflexivity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AxiomId::Symmetry => "symmetry",
            AxiomId::Reflexivity => "reflexivity",
            AxiomId::OuterReflexivity => "outer_reflexivity",
            AxiomId::Determinism => "determinism",
            AxiomId::OuterTransitivity => "outer_transitivity",
            AxiomId::OuterSymmetry => "outer_symmetry",
            AxiomId::CentralPermutation => "central_permutation",
            AxiomId::StrongReflexivity => "strong_reflexivity",
            AxiomId::StrongOuterReflexivity => "strong_outer_reflexivity",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.name())
    }
}

/// A tuple violating an axiom: a quadruple, or a sextuple `a:b::c:d` &
/// `c:d::e:f` for outer transitivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    Quad(Quadruple),
    Sext {
        quadruple: Quadruple,
        e: bool,
        f: bool,
    },
}

impl Counterexample {
    /// The tuple as 0/1 values.
    pub fn bits(&self) -> Vec<u8> {
        match self {
            Counterexample::Quad(q) => {
                vec![q.a.into(), q.b.into(), q.c.into(), q.d.into()]
            }
            Counterexample::Sext { quadruple: q, e, f } => vec![
                q.a.into(),
                q.b.into(),
                q.c.into(),
                q.d.into(),
                (*e).into(),
                (*f).into(),
            ],
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Quad(q) => write!(out, "{q}"),
            Counterexample::Sext { quadruple: q, e, f } => write!(
                out,
                "{q} & {}:{}::{}:{}",
                u8::from(q.c),
                u8::from(q.d),
                u8::from(*e),
                u8::from(*f)
            ),
        }
    }
}

/// One audited axiom: holds exactly when no counterexample exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: AxiomId,
    pub holds: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// The full battery for one structure at one arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub structure: StructureSpec,
    pub arity: u8,
    pub entries: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn entry(&self, id: AxiomId) -> &AxiomCheck {
        self.entries
            .iter()
            .find(|e| e.axiom == id)
            .expect("report covers all axioms")
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

fn check_against_grid(grid: &[bool; 16], id: AxiomId) -> AxiomCheck {
    let holds = |q: Quadruple| grid[q.row_index()];
    let mut counterexamples = Vec::new();
    match id {
        AxiomId::Symmetry => {
            for q in Quadruple::all() {
                if holds(q) != holds(q.symmetric_swap()) {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::Reflexivity => {
            for q in Quadruple::all() {
                if q.a == q.b && q.c == q.d && !holds(q) {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::OuterReflexivity => {
            for q in Quadruple::all() {
                if q.a == q.c && q.b == q.d && !holds(q) {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::Determinism => {
            for q in Quadruple::all() {
                if q.a == q.b && q.b == q.c && holds(q) != (q.d == q.a) {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::OuterTransitivity => {
            for q in Quadruple::all() {
                for ef in 0..4usize {
                    let (e, f) = (ef & 1 == 1, ef >> 1 & 1 == 1);
                    let second = Quadruple::new(q.c, q.d, e, f);
                    let conclusion = Quadruple::new(q.a, q.b, e, f);
                    if holds(q) && holds(second) && !holds(conclusion) {
                        counterexamples.push(Counterexample::Sext { quadruple: q, e, f });
                    }
                }
            }
        }
        AxiomId::OuterSymmetry => {
            for q in Quadruple::all() {
                if holds(q) != holds(Quadruple::new(q.c, q.d, q.a, q.b)) {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::CentralPermutation => {
            for q in Quadruple::all() {
                if holds(q) != holds(Quadruple::new(q.a, q.c, q.b, q.d)) {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::StrongReflexivity => {
            for q in Quadruple::all() {
                if q.a == q.b && holds(q) && q.d != q.c {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
        AxiomId::StrongOuterReflexivity => {
            for q in Quadruple::all() {
                if q.a == q.c && holds(q) && q.d != q.b {
                    counterexamples.push(Counterexample::Quad(q));
                }
            }
        }
    }
    AxiomCheck {
        axiom: id,
        holds: counterexamples.is_empty(),
        counterexamples,
    }
}

/// Checks one axiom exhaustively over all quadruples (sextuples for outer
/// transitivity), returning every violating tuple.
pub fn check_axiom(s: &StructureSpec, id: AxiomId, n: u8) -> Result<AxiomCheck, ArityError> {
    Ok(check_against_grid(&proportion_grid(s, n)?, id))
}

/// Runs the whole battery, one entry per axiom in [`AxiomId::ALL`] order.
pub fn audit(s: &StructureSpec, n: u8) -> Result<AxiomReport, ArityError> {
    let grid = proportion_grid(s, n)?;
    Ok(AxiomReport {
        structure: *s,
        arity: n,
        entries: AxiomId::ALL
            .iter()
            .map(|id| check_against_grid(&grid, *id))
            .collect(),
    })
}

/// `s` is not included in the claimed superstructure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{sub} is not a substructure of {sup}")]
pub struct NotSubstructure {
    pub sub: StructureSpec,
    pub sup: StructureSpec,
}

/// Failure modes of [`check_monotonicity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MonotonicityError {
    #[error(transparent)]
    NotSubstructure(#[from] NotSubstructure),
    #[error(transparent)]
    Arity(#[from] ArityError),
}

/// Quadruples holding in the substructure but not in the superstructure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityCheck {
    pub sub: StructureSpec,
    pub sup: StructureSpec,
    pub arity: u8,
    pub violations: Vec<Quadruple>,
}

impl MonotonicityCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the monotonicity schema over the inclusion `s ⊆ s_sup`: every
/// proportion holding in `s` should survive in `s_sup`. Lists every
/// quadruple where it does not.
pub fn check_monotonicity(
    s: &StructureSpec,
    s_sup: &StructureSpec,
    n: u8,
) -> Result<MonotonicityCheck, MonotonicityError> {
    if !s.is_substructure_of(s_sup) {
        return Err(NotSubstructure {
            sub: *s,
            sup: *s_sup,
        }
        .into());
    }
    let small = proportion_grid(s, n)?;
    let large = proportion_grid(s_sup, n)?;
    let violations = Quadruple::all()
        .filter(|q| small[q.row_index()] && !large[q.row_index()])
        .collect();
    Ok(MonotonicityCheck {
        sub: *s,
        sup: *s_sup,
        arity: n,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::proportion;
    use crate::DEFAULT_ARITY;

    fn spec(text: &str) -> StructureSpec {
        text.parse().unwrap()
    }

    fn quad(a: u8, b: u8, c: u8, d: u8) -> Quadruple {
        Quadruple::new(a == 1, b == 1, c == 1, d == 1)
    }

    #[test]
    fn bare_structure_axiom_profile() {
        let report = audit(&spec("B"), DEFAULT_ARITY).unwrap();
        for id in [
            AxiomId::Symmetry,
            AxiomId::Reflexivity,
            AxiomId::OuterReflexivity,
            AxiomId::Determinism,
            AxiomId::OuterTransitivity,
            AxiomId::StrongReflexivity,
        ] {
            assert!(report.entry(id).holds, "{id}");
        }
        for id in [
            AxiomId::OuterSymmetry,
            AxiomId::CentralPermutation,
            AxiomId::StrongOuterReflexivity,
        ] {
            assert!(!report.entry(id).holds, "{id}");
        }
        // 0:1::0:0 holds while 0:0::1:0 fails
        assert!(report
            .entry(AxiomId::CentralPermutation)
            .counterexamples
            .contains(&Counterexample::Quad(quad(0, 1, 0, 0))));
        // 0:1::0:0 holds with d != b
        assert!(report
            .entry(AxiomId::StrongOuterReflexivity)
            .counterexamples
            .contains(&Counterexample::Quad(quad(0, 1, 0, 0))));
        // 1:0::0:0 holds while 0:0::1:0 fails
        assert!(report
            .entry(AxiomId::OuterSymmetry)
            .counterexamples
            .contains(&Counterexample::Quad(quad(1, 0, 0, 0))));
    }

    #[test]
    fn negation_satisfies_the_whole_battery() {
        for consts in ["", ",0", ",1", ",0,1"] {
            let report = audit(&spec(&format!("B,neg{consts}")), DEFAULT_ARITY).unwrap();
            assert!(report.all_hold(), "B,neg{consts}");
        }
        let report = audit(&spec("B,or,neg,1"), DEFAULT_ARITY).unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn four_axioms_hold_in_every_structure() {
        for s in StructureSpec::all() {
            let report = audit(&s, DEFAULT_ARITY).unwrap();
            for id in [
                AxiomId::Symmetry,
                AxiomId::Reflexivity,
                AxiomId::OuterReflexivity,
                AxiomId::Determinism,
            ] {
                assert!(report.entry(id).holds, "{s} {id}");
            }
        }
    }

    #[test]
    fn check_axiom_matches_audit() {
        let s = spec("B,0");
        let report = audit(&s, DEFAULT_ARITY).unwrap();
        for id in AxiomId::ALL {
            assert_eq!(
                check_axiom(&s, id, DEFAULT_ARITY).unwrap(),
                *report.entry(id)
            );
        }
    }

    #[test]
    fn outer_transitivity_fails_with_a_constant() {
        // 1:0::0:0 and 0:0::1:1 hold in B,0 but 1:0::1:1 does not
        let check = check_axiom(&spec("B,0"), AxiomId::OuterTransitivity, DEFAULT_ARITY).unwrap();
        assert!(!check.holds);
        assert!(check.counterexamples.contains(&Counterexample::Sext {
            quadruple: quad(1, 0, 0, 0),
            e: true,
            f: true,
        }));
    }

    #[test]
    fn counterexamples_recheck_through_the_engine() {
        for s in [spec("B"), spec("B,0"), spec("B,1"), spec("B,0,1")] {
            let report = audit(&s, DEFAULT_ARITY).unwrap();
            for entry in &report.entries {
                for ce in &entry.counterexamples {
                    let violated = match (entry.axiom, ce) {
                        (AxiomId::Symmetry, Counterexample::Quad(q)) => {
                            holds(&s, *q) != holds(&s, q.symmetric_swap())
                        }
                        (AxiomId::Reflexivity, Counterexample::Quad(q)) => !holds(&s, *q),
                        (AxiomId::OuterReflexivity, Counterexample::Quad(q)) => !holds(&s, *q),
                        (AxiomId::Determinism, Counterexample::Quad(q)) => {
                            holds(&s, *q) != (q.d == q.a)
                        }
                        (
                            AxiomId::OuterTransitivity,
                            Counterexample::Sext { quadruple: q, e, f },
                        ) => {
                            holds(&s, *q)
                                && holds(&s, Quadruple::new(q.c, q.d, *e, *f))
                                && !holds(&s, Quadruple::new(q.a, q.b, *e, *f))
                        }
                        (AxiomId::OuterSymmetry, Counterexample::Quad(q)) => {
                            holds(&s, *q) != holds(&s, Quadruple::new(q.c, q.d, q.a, q.b))
                        }
                        (AxiomId::CentralPermutation, Counterexample::Quad(q)) => {
                            holds(&s, *q) != holds(&s, Quadruple::new(q.a, q.c, q.b, q.d))
                        }
                        (AxiomId::StrongReflexivity, Counterexample::Quad(q)) => {
                            holds(&s, *q) && q.d != q.c
                        }
                        (AxiomId::StrongOuterReflexivity, Counterexample::Quad(q)) => {
                            holds(&s, *q) && q.d != q.b
                        }
                        other => panic!("counterexample shape mismatch: {other:?}"),
                    };
                    assert!(violated, "{s} {} {ce}", entry.axiom);
                }
            }
        }
    }

    fn holds(s: &StructureSpec, q: Quadruple) -> bool {
        proportion(s, q, DEFAULT_ARITY).unwrap().holds
    }

    #[test]
    fn monotonicity_examples() {
        let check = check_monotonicity(&spec("B"), &spec("B,0"), DEFAULT_ARITY).unwrap();
        assert!(!check.holds());
        assert!(check.violations.contains(&quad(1, 0, 0, 1)));

        let check = check_monotonicity(&spec("B,neg"), &spec("B,neg,0"), DEFAULT_ARITY).unwrap();
        assert!(check.holds());

        let check = check_monotonicity(&spec("B,1"), &spec("B,1"), DEFAULT_ARITY).unwrap();
        assert!(check.holds());

        assert!(matches!(
            check_monotonicity(&spec("B,0"), &spec("B,1"), DEFAULT_ARITY),
            Err(MonotonicityError::NotSubstructure(_))
        ));
    }
}
