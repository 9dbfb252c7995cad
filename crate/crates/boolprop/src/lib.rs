//! Analogical proportions `a:b::c:d` between booleans, decided exactly.
//!
//! A *boolean structure* is the two-element universe `{0, 1}` equipped with a
//! chosen subset of the function symbols `{or, neg}` and of the constants
//! `{0, 1}`. Relative to such a structure, `a:b::c:d` ("a is to b what c is
//! to d") holds when the set of formula rewrite rules `phi -> psi` carrying
//! `a` to `b` and `c` to `d` is subset-maximal against every alternative
//! value of `d`, in both reading directions. This crate enumerates the term
//! operations of a structure, computes those justification sets, decides and
//! solves proportions, audits a battery of candidate axioms, and compares the
//! results against the classical closed-form operators of Klein and Miclet.
//!
//! The `examples/` directory is the best starting point: one runnable
//! example per capability. A thin `boolprop` binary exposes the same
//! operations as subcommands (`decide`, `solve`, `explain`, `table`,
//! `audit`, `compare`, `clone`).
//!
//! ```
//! use boolprop::{proportion, solve, StructureSpec, Quadruple, DEFAULT_ARITY};
//!
//! let s: StructureSpec = "B,neg".parse().unwrap();
//! let q = Quadruple::new(false, true, true, false); // 0:1::1:0
//! assert!(proportion(&s, q, DEFAULT_ARITY).unwrap().holds);
//! assert_eq!(solve(&s, false, true, true, DEFAULT_ARITY).unwrap(), vec![false]);
//! ```

pub mod axioms;
pub mod cli;
pub mod clone;
pub mod engine;
pub mod formula;
pub mod reference;

pub use crate::axioms::{audit, check_axiom, check_monotonicity, AxiomCheck, AxiomId, AxiomReport};
pub use crate::clone::{
    common_generalizations, enumerate_term_functions, generalizations, TermFunctionSet,
};
pub use crate::engine::{
    directed_proportion, explain, functional_solution, justification_set, proportion,
    proportion_grid, solve, stable_arity_check, Direction, Evidence, Explanation,
    FunctionalSolution, Justification, JustificationSet, ProportionVerdict, Quadruple,
    StabilityReport, StrictInclusion,
};
pub use crate::formula::{ArityError, Formula, FunctionTable, ParseError, StructureSpec};
pub use crate::reference::{comparison_table, klein, miclet, ComparisonRow};

/// Largest number of variables any operation will enumerate over.
///
/// Every set involved is finite at fixed arity (at most `2^2^n` tables), but
/// the sizes grow doubly exponentially, so the cap keeps everything at desk
/// scale. Verdicts are stable from arity 2 upwards for every expressible
/// structure; see [`engine::stable_arity_check`].
pub const ARITY_CAP: u8 = 3;

/// Arity used when no `--arity` is given.
pub const DEFAULT_ARITY: u8 = 2;
