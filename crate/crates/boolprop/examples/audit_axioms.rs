//! Audit the nine-axiom battery and the monotonicity schema.
//!
//! Symmetry, reflexivity, outer reflexivity, and determinism hold in every
//! structure. The bare universe fails outer symmetry, central permutation,
//! and strong outer reflexivity; once negation is present the whole battery
//! holds. Monotonicity is a schema over structure inclusions and fails as
//! soon as a constant gives one of the booleans a name.
//!
//! Run with: cargo run --example audit_axioms

use boolprop::{audit, check_monotonicity, StructureSpec, DEFAULT_ARITY};

fn main() {
    for text in ["B", "B,0", "B,neg", "B,or,neg,0,1"] {
        let s: StructureSpec = text.parse().unwrap();
        let report = audit(&s, DEFAULT_ARITY).unwrap();
        println!("axiom audit for {s}:");
        for entry in &report.entries {
            if entry.holds {
                println!("  {:<26} holds", entry.axiom.name());
            } else {
                let first = entry.counterexamples[0];
                println!(
                    "  {:<26} FAILS  ({} counterexamples, e.g. {first})",
                    entry.axiom.name(),
                    entry.counterexamples.len()
                );
            }
        }
        println!();
    }

    let sub: StructureSpec = "B".parse().unwrap();
    let sup: StructureSpec = "B,0".parse().unwrap();
    let mono = check_monotonicity(&sub, &sup, DEFAULT_ARITY).unwrap();
    println!("monotonicity over {sub} into {sup}:");
    for q in &mono.violations {
        println!("  {q} holds in {sub} but not in {sup}");
    }
}
