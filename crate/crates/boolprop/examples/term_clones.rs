//! Enumerate the term operations of a structure.
//!
//! The four signatures over one variable, then the full signature over two,
//! where disjunction and negation generate all sixteen binary functions.
//! Each table comes with a minimal representative term.
//!
//! Run with: cargo run --example term_clones

use boolprop::{common_generalizations, enumerate_term_functions, StructureSpec};

fn main() {
    for (text, n) in [
        ("B", 1),
        ("B,0", 1),
        ("B,neg", 1),
        ("B,or", 2),
        ("B,or,neg", 2),
    ] {
        let s: StructureSpec = text.parse().unwrap();
        let tfs = enumerate_term_functions(&s, n).unwrap();
        println!("{s} at arity {n}: {} term operations", tfs.len());
        for (table, rep) in tfs.iter() {
            println!("  {table}  {rep}");
        }
        println!();
    }

    // generalizations of 0 and 1 together: tables attaining both values
    let s: StructureSpec = "B,or,neg".parse().unwrap();
    let both = common_generalizations(&s, false, true, 2).unwrap();
    println!(
        "{s} at arity 2: {} operations generalize both 0 and 1",
        both.len()
    );
}
