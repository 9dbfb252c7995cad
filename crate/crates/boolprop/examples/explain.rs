//! Witness-level explanations.
//!
//! A holding proportion is explained by the rules of its maximal
//! justification set, each with one witness pair; a failing one by the
//! strict inclusion between candidate sets and the rule that separates them.
//!
//! Run with: cargo run --example explain

use boolprop::{explain, Quadruple, StructureSpec};

fn main() {
    let cases = [
        // negation detects inequality: z -> ~z justifies 0:1::1:0
        ("B,neg", Quadruple::new(false, true, true, false)),
        // equality can be detected everywhere, so 0:0::1:0 loses to 0:0::1:1
        ("B", Quadruple::new(false, false, true, false)),
        // constants contribute rules like 1 -> 0 and 1 -> z0
        ("B,0,1", Quadruple::new(true, false, true, false)),
        // the reversed reading is what fails here
        ("B,0", Quadruple::new(false, true, true, true)),
    ];

    for (text, q) in cases {
        let s: StructureSpec = text.parse().unwrap();
        print!("{}", explain(&s, q, 1, false).unwrap().to_text());
        println!();
    }
}
