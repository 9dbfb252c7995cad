//! Decide proportions in structures with different equipment.
//!
//! The same quadruple can hold or fail depending on which functions and
//! constants the structure names: 1:0::0:1 holds in the bare universe but
//! fails once 0 has a name, because 1:0::0:0 then collects strictly more
//! justifications.
//!
//! Run with: cargo run --example decide

use boolprop::{proportion, Quadruple, StructureSpec, DEFAULT_ARITY};

fn main() {
    let quadruples = [
        Quadruple::new(true, false, false, true),  // 1:0::0:1
        Quadruple::new(false, true, true, false),  // 0:1::1:0
        Quadruple::new(true, false, true, true),   // 1:0::1:1
        Quadruple::new(false, false, true, false), // 0:0::1:0
    ];
    let structures = ["B", "B,0", "B,1", "B,neg", "B,or,neg,0,1"];

    for text in structures {
        let s: StructureSpec = text.parse().unwrap();
        for q in quadruples {
            let verdict = proportion(&s, q, DEFAULT_ARITY).unwrap();
            println!("{}", verdict.headline());
        }
        println!();
    }
}
