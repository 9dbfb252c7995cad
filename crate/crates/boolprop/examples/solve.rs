//! Solve analogical equations a:b::c:z.
//!
//! An equation can have one solution, two, or none at all; which it is
//! depends on the structure. With negation the answer is always unique.
//!
//! Run with: cargo run --example solve

use boolprop::{solve, StructureSpec, DEFAULT_ARITY};

fn main() {
    let equations = [
        (false, true, false), // 0:1::0:z
        (false, true, true),  // 0:1::1:z
        (true, true, false),  // 1:1::0:z
        (true, false, true),  // 1:0::1:z
    ];

    for text in ["B", "B,0", "B,1", "B,0,1", "B,neg", "B,or,neg"] {
        let s: StructureSpec = text.parse().unwrap();
        for (a, b, c) in equations {
            let ds = solve(&s, a, b, c, DEFAULT_ARITY).unwrap();
            let rendered: Vec<String> = ds.iter().map(|d| u8::from(*d).to_string()).collect();
            println!(
                "{s} |= {}:{}::{}:z  for z in {{{}}}",
                u8::from(a),
                u8::from(b),
                u8::from(c),
                rendered.join(", ")
            );
        }
        println!();
    }
}
