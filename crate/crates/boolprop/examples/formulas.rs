//! The formula front end: parse, evaluate, canonicalize.
//!
//! Run with: cargo run --example formulas

use boolprop::formula::parse_formula;
use boolprop::StructureSpec;

fn main() {
    let texts = [
        "~z0",
        "z0 | ~z0",
        "z0 ^ z1",
        "z0 & z1 -> z2",
        "(z0 <-> z1) <-> (z2 <-> z0)",
    ];

    let full: StructureSpec = "B,or,neg,0,1".parse().unwrap();
    let bare: StructureSpec = "B".parse().unwrap();

    for text in texts {
        let f = parse_formula(text).unwrap();
        let n = f.arity().max(1) as u8;
        let table = f.lower(n).unwrap();
        println!("{text}");
        println!("  parsed:       {f}");
        println!("  arity:        {}", f.arity());
        println!("  table:        {table}");
        println!("  expanded:     {}", f.expand());
        println!(
            "  admissible:   {} in {full}, {} in {bare}",
            f.admissible_in(&full),
            f.admissible_in(&bare)
        );
        println!();
    }

    // positions in parse errors point at the offending byte
    println!("{}", parse_formula("z0 @ z1").unwrap_err());
    println!("{}", parse_formula("z0 |").unwrap_err());
}
