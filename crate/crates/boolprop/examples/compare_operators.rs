//! Klein's and Miclet's closed-form operators against the engine.
//!
//! Klein's (a <-> b) <-> (c <-> d) agrees with the subset-maximality
//! semantics in every structure containing negation. Miclet's refinement
//! drops exactly 0:1::1:0 and 1:0::0:1, the two rows where a value trades
//! places with its negation.
//!
//! Run with: cargo run --example compare_operators

use boolprop::{comparison_table, klein, miclet, DEFAULT_ARITY};

fn tf(v: bool) -> &'static str {
    if v {
        "T"
    } else {
        "F"
    }
}

fn main() {
    println!("  a b c d   Miclet  Klein  B,neg,0,1  B,or,neg,0,1");
    for row in comparison_table(DEFAULT_ARITY).unwrap() {
        let q = row.quadruple;
        let marker = if row.miclet != row.klein {
            "  <-- operators disagree"
        } else {
            ""
        };
        println!(
            "  {} {} {} {}     {}      {}        {}           {}{marker}",
            u8::from(q.a),
            u8::from(q.b),
            u8::from(q.c),
            u8::from(q.d),
            tf(row.miclet),
            tf(row.klein),
            tf(row.neg_structure),
            tf(row.full_structure),
        );
    }

    println!();
    println!(
        "klein(0,1,1,0) = {}, miclet(0,1,1,0) = {}",
        u8::from(klein(false, true, true, false)),
        u8::from(miclet(false, true, true, false)),
    );
}
