//! The three sixteen-row verdict grids, side by side.
//!
//! Constants distinguish four different structures; negation collapses every
//! constant set to a single column; adding disjunction on top of negation
//! changes nothing at all.
//!
//! Run with: cargo run --example verdict_tables

use boolprop::{proportion_grid, Quadruple, StructureSpec, DEFAULT_ARITY};

fn print_grid(title: &str, columns: &[&str]) {
    println!("{title}");
    let specs: Vec<StructureSpec> = columns.iter().map(|t| t.parse().unwrap()).collect();
    let grids: Vec<[bool; 16]> = specs
        .iter()
        .map(|s| proportion_grid(s, DEFAULT_ARITY).unwrap())
        .collect();
    println!("  a b c d   {}", columns.join("  "));
    for q in Quadruple::all() {
        let mut line = format!(
            "  {} {} {} {}  ",
            u8::from(q.a),
            u8::from(q.b),
            u8::from(q.c),
            u8::from(q.d)
        );
        for (grid, title) in grids.iter().zip(columns) {
            let cell = if grid[q.row_index()] { "T" } else { "F" };
            line.push_str(&format!(" {cell:^width$} ", width = title.len()));
        }
        println!("{line}");
    }
    println!();
}

fn main() {
    print_grid("constants only:", &["B", "B,0", "B,1", "B,0,1"]);
    print_grid("negation:", &["B,neg", "B,neg,0", "B,neg,1", "B,neg,0,1"]);
    print_grid(
        "disjunction and negation:",
        &["B,or,neg", "B,or,neg,0", "B,or,neg,1", "B,or,neg,0,1"],
    );
}
