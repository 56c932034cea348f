//! graph6, sparse6 and edge-list conversion.
//!
//! ```text
//! echo ':Fa@x^' | cargo run --example graph_formats
//! ```

use std::io::Read;

use codis::io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6_or_sparse6};

fn main() {
    let mut input = String::new();
    std::io::stdin().read_to_string(&mut input).unwrap();
    for (i, line) in input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        match parse_graph6_or_sparse6(line.trim()) {
            Ok(g) => {
                let list = emit_edgelist(&g);
                assert_eq!(parse_edgelist(&list).unwrap(), g);
                println!("{}\n{list}", emit_graph6(&g));
            }
            Err(e) => eprintln!("line {}: {e}", i + 1),
        }
    }
}
