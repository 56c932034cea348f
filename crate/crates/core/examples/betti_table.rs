//! Graded Betti table of `R/I(G)` over both fields.
//!
//! ```text
//! cargo run --release --example betti_table -- 'Fhcj_'
//! ```

use codis::constructions::cycle;
use codis::homology::{graded_betti_table, Field, DEFAULT_BETTI_CAP};
use codis::io::parse_graph6;

fn main() {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text).unwrap_or_else(|e| panic!("{text}: {e}")),
        None => cycle(9).unwrap(),
    };
    for field in Field::ALL {
        let table = graded_betti_table(&g, field, DEFAULT_BETTI_CAP).expect("graph within the Betti cap");
        let (pd, reg) = (table.projective_dimension(), table.regularity());
        println!("{field}: pd {pd}, reg {reg}");
        print!("{:>4}", "");
        for i in 0..=pd {
            print!("{i:>6}");
        }
        println!();
        for row in 0..=reg {
            print!("{row:>3}:");
            for i in 0..=pd {
                match table.get(i, i + row) {
                    0 => print!("{:>6}", "."),
                    b => print!("{b:>6}"),
                }
            }
            println!();
        }
    }
}
