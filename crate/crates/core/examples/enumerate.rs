//! Counts of non-isomorphic graphs per order under a filter.
//!
//! ```text
//! cargo run --release --example enumerate -- 8 connected girth5 wc
//! ```
//!
//! Filter words: `connected`, `wc`, `girth5`, `free4`, `free5`, `free7`,
//! `mindeg2`.

use codis::verification::{enumerate_graphs, GraphFilter};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(7);
    let words: Vec<&str> = args.iter().skip(1).map(String::as_str).collect();
    let free: Vec<usize> =
        words.iter().filter_map(|w| w.strip_prefix("free")).map(|k| k.parse().expect("cycle length")).collect();
    let base = if free.is_empty() { GraphFilter::default() } else { GraphFilter::free_of(&free) };
    let filter = words.iter().fold(base, |f, w| match *w {
        "connected" => f.with_connected(),
        "wc" => f.with_well_covered(),
        "girth5" => f.with_min_girth(5),
        "mindeg2" => f.with_min_degree(2),
        w if w.starts_with("free") => f,
        w => panic!("unknown filter word {w:?}"),
    });
    println!("{}", filter.describe());
    for n in 1..=max_n {
        match enumerate_graphs(n, &filter) {
            Ok(gs) => println!("n={n}: {}", gs.len()),
            Err(e) => {
                println!("n={n}: {e}");
                break;
            }
        }
    }
}
