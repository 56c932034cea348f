//! The girth-six family `G_n`: orders, matchings and co-chordal covers.
//!
//! ```text
//! cargo run --release --example gn_family -- 3
//! ```

use std::time::Instant;

use codis::constructions::{gn_family, gn_induced_matching};
use codis::graph::girth;
use codis::matching::{cochordal_cover_number, matching_number, maximum_induced_matching};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    for n in 1..=max {
        let start = Instant::now();
        let g = gn_family(n).unwrap();
        let im = maximum_induced_matching(&g);
        let (cochord, cover) = cochordal_cover_number(&g);
        println!(
            "G_{n}: {} vertices, {} edges, girth {}, im {} (block matching {:?}), matching {}, cochord {cochord} ({} classes), {:.1?}",
            g.n(),
            g.edge_count(),
            girth(&g),
            im.len(),
            gn_induced_matching(n).len(),
            matching_number(&g),
            cover.len(),
            start.elapsed(),
        );
    }
}
