//! Co-chordal cover numbers, the girth-five construction through
//! dominating sets of the line graph, and the bounds around regularity.
//!
//! ```text
//! cargo run --release --example cochordal_covers
//! ```

use codis::constructions::{cycle, gn_family, orphan, Orphan};
use codis::homology::{regularity, Field, DEFAULT_BETTI_CAP};
use codis::matching::{
    cochordal_cover_girth5, cochordal_cover_number, domination_number, induced_matching_number, matching_number,
};
use codis::Graph;

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C9", cycle(9).unwrap()),
        ("C11", cycle(11).unwrap()),
        ("P10", orphan(Orphan::P10).unwrap()),
        ("G_1", gn_family(1).unwrap()),
        ("G_2", gn_family(2).unwrap()),
    ];
    for (name, g) in graphs {
        let (k, cover) = cochordal_cover_number(&g);
        let girth5 = cochordal_cover_girth5(&g).map(|c| c.len());
        let gamma = domination_number(&g.line_graph().graph);
        let reg = regularity(&g, Field::Gf2, DEFAULT_BETTI_CAP).map_or("-".to_string(), |r| r.to_string());
        println!(
            "{name:<4} im {} <= reg {reg} <= cochord {k} (cover valid: {}), matching {}; girth-5 cover {girth5:?}, gamma(L) {gamma}",
            induced_matching_number(&g),
            cover.verify(&g).is_ok(),
            matching_number(&g),
        );
    }
}
