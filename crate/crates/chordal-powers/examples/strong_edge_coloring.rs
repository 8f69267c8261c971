//! Strong colorings: 2-strong chromatic numbers, the strong chromatic
//! index, closed forms on cycles and trees, anti-matching translations, and
//! the pair-color lift.
//!
//! Run with `cargo run --example strong_edge_coloring`.

use chordal_powers::graph::Graph;
use chordal_powers::oracle::OracleBudget;
use chordal_powers::strong::{self, AntiMatching};

fn main() {
    let budget = OracleBudget::default();

    for n in [5usize, 6, 7, 9] {
        let r = strong::strong_chromatic_index(&Graph::cycle(n), &budget).unwrap();
        println!(
            "strong chromatic index of the {n}-cycle: {} (formula says {})",
            r.color_count,
            strong::cycle_strong_index(n).unwrap()
        );
    }

    let star = Graph::star(5);
    println!(
        "star: max pair degree {} = strong index {}",
        strong::sigma_max(&star),
        strong::tree_strong_index(&star).unwrap()
    );

    // three alternating hexagon edges are pairwise within line distance 2;
    // their endpoints cover the hexagon, a 3-strong clique
    let c6 = Graph::cycle(6);
    let am = AntiMatching {
        edges: vec![
            c6.edge_id(0, 1).unwrap(),
            c6.edge_id(2, 3).unwrap(),
            c6.edge_id(4, 5).unwrap(),
        ],
        k: 2,
    };
    let clique = strong::anti_matching_to_clique(&c6, &am).unwrap();
    println!("hexagon anti-matching folds to the 3-strong clique {clique:?}");
    let back = strong::clique_to_anti_matching(&c6, &clique, 3).unwrap();
    println!("and back to a {}-strong anti-matching of {} edges", back.k, back.edges.len());

    // lifting a 2-strong vertex coloring to edges by color pairs
    let p5 = Graph::path(5);
    let f = strong::k_strong_chromatic_number(&p5, 2, &budget).unwrap();
    let lifted = strong::lift_vertex_to_edge_coloring(&p5, &f).unwrap();
    println!(
        "path on 5 vertices: chi_2 = {} lifts to a 2-strong edge coloring in {} colors",
        f.color_count, lifted.color_count
    );
}
