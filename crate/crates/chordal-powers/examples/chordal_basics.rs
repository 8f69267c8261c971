//! Chordality recognition and the scheme-based algorithms: elimination
//! orders from both searches, maximal cliques, an optimal coloring, a
//! maximum stable set with its clique cover, and the fill-in heuristic.
//!
//! Run with `cargo run --example chordal_basics`.

use chordal_powers::chordal;
use chordal_powers::graph::Graph;

fn main() {
    // a triangle with three pendant triangles: chordal, clique number 3
    let g = Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
    )
    .unwrap();

    let by_mcs = chordal::mcs(&g);
    let by_lexbfs = chordal::lex_bfs(&g);
    println!("mcs order:    {:?}", by_mcs.order());
    println!("lexbfs order: {:?}", by_lexbfs.order());
    println!("mcs is a perfect elimination scheme: {}", chordal::verify_pes(&g, &by_mcs).unwrap());
    println!("lexbfs too: {}", chordal::verify_pes(&g, &by_lexbfs).unwrap());

    let sigma = chordal::pes(&g).unwrap();
    let cliques = chordal::maximal_cliques_chordal(&g, &sigma).unwrap();
    println!("maximal cliques: {:?}", cliques.cliques);

    let coloring = chordal::colors_chordal(&g, &sigma).unwrap();
    println!("optimal coloring with {} colors: {:?}", coloring.color_count, coloring.assignment);

    let stable = chordal::gavril_stable_set(&g, &sigma).unwrap();
    println!("maximum stable set: {:?}", stable.stable_set);
    println!("clique cover of the same size: {:?}", stable.clique_cover.cliques);

    // a pentagon needs two fill edges to become chordal
    let (filled, added) = chordal::fill_in(&Graph::cycle(5));
    println!("pentagon fill-in: added {:?}, now chordal: {}", added, chordal::is_chordal(&filled));
}
