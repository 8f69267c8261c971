//! Sprouts and the forbidden catalog: edge-level certificates for induced
//! cycles in the squared line graph, and the two-route chordality verdict.
//!
//! Run with `cargo run --example sprouts_line_squares`.

use chordal_powers::graph::Graph;
use chordal_powers::oracle::OracleBudget;
use chordal_powers::structures;

fn main() {
    // a hexagon is itself a fertile sprout of size 4
    let c6 = Graph::cycle(6);
    let sprout = structures::find_fertile_sprout(&c6, 4).unwrap().expect("sprout of size 4");
    println!("hexagon sprout: u-edges {:?}, w-edges {:?}", sprout.u_edges, sprout.w_edges);
    let check = structures::validate_sprout(&c6, &sprout);
    println!("valid: {}, fertile: {}", check.valid, check.fertile);

    // verdicts computed two ways (direct chordality vs catalog search) and
    // asserted equal inside
    for (name, g) in [
        ("pentagon", Graph::cycle(5)),
        ("hexagon", Graph::cycle(6)),
        ("square with leaves", Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap()),
        ("star", Graph::star(5)),
    ] {
        let verdict = structures::line_square_chordal_verdict(&g);
        match verdict.witness {
            Some(w) => println!("{name}: squared line graph not chordal, witness {w:?}"),
            None => println!("{name}: squared line graph chordal"),
        }
    }

    // the perfection screen: a 7-cycle fails it, corroborated by an
    // antihole in the squared line graph
    let budget = OracleBudget::default();
    let screen = structures::line_square_perfection_necessary(&Graph::cycle(7), &budget);
    println!("heptagon could have a perfect squared line graph: {}", screen.holds);
}
