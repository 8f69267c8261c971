//! Graph powers and the power of chordality: k-neighborhoods, explicit
//! powers, the smallest chordal power with its elimination scheme, and the
//! per-power profile of clique and chromatic numbers.
//!
//! Run with `cargo run --example graph_powers`.

use chordal_powers::graph::Graph;
use chordal_powers::oracle::OracleBudget;
use chordal_powers::powers;

fn main() {
    let c6 = Graph::cycle(6);
    println!("2-neighborhood of vertex 0 in the hexagon: {:?}", powers::k_neighborhood(&c6, 0, 2).unwrap());

    let square = powers::graph_power(&c6, 2).unwrap();
    println!("hexagon squared has {} edges; 0-3 still missing: {}", square.m(), !square.has_edge(0, 3));

    let poc = powers::power_of_chordality(&c6);
    println!("power of chordality of the hexagon: {} (the cube is complete)", poc.k0);
    println!("scheme of the chordal power: {:?}", poc.pes.order());

    // the two computation routes must agree
    let via_distances = powers::power_of_chordality_via_distances(&c6);
    assert_eq!(poc.k0, via_distances.k0);

    let profile = powers::power_profile(&c6, None, &OracleBudget::default());
    println!("diameter {}, profile:", profile.diameter);
    for row in &profile.rows {
        println!(
            "  k={} chordal={} complete={} clique={:?} chromatic={:?}",
            row.k, row.chordal, row.complete, row.clique_number, row.chromatic_number
        );
    }

    // clique number of a non-chordal power, found through the bags of a
    // chordal power above it
    let (omega, witness) = powers::clique_number_via_chordal_power(&c6, 2, 3).unwrap();
    println!("clique number of the square via the cube: {omega} (witness {witness:?})");
}
