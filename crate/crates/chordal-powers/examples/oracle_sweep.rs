//! The brute-force oracle and the agreement sweeps that keep the fast
//! algorithms honest: exhaustive chordality agreement over all labeled
//! graphs on six vertices, plus a randomized flower check.
//!
//! Run with `cargo run --release --example oracle_sweep`.

use chordal_powers::graph::Graph;
use chordal_powers::oracle::{self, OracleBudget};
use chordal_powers::rng::{self, SplitMix64};
use chordal_powers::{chordal, powers, structures};

fn main() {
    let budget = OracleBudget::default();

    let mut agreements = 0u64;
    for g in oracle::enumerate_labeled_graphs(6, false).unwrap() {
        assert_eq!(chordal::is_chordal(&g), oracle::is_chordal_oracle(&g, &budget).unwrap());
        agreements += 1;
    }
    println!("chordality agreement on all {agreements} labeled graphs with 6 vertices");

    let c6_squared = powers::graph_power(&Graph::cycle(6), 2).unwrap();
    let holes = oracle::enumerate_induced_cycles(&c6_squared, 4, 4, &budget).unwrap();
    println!("induced 4-cycles in the squared hexagon: {holes:?}");

    let (chi, _) = oracle::exact_chromatic_number(&c6_squared, &budget).unwrap();
    let (omega, _) = oracle::exact_max_clique(&c6_squared, &budget).unwrap();
    println!("squared hexagon: chromatic number {chi}, clique number {omega}");

    let mut rng = SplitMix64::new(0);
    let mut with_flowers = 0;
    for _ in 0..500 {
        let g = rng::random_graph(9, 0.35, &mut rng);
        let square = powers::graph_power(&g, 2).unwrap();
        for len in 4..=7usize {
            let cycles = oracle::enumerate_induced_cycles(&square, len, len, &budget).unwrap();
            let flower = structures::find_flower(&g, len).unwrap();
            assert_eq!(cycles.is_empty(), flower.is_none());
            if flower.is_some() {
                with_flowers += 1;
            }
        }
    }
    println!("flower search matched the oracle on 500 random graphs ({with_flowers} witnesses)");
}
