//! Full analysis of a single graph: chordality, clique tree, power profile,
//! structural witnesses, and strong coloring numbers.
//!
//! Run with `cargo run --example analyze_graph`.

use chordal_powers::formats::Format;
use chordal_powers::graph::Graph;
use chordal_powers::oracle::OracleBudget;
use chordal_powers::report;

fn main() {
    // a hexagon: not chordal, square not chordal, cube complete
    let g = Graph::cycle(6);
    let budget = OracleBudget::default();
    let analysis = report::analyze(&g, Format::Graph6, None, &budget);

    println!("--- text report ---");
    print!("{}", analysis.to_text());
    println!("--- json report ---");
    println!("{}", analysis.to_json());
}
