//! File formats: graph6, DIMACS `.col`, and plain edge lists, with
//! round trips between them.
//!
//! Run with `cargo run --example graph_formats`.

use chordal_powers::formats::{self, Format};
use chordal_powers::graph::Graph;

fn main() {
    let g = Graph::cycle(5);

    let g6 = formats::emit(&g, Format::Graph6);
    println!("pentagon as graph6:    {g6}");
    let col = formats::emit(&g, Format::DimacsCol);
    println!("pentagon as DIMACS:\n{col}");
    let edges = formats::emit(&g, Format::EdgeList);
    println!("pentagon as edge list:\n{edges}");

    for fmt in [Format::Graph6, Format::DimacsCol, Format::EdgeList] {
        let back = formats::parse(&formats::emit(&g, fmt), fmt).unwrap();
        assert_eq!(back, g);
        println!("round trip through {fmt}: ok");
    }

    // the single vertex is the shortest graph6 string
    println!("one vertex as graph6: {:?}", formats::emit(&Graph::empty(1), Format::Graph6));

    // malformed inputs are rejected with positions
    match formats::parse("p edge 3 1\ne 1 9\n", Format::DimacsCol) {
        Err(e) => println!("rejected bad DIMACS: {e}"),
        Ok(_) => unreachable!(),
    }
}
