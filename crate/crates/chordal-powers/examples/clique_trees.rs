//! Clique graphs and clique trees: the weighted clique graph, its maximum
//! spanning tree via Kruskal, the one-pass construction, and DOT output.
//!
//! Run with `cargo run --example clique_trees`.

use chordal_powers::clique_tree::{self, McctResult};
use chordal_powers::graph::Graph;

fn main() {
    let g = Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
    )
    .unwrap();

    let cg = clique_tree::clique_graph(&g).unwrap();
    println!("clique graph nodes: {:?}", cg.nodes.cliques);
    for &(i, j, w) in &cg.edges {
        println!("  separator {:?} joins bags {i} and {j} (weight {w})", cg.separator(i, j));
    }

    let kruskal = clique_tree::max_spanning_tree(&cg);
    println!("kruskal tree weight: {}", kruskal.weight());

    match clique_tree::mcct(&g) {
        McctResult::Chordal { sigma, tree } => {
            println!("one-pass scheme: {:?}", sigma.order());
            println!("one-pass tree weight: {} (must match)", tree.weight());
            println!("width: {} = clique number - 1", tree.width());
            println!("valid decomposition: {}", clique_tree::validate_tree_decomposition(&g, &tree));
            println!("--- dot ---\n{}", tree.to_dot());
        }
        McctResult::NotChordal => unreachable!("this example graph is chordal"),
    }

    println!("treewidth of a path: {}", clique_tree::treewidth_chordal(&Graph::path(7)).unwrap());
}
