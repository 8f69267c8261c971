//! Chordal graphs, graph powers, and strong colorings.
//!
//! The crate is organized around one question: when does a power of a graph
//! (or of its line graph) become chordal, and what can be computed exactly
//! once it does?
//!
//! * [`graph`] — the basic graph type, line graphs, distances, file formats
//!   (see [`formats`]).
//! * [`chordal`] — recognition via LexBFS / maximum cardinality search,
//!   perfect elimination schemes, maximal cliques, Gavril's stable set and
//!   clique cover, optimal coloring, and an elimination-game fill-in
//!   heuristic.
//! * [`clique_tree`] — clique graphs, maximum spanning trees, the one-pass
//!   clique-tree construction, tree decompositions.
//! * [`powers`] — graph powers, the power of chordality, elimination schemes
//!   of powers, and the per-power profile of clique and chromatic numbers.
//! * [`structures`] — flowers, sunflowers, and sprouts: the certificates for
//!   induced cycles in squared graphs and squared line graphs, plus the
//!   forbidden-structure catalog for chordal line-graph squares.
//! * [`strong`] — k-strong vertex colorings, the strong chromatic index,
//!   anti-matchings, and the translations between them.
//! * [`oracle`] — independent brute-force ground truth used by the test
//!   suites and the `oracle-check` command.
//! * [`report`] / [`cli`] — the JSON analysis report and the command-line
//!   front end.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --example analyze_graph`.

pub mod chordal;
pub mod cli;
pub mod clique_tree;
pub mod formats;
pub mod graph;
pub mod oracle;
pub mod powers;
pub mod report;
pub mod rng;
pub mod strong;
pub mod structures;

pub use graph::{EdgeId, Graph, GraphError, LineGraphResult, Vertex};
