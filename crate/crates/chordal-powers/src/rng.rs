//! Deterministic random graph generation for test sweeps and the
//! `oracle-check` command.
//!
//! The generator is a splitmix-style 64-bit PRNG: a Weyl sequence on the
//! golden-ratio increment pushed through two xor-multiply finalizers. Fixed
//! seeds reproduce the same graphs on every platform, so counterexamples
//! from randomized suites can be shared as seed + index.

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`. `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        // multiply-shift; bias is negligible for the desk-scale bounds here
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) < p
    }
}

/// Erdős–Rényi style graph: each pair becomes an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform random recursive tree: vertex `i` attaches to a uniform earlier
/// vertex.
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n as Vertex {
        let parent = rng.below(v as u64) as Vertex;
        edges.push((parent, v));
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected chordal graph: build a random k-tree, then greedily
/// subsample its edges, keeping a deletion only when the remainder stays
/// chordal. Every intermediate graph is chordal, so no rejection loop.
pub fn random_chordal(n: usize, rng: &mut SplitMix64) -> Graph {
    assert!(n >= 1);
    let k = 1 + rng.below(3.min(n as u64)) as usize;
    let base = k.min(n);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for u in 0..base as Vertex {
        for v in u + 1..base as Vertex {
            edges.push((u, v));
        }
    }
    // attach each new vertex to a random k-clique of the current graph; a
    // random maximal clique's random subset of size k works and keeps the
    // construction simple
    let mut g = Graph::from_edges(base, &edges).unwrap();
    for v in base..n {
        let sigma = crate::chordal::pes(&g).unwrap();
        let cliques = crate::chordal::maximal_cliques_chordal(&g, &sigma).unwrap();
        let c = &cliques.cliques[rng.below(cliques.len() as u64) as usize];
        let take = k.min(c.len());
        let mut pool = c.clone();
        for _ in 0..take {
            let i = rng.below(pool.len() as u64) as usize;
            edges.push((pool.swap_remove(i), v as Vertex));
        }
        g = Graph::from_edges(v + 1, &edges).unwrap();
    }
    // subsample: drop edges one at a time, keeping each deletion only if the
    // remainder is still chordal
    let mut keep = g.edges().to_vec();
    let mut shuffled = keep.clone();
    for i in (1..shuffled.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        shuffled.swap(i, j);
    }
    for e in shuffled {
        if !rng.chance(0.3) {
            continue;
        }
        let trial: Vec<(Vertex, Vertex)> = keep.iter().copied().filter(|&x| x != e).collect();
        if crate::chordal::is_chordal(&Graph::from_edges(n, &trial).unwrap()) {
            keep = trial;
        }
    }
    Graph::from_edges(n, &keep).unwrap()
}
