//! Brute-force ground truth.
//!
//! Everything here works straight from definitions: subset scans and plain
//! backtracking, with no code shared with the algorithms it is used to check.
//! Every entry point takes an explicit [`OracleBudget`] and refuses inputs
//! beyond it instead of silently approximating.

use crate::graph::{Graph, GraphError, Vertex};

/// Per-problem-class size limits for the brute-force oracles.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub chromatic: usize,
    pub clique: usize,
    pub stable_set: usize,
    pub induced_cycles: usize,
    pub antihole: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            chromatic: 16,
            clique: 24,
            stable_set: 24,
            induced_cycles: 14,
            antihole: 12,
        }
    }
}

impl OracleBudget {
    /// A budget with every limit set to `n`.
    pub fn uniform(n: usize) -> OracleBudget {
        OracleBudget {
            chromatic: n,
            clique: n,
            stable_set: n,
            induced_cycles: n,
            antihole: n,
        }
    }

    fn check(&self, n: usize, budget: usize) -> Result<(), GraphError> {
        if n <= budget {
            Ok(())
        } else {
            Err(GraphError::BudgetExceeded { n, budget })
        }
    }
}

// -- exact chromatic number --------------------------------------------------

/// Exact chromatic number with a certificate coloring (colors `1..=count`).
pub fn exact_chromatic_number(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<(u32, Vec<u32>), GraphError> {
    budget.check(g.n(), budget.chromatic)?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    for c in 1..=g.n() as u32 {
        if let Some(assignment) = try_color(g, c) {
            debug_assert!(is_proper_coloring(g, &assignment));
            return Ok((c, assignment));
        }
    }
    unreachable!("every graph is n-colorable")
}

fn is_proper_coloring(g: &Graph, colors: &[u32]) -> bool {
    g.edges().iter().all(|&(a, b)| colors[a as usize] != colors[b as usize])
}

/// Backtracking search for a proper coloring with at most `c` colors.
/// New colors are introduced in order, which prunes color permutations.
fn try_color(g: &Graph, c: u32) -> Option<Vec<u32>> {
    // order vertices by descending degree; ties by index
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![0u32; g.n()];
    if color_rec(g, &order, 0, c, 0, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

fn color_rec(g: &Graph, order: &[Vertex], i: usize, c: u32, used: u32, colors: &mut [u32]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let limit = (used + 1).min(c);
    'next_color: for col in 1..=limit {
        for &w in g.neighbors(v) {
            if colors[w as usize] == col {
                continue 'next_color;
            }
        }
        colors[v as usize] = col;
        if color_rec(g, order, i + 1, c, used.max(col), colors) {
            return true;
        }
        colors[v as usize] = 0;
    }
    false
}

// -- exact clique / stable set -----------------------------------------------

/// Exact maximum clique size with a witness.
pub fn exact_max_clique(g: &Graph, budget: &OracleBudget) -> Result<(usize, Vec<Vertex>), GraphError> {
    budget.check(g.n(), budget.clique)?;
    let mut best: Vec<Vertex> = Vec::new();
    let mut current: Vec<Vertex> = Vec::new();
    let candidates: Vec<Vertex> = g.vertices().collect();
    clique_rec(g, &candidates, &mut current, &mut best);
    Ok((best.len(), best))
}

fn clique_rec(g: &Graph, candidates: &[Vertex], current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let v = candidates[0];
    // branch: include v
    let narrowed: Vec<Vertex> = candidates[1..]
        .iter()
        .copied()
        .filter(|&w| g.has_edge(v, w))
        .collect();
    current.push(v);
    clique_rec(g, &narrowed, current, best);
    current.pop();
    // branch: exclude v
    clique_rec(g, &candidates[1..], current, best);
}

/// Exact maximum stable set size with a witness.
pub fn exact_max_stable_set(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<(usize, Vec<Vertex>), GraphError> {
    budget.check(g.n(), budget.stable_set)?;
    let mut best: Vec<Vertex> = Vec::new();
    let mut current: Vec<Vertex> = Vec::new();
    let candidates: Vec<Vertex> = g.vertices().collect();
    stable_rec(g, &candidates, &mut current, &mut best);
    Ok((best.len(), best))
}

fn stable_rec(g: &Graph, candidates: &[Vertex], current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let v = candidates[0];
    let narrowed: Vec<Vertex> = candidates[1..]
        .iter()
        .copied()
        .filter(|&w| !g.has_edge(v, w))
        .collect();
    current.push(v);
    stable_rec(g, &narrowed, current, best);
    current.pop();
    stable_rec(g, &candidates[1..], current, best);
}

// -- induced cycles ------------------------------------------------------

/// All chordless cycles with length in `min_len..=max_len`, each reported
/// once up to rotation and reflection, as vertex sequences.
///
/// A vertex subset carries a chordless cycle exactly when it induces a
/// connected 2-regular subgraph, so this is a plain subset scan.
pub fn enumerate_induced_cycles(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    budget: &OracleBudget,
) -> Result<Vec<Vec<Vertex>>, GraphError> {
    budget.check(g.n(), budget.induced_cycles)?;
    let mut out = Vec::new();
    let min_len = min_len.max(3);
    let max_len = max_len.min(g.n());
    for len in min_len..=max_len {
        let mut subset: Vec<Vertex> = Vec::with_capacity(len);
        subsets_rec(g, 0, len, &mut subset, &mut out);
    }
    Ok(out)
}

fn subsets_rec(g: &Graph, start: Vertex, len: usize, subset: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if subset.len() == len {
        if let Some(cycle) = as_chordless_cycle(g, subset) {
            out.push(cycle);
        }
        return;
    }
    let remaining = len - subset.len();
    let last = g.n() as Vertex;
    for v in start..last {
        if ((last - v) as usize) < remaining {
            break;
        }
        subset.push(v);
        subsets_rec(g, v + 1, len, subset, out);
        subset.pop();
    }
}

/// If `subset` induces a connected 2-regular subgraph, returns its cyclic
/// order starting at the smallest vertex moving toward its smaller neighbor.
fn as_chordless_cycle(g: &Graph, subset: &[Vertex]) -> Option<Vec<Vertex>> {
    let inside = |x: Vertex| subset.binary_search(&x).is_ok();
    let mut nbrs: Vec<[Vertex; 2]> = Vec::with_capacity(subset.len());
    for &v in subset {
        let mut found: Vec<Vertex> = Vec::with_capacity(2);
        for &w in g.neighbors(v) {
            if inside(w) {
                if found.len() == 2 {
                    return None;
                }
                found.push(w);
            }
        }
        if found.len() != 2 {
            return None;
        }
        nbrs.push([found[0], found[1]]);
    }
    // walk the cycle; connectivity fails iff the walk closes early
    let start = subset[0];
    let pick = |v: Vertex| nbrs[subset.binary_search(&v).unwrap()];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut at = pick(start)[0].min(pick(start)[1]);
    while at != start {
        cycle.push(at);
        let [a, b] = pick(at);
        let next = if a == prev { b } else { a };
        prev = at;
        at = next;
    }
    if cycle.len() == subset.len() {
        Some(cycle)
    } else {
        None
    }
}

/// Chordality by definition: no chordless cycle of length at least 4.
pub fn is_chordal_oracle(g: &Graph, budget: &OracleBudget) -> Result<bool, GraphError> {
    for len in 4..=g.n() {
        let mut subset = Vec::with_capacity(len);
        let mut found = Vec::new();
        budget.check(g.n(), budget.induced_cycles)?;
        subsets_rec(g, 0, len, &mut subset, &mut found);
        if !found.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A hole witness: an induced cycle of length >= 5 and whether it is odd.
#[derive(Clone, Debug)]
pub struct HoleWitness {
    pub cycle: Vec<Vertex>,
    pub odd: bool,
}

pub fn has_hole(g: &Graph, budget: &OracleBudget) -> Result<Option<HoleWitness>, GraphError> {
    let cycles = enumerate_induced_cycles(g, 5, g.n(), budget)?;
    Ok(cycles.into_iter().next().map(|cycle| {
        let odd = cycle.len() % 2 == 1;
        HoleWitness { cycle, odd }
    }))
}

/// An antihole witness: a vertex set inducing the complement of a cycle of
/// length >= 5. The stored sequence is the cycle order in the complement.
pub fn has_antihole(g: &Graph, budget: &OracleBudget) -> Result<Option<HoleWitness>, GraphError> {
    budget.check(g.n(), budget.antihole)?;
    let co = g.complement();
    let inner = OracleBudget { induced_cycles: budget.antihole, ..*budget };
    has_hole(&co, &inner)
}

/// Desk-scale perfection test: a graph is perfect exactly when neither it
/// nor its complement has an odd induced cycle of length at least five.
pub fn is_perfect(g: &Graph, budget: &OracleBudget) -> Result<bool, GraphError> {
    budget.check(g.n(), budget.antihole)?;
    let inner = OracleBudget { induced_cycles: budget.antihole, ..*budget };
    let odd_hole = |h: &Graph| -> Result<bool, GraphError> {
        Ok(enumerate_induced_cycles(h, 5, h.n(), &inner)?
            .iter()
            .any(|c| c.len() % 2 == 1))
    };
    Ok(!odd_hole(g)? && !odd_hole(&g.complement())?)
}

// -- exhaustive enumeration of labeled graphs ---------------------------------

pub const LABELED_HARD_CAP: usize = 7;

/// Streams all `2^(n choose 2)` labeled graphs on `n` vertices.
/// `n <= 6` by default; `n = 7` only with `allow_seven`.
pub fn enumerate_labeled_graphs(n: usize, allow_seven: bool) -> Result<LabeledGraphs, GraphError> {
    let cap = if allow_seven { LABELED_HARD_CAP } else { 6 };
    if n > cap {
        return Err(GraphError::BudgetExceeded { n, budget: cap });
    }
    Ok(LabeledGraphs { n, next: 0, total: 1u64 << (n * (n.max(1) - 1) / 2) })
}

pub struct LabeledGraphs {
    n: usize,
    next: u64,
    total: u64,
}

impl LabeledGraphs {
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Materializes the graph for one edge bitmask; useful for partitioning
    /// the sweep across threads.
    pub fn graph_for_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n as Vertex {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let g = Self::graph_for_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }
}
