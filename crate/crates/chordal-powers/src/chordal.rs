//! Chordal graph machinery: recognition and the classical poly-time
//! algorithms that a perfect elimination scheme unlocks.
//!
//! Recognition follows the two standard searches — lexicographic BFS (Rose,
//! Tarjan, Lueker 1976) and maximum cardinality search (Tarjan, Yannakakis
//! 1984) — either of which emits a perfect elimination scheme exactly when
//! the graph is chordal, followed by the linear-time scheme verifier. On top
//! of a verified scheme: all maximal cliques, Gavril's maximum stable set and
//! minimum clique cover, an optimal coloring, and an elimination-game
//! triangulation heuristic for fill-in.

use crate::graph::{Graph, GraphError, Vertex};

/// A vertex ordering together with its inverse permutation.
///
/// Position `i` (0-based) holds the `i+1`-st vertex to be eliminated; a
/// perfect elimination scheme is an ordering where every vertex's later
/// neighborhood induces a clique.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    #[serde(skip)]
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn from_order(order: Vec<Vertex>) -> Result<VertexOrdering, GraphError> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v as usize >= n || position[v as usize] != usize::MAX {
                return Err(GraphError::NotAPermutation);
            }
            position[v as usize] = i;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn vertex_at(&self, i: usize) -> Vertex {
        self.order[i]
    }

    pub fn position_of(&self, v: Vertex) -> usize {
        self.position[v as usize]
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Neighbors of each vertex that come later in the ordering.
    pub fn later_neighbors(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); g.n()];
        for v in g.vertices() {
            let pv = self.position_of(v);
            out[v as usize] = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| self.position_of(w) > pv)
                .collect();
        }
        out
    }
}

/// Lexicographic breadth-first search, implemented by partition refinement.
/// Ties (several vertices of maximal label) go to the lowest vertex index.
pub fn lex_bfs(g: &Graph) -> VertexOrdering {
    let n = g.n();
    let mut order = vec![0 as Vertex; n];
    // classes are kept sorted internally and ordered by decreasing label
    let mut classes: Vec<Vec<Vertex>> = if n == 0 { Vec::new() } else { vec![g.vertices().collect()] };
    let mut in_neighbors = vec![false; n];
    for i in (0..n).rev() {
        let v = classes[0].remove(0);
        order[i] = v;
        if classes[0].is_empty() {
            classes.remove(0);
        }
        for &w in g.neighbors(v) {
            in_neighbors[w as usize] = true;
        }
        let mut refined: Vec<Vec<Vertex>> = Vec::with_capacity(classes.len() + 1);
        for class in classes {
            let (hit, miss): (Vec<Vertex>, Vec<Vertex>) =
                class.into_iter().partition(|&w| in_neighbors[w as usize]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            in_neighbors[w as usize] = false;
        }
    }
    VertexOrdering::from_order(order).unwrap()
}

/// Maximum cardinality search: vertices are numbered n..1, always picking an
/// unnumbered vertex with the most numbered neighbors, lowest index on ties.
pub fn mcs(g: &Graph) -> VertexOrdering {
    let n = g.n();
    let mut order = vec![0 as Vertex; n];
    let mut label = vec![0usize; n];
    let mut numbered = vec![false; n];
    for i in (0..n).rev() {
        let mut v = None;
        let mut best = 0;
        for u in g.vertices() {
            if !numbered[u as usize] && (v.is_none() || label[u as usize] > best) {
                v = Some(u);
                best = label[u as usize];
            }
        }
        let v = v.unwrap();
        numbered[v as usize] = true;
        order[i] = v;
        for &w in g.neighbors(v) {
            if !numbered[w as usize] {
                label[w as usize] += 1;
            }
        }
    }
    VertexOrdering::from_order(order).unwrap()
}

/// Tests whether `sigma` is a perfect elimination scheme of `g`.
///
/// This is the Rose–Tarjan–Lueker/Tarjan–Yannakakis follower trick: each
/// vertex forwards its later neighborhood (minus the earliest member `u`) to
/// `u`'s accumulator, and a scheme is perfect exactly when every vertex's
/// accumulated set lands inside its true neighborhood.
pub fn verify_pes(g: &Graph, sigma: &VertexOrdering) -> Result<bool, GraphError> {
    if sigma.len() != g.n() {
        return Err(GraphError::NotAPermutation);
    }
    let n = g.n();
    let mut acc: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut is_neighbor = vec![false; n];
    for i in 0..n {
        let v = sigma.vertex_at(i);
        let mut x: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| sigma.position_of(w) > i)
            .collect();
        if !x.is_empty() {
            x.sort_by_key(|&w| sigma.position_of(w));
            let u = x[0];
            for &w in &x[1..] {
                acc[u as usize].push(w);
            }
        }
        for &w in g.neighbors(v) {
            is_neighbor[w as usize] = true;
        }
        let ok = acc[v as usize].iter().all(|&w| is_neighbor[w as usize]);
        for &w in g.neighbors(v) {
            is_neighbor[w as usize] = false;
        }
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Chordality test: run MCS and verify the resulting scheme.
pub fn is_chordal(g: &Graph) -> bool {
    verify_pes(g, &mcs(g)).unwrap()
}

/// Convenience: a verified perfect elimination scheme, or `NotChordal`.
pub fn pes(g: &Graph) -> Result<VertexOrdering, GraphError> {
    let sigma = mcs(g);
    if verify_pes(g, &sigma)? {
        Ok(sigma)
    } else {
        Err(GraphError::NotChordal)
    }
}

/// A list of vertex sets, each a clique of the host graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<Vertex>>,
}

impl CliqueSet {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// All maximal cliques of a chordal graph, from the candidates
/// `{v} ∪ X_v` (the later neighborhood along a PES) with inclusion
/// filtering. A chordal graph has at most `n` of them.
pub fn maximal_cliques_chordal(g: &Graph, sigma: &VertexOrdering) -> Result<CliqueSet, GraphError> {
    if !verify_pes(g, sigma)? {
        return Err(GraphError::NotChordal);
    }
    let later = sigma.later_neighbors(g);
    let mut candidates: Vec<Vec<Vertex>> = Vec::with_capacity(g.n());
    for i in 0..g.n() {
        let v = sigma.vertex_at(i);
        let mut c = later[v as usize].clone();
        c.push(v);
        c.sort_unstable();
        candidates.push(c);
    }
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut accepted: Vec<Vec<Vertex>> = Vec::new();
    'next: for c in candidates {
        for a in &accepted {
            if is_sorted_subset(&c, a) {
                continue 'next;
            }
        }
        accepted.push(c);
    }
    accepted.sort();
    Ok(CliqueSet { cliques: accepted })
}

/// `a ⊆ b` for sorted slices.
pub(crate) fn is_sorted_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut it = b.iter();
    'outer: for &x in a {
        for &y in it.by_ref() {
            match y.cmp(&x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// A maximum stable set together with a clique cover of the same size.
#[derive(Clone, Debug, serde::Serialize)]
pub struct StableSetResult {
    pub stable_set: Vec<Vertex>,
    pub clique_cover: CliqueSet,
}

/// Gavril's greedy sweep along a PES: take each vertex not yet covered by a
/// chosen vertex's closed later neighborhood. The picks form a maximum
/// stable set and the closed later neighborhoods give an optimal clique
/// cover, so the two certify each other.
pub fn gavril_stable_set(g: &Graph, sigma: &VertexOrdering) -> Result<StableSetResult, GraphError> {
    if !verify_pes(g, sigma)? {
        return Err(GraphError::NotChordal);
    }
    let later = sigma.later_neighbors(g);
    let mut covered = vec![false; g.n()];
    let mut stable = Vec::new();
    let mut cover: Vec<Vec<Vertex>> = Vec::new();
    for i in 0..g.n() {
        let y = sigma.vertex_at(i);
        if covered[y as usize] {
            continue;
        }
        stable.push(y);
        let mut bag = vec![y];
        covered[y as usize] = true;
        for &w in &later[y as usize] {
            if !covered[w as usize] {
                covered[w as usize] = true;
                bag.push(w);
            }
        }
        bag.sort_unstable();
        cover.push(bag);
    }
    stable.sort_unstable();
    debug_assert!(g.is_stable_set(&stable));
    debug_assert_eq!(stable.len(), cover.len());
    Ok(StableSetResult { stable_set: stable, clique_cover: CliqueSet { cliques: cover } })
}

/// A proper coloring with colors `1..=color_count`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ColoringResult {
    pub assignment: Vec<u32>,
    pub color_count: u32,
}

/// Optimal coloring of a chordal graph.
///
/// The chromatic number is computed by Gavril's counting pass over the later
/// neighborhoods, and a concrete assignment by greedy coloring in reverse
/// scheme order. The two routes must agree (the count equals the clique
/// number on a chordal graph); the assertion is part of the contract.
pub fn colors_chordal(g: &Graph, sigma: &VertexOrdering) -> Result<ColoringResult, GraphError> {
    if !verify_pes(g, sigma)? {
        return Err(GraphError::NotChordal);
    }
    if g.n() == 0 {
        return Ok(ColoringResult { assignment: Vec::new(), color_count: 0 });
    }
    let later = sigma.later_neighbors(g);

    // counting pass
    let mut chi = 1u32;
    let mut slack = vec![0usize; g.n()];
    for i in 0..g.n().saturating_sub(1) {
        let v = sigma.vertex_at(i);
        let x = &later[v as usize];
        if x.is_empty() {
            continue;
        }
        let u = *x.iter().max_by_key(|&&w| sigma.position_of(w)).unwrap();
        slack[u as usize] = slack[u as usize].max(x.len() - 1);
        if slack[v as usize] < x.len() {
            chi = chi.max(x.len() as u32 + 1);
        }
    }

    // greedy assignment in reverse scheme order; later neighbors of each
    // vertex are already colored and form a clique, so the first free color
    // never exceeds the count above
    let mut assignment = vec![0u32; g.n()];
    for i in (0..g.n()).rev() {
        let v = sigma.vertex_at(i);
        let mut used: Vec<u32> = later[v as usize]
            .iter()
            .map(|&w| assignment[w as usize])
            .collect();
        used.sort_unstable();
        let mut color = 1;
        for c in used {
            if c == color {
                color += 1;
            }
        }
        assignment[v as usize] = color;
    }
    let max_used = assignment.iter().copied().max().unwrap_or(0);
    assert_eq!(max_used, chi, "counting pass and greedy assignment disagree");
    debug_assert!(g.edges().iter().all(|&(a, b)| assignment[a as usize] != assignment[b as usize]));
    Ok(ColoringResult { assignment, color_count: chi })
}

/// Elimination-game triangulation: eliminate along an MCS order, joining the
/// later neighborhood of each vertex into a clique. Returns the chordal
/// supergraph plus the edges added. No minimality claim (minimum fill-in is
/// NP-complete); on a chordal input nothing is added.
pub fn fill_in(g: &Graph) -> (Graph, Vec<(Vertex, Vertex)>) {
    let sigma = mcs(g);
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<Vertex>> = (0..n as Vertex)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut added = Vec::new();
    for i in 0..n {
        let v = sigma.vertex_at(i);
        let later: Vec<Vertex> = adj[v as usize]
            .iter()
            .copied()
            .filter(|&w| sigma.position_of(w) > i)
            .collect();
        for (a_idx, &a) in later.iter().enumerate() {
            for &b in &later[a_idx + 1..] {
                if adj[a as usize].insert(b) {
                    adj[b as usize].insert(a);
                    added.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend_from_slice(&added);
    let filled = Graph::from_edges(n, &edges).unwrap();
    debug_assert!(is_chordal(&filled));
    (filled, added)
}
