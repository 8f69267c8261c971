//! Clique graphs, clique trees, and tree decompositions of chordal graphs.
//!
//! The clique graph (Galinier, Habib, Paul 1995) joins two maximal cliques
//! exactly when their intersection is a minimal separator between the two
//! sides, weighted by the separator's size. Its maximum spanning trees are
//! precisely the clique trees, so Kruskal on the clique graph and the
//! one-pass MCS-based construction must produce trees of the same weight;
//! the tests hold both implementations to that.

use crate::chordal::{self, CliqueSet, VertexOrdering};
use crate::graph::{Graph, GraphError, Vertex};

/// Maximal cliques as nodes, weighted edges over minimal separators.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CliqueGraph {
    pub nodes: CliqueSet,
    /// `(i, j, weight)` with `i < j`; weight is the separator size.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CliqueGraph {
    pub fn separator(&self, i: usize, j: usize) -> Vec<Vertex> {
        sorted_intersection(&self.nodes.cliques[i], &self.nodes.cliques[j])
    }
}

/// A clique tree / tree decomposition: bags plus tree edges. For a
/// disconnected host graph this is a forest with one tree per component.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CliqueTree {
    pub bags: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    /// Width: largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Total weight: sum of bag intersections over the tree edges.
    pub fn weight(&self) -> usize {
        self.edges
            .iter()
            .map(|&(i, j)| sorted_intersection(&self.bags[i], &self.bags[j]).len())
            .sum()
    }

    /// Simple DOT rendering for visual inspection.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cliquetree {\n");
        for (i, bag) in self.bags.iter().enumerate() {
            let label: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("  b{} [label=\"{{{}}}\"];\n", i, label.join(",")));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  b{i} -- b{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Connected components of `g` after deleting `removed` (sorted), as
/// component ids per vertex (`usize::MAX` for removed vertices).
fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<usize> {
    let mut comp = vec![usize::MAX; g.n()];
    let gone = |v: Vertex| removed.binary_search(&v).is_ok();
    let mut count = 0;
    for start in g.vertices() {
        if gone(start) || comp[start as usize] != usize::MAX {
            continue;
        }
        comp[start as usize] = count;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !gone(w) && comp[w as usize] == usize::MAX {
                    comp[w as usize] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    comp
}

/// Is `s` (sorted) a minimal separator of `g` putting `a` and `b` in
/// different components? Minimality is the standard two-full-components
/// condition: every separator vertex must see both sides.
pub(crate) fn is_minimal_ab_separator(g: &Graph, s: &[Vertex], a: Vertex, b: Vertex) -> bool {
    let comp = components_without(g, s);
    let (ca, cb) = (comp[a as usize], comp[b as usize]);
    if ca == cb {
        return false;
    }
    s.iter().all(|&x| {
        let mut sees_a = false;
        let mut sees_b = false;
        for &w in g.neighbors(x) {
            if comp[w as usize] == ca {
                sees_a = true;
            } else if comp[w as usize] == cb {
                sees_b = true;
            }
        }
        sees_a && sees_b
    })
}

/// The clique graph of a chordal graph.
pub fn clique_graph(g: &Graph) -> Result<CliqueGraph, GraphError> {
    let sigma = chordal::pes(g)?;
    let nodes = chordal::maximal_cliques_chordal(g, &sigma)?;
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let s = sorted_intersection(&nodes.cliques[i], &nodes.cliques[j]);
            if s.is_empty() {
                continue;
            }
            // all of C_i \ S lies in one component, so one pair suffices
            let a = *nodes.cliques[i].iter().find(|v| s.binary_search(v).is_err()).unwrap();
            let b = *nodes.cliques[j].iter().find(|v| s.binary_search(v).is_err()).unwrap();
            if is_minimal_ab_separator(g, &s, a, b) {
                edges.push((i, j, s.len()));
            }
        }
    }
    Ok(CliqueGraph { nodes, edges })
}

/// Kruskal maximum spanning tree (forest on a disconnected clique graph).
/// Ties break lexicographically on the clique index pair, so the result is
/// deterministic.
pub fn max_spanning_tree(cg: &CliqueGraph) -> CliqueTree {
    let mut order = cg.edges.clone();
    order.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| (a.0, a.1).cmp(&(b.0, b.1))));
    let mut parent: Vec<usize> = (0..cg.nodes.len()).collect();
    let mut edges = Vec::new();
    for (i, j, _) in order {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    CliqueTree { bags: cg.nodes.cliques.clone(), edges }
}

fn find(parent: &mut Vec<usize>, x: usize) -> usize {
    if parent[x] != x {
        let root = find(parent, parent[x]);
        parent[x] = root;
    }
    parent[x]
}

/// Result of the one-pass construction: either a scheme plus its clique
/// tree, or a non-chordal verdict.
#[derive(Clone, Debug)]
pub enum McctResult {
    Chordal { sigma: VertexOrdering, tree: CliqueTree },
    NotChordal,
}

/// Maximum cardinality search extended to build a clique tree in the same
/// pass (Galinier, Habib, Paul 1995). A new bag starts whenever the label
/// count fails to increase; the bag of a fresh vertex `v` is joined to the
/// bag of `v`'s most recently numbered neighbor.
pub fn mcct(g: &Graph) -> McctResult {
    let n = g.n();
    let mut label: Vec<Vec<Vertex>> = vec![Vec::new(); n]; // numbered neighbors
    let mut last: Vec<Option<Vertex>> = vec![None; n];
    let mut clique_of: Vec<usize> = vec![usize::MAX; n];
    let mut numbered = vec![false; n];
    let mut order = vec![0 as Vertex; n];

    let mut bags: Vec<Vec<Vertex>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut previous_mark: isize = -1;

    for i in (0..n).rev() {
        let mut v = None;
        let mut best = 0usize;
        for u in g.vertices() {
            if !numbered[u as usize] && (v.is_none() || label[u as usize].len() > best) {
                v = Some(u);
                best = label[u as usize].len();
            }
        }
        let v = v.unwrap();
        if (best as isize) <= previous_mark || bags.is_empty() {
            // label count failed to increase: start a new bag X(v) ∪ {v}
            let mut bag = label[v as usize].clone();
            bag.push(v);
            bags.push(bag);
            let j = bags.len() - 1;
            if let Some(u) = last[v as usize] {
                edges.push((clique_of[u as usize], j));
            }
        } else {
            bags.last_mut().unwrap().push(v);
        }
        clique_of[v as usize] = bags.len() - 1;
        previous_mark = best as isize;
        numbered[v as usize] = true;
        order[i] = v;
        for &w in g.neighbors(v) {
            if !numbered[w as usize] {
                label[w as usize].push(v);
                last[w as usize] = Some(v);
            }
        }
    }

    let sigma = VertexOrdering::from_order(order).unwrap();
    if !chordal::verify_pes(g, &sigma).unwrap() {
        return McctResult::NotChordal;
    }
    for bag in &mut bags {
        bag.sort_unstable();
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    McctResult::Chordal { sigma, tree: CliqueTree { bags, edges } }
}

/// Treewidth of a chordal graph: clique number minus one, certified by the
/// clique tree.
pub fn treewidth_chordal(g: &Graph) -> Result<usize, GraphError> {
    match mcct(g) {
        McctResult::Chordal { tree, .. } => Ok(tree.width()),
        McctResult::NotChordal => Err(GraphError::NotChordal),
    }
}

/// Checks the three tree-decomposition conditions plus acyclicity: every
/// vertex in some bag, every edge inside some bag, and for each vertex a
/// connected trace in the (forest) tree.
pub fn validate_tree_decomposition(g: &Graph, t: &CliqueTree) -> bool {
    let b = t.bags.len();
    if t.edges.iter().any(|&(i, j)| i >= b || j >= b) {
        return false;
    }
    // acyclic?
    {
        let mut parent: Vec<usize> = (0..b).collect();
        for &(i, j) in &t.edges {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                return false;
            }
            parent[ri] = rj;
        }
    }
    // vertex and edge coverage
    let in_bag = |v: Vertex, i: usize| t.bags[i].binary_search(&v).is_ok();
    for v in g.vertices() {
        if !(0..b).any(|i| in_bag(v, i)) {
            return false;
        }
    }
    for &(u, v) in g.edges() {
        if !(0..b).any(|i| in_bag(u, i) && in_bag(v, i)) {
            return false;
        }
    }
    // connected traces
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); b];
    for &(i, j) in &t.edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    for v in g.vertices() {
        let trace: Vec<usize> = (0..b).filter(|&i| in_bag(v, i)).collect();
        let mut seen = vec![false; b];
        let mut queue = std::collections::VecDeque::from([trace[0]]);
        seen[trace[0]] = true;
        let mut reached = 1;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if !seen[j] && in_bag(v, j) {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
        if reached != trace.len() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    /// Triangle abc with pendant triangles abd, bce, acf; its clique graph
    /// is the star on four bags centered at {a,b,c}, every weight 2.
    fn decomposition_example() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
        )
        .unwrap()
    }

    #[test]
    fn clique_graph_examples() {
        let k4 = Graph::complete(4);
        let cg = clique_graph(&k4).unwrap();
        assert_eq!(cg.nodes.len(), 1);
        assert!(cg.edges.is_empty());

        let p3 = Graph::path(3);
        let cg = clique_graph(&p3).unwrap();
        assert_eq!(cg.nodes.cliques, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(cg.edges, vec![(0, 1, 1)]);

        let cg = clique_graph(&decomposition_example()).unwrap();
        assert_eq!(cg.nodes.len(), 4);
        // center bag {0,1,2} has index 0 in the sorted clique list
        let mut edges = cg.edges.clone();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 1, 2), (0, 2, 2), (0, 3, 2)]);

        assert!(clique_graph(&Graph::cycle(4)).is_err());
    }

    #[test]
    fn separator_check_rejects_non_separating_intersections() {
        // path bags {0,1},{1,2},{2,3}: {0,1}∩{2,3} is empty, no edge; all
        // adjacent pairs share a cut vertex
        let p4 = Graph::path(4);
        let cg = clique_graph(&p4).unwrap();
        assert_eq!(cg.edges.len(), 2);
    }

    #[test]
    fn kruskal_tree_examples() {
        let single = clique_graph(&Graph::complete(3)).unwrap();
        let t = max_spanning_tree(&single);
        assert!(t.edges.is_empty());
        assert_eq!(t.width(), 2);

        let pn = Graph::path(6);
        let t = max_spanning_tree(&clique_graph(&pn).unwrap());
        assert_eq!(t.edges.len(), 4); // the path of edge-bags
        assert_eq!(t.weight(), 4);
        assert!(validate_tree_decomposition(&pn, &t));

        let g = decomposition_example();
        let t = max_spanning_tree(&clique_graph(&g).unwrap());
        assert_eq!(t.weight(), 6);
        assert_eq!(t.width(), 2);
        assert!(validate_tree_decomposition(&g, &t));
    }

    #[test]
    fn mcct_on_trees_and_cycles() {
        let mut rng = SplitMix64::new(11);
        for n in 3..=10usize {
            let tree = crate::rng::random_tree(n, &mut rng);
            match mcct(&tree) {
                McctResult::Chordal { tree: t, .. } => {
                    assert_eq!(t.bags.len(), n - 1);
                    assert!(t.bags.iter().all(|b| b.len() == 2));
                    assert!(validate_tree_decomposition(&tree, &t));
                }
                McctResult::NotChordal => panic!("trees are chordal"),
            }
        }
        assert!(matches!(mcct(&Graph::cycle(4)), McctResult::NotChordal));
    }

    #[test]
    fn mcct_matches_kruskal_weight() {
        let mut rng = SplitMix64::new(2718);
        for _ in 0..80 {
            let n = 4 + (rng.next_u64() % 9) as usize;
            let g = crate::rng::random_chordal(n, &mut rng);
            let cg = clique_graph(&g).unwrap();
            let kruskal = max_spanning_tree(&cg);
            match mcct(&g) {
                McctResult::Chordal { sigma, tree } => {
                    assert!(crate::chordal::verify_pes(&g, &sigma).unwrap());
                    assert!(validate_tree_decomposition(&g, &tree));
                    assert_eq!(tree.weight(), kruskal.weight(), "graph {:?}", g);
                    assert_eq!(tree.bags.len(), cg.nodes.len());
                    // width = clique number - 1
                    let cliques = crate::chordal::maximal_cliques_chordal(&g, &sigma).unwrap();
                    assert_eq!(tree.width(), cliques.max_size() - 1);
                }
                McctResult::NotChordal => panic!("generator must produce chordal graphs"),
            }
        }
    }

    #[test]
    fn mcct_tree_edges_are_real_separators() {
        let mut rng = SplitMix64::new(5150);
        for _ in 0..40 {
            let n = 4 + (rng.next_u64() % 7) as usize;
            let g = crate::rng::random_chordal(n, &mut rng);
            if let McctResult::Chordal { tree, .. } = mcct(&g) {
                for &(i, j) in &tree.edges {
                    let s = sorted_intersection(&tree.bags[i], &tree.bags[j]);
                    let a = *tree.bags[i].iter().find(|v| s.binary_search(v).is_err()).unwrap();
                    let b = *tree.bags[j].iter().find(|v| s.binary_search(v).is_err()).unwrap();
                    assert!(is_minimal_ab_separator(&g, &s, a, b));
                }
            } else {
                panic!("generator must produce chordal graphs");
            }
        }
    }

    #[test]
    fn treewidth_examples() {
        let mut rng = SplitMix64::new(31);
        for n in 2..=9usize {
            let tree = crate::rng::random_tree(n, &mut rng);
            assert_eq!(treewidth_chordal(&tree).unwrap(), 1);
        }
        assert_eq!(treewidth_chordal(&Graph::complete(6)).unwrap(), 5);
        assert_eq!(treewidth_chordal(&decomposition_example()).unwrap(), 2);
        assert!(treewidth_chordal(&Graph::cycle(5)).is_err());
    }

    #[test]
    fn validate_rejects_broken_decompositions() {
        let g = decomposition_example();
        let McctResult::Chordal { tree, .. } = mcct(&g) else { panic!() };
        assert!(validate_tree_decomposition(&g, &tree));

        // delete one vertex from a bag: some edge is no longer covered
        let mut broken = tree.clone();
        broken.bags[0].remove(0);
        assert!(!validate_tree_decomposition(&g, &broken));

        // one bag with everything is always valid, width n-1
        let all = CliqueTree { bags: vec![g.vertices().collect()], edges: vec![] };
        assert!(validate_tree_decomposition(&g, &all));
        assert_eq!(all.width(), g.n() - 1);

        // a cycle of bags is no tree
        let cyclic = CliqueTree {
            bags: vec![g.vertices().collect(); 3],
            edges: vec![(0, 1), (1, 2), (0, 2)],
        };
        assert!(!validate_tree_decomposition(&g, &cyclic));
    }

    #[test]
    fn mcct_handles_disconnected_graphs() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let McctResult::Chordal { tree, .. } = mcct(&g) else { panic!() };
        // triangle, edge, isolated vertex: three bags, no connecting edges
        assert_eq!(tree.bags.len(), 3);
        assert!(tree.edges.is_empty());
        assert!(validate_tree_decomposition(&g, &tree));
    }

    #[test]
    fn dot_output_shape() {
        let g = Graph::path(3);
        let McctResult::Chordal { tree, .. } = mcct(&g) else { panic!() };
        let dot = tree.to_dot();
        assert!(dot.starts_with("graph cliquetree {"));
        assert!(dot.contains("b0 -- b1;"));
    }
}
