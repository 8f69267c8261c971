//! Simple undirected graphs with stable edge indices.
//!
//! Vertices are dense integers `0..n`. Every algorithm in this crate runs on
//! this representation: a sorted adjacency list per vertex plus an edge list
//! whose positions double as [`EdgeId`]s. Edge identities are assigned in
//! input order and never change for operations that do not modify the graph,
//! which is what lets line-graph certificates refer back to base edges.

use std::fmt;

pub type Vertex = u32;

/// Index of an edge in a [`Graph`]'s edge list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize, serde::Deserialize)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: Vertex, n: usize },
    LoopEdge(Vertex),
    DuplicateEdge(Vertex, Vertex),
    InvalidEdge(Vertex, Vertex),
    NotAPermutation,
    NotChordal,
    NotATree,
    ZeroPower,
    InvalidWitness,
    InvalidColoring,
    BudgetExceeded { n: usize, budget: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            GraphError::InvalidEdge(u, v) => write!(f, "edge {u}-{v} not present"),
            GraphError::NotAPermutation => write!(f, "ordering is not a permutation of the vertices"),
            GraphError::NotChordal => write!(f, "graph is not chordal"),
            GraphError::NotATree => write!(f, "graph is not a tree"),
            GraphError::ZeroPower => write!(f, "graph power requires k >= 1"),
            GraphError::InvalidWitness => write!(f, "witness fails its defining conditions"),
            GraphError::InvalidColoring => write!(f, "coloring violates its distance constraint"),
            GraphError::BudgetExceeded { n, budget } => {
                write!(f, "graph on {n} vertices exceeds budget of {budget}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// A finite simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    // (min, max, id) sorted by endpoint pair, for id lookup
    edge_lookup: Vec<(Vertex, Vertex, u32)>,
}

/// Equality is structural: same vertex count and same edge set. Edge ids are
/// positional metadata and may differ between equal graphs.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self
                .edge_lookup
                .iter()
                .zip(&other.edge_lookup)
                .all(|(a, b)| (a.0, a.1) == (b.0, b.1))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            edge_lookup: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Loops and duplicate edges are errors.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::from_edges`] but silently drops repeated edges.
    pub fn from_edges_dedup(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        Self::build(n, edges, true)
    }

    fn build(n: usize, input: &[(Vertex, Vertex)], dedup: bool) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        let mut seen: Vec<(Vertex, Vertex)> = Vec::with_capacity(input.len());
        for &(a, b) in input {
            if a as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let e = (a.min(b), a.max(b));
            if seen.binary_search(&e).is_ok() {
                if dedup {
                    continue;
                }
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            let pos = seen.binary_search(&e).unwrap_err();
            seen.insert(pos, e);
            g.adj[e.0 as usize].push(e.1);
            g.adj[e.1 as usize].push(e.0);
            g.edges.push(e);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g.edge_lookup = g
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (a, b, i as u32))
            .collect();
        g.edge_lookup.sort_unstable();
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.n as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Endpoints of an edge as an ordered `(min, max)` pair.
    pub fn endpoints(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id.index()]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edge_lookup
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .ok()
            .map(|i| EdgeId(self.edge_lookup[i].2))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    // -- standard families ---------------------------------------------------

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        edges.push((n as Vertex - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n as Vertex {
            for j in i + 1..n as Vertex {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves as Vertex).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    // -- basic operations ----------------------------------------------------

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n as Vertex {
            for v in u + 1..self.n as Vertex {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).unwrap()
    }

    /// Induced subgraph on `s`, plus the map from new indices back to the old
    /// vertex labels. `s` may be in any order; it is deduplicated and sorted.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let mut keep: Vec<Vertex> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut new_of = vec![u32::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_of[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            let (na, nb) = (new_of[a as usize], new_of[b as usize]);
            if na != u32::MAX && nb != u32::MAX {
                edges.push((na, nb));
            }
        }
        Ok((Graph::from_edges(keep.len(), &edges).unwrap(), keep))
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: Vertex) -> Result<Vec<Option<u32>>, GraphError> {
        self.check_vertex(v)?;
        let mut dist = vec![None; self.n];
        dist[v as usize] = Some(0);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &w in self.neighbors(u) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Length of a longest shortest path; on a disconnected graph the maximum
    /// over components. The empty graph and `K_1` have diameter 0.
    pub fn diameter(&self) -> u32 {
        let mut best = 0;
        for v in 0..self.n as Vertex {
            for d in self.distances_from(v).unwrap().into_iter().flatten() {
                best = best.max(d);
            }
        }
        best
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let reached = self
            .distances_from(0)
            .unwrap()
            .iter()
            .filter(|d| d.is_some())
            .count();
        reached == self.n
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for start in 0..self.n as Vertex {
            if comp[start as usize] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start as usize] = id;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Does `set` induce a complete subgraph?
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Is `set` pairwise non-adjacent?
    pub fn is_stable_set(&self, set: &[Vertex]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// A line graph together with the map from its vertices back to base edges.
#[derive(Clone, Debug)]
pub struct LineGraphResult {
    pub line_graph: Graph,
    pub back_map: Vec<EdgeId>,
}

impl Graph {
    /// Line graph: one vertex per edge, adjacency is edge incidence.
    pub fn line_graph(&self) -> LineGraphResult {
        let m = self.m();
        let mut incident: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            incident[a as usize].push(i as u32);
            incident[b as usize].push(i as u32);
        }
        let mut l_edges = Vec::new();
        for ids in &incident {
            for (i, &e1) in ids.iter().enumerate() {
                for &e2 in &ids[i + 1..] {
                    l_edges.push((e1.min(e2), e1.max(e2)));
                }
            }
        }
        let line_graph = Graph::from_edges(m, &l_edges).unwrap();
        LineGraphResult {
            line_graph,
            back_map: (0..m as u32).map(EdgeId).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let g = Graph::from_edges_dedup(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn adjacency_and_edge_ids_are_consistent() {
        let g = Graph::from_edges(4, &[(2, 1), (0, 3), (1, 0)]).unwrap();
        assert!(g.has_edge(1, 2) && g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edge_id(2, 1), Some(EdgeId(0)));
        assert_eq!(g.edge_id(3, 0), Some(EdgeId(1)));
        assert_eq!(g.edge_id(0, 1), Some(EdgeId(2)));
        assert_eq!(g.edge_id(0, 2), None);
        assert_eq!(g.endpoints(EdgeId(0)), (1, 2));
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(Graph::complete(4).complement().m(), 0);
        assert_eq!(Graph::empty(5).complement(), Graph::complete(5));
    }

    #[test]
    fn complement_of_c5_is_isomorphic_to_c5() {
        // explicit isomorphism 0->0, 1->2, 2->4, 3->1, 4->3
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        let iso = [0u32, 2, 4, 1, 3];
        for u in 0..5u32 {
            for v in 0..5u32 {
                if u != v {
                    assert_eq!(c5.has_edge(u, v), co.has_edge(iso[u as usize], iso[v as usize]));
                }
            }
        }
    }

    #[test]
    fn distances_on_paths_and_cycles() {
        let p5 = Graph::path(5);
        let d: Vec<_> = p5.distances_from(0).unwrap().into_iter().map(Option::unwrap).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 4]);

        let two = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(two.distances_from(0).unwrap()[1], None);

        let c6 = Graph::cycle(6);
        let mut d: Vec<_> = c6.distances_from(3).unwrap().into_iter().map(Option::unwrap).collect();
        d.sort_unstable();
        assert_eq!(d, vec![0, 1, 1, 2, 2, 3]);

        assert!(p5.distances_from(9).is_err());
    }

    fn petersen() -> Graph {
        // outer 5-cycle, inner 5-cycle with step 2, spokes
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn diameter_values() {
        assert_eq!(Graph::complete(2).diameter(), 1);
        assert_eq!(Graph::complete(7).diameter(), 1);
        assert_eq!(Graph::cycle(6).diameter(), 3);
        assert_eq!(Graph::empty(0).diameter(), 0);
        assert_eq!(Graph::empty(1).diameter(), 0);
        // disconnected: max over components
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.diameter(), 2);

        // frozen from the all-pairs BFS oracle below
        let p = petersen();
        let mut best = 0;
        for v in 0..10 {
            for d in p.distances_from(v).unwrap().into_iter().flatten() {
                best = best.max(d);
            }
        }
        assert_eq!(best, 2);
        assert_eq!(p.diameter(), 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5);
        let (all, map) = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(all.m(), 5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let (p3, map) = c5.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(map, vec![1, 2, 3]);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        assert!(c5.induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_chords() {
        // 4-cycle v1..v4 with an apex u1 on v1 and v4; restricting to all five
        // vertices keeps the v1-v4 edge
        let g = Graph::from_edges(
            8,
            &[
                (4, 5), (5, 6), (6, 7), (7, 4), // v1..v4 cycle
                (0, 4), (0, 7), // u1
                (1, 4), (1, 5), // u2
                (2, 5), (2, 6), // u3
                (3, 6), (3, 7), // u4
            ],
        )
        .unwrap();
        let (h1, map) = g.induced_subgraph(&[0, 4, 5, 6, 7]).unwrap();
        assert_eq!(map, vec![0, 4, 5, 6, 7]);
        assert_eq!(h1.m(), 6);
        assert!(h1.has_edge(1, 4)); // the v1-v4 chord survives
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let c6 = Graph::cycle(6);
        let lg = c6.line_graph();
        assert_eq!(lg.line_graph.n(), 6);
        assert_eq!(lg.line_graph.m(), 6);
        // every vertex has degree 2 and the graph is connected: a 6-cycle
        assert!(lg.line_graph.vertices().all(|v| lg.line_graph.degree(v) == 2));
        assert!(lg.line_graph.is_connected());
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let k13 = Graph::star(3);
        let lg = k13.line_graph().line_graph;
        assert_eq!(lg, Graph::complete(3));
    }

    #[test]
    fn line_graph_of_path_shortens() {
        let p4 = Graph::path(4);
        let lg = p4.line_graph().line_graph;
        assert_eq!(lg.n(), 3);
        assert_eq!(lg.m(), 2);
        assert!(lg.vertices().all(|v| lg.degree(v) <= 2));
    }

    #[test]
    fn line_graph_size_formula() {
        // |E(L(G))| = 1/2 sum deg^2 - m
        for g in [Graph::cycle(7), Graph::star(5), Graph::complete(5), petersen()] {
            let lg = g.line_graph().line_graph;
            let sum_sq: usize = g.vertices().map(|v| g.degree(v) * g.degree(v)).sum();
            assert_eq!(lg.m(), sum_sq / 2 - g.m());
            assert_eq!(lg.n(), g.m());
        }
    }
}
