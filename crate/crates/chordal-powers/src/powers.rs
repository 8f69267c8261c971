//! Graph powers and the power of chordality.
//!
//! `G^k` connects every pair of vertices at distance at most `k`. Powers of
//! chordal graphs are not chordal in general, but every graph has a smallest
//! `k0` with `G^k0` chordal, bounded by the diameter, and chordality at `k`
//! propagates to `k + 2`. The profile below records, per power, chordality
//! and the clique/chromatic numbers — exact where a chordal power or the
//! brute-force oracle can deliver them, honest bounds otherwise.

use crate::chordal::{self, VertexOrdering};
use crate::graph::{Graph, GraphError, Vertex};
use crate::oracle::{self, OracleBudget};

/// The k-strong neighborhood of `v`: all vertices within distance `k`,
/// excluding `v` itself. Frontier expansion, never revisiting a vertex.
pub fn k_neighborhood(g: &Graph, v: Vertex, k: usize) -> Result<Vec<Vertex>, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroPower);
    }
    if v as usize >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut visited = vec![false; g.n()];
    visited[v as usize] = true;
    let mut frontier = vec![v];
    let mut out = Vec::new();
    for _ in 0..k {
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if !visited[w as usize] {
                    visited[w as usize] = true;
                    out.push(w);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out.sort_unstable();
    Ok(out)
}

/// The k-th power of `g`: same vertices, an edge for every pair at distance
/// at most `k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroPower);
    }
    if k == 1 {
        return Ok(g.clone());
    }
    let mut edges = Vec::new();
    for v in g.vertices() {
        for w in k_neighborhood(g, v, k)? {
            if w > v {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(g.n(), &edges)
}

/// Result of the power-of-chordality search.
#[derive(Clone, Debug)]
pub struct ChordalPower {
    pub k0: usize,
    pub power: Graph,
    pub pes: VertexOrdering,
}

/// Smallest `k` with `G^k` chordal, together with that power and a verified
/// elimination scheme of it. Each power is computed fresh; this terminates
/// by `k = diameter` at the latest, where all components are complete.
pub fn power_of_chordality(g: &Graph) -> ChordalPower {
    for k in 1.. {
        let power = graph_power(g, k).unwrap();
        if let Ok(pes) = chordal::pes(&power) {
            return ChordalPower { k0: k, power, pes };
        }
    }
    unreachable!("G^diameter has complete components")
}

/// Same result as [`power_of_chordality`], but from a single all-pairs
/// distance matrix thresholded per `k`. The two routes are asserted equal in
/// the test suite.
pub fn power_of_chordality_via_distances(g: &Graph) -> ChordalPower {
    let dist: Vec<Vec<Option<u32>>> = g.vertices().map(|v| g.distances_from(v).unwrap()).collect();
    for k in 1.. {
        let mut edges = Vec::new();
        for u in 0..g.n() as Vertex {
            for w in u + 1..g.n() as Vertex {
                if matches!(dist[u as usize][w as usize], Some(d) if d as usize <= k) {
                    edges.push((u, w));
                }
            }
        }
        let power = Graph::from_edges(g.n(), &edges).unwrap();
        if let Ok(pes) = chordal::pes(&power) {
            return ChordalPower { k0: k, power, pes };
        }
    }
    unreachable!("G^diameter has complete components")
}

/// An elimination scheme of `G^k` (a k-strong scheme of `g`), or `None` when
/// `G^k` is not chordal.
pub fn k_pes(g: &Graph, k: usize) -> Result<Option<VertexOrdering>, GraphError> {
    let power = graph_power(g, k)?;
    Ok(chordal::pes(&power).ok())
}

/// A value known exactly or enclosed by bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Estimate {
    pub lower: u32,
    pub upper: u32,
}

impl Estimate {
    pub fn exact(v: u32) -> Estimate {
        Estimate { lower: v, upper: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    fn tighten(&mut self, other: Estimate) {
        self.lower = self.lower.max(other.lower);
        self.upper = self.upper.min(other.upper);
    }
}

/// Per-power record of a [`PowerProfile`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct PowerRow {
    pub k: usize,
    pub chordal: bool,
    /// Every component of `G^k` is complete.
    pub complete: bool,
    pub clique_number: Estimate,
    pub chromatic_number: Estimate,
}

/// Chordality and clique/chromatic data for `G^1 .. G^min(k_max, diameter)`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PowerProfile {
    pub diameter: u32,
    pub k0: usize,
    pub rows: Vec<PowerRow>,
}

fn components_complete(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let members = c.len();
        c.iter().all(|&v| g.degree(v) == members - 1)
    })
}

/// Upper bound on the chromatic number of `G^k` from the maximum degree:
/// the geometric series `1 + Δ·((Δ-1)^0 + … + (Δ-1)^(k-1))`, capped by
/// `Δ^k + 1` and by `n`.
pub fn degree_bound(g: &Graph, k: usize) -> u32 {
    let n = g.n() as u64;
    let delta = g.max_degree() as u64;
    if delta <= 1 {
        return ((delta + 1).min(n)) as u32;
    }
    let mut series: u64 = 1; // the vertex itself
    let mut layer: u64 = delta;
    for _ in 0..k {
        series = series.saturating_add(layer).min(n);
        layer = layer.saturating_mul(delta - 1);
    }
    let power_bound = delta.checked_pow(k as u32).map_or(n, |p| (p + 1).min(n));
    series.min(power_bound) as u32
}

pub fn power_profile(g: &Graph, k_max: Option<usize>, budget: &OracleBudget) -> PowerProfile {
    let diameter = g.diameter();
    let poc = power_of_chordality(g);
    let limit = k_max.unwrap_or(diameter as usize).min(diameter as usize).max(1);

    let mut rows: Vec<PowerRow> = Vec::with_capacity(limit);
    for k in 1..=limit {
        let power = graph_power(g, k).unwrap();
        let n = power.n() as u32;
        let (chordal, omega, chi);
        if let Ok(sigma) = chordal::pes(&power) {
            chordal = true;
            let cliques = chordal::maximal_cliques_chordal(&power, &sigma).unwrap();
            omega = Estimate::exact(cliques.max_size() as u32);
            chi = Estimate::exact(chordal::colors_chordal(&power, &sigma).unwrap().color_count);
        } else {
            chordal = false;
            omega = match oracle::exact_max_clique(&power, budget) {
                Ok((w, _)) => Estimate::exact(w as u32),
                Err(_) => Estimate { lower: 1, upper: n.min(degree_bound(g, k)) },
            };
            chi = match oracle::exact_chromatic_number(&power, budget) {
                Ok((c, _)) => Estimate::exact(c),
                Err(_) => Estimate { lower: omega.lower, upper: n.min(degree_bound(g, k)) },
            };
        }
        rows.push(PowerRow {
            k,
            chordal,
            complete: components_complete(&power),
            clique_number: omega,
            chromatic_number: chi,
        });
    }

    // tighten bounds through monotonicity and the next chordal power above
    for i in 0..rows.len() {
        if rows[i].clique_number.is_exact() && rows[i].chromatic_number.is_exact() {
            continue;
        }
        if i > 0 {
            let prev_omega = rows[i - 1].clique_number;
            let prev_chi = rows[i - 1].chromatic_number;
            rows[i].clique_number.tighten(Estimate { lower: prev_omega.lower, upper: u32::MAX });
            rows[i].chromatic_number.tighten(Estimate { lower: prev_chi.lower, upper: u32::MAX });
        }
        if let Some(next) = rows[i + 1..].iter().find(|r| r.chordal) {
            let (omega_cap, chi_cap) = (next.clique_number.upper, next.chromatic_number.upper);
            rows[i].clique_number.tighten(Estimate { lower: 1, upper: omega_cap });
            rows[i].chromatic_number.tighten(Estimate { lower: 1, upper: chi_cap });
        }
        // an exact clique number at a chordal power above, found by searching
        // only inside that power's elimination bags
        if !rows[i].clique_number.is_exact() {
            if let Ok(Some((w, _))) = clique_from_chordal_power_above(g, rows[i].k, &rows, &poc) {
                rows[i].clique_number = Estimate::exact(w as u32);
                let lower = rows[i].chromatic_number.lower.max(w as u32);
                rows[i].chromatic_number.tighten(Estimate { lower, upper: u32::MAX });
            }
        }
    }

    PowerProfile { diameter, k0: poc.k0, rows }
}

fn clique_from_chordal_power_above(
    g: &Graph,
    k_prime: usize,
    rows: &[PowerRow],
    poc: &ChordalPower,
) -> Result<Option<(usize, Vec<Vertex>)>, GraphError> {
    // the cost of the bag search is exponential in the chordal power's clique
    // number, so cap it
    const BAG_CAP: u32 = 22;
    let above = rows
        .iter()
        .find(|r| r.k >= k_prime && r.chordal && r.clique_number.upper <= BAG_CAP)
        .map(|r| r.k)
        .or_else(|| (poc.k0 >= k_prime).then_some(poc.k0));
    match above {
        Some(k) => clique_number_via_chordal_power(g, k_prime, k).map(Some),
        None => Ok(None),
    }
}

/// Exact clique number of `G^k'` using a chordal power `G^k`, `k' <= k`:
/// every maximal clique of `G^k'` lies inside the elimination bag of its
/// earliest vertex along a scheme of `G^k`, so searching the bags suffices.
pub fn clique_number_via_chordal_power(
    g: &Graph,
    k_prime: usize,
    k: usize,
) -> Result<(usize, Vec<Vertex>), GraphError> {
    if k_prime > k || k_prime == 0 {
        return Err(GraphError::ZeroPower);
    }
    let high = graph_power(g, k)?;
    let sigma = chordal::pes(&high)?;
    let low = graph_power(g, k_prime)?;
    let later = sigma.later_neighbors(&high);

    let mut best: Vec<Vertex> = Vec::new();
    for i in 0..g.n() {
        let v = sigma.vertex_at(i);
        let mut bag = later[v as usize].clone();
        bag.push(v);
        bag.sort_unstable();
        let mut current = Vec::new();
        bag_clique(&low, &bag, &mut current, &mut best);
    }
    Ok((best.len(), best))
}

fn bag_clique(low: &Graph, candidates: &[Vertex], current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
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
        .filter(|&w| low.has_edge(v, w))
        .collect();
    current.push(v);
    bag_clique(low, &narrowed, current, best);
    current.pop();
    bag_clique(low, &candidates[1..], current, best);
}
