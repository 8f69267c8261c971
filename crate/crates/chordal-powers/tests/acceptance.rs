//! Acceptance suite: every criterion the build must meet, one test per
//! criterion, each printing a pass line (run with `--nocapture` to see them
//! all). Tolerances and budgets are pinned here, not configurable.

use chordal_powers::clique_tree::{self, McctResult};
use chordal_powers::graph::{Graph, Vertex};
use chordal_powers::oracle::{self, LabeledGraphs, OracleBudget};
use chordal_powers::rng::{self, SplitMix64};
use chordal_powers::{chordal, powers, strong, structures};
use std::time::Instant;

fn pass(name: &str, detail: String) {
    println!("acceptance {name}: pass ({detail})");
}

/// Chordality recognizer versus the definitional oracle: all 32768 labeled
/// graphs on 6 vertices within 60 seconds, plus ten thousand random graphs
/// on 9 vertices.
#[test]
fn criterion_01_chordality_agreement() {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let mut count = 0u64;
    for g in oracle::enumerate_labeled_graphs(6, false).unwrap() {
        count += 1;
        assert_eq!(
            chordal::is_chordal(&g),
            oracle::is_chordal_oracle(&g, &budget).unwrap(),
            "disagreement on {:?}",
            g
        );
    }
    assert_eq!(count, 32_768);
    let mut rng = SplitMix64::new(1);
    for _ in 0..10_000 {
        let g = rng::random_graph(9, 0.4, &mut rng);
        assert_eq!(
            chordal::is_chordal(&g),
            oracle::is_chordal_oracle(&g, &budget).unwrap(),
            "disagreement on {:?}",
            g
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    pass("01 chordality-agreement", format!("32768 exhaustive + 10000 random in {elapsed:?}"));
}

/// The closed form for the strong chromatic index of cycles, reproduced by
/// the full pipeline for every length from 3 to 18, exactly.
#[test]
fn criterion_02_cycle_strong_index() {
    let budget = OracleBudget::uniform(18);
    for n in 3..=18usize {
        let expected = if n % 3 == 0 {
            3
        } else if n == 5 {
            5
        } else {
            4
        };
        assert_eq!(strong::cycle_strong_index(n).unwrap(), expected);
        let pipeline = strong::strong_chromatic_index(&Graph::cycle(n), &budget).unwrap();
        assert!(pipeline.exact(), "C_{n} must be exact");
        assert_eq!(pipeline.color_count, expected, "C_{n}");
    }
    pass("02 cycle-strong-index", "cycles 3..=18, zero tolerance".to_string());
}

/// On trees the strong chromatic index equals the maximum pair degree and
/// the oracle chromatic number of the squared line graph: 500 random trees
/// up to 12 vertices.
#[test]
fn criterion_03_tree_strong_index() {
    let budget = OracleBudget::uniform(12);
    let mut rng = SplitMix64::new(3);
    for i in 0..500 {
        let n = 2 + (rng.next_u64() % 11) as usize;
        let t = rng::random_tree(n, &mut rng);
        let sigma = strong::tree_strong_index(&t).unwrap();
        let lg = t.line_graph().line_graph;
        let square = powers::graph_power(&lg, 2).unwrap();
        let (chi, _) = oracle::exact_chromatic_number(&square, &budget).unwrap();
        assert_eq!(sigma, chi.max(if t.m() == 0 { 0 } else { chi }), "tree {i}: {:?}", t);
        assert_eq!(sigma, chi, "tree {i}: {:?}", t);
        let pipeline = strong::strong_chromatic_index(&t, &budget).unwrap();
        assert!(pipeline.exact());
        assert_eq!(pipeline.color_count, sigma);
    }
    pass("03 tree-strong-index", "500 random trees, n <= 12".to_string());
}

/// Chordal graphs have chordal squared line graphs, with the strong
/// chromatic index equal to the anti-matching number: 500 random chordal
/// graphs up to 12 vertices.
#[test]
fn criterion_04_chordal_line_squares() {
    let budget = OracleBudget::default();
    let mut rng = SplitMix64::new(4);
    for i in 0..500 {
        let n = 2 + (rng.next_u64() % 11) as usize;
        let g = rng::random_chordal(n, &mut rng);
        let lg = g.line_graph().line_graph;
        let square = powers::graph_power(&lg, 2).unwrap();
        assert!(chordal::is_chordal(&square), "graph {i}: {:?}", g);
        if g.m() == 0 {
            continue;
        }
        let pipeline = strong::strong_chromatic_index(&g, &budget).unwrap();
        assert!(pipeline.exact(), "graph {i}");
        let sigma = chordal::pes(&square).unwrap();
        let omega = chordal::maximal_cliques_chordal(&square, &sigma).unwrap().max_size() as u32;
        assert_eq!(pipeline.color_count, omega, "graph {i}: {:?}", g);
        // the anti-matching number computed definitionally, where affordable
        if g.m() <= 16 {
            assert_eq!(strong::max_anti_matching(&g, 2).edges.len() as u32, omega, "graph {i}");
        }
    }
    pass("04 chordal-line-squares", "500 random chordal graphs, n <= 12".to_string());
}

/// Flowers exist exactly when the square has an induced cycle of the same
/// size, and every returned witness validates and is non-withered: ten
/// thousand random graphs up to 12 vertices, sizes 4 through 8.
#[test]
fn criterion_05_flower_biconditional() {
    let budget = OracleBudget::uniform(12);
    let mut rng = SplitMix64::new(5);
    for i in 0..10_000 {
        let n = 4 + (rng.next_u64() % 9) as usize;
        let g = rng::random_graph(n, 0.35, &mut rng);
        let square = powers::graph_power(&g, 2).unwrap();
        for len in 4..=8usize.min(n) {
            let cycles = oracle::enumerate_induced_cycles(&square, len, len, &budget).unwrap();
            let flower = structures::find_flower(&g, len).unwrap();
            assert_eq!(cycles.is_empty(), flower.is_none(), "graph {i} size {len}: {:?}", g);
            if let Some(f) = flower {
                assert!(structures::validate_flower(&g, &f).valid, "graph {i} size {len}");
                assert!(!structures::is_withered(&g, &f).unwrap(), "graph {i} size {len}");
            }
        }
    }
    pass("05 flower-biconditional", "10000 random graphs, n <= 12, sizes 4..=8".to_string());
}

/// The forbidden-structure catalog agrees with direct chordality of the
/// squared line graph on every labeled graph with up to 7 vertices and on
/// ten thousand random graphs with 9 vertices. The check itself is the
/// assertion inside the verdict; this sweep drives it.
#[test]
fn criterion_06_catalog_agreement() {
    let start = Instant::now();
    let mut total = 0u64;
    for n in 1..=7usize {
        let stream = oracle::enumerate_labeled_graphs(n, true).unwrap();
        let graphs = stream.len();
        total += graphs;
        let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
        let next = std::sync::atomic::AtomicU64::new(0);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let mask = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if mask >= graphs {
                        break;
                    }
                    let g = LabeledGraphs::graph_for_mask(n, mask);
                    // the verdict asserts agreement between the two routes
                    let _ = structures::line_square_chordal_verdict(&g);
                });
            }
        });
    }
    assert_eq!(total, 1 + 2 + 8 + 64 + 1_024 + 32_768 + 2_097_152);
    let mut rng = SplitMix64::new(6);
    for _ in 0..10_000 {
        // spread the densities so sparse and dense shapes both appear
        let p = 0.15 + 0.55 * (rng.below(1000) as f64 / 1000.0);
        let g = rng::random_graph(9, p, &mut rng);
        let _ = structures::line_square_chordal_verdict(&g);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1_800, "took {elapsed:?}");
    pass(
        "06 catalog-agreement",
        format!("{total} labeled graphs n <= 7 + 10000 random n = 9 in {elapsed:?}"),
    );
}

/// Chordality of one power implies chordality two powers up, edge sets grow
/// monotonically, and the power of chordality never exceeds the diameter:
/// ten thousand random graphs up to 12 vertices.
#[test]
fn criterion_07_duchet_and_monotonicity() {
    let mut rng = SplitMix64::new(7);
    for i in 0..10_000 {
        let n = 2 + (rng.next_u64() % 11) as usize;
        let g = rng::random_graph(n, 0.3, &mut rng);
        let dm = g.diameter().max(1) as usize;
        let mut chordal_at = vec![false; dm + 1];
        let mut prev: Option<Graph> = None;
        for k in 1..=dm {
            let p = powers::graph_power(&g, k).unwrap();
            if let Some(q) = &prev {
                for &(a, b) in q.edges() {
                    assert!(p.has_edge(a, b), "graph {i}: power {k} lost an edge");
                }
            }
            chordal_at[k] = chordal::is_chordal(&p);
            prev = Some(p);
        }
        for k in 1..=dm.saturating_sub(2) {
            if chordal_at[k] {
                assert!(chordal_at[k + 2], "graph {i}: {:?} chordal at {k} but not {}", g, k + 2);
            }
        }
        assert!(powers::power_of_chordality(&g).k0 <= dm, "graph {i}: {:?}", g);
    }
    pass("07 duchet-and-monotonicity", "10000 random graphs, n <= 12".to_string());
}

/// Exactness of the scheme-based algorithms on chordal graphs: coloring
/// count, stable set size and clique cover size against the oracle, and the
/// clique bound: one thousand random chordal graphs up to 12 vertices.
#[test]
fn criterion_08_colors_and_gavril_exactness() {
    let budget = OracleBudget::default();
    let mut rng = SplitMix64::new(8);
    for i in 0..1_000 {
        let n = 2 + (rng.next_u64() % 11) as usize;
        let g = rng::random_chordal(n, &mut rng);
        let sigma = chordal::pes(&g).expect("generator yields chordal graphs");
        let coloring = chordal::colors_chordal(&g, &sigma).unwrap();
        let (chi, _) = oracle::exact_chromatic_number(&g, &budget).unwrap();
        assert_eq!(coloring.color_count, chi, "graph {i}: {:?}", g);

        let stable = chordal::gavril_stable_set(&g, &sigma).unwrap();
        let (alpha, _) = oracle::exact_max_stable_set(&g, &budget).unwrap();
        assert_eq!(stable.stable_set.len(), alpha, "graph {i}: {:?}", g);
        assert_eq!(stable.clique_cover.len(), alpha, "graph {i}: {:?}", g);

        let cliques = chordal::maximal_cliques_chordal(&g, &sigma).unwrap();
        assert!(cliques.len() <= g.n(), "graph {i}: {:?}", g);
    }
    pass("08 colors-and-gavril", "1000 random chordal graphs, n <= 12".to_string());
}

/// Clique trees from the one-pass construction: valid tree decompositions,
/// width equal to clique number minus one, and total weight matching the
/// Kruskal maximum spanning tree of the clique graph: one thousand random
/// chordal graphs up to 12 vertices.
#[test]
fn criterion_09_clique_tree_validity() {
    let mut rng = SplitMix64::new(9);
    for i in 0..1_000 {
        let n = 2 + (rng.next_u64() % 11) as usize;
        let g = rng::random_chordal(n, &mut rng);
        let McctResult::Chordal { sigma, tree } = clique_tree::mcct(&g) else {
            panic!("graph {i}: generator yields chordal graphs");
        };
        assert!(clique_tree::validate_tree_decomposition(&g, &tree), "graph {i}: {:?}", g);
        let cliques = chordal::maximal_cliques_chordal(&g, &sigma).unwrap();
        assert_eq!(tree.width(), cliques.max_size() - 1, "graph {i}: {:?}", g);
        let kruskal = clique_tree::max_spanning_tree(&clique_tree::clique_graph(&g).unwrap());
        assert_eq!(tree.weight(), kruskal.weight(), "graph {i}: {:?}", g);
    }
    pass("09 clique-tree-validity", "1000 random chordal graphs, n <= 12".to_string());
}

/// Frozen spot values, each in under a second.
#[test]
fn criterion_10_spot_values() {
    let budget = OracleBudget::default();
    let checks: Vec<(&str, Box<dyn Fn() + Send>)> = vec![
        ("k0(C_5) = 2", Box::new(|| assert_eq!(powers::power_of_chordality(&Graph::cycle(5)).k0, 2))),
        ("k0(C_6) = 3", Box::new(|| assert_eq!(powers::power_of_chordality(&Graph::cycle(6)).k0, 3))),
        ("chi_2(C_5) = 5", Box::new({
            move || {
                let r = strong::k_strong_chromatic_number(&Graph::cycle(5), 2, &budget).unwrap();
                assert!(r.exact());
                assert_eq!(r.color_count, 5);
            }
        })),
        ("chi_2(C_6) = 3", Box::new({
            move || {
                let r = strong::k_strong_chromatic_number(&Graph::cycle(6), 2, &budget).unwrap();
                assert!(r.exact());
                assert_eq!(r.color_count, 3);
            }
        })),
        ("C_6^2 has exactly 3 induced 4-cycles", Box::new({
            move || {
                let square = powers::graph_power(&Graph::cycle(6), 2).unwrap();
                let cycles = oracle::enumerate_induced_cycles(&square, 4, 4, &budget).unwrap();
                assert_eq!(cycles.len(), 3);
                let mut sets: Vec<Vec<Vertex>> = cycles
                    .into_iter()
                    .map(|mut c| {
                        c.sort_unstable();
                        c
                    })
                    .collect();
                sets.sort();
                assert_eq!(sets, vec![vec![0, 1, 3, 4], vec![0, 2, 3, 5], vec![1, 2, 4, 5]]);
            }
        })),
        ("L(C_7)^2 contains a size-7 antihole", Box::new({
            move || {
                let lg = Graph::cycle(7).line_graph().line_graph;
                let square = powers::graph_power(&lg, 2).unwrap();
                let hole = oracle::has_antihole(&square, &budget).unwrap().unwrap();
                assert_eq!(hole.cycle.len(), 7);
            }
        })),
    ];
    for (name, check) in checks {
        let start = Instant::now();
        check();
        let elapsed = start.elapsed();
        assert!(elapsed.as_secs() < 1, "{name} took {elapsed:?}");
    }
    pass("10 spot-values", "6 frozen values, each < 1 s".to_string());
}

/// The pair-color lift of an oracle-exact 2-strong vertex coloring is a
/// valid 2-strong edge coloring within the pair bound: one thousand random
/// graphs up to 10 vertices.
#[test]
fn criterion_11_lift_bound() {
    let budget = OracleBudget::default();
    let mut rng = SplitMix64::new(11);
    for i in 0..1_000 {
        let n = 2 + (rng.next_u64() % 9) as usize;
        let g = rng::random_graph(n, 0.35, &mut rng);
        let f = strong::k_strong_chromatic_number(&g, 2, &budget).unwrap();
        assert!(f.exact(), "n <= 10 stays within the oracle budget");
        let lifted = strong::lift_vertex_to_edge_coloring(&g, &f).unwrap();
        assert!(strong::is_k_strong_edge_coloring(&g, 2, &lifted.assignment), "graph {i}");
        let c = f.color_count;
        assert!(lifted.color_count <= c * c.saturating_sub(1) / 2 || g.m() == 0, "graph {i}");
    }
    pass("11 lift-bound", "1000 random graphs, n <= 10, oracle-exact inputs".to_string());
}

/// Performance smoke: squaring plus chordality testing at 500 vertices in
/// under 5 seconds, and the full power-of-chordality search at 200 vertices
/// in under 10 seconds.
#[test]
fn criterion_12_performance_smoke() {
    let mut rng = SplitMix64::new(12);
    let big = rng::random_graph(500, 0.02, &mut rng);
    let start = Instant::now();
    let square = powers::graph_power(&big, 2).unwrap();
    let _ = chordal::is_chordal(&square);
    let square_time = start.elapsed();
    assert!(square_time.as_secs_f64() < 5.0, "square + chordality took {square_time:?}");

    let medium = rng::random_graph(200, 0.02, &mut rng);
    let start = Instant::now();
    let poc = powers::power_of_chordality(&medium);
    let poc_time = start.elapsed();
    assert!(poc_time.as_secs_f64() < 10.0, "power of chordality took {poc_time:?}");
    pass(
        "12 performance-smoke",
        format!("n=500 square in {square_time:?}, n=200 k0={} in {poc_time:?}", poc.k0),
    );
}
