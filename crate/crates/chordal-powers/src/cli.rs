//! Implementation of the command-line front end.
//!
//! Three subcommands: `analyze` (full report for one file or a directory of
//! files), `detect` (search for one structural witness), and `oracle-check`
//! (randomized and exhaustive agreement suites against the brute-force
//! oracle). Randomized suites take an explicit seed and use the splitmix
//! generator from [`crate::rng`], so any counterexample reproduces from
//! `seed` alone; mismatches are printed in graph6.
//!
//! Exit codes: 0 success, 1 property violation found, 2 input error,
//! 3 budget exceeded.

use crate::formats::{self, Format};
use crate::graph::{Graph, GraphError};
use crate::oracle::{self, OracleBudget};
use crate::powers::graph_power;
use crate::report;
use crate::rng::{self, SplitMix64};
use crate::{chordal, strong, structures};
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const BUDGET_ENV_VAR: &str = "CHORDAL_POWERS_ORACLE_BUDGET";

/// The oracle budget, after applying the `CHORDAL_POWERS_ORACLE_BUDGET`
/// override and the `--oracle-budget` flag (flag wins).
pub fn effective_budget(flag: Option<usize>) -> OracleBudget {
    if let Some(n) = flag {
        return OracleBudget::uniform(n);
    }
    if let Ok(value) = std::env::var(BUDGET_ENV_VAR) {
        if let Ok(n) = value.parse::<usize>() {
            return OracleBudget::uniform(n);
        }
    }
    OracleBudget::default()
}

pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: String,
}

fn fail(exit_code: i32, message: String) -> CommandOutput {
    CommandOutput { exit_code, stdout: message }
}

fn read_graph(path: &Path, format: Option<Format>) -> Result<(Graph, Format), String> {
    let format = format.unwrap_or_else(|| Format::from_extension(&path.to_string_lossy()));
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let g = formats::parse(&text, format).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((g, format))
}

// -- analyze ---------------------------------------------------------------

pub fn cmd_analyze(
    path: &Path,
    format: Option<Format>,
    k_max: Option<usize>,
    budget_flag: Option<usize>,
    json: bool,
) -> CommandOutput {
    let budget = effective_budget(budget_flag);
    if path.is_dir() {
        return analyze_batch(path, format, k_max, &budget, json);
    }
    match read_graph(path, format) {
        Ok((g, fmt)) => {
            let report = report::analyze(&g, fmt, k_max, &budget);
            let body = if json { report.to_json() } else { report.to_text() };
            CommandOutput { exit_code: EXIT_OK, stdout: body }
        }
        Err(message) => fail(EXIT_INPUT, message),
    }
}

/// One report per file in the directory, built by parallel workers; output
/// order and the roll-up summary are deterministic. Per-file failures are
/// reported but do not abort the batch.
fn analyze_batch(
    dir: &Path,
    format: Option<Format>,
    k_max: Option<usize>,
    budget: &OracleBudget,
    json: bool,
) -> CommandOutput {
    let mut files: Vec<std::path::PathBuf> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect(),
        Err(e) => return fail(EXIT_INPUT, format!("{}: {e}", dir.display())),
    };
    files.sort();
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(files.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<Result<String, String>>>> =
        files.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= files.len() {
                    break;
                }
                let outcome = read_graph(&files[i], format).map(|(g, fmt)| {
                    let report = report::analyze(&g, fmt, k_max, budget);
                    if json {
                        report.to_json()
                    } else {
                        report.to_text()
                    }
                });
                *results[i].lock().unwrap() = Some(outcome);
            });
        }
    });
    let mut out = String::new();
    let mut failures = 0;
    for (file, cell) in files.iter().zip(&results) {
        out.push_str(&format!("== {}\n", file.display()));
        match cell.lock().unwrap().take().unwrap() {
            Ok(body) => out.push_str(&body),
            Err(message) => {
                failures += 1;
                out.push_str(&format!("error: {message}\n"));
            }
        }
    }
    out.push_str(&format!("analyzed {} files, {} failed\n", files.len(), failures));
    CommandOutput { exit_code: if failures == 0 { EXIT_OK } else { EXIT_INPUT }, stdout: out }
}

// -- detect ---------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Structure {
    Flower,
    Sunflower,
    Sprout,
    LineSquareChordal,
    LineSquarePerfectNecessary,
}

impl Structure {
    pub fn from_name(name: &str) -> Option<Structure> {
        match name {
            "flower" => Some(Structure::Flower),
            "sunflower" => Some(Structure::Sunflower),
            "sprout" => Some(Structure::Sprout),
            "line-square-chordal" => Some(Structure::LineSquareChordal),
            "line-square-perfect-necessary" => Some(Structure::LineSquarePerfectNecessary),
            _ => None,
        }
    }
}

pub fn cmd_detect(
    path: &Path,
    format: Option<Format>,
    structure: Structure,
    size: usize,
    all: bool,
    budget_flag: Option<usize>,
) -> CommandOutput {
    let budget = effective_budget(budget_flag);
    let (g, _) = match read_graph(path, format) {
        Ok(pair) => pair,
        Err(message) => return fail(EXIT_INPUT, message),
    };
    #[derive(serde::Serialize)]
    struct CheckedFlower {
        witness: structures::FlowerWitness,
        validation: structures::FlowerValidation,
        withered: bool,
    }
    #[derive(serde::Serialize)]
    struct CheckedSprout {
        witness: structures::SproutWitness,
        validation: structures::SproutValidation,
    }
    let checked_flower = |f: structures::FlowerWitness| CheckedFlower {
        validation: structures::validate_flower(&g, &f),
        withered: structures::is_withered(&g, &f).unwrap_or(false),
        witness: f,
    };
    let json = |value: &dyn erased::Json| value.to_json();
    let outcome: Result<Option<String>, GraphError> = match structure {
        Structure::Flower => {
            if all {
                structures::find_all_flowers(&g, size).map(|fs| {
                    if fs.is_empty() {
                        None
                    } else {
                        let checked: Vec<CheckedFlower> = fs.into_iter().map(checked_flower).collect();
                        Some(serde_json::to_string_pretty(&checked).unwrap())
                    }
                })
            } else {
                structures::find_flower(&g, size).map(|f| f.map(|f| json(&checked_flower(f))))
            }
        }
        Structure::Sunflower => structures::find_sunflower(&g, size).map(|s| s.map(|s| json(&s))),
        Structure::Sprout => structures::find_fertile_sprout(&g, size).map(|s| {
            s.map(|witness| {
                let validation = structures::validate_sprout(&g, &witness);
                json(&CheckedSprout { witness, validation })
            })
        }),
        Structure::LineSquareChordal => {
            let verdict = structures::line_square_chordal_verdict(&g);
            Ok(Some(json(&verdict)))
        }
        Structure::LineSquarePerfectNecessary => {
            let verdict = structures::line_square_perfection_necessary(&g, &budget);
            Ok(Some(json(&verdict)))
        }
    };
    match outcome {
        Ok(Some(body)) => CommandOutput { exit_code: EXIT_OK, stdout: body },
        Ok(None) => CommandOutput { exit_code: EXIT_OK, stdout: "none".to_string() },
        Err(GraphError::BudgetExceeded { n, budget }) => {
            fail(EXIT_BUDGET, format!("graph on {n} vertices exceeds budget {budget}"))
        }
        Err(e) => fail(EXIT_INPUT, e.to_string()),
    }
}

mod erased {
    pub trait Json {
        fn to_json(&self) -> String;
    }
    impl<T: serde::Serialize> Json for T {
        fn to_json(&self) -> String {
            serde_json::to_string_pretty(self).unwrap()
        }
    }
}

// -- oracle-check -----------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Chordality,
    Flowers,
    LineSquare,
    StrongIndex,
}

impl Suite {
    pub fn from_name(name: &str) -> Option<Suite> {
        match name {
            "chordality" => Some(Suite::Chordality),
            "flowers" => Some(Suite::Flowers),
            "line-square" => Some(Suite::LineSquare),
            "strong-index" => Some(Suite::StrongIndex),
            _ => None,
        }
    }
}

/// Runs one agreement suite. Deterministic for a fixed seed; the first
/// counterexample is printed in graph6 and the exit code is 1.
pub fn cmd_oracle_check(suite: Suite, n: Option<usize>, samples: Option<u64>, seed: u64) -> CommandOutput {
    match suite {
        Suite::Chordality => chordality_suite(n.unwrap_or(6), samples.unwrap_or(10_000), seed),
        Suite::Flowers => flowers_suite(n.unwrap_or(12), samples.unwrap_or(1_000), seed),
        Suite::LineSquare => line_square_suite(n.unwrap_or(6), samples.unwrap_or(1_000), seed),
        Suite::StrongIndex => strong_index_suite(n.unwrap_or(18)),
    }
}

fn counterexample(g: &Graph, what: &str) -> CommandOutput {
    fail(
        EXIT_VIOLATION,
        format!("violation: {what}\ncounterexample (graph6): {}", formats::emit_graph6(g)),
    )
}

fn chordality_suite(n: usize, samples: u64, seed: u64) -> CommandOutput {
    let budget = OracleBudget::uniform(12);
    let exhaustive_n = n.min(oracle::LABELED_HARD_CAP);
    let mut checked = 0u64;
    match oracle::enumerate_labeled_graphs(exhaustive_n, true) {
        Ok(stream) => {
            for g in stream {
                checked += 1;
                if chordal::is_chordal(&g) != oracle::is_chordal_oracle(&g, &budget).unwrap() {
                    return counterexample(&g, "chordality recognizers disagree");
                }
            }
        }
        Err(e) => return fail(EXIT_INPUT, e.to_string()),
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let g = rng::random_graph(9, 0.4, &mut rng);
        checked += 1;
        if chordal::is_chordal(&g) != oracle::is_chordal_oracle(&g, &budget).unwrap() {
            return counterexample(&g, "chordality recognizers disagree");
        }
    }
    CommandOutput {
        exit_code: EXIT_OK,
        stdout: format!("chordality: pass ({checked} graphs, exhaustive n={exhaustive_n} plus {samples} random)"),
    }
}

fn flowers_suite(max_n: usize, samples: u64, seed: u64) -> CommandOutput {
    let budget = OracleBudget::uniform(max_n.max(12));
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let n = 4 + (rng.next_u64() as usize) % (max_n.saturating_sub(3));
        let g = rng::random_graph(n, 0.35, &mut rng);
        let square = graph_power(&g, 2).unwrap();
        for len in 4..=n.min(8) {
            let cycles = match oracle::enumerate_induced_cycles(&square, len, len, &budget) {
                Ok(c) => c,
                Err(e) => return fail(EXIT_BUDGET, e.to_string()),
            };
            let flower = structures::find_flower(&g, len).unwrap();
            if cycles.is_empty() != flower.is_none() {
                return counterexample(&g, &format!("flower search disagrees with the square oracle at size {len}"));
            }
            if let Some(f) = flower {
                if !structures::validate_flower(&g, &f).valid
                    || structures::is_withered(&g, &f).unwrap()
                {
                    return counterexample(&g, "flower witness failed validation");
                }
            }
        }
    }
    CommandOutput { exit_code: EXIT_OK, stdout: format!("flowers: pass ({samples} graphs, n <= {max_n})") }
}

fn line_square_suite(n: usize, samples: u64, seed: u64) -> CommandOutput {
    let exhaustive_n = n.min(oracle::LABELED_HARD_CAP);
    let mut checked = 0u64;
    match oracle::enumerate_labeled_graphs(exhaustive_n, true) {
        Ok(stream) => {
            for g in stream {
                checked += 1;
                let outcome = std::panic::catch_unwind(|| structures::line_square_chordal_verdict(&g));
                if outcome.is_err() {
                    return counterexample(&g, "catalog and direct verdicts disagree");
                }
            }
        }
        Err(e) => return fail(EXIT_INPUT, e.to_string()),
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let p = 0.15 + 0.55 * (rng.below(1000) as f64 / 1000.0);
        let g = rng::random_graph(9, p, &mut rng);
        checked += 1;
        let outcome = std::panic::catch_unwind(|| structures::line_square_chordal_verdict(&g));
        if outcome.is_err() {
            return counterexample(&g, "catalog and direct verdicts disagree");
        }
    }
    CommandOutput {
        exit_code: EXIT_OK,
        stdout: format!("line-square: pass ({checked} graphs, exhaustive n={exhaustive_n} plus {samples} random)"),
    }
}

fn strong_index_suite(max_n: usize) -> CommandOutput {
    let budget = OracleBudget::uniform(max_n.max(18));
    for n in 3..=max_n.max(3) {
        let g = Graph::cycle(n);
        let pipeline = match strong::strong_chromatic_index(&g, &budget) {
            Ok(r) => r,
            Err(e) => return fail(EXIT_BUDGET, e.to_string()),
        };
        let formula = strong::cycle_strong_index(n).unwrap();
        if !pipeline.exact() || pipeline.color_count != formula {
            return counterexample(&g, &format!("strong index of the {n}-cycle: pipeline {} vs formula {formula}", pipeline.color_count));
        }
    }
    CommandOutput { exit_code: EXIT_OK, stdout: format!("strong-index: pass (cycles 3..={max_n})") }
}
