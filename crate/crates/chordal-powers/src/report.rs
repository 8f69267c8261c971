//! The analysis report: everything the library can say about one graph,
//! serialized with a stable, versioned JSON schema.
//!
//! Every numeric field carries an exactness tag (`exact`, `lower-bound`,
//! `upper-bound`, or `conjectured`); conjectured values are reported for
//! information and never asserted anywhere. Reports are deterministic:
//! identical input and flags produce byte-identical output.

use crate::chordal::{self, VertexOrdering};
use crate::clique_tree::{self, McctResult};
use crate::formats::Format;
use crate::graph::Graph;
use crate::oracle::OracleBudget;
use crate::powers::{self, PowerProfile};
use crate::strong::{self, StrongColoring};
use crate::structures;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueTag {
    Exact,
    LowerBound,
    UpperBound,
    Conjectured,
}

/// A number with its provenance.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct TaggedValue {
    pub value: u64,
    pub tag: ValueTag,
}

impl TaggedValue {
    pub fn exact(value: u64) -> TaggedValue {
        TaggedValue { value, tag: ValueTag::Exact }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct InputDescriptor {
    pub format: Format,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ChordalitySection {
    pub chordal: bool,
    /// A verified perfect elimination scheme when chordal.
    pub pes: Option<VertexOrdering>,
    pub maximal_clique_count: Option<usize>,
    pub clique_number: Option<TaggedValue>,
    pub chromatic_number: Option<TaggedValue>,
    pub stable_set_size: Option<TaggedValue>,
    pub fill_in_edges_added: usize,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CliqueTreeSection {
    pub bag_count: usize,
    pub width: usize,
    pub total_weight: usize,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct StrongColoringSection {
    pub two_strong_chromatic_number: Bounded,
    pub strong_chromatic_index: Bounded,
    pub max_pair_degree: Option<TaggedValue>,
    /// Conjectured ceiling for the strong chromatic index in terms of the
    /// maximum degree; informational only.
    pub conjectured_index_bound: Option<TaggedValue>,
    /// Degree-series ceiling for the 2-strong chromatic number.
    pub degree_bound_two_strong: TaggedValue,
}

/// A pair of tagged bounds; equal values with `exact` tags when known.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Bounded {
    pub lower: TaggedValue,
    pub upper: TaggedValue,
}

impl Bounded {
    fn of(coloring: &StrongColoring) -> Bounded {
        if coloring.exact() {
            Bounded {
                lower: TaggedValue::exact(coloring.color_count as u64),
                upper: TaggedValue::exact(coloring.color_count as u64),
            }
        } else {
            Bounded {
                lower: TaggedValue { value: coloring.bounds.lower as u64, tag: ValueTag::LowerBound },
                upper: TaggedValue { value: coloring.bounds.upper as u64, tag: ValueTag::UpperBound },
            }
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct StructureSection {
    /// Smallest flower size in 4..=8 with a witness, if any.
    pub flower: Option<structures::FlowerWitness>,
    /// Smallest fertile sprout size in 4..=8 with a witness, if any.
    pub sprout: Option<structures::SproutWitness>,
    pub line_square_chordal: bool,
    pub line_square_witness: Option<structures::ForbiddenStructure>,
    pub line_square_perfection_possible: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: InputDescriptor,
    pub chordality: ChordalitySection,
    pub clique_tree: Option<CliqueTreeSection>,
    pub power_profile: PowerProfile,
    pub structures: StructureSection,
    pub strong_coloring: StrongColoringSection,
}

/// Assembles the full report. Witness searches are skipped above
/// `witness_vertex_cap` vertices to keep analysis responsive on large
/// inputs; all skipped fields stay `None`.
pub fn analyze(g: &Graph, format: Format, k_max: Option<usize>, budget: &OracleBudget) -> AnalysisReport {
    let witness_vertex_cap = 40;
    let input = InputDescriptor { format, n: g.n(), m: g.m() };

    let chordality = match chordal::pes(g) {
        Ok(sigma) => {
            let cliques = chordal::maximal_cliques_chordal(g, &sigma).unwrap();
            let coloring = chordal::colors_chordal(g, &sigma).unwrap();
            let stable = chordal::gavril_stable_set(g, &sigma).unwrap();
            ChordalitySection {
                chordal: true,
                maximal_clique_count: Some(cliques.len()),
                clique_number: Some(TaggedValue::exact(cliques.max_size() as u64)),
                chromatic_number: Some(TaggedValue::exact(coloring.color_count as u64)),
                stable_set_size: Some(TaggedValue::exact(stable.stable_set.len() as u64)),
                pes: Some(sigma),
                fill_in_edges_added: 0,
            }
        }
        Err(_) => {
            let (_, added) = chordal::fill_in(g);
            ChordalitySection {
                chordal: false,
                pes: None,
                maximal_clique_count: None,
                clique_number: None,
                chromatic_number: None,
                stable_set_size: None,
                fill_in_edges_added: added.len(),
            }
        }
    };

    let tree_section = match clique_tree::mcct(g) {
        McctResult::Chordal { tree, .. } => Some(CliqueTreeSection {
            bag_count: tree.bags.len(),
            width: tree.width(),
            total_weight: tree.weight(),
        }),
        McctResult::NotChordal => None,
    };

    let power_profile = powers::power_profile(g, k_max, budget);

    let structures = if g.n() <= witness_vertex_cap {
        let mut flower = None;
        for size in 4..=8usize {
            if let Ok(Some(f)) = structures::find_flower(g, size) {
                flower = Some(f);
                break;
            }
        }
        let mut sprout = None;
        for size in 4..=8usize {
            if let Ok(Some(s)) = structures::find_fertile_sprout(g, size) {
                sprout = Some(s);
                break;
            }
        }
        let chordal_verdict = structures::line_square_chordal_verdict(g);
        let perfection = structures::line_square_perfection_necessary(g, budget);
        StructureSection {
            flower,
            sprout,
            line_square_chordal: chordal_verdict.holds,
            line_square_witness: chordal_verdict.witness,
            line_square_perfection_possible: perfection.holds,
        }
    } else {
        let lg = g.line_graph();
        let direct = chordal::is_chordal(&powers::graph_power(&lg.line_graph, 2).unwrap());
        StructureSection {
            flower: None,
            sprout: None,
            line_square_chordal: direct,
            line_square_witness: None,
            line_square_perfection_possible: structures::find_long_induced_cycle(g, 7).is_none(),
        }
    };

    let two_strong = strong::k_strong_chromatic_number(g, 2, budget).unwrap();
    let index = strong::strong_chromatic_index(g, budget).unwrap();
    let strong_coloring = StrongColoringSection {
        two_strong_chromatic_number: Bounded::of(&two_strong),
        strong_chromatic_index: Bounded::of(&index),
        max_pair_degree: (g.m() > 0).then(|| TaggedValue::exact(strong::sigma_max(g) as u64)),
        conjectured_index_bound: (g.m() > 0).then(|| TaggedValue {
            value: strong::conjectured_strong_index_bound(g.max_degree()),
            tag: ValueTag::Conjectured,
        }),
        degree_bound_two_strong: TaggedValue {
            value: powers::degree_bound(g, 2) as u64,
            tag: ValueTag::UpperBound,
        },
    };

    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input,
        chordality,
        clique_tree: tree_section,
        power_profile,
        structures,
        strong_coloring,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Newline-deterministic human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        p(&mut out, format!("input: {} vertices, {} edges ({})", self.input.n, self.input.m, self.input.format));
        p(&mut out, format!("chordal: {}", self.chordality.chordal));
        if let Some(ref sigma) = self.chordality.pes {
            p(&mut out, format!("elimination scheme: {:?}", sigma.order()));
        }
        if let (Some(w), Some(c)) = (&self.chordality.clique_number, &self.chordality.chromatic_number) {
            p(&mut out, format!("clique number: {}  chromatic number: {}", w.value, c.value));
        }
        if let Some(a) = &self.chordality.stable_set_size {
            p(&mut out, format!("stability number: {}", a.value));
        }
        if !self.chordality.chordal {
            p(&mut out, format!("fill-in heuristic added {} edges", self.chordality.fill_in_edges_added));
        }
        if let Some(t) = &self.clique_tree {
            p(&mut out, format!("clique tree: {} bags, width {}, weight {}", t.bag_count, t.width, t.total_weight));
        }
        p(&mut out, format!("diameter: {}  power of chordality: {}", self.power_profile.diameter, self.power_profile.k0));
        for row in &self.power_profile.rows {
            let fmt = |e: &powers::Estimate| {
                if e.is_exact() {
                    format!("{}", e.lower)
                } else {
                    format!("[{}, {}]", e.lower, e.upper)
                }
            };
            p(
                &mut out,
                format!(
                    "power {}: chordal={} complete={} clique={} chromatic={}",
                    row.k,
                    row.chordal,
                    row.complete,
                    fmt(&row.clique_number),
                    fmt(&row.chromatic_number)
                ),
            );
        }
        p(&mut out, format!("line-graph square chordal: {}", self.structures.line_square_chordal));
        p(
            &mut out,
            format!("line-graph square perfection possible: {}", self.structures.line_square_perfection_possible),
        );
        let fmt_bounded = |b: &Bounded| {
            if b.lower.value == b.upper.value {
                format!("{} (exact)", b.lower.value)
            } else {
                format!("[{}, {}]", b.lower.value, b.upper.value)
            }
        };
        p(&mut out, format!("2-strong chromatic number: {}", fmt_bounded(&self.strong_coloring.two_strong_chromatic_number)));
        p(&mut out, format!("strong chromatic index: {}", fmt_bounded(&self.strong_coloring.strong_chromatic_index)));
        if let Some(s) = &self.strong_coloring.max_pair_degree {
            p(&mut out, format!("max pair degree: {}", s.value));
        }
        if let Some(c) = &self.strong_coloring.conjectured_index_bound {
            p(&mut out, format!("conjectured index ceiling (informational): {}", c.value));
        }
        out
    }
}

/// DIMACS-style listing of a coloring: one `v <index> <color>` line per
/// vertex or edge.
pub fn coloring_to_dimacs(coloring: &StrongColoring) -> String {
    let mut out = String::new();
    for (i, c) in coloring.assignment.iter().enumerate() {
        out.push_str(&format!("v {i} {c}\n"));
    }
    out
}
