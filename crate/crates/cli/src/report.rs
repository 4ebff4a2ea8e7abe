//! JSON shapes emitted by the command line. Text output is rendered from
//! these same values.

use serde::{Deserialize, Serialize};
use wopow_core::{
    ClampCheck, CoverPartition, EqualityReport, MonomialIdeal, PhiCheck, StrongCoverCensus,
    TheoremVerdict, VarSet, WeightedOrientedGraph, WitnessCheck,
};

pub fn names(graph: &WeightedOrientedGraph, set: VarSet) -> Vec<String> {
    set.iter().map(|v| graph.name(v).to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeIdealReport {
    pub variables: Vec<String>,
    pub ideal: String,
    pub generators: Vec<String>,
    /// Sources whose input weight was reset to 1.
    pub normalized_sources: Vec<String>,
}

impl EdgeIdealReport {
    pub fn new(graph: &WeightedOrientedGraph) -> Self {
        let ideal = graph.edge_ideal();
        EdgeIdealReport {
            variables: graph.universe().names().to_vec(),
            ideal: ideal.to_text(),
            generators: ideal.generator_strings(),
            normalized_sources: names(graph, graph.normalized_sources()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub cover: Vec<String>,
    pub l1: Vec<String>,
    pub l2: Vec<String>,
    pub l3: Vec<String>,
    pub minimal: bool,
    pub strong: bool,
    pub ideal: String,
}

impl CoverReport {
    pub fn new(graph: &WeightedOrientedGraph, p: &CoverPartition) -> Self {
        CoverReport {
            cover: names(graph, p.cover),
            l1: names(graph, p.l1),
            l2: names(graph, p.l2),
            l3: names(graph, p.l3),
            minimal: p.is_minimal,
            strong: p.is_strong,
            ideal: wopow_core::irreducible_ideal(graph, p).to_text(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoversReport {
    pub covers: Vec<CoverReport>,
    /// Maximal strong covers, each with the strong covers it contains.
    pub maximal: Vec<MaximalReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalReport {
    pub cover: Vec<String>,
    pub contains: Vec<Vec<String>>,
}

impl CoversReport {
    pub fn new(
        graph: &WeightedOrientedGraph,
        census: &StrongCoverCensus,
        shown: &[CoverPartition],
    ) -> Self {
        let set_names = |i: usize| names(graph, census.strong_covers[i].cover);
        CoversReport {
            covers: shown.iter().map(|p| CoverReport::new(graph, p)).collect(),
            maximal: census
                .maximal_groups
                .iter()
                .map(|g| MaximalReport {
                    cover: set_names(g.maximal),
                    contains: g.members.iter().map(|&j| set_names(j)).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub edge_ideal: String,
    pub components: Vec<ComponentReport>,
    /// The intersection of the components was checked against the edge ideal.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub cover: Vec<String>,
    pub ideal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicReport {
    pub s: u32,
    pub method: String,
    pub count: usize,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SymbolicReport {
    pub fn new(s: u32, method: &str, ideal: &MonomialIdeal) -> Self {
        SymbolicReport {
            s,
            method: method.to_string(),
            count: ideal.len(),
            generators: ideal.generator_strings(),
            methods_agree: None,
            elapsed_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub s: u32,
    pub equal: bool,
    pub ordinary_gens: usize,
    pub symbolic_gens: usize,
    pub witness: Option<String>,
    pub methods_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CompareReport {
    pub fn new(graph: &WeightedOrientedGraph, r: &EqualityReport) -> Self {
        CompareReport {
            s: r.s,
            equal: r.equal,
            ordinary_gens: r.ordinary_gens,
            symbolic_gens: r.symbolic_gens,
            witness: r
                .witness
                .as_ref()
                .map(|w| graph.universe().format_monomial(w)),
            methods_agree: r.methods_agree,
            elapsed_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiReport {
    pub s: u32,
    pub reset: Vec<String>,
    pub symbolic_commutes: bool,
    pub ordinary_commutes: bool,
    pub holds: bool,
}

impl PhiReport {
    pub fn new(graph: &WeightedOrientedGraph, s: u32, c: &PhiCheck) -> Self {
        PhiReport {
            s,
            reset: names(graph, c.reset),
            symbolic_commutes: c.symbolic_commutes,
            ordinary_commutes: c.ordinary_commutes,
            holds: c.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClampReport {
    pub s: u32,
    pub clamped_weights: Vec<u32>,
    pub strong_covers_match: bool,
    pub components_correspond: bool,
    pub original_methods_agree: bool,
    pub clamped_methods_agree: bool,
    pub holds: bool,
}

impl ClampReport {
    pub fn new(graph: &WeightedOrientedGraph, s: u32, c: &ClampCheck) -> Self {
        ClampReport {
            s,
            clamped_weights: graph.clamp_weights_to_two().weights().to_vec(),
            strong_covers_match: c.strong_covers_match,
            components_correspond: c.components_correspond,
            original_methods_agree: c.original_methods_agree,
            clamped_methods_agree: c.clamped_methods_agree,
            holds: c.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub s: u32,
    pub monomial: String,
    pub in_symbolic: bool,
    pub in_ordinary: bool,
}

impl WitnessReport {
    pub fn new(graph: &WeightedOrientedGraph, w: &WitnessCheck) -> Self {
        WitnessReport {
            s: w.s,
            monomial: graph.universe().format_monomial(&w.monomial),
            in_symbolic: w.in_symbolic,
            in_ordinary: w.in_ordinary,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub theorem: String,
    pub status: String,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub biconditional: bool,
    pub tested_powers: Vec<u32>,
    pub converse_power: Option<u32>,
    pub powers: Vec<CompareReport>,
    pub witness_check: Option<WitnessReport>,
    pub methods_agree: bool,
}

pub fn status_name(status: wopow_core::Status) -> &'static str {
    match status {
        wopow_core::Status::Satisfied => "satisfied",
        wopow_core::Status::Violated => "violated",
        wopow_core::Status::Inconclusive => "inconclusive",
    }
}

impl VerdictReport {
    pub fn new(graph: &WeightedOrientedGraph, v: &TheoremVerdict) -> Self {
        VerdictReport {
            theorem: v.tag.name().to_string(),
            status: status_name(v.status).to_string(),
            hypothesis: v.hypothesis,
            conclusion: v.conclusion,
            biconditional: v.biconditional,
            tested_powers: v.tested_powers.clone(),
            converse_power: v.converse_power,
            powers: v.reports.iter().map(|r| CompareReport::new(graph, r)).collect(),
            witness_check: v.witness_check.as_ref().map(|w| WitnessReport::new(graph, w)),
            methods_agree: v.methods_agree,
        }
    }
}
