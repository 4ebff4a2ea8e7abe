//! Theorem sweeps over graph families and the random oracle suite.
//!
//! A sweep first lists its instances sequentially from the seed, then
//! evaluates them on a rayon pool. Results are collected in instance order,
//! so the report does not depend on the thread count.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wopow_core::{
    clamp_structure_check, compare_powers_detailed, enumerate_covers, enumerate_strong_covers,
    irreducible_decomposition, irreducible_ideal, make_clique_sum, make_complete_multipartite,
    make_cycle, make_path, make_star, phi_commutation_check, random_graph, theorem_predicate,
    Error, GraphJson, Limits, MonomialIdeal, Orientation, RandomGraphParams, Status, TheoremTag,
    WeightedOrientedGraph,
};

use crate::report::{status_name, VerdictReport};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepFamily {
    OddCycle,
    CliqueSum,
    Multipartite,
    NaturalCycle,
    EvenCycle,
    Star,
    Path,
    Oracle,
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::OddCycle => "odd-cycle",
            SweepFamily::CliqueSum => "clique-sum",
            SweepFamily::Multipartite => "multipartite",
            SweepFamily::NaturalCycle => "natural-cycle",
            SweepFamily::EvenCycle => "even-cycle",
            SweepFamily::Star => "star",
            SweepFamily::Path => "path",
            SweepFamily::Oracle => "oracle",
        }
    }

    /// Default largest size parameter.
    pub fn default_n_max(self) -> usize {
        match self {
            SweepFamily::OddCycle => 5,
            SweepFamily::CliqueSum => 1,
            SweepFamily::Multipartite => 4,
            SweepFamily::NaturalCycle => 7,
            SweepFamily::EvenCycle => 6,
            SweepFamily::Star => 4,
            SweepFamily::Path => 5,
            SweepFamily::Oracle => 7,
        }
    }

    /// Default number of seeded samples per size.
    pub fn default_samples(self) -> usize {
        match self {
            SweepFamily::OddCycle => 10,
            SweepFamily::Multipartite => 8,
            SweepFamily::EvenCycle => 10,
            SweepFamily::Star => 25,
            SweepFamily::Oracle => 100,
            SweepFamily::CliqueSum | SweepFamily::NaturalCycle | SweepFamily::Path => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub family: SweepFamily,
    pub seed: u64,
    pub s_max: u32,
    /// Largest size parameter: cycle or path length, star leaves, clique-sum
    /// half-length, total multipartite vertices, or random-graph vertices.
    pub n_max: usize,
    /// Seeded samples per size, on top of any exhaustive enumeration.
    pub samples: usize,
    /// Multipartite part-size lists.
    pub parts: Vec<Vec<usize>>,
    #[serde(skip)]
    pub threads: Option<usize>,
    #[serde(skip)]
    pub limits: Limits,
}

impl SweepSpec {
    pub fn new(family: SweepFamily) -> Self {
        SweepSpec {
            family,
            seed: 0,
            s_max: 3,
            n_max: family.default_n_max(),
            samples: family.default_samples(),
            parts: vec![vec![1, 1, 1], vec![2, 1, 1]],
            threads: None,
            limits: Limits::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub index: usize,
    pub label: String,
    pub status: String,
    pub graph: GraphJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictReport>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub satisfied: usize,
    pub violated: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub index: usize,
    pub label: String,
    pub reason: String,
    /// Enough to replay the instance with `compare`.
    pub graph: GraphJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub sweep: String,
    pub theorem: Option<String>,
    pub seed: u64,
    pub s_max: u32,
    pub instances: Vec<InstanceReport>,
    pub counts: Counts,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counts.violated == 0
    }
}

struct Instance {
    label: String,
    graph: WeightedOrientedGraph,
}

/// Every vector in `alphabet^len`, first coordinate varying slowest.
fn patterns(alphabet: &[u32], len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                alphabet.iter().map(move |&a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

fn fmt_weights(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn built(g: wopow_core::Result<WeightedOrientedGraph>) -> Result<WeightedOrientedGraph, CliError> {
    g.map_err(|e| CliError::Usage(e.to_string()))
}

fn theorem_for(family: SweepFamily) -> Option<TheoremTag> {
    match family {
        SweepFamily::OddCycle => Some(TheoremTag::OddCycle),
        SweepFamily::CliqueSum => Some(TheoremTag::CliqueSum),
        SweepFamily::Multipartite => Some(TheoremTag::Multipartite),
        SweepFamily::NaturalCycle => Some(TheoremTag::NaturalCycleLowPowers),
        SweepFamily::EvenCycle => Some(TheoremTag::EvenCycle),
        SweepFamily::Star => Some(TheoremTag::Star),
        SweepFamily::Path => Some(TheoremTag::Path),
        SweepFamily::Oracle => None,
    }
}

fn instances(spec: &SweepSpec) -> Result<Vec<Instance>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    let natural = Orientation::Natural;
    match spec.family {
        SweepFamily::OddCycle | SweepFamily::EvenCycle => {
            let (first, kind) = match spec.family {
                SweepFamily::OddCycle => (5, "C"),
                _ => (4, "C"),
            };
            for n in (first..=spec.n_max).step_by(2) {
                for w in patterns(&[1, 2], n) {
                    out.push(Instance {
                        label: format!("{kind}{n} natural w={}", fmt_weights(&w)),
                        graph: built(make_cycle(n, &w, &natural))?,
                    });
                }
                let mut taken = 0;
                while taken < spec.samples {
                    let seed: u64 = rng.gen();
                    let w: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
                    let g = built(make_cycle(n, &w, &Orientation::Seeded(seed)))?;
                    // natural orientations are already covered exhaustively
                    if g.is_naturally_oriented_cycle() {
                        continue;
                    }
                    taken += 1;
                    out.push(Instance {
                        label: format!("{kind}{n} seeded:{seed} w={}", fmt_weights(&w)),
                        graph: g,
                    });
                }
            }
        }
        SweepFamily::CliqueSum => {
            for n in 1..=spec.n_max {
                for m in n..=spec.n_max {
                    let len = 2 * n + 1 + 2 * m;
                    for w in patterns(&[1, 2], len) {
                        out.push(Instance {
                            label: format!("K(C{},C{}) natural w={}", 2 * n + 1, 2 * m + 1, fmt_weights(&w)),
                            graph: built(make_clique_sum(n, m, &w, &natural))?,
                        });
                    }
                    for _ in 0..spec.samples {
                        let seed: u64 = rng.gen();
                        let w: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=2)).collect();
                        out.push(Instance {
                            label: format!(
                                "K(C{},C{}) seeded:{seed} w={}",
                                2 * n + 1,
                                2 * m + 1,
                                fmt_weights(&w)
                            ),
                            graph: built(make_clique_sum(n, m, &w, &Orientation::Seeded(seed)))?,
                        });
                    }
                }
            }
        }
        SweepFamily::Multipartite => {
            for parts in &spec.parts {
                let total: usize = parts.iter().sum();
                if total > spec.n_max {
                    continue;
                }
                let shape = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                for _ in 0..spec.samples {
                    let seed: u64 = rng.gen();
                    for w in patterns(&[1, 2], total) {
                        out.push(Instance {
                            label: format!("K({shape}) seeded:{seed} w={}", fmt_weights(&w)),
                            graph: built(make_complete_multipartite(
                                parts,
                                &w,
                                &Orientation::Seeded(seed),
                            ))?,
                        });
                    }
                }
            }
        }
        SweepFamily::NaturalCycle => {
            for n in 5..=spec.n_max {
                for w in patterns(&[1, 2], n) {
                    if w.iter().all(|&x| x == 1) {
                        continue;
                    }
                    out.push(Instance {
                        label: format!("C{n} natural w={}", fmt_weights(&w)),
                        graph: built(make_cycle(n, &w, &natural))?,
                    });
                }
            }
        }
        SweepFamily::Star => {
            for n in 3..=spec.n_max {
                for _ in 0..spec.samples {
                    let seed: u64 = rng.gen();
                    let w: Vec<u32> = (0..=n).map(|_| rng.gen_range(1..=3)).collect();
                    out.push(Instance {
                        label: format!("S{n} seeded:{seed} w={}", fmt_weights(&w)),
                        graph: built(make_star(n, &w, &Orientation::Seeded(seed)))?,
                    });
                }
            }
        }
        SweepFamily::Path => {
            // the first vertex is a source, so its weight is always 1
            for n in 3..=spec.n_max {
                for interior in patterns(&[2, 3], n - 1) {
                    for last in [1, 2] {
                        let mut w = vec![1];
                        w.extend(&interior);
                        w.push(last);
                        out.push(Instance {
                            label: format!("P{n} natural w={}", fmt_weights(&w)),
                            graph: built(make_path(n, &w, &natural))?,
                        });
                    }
                }
            }
        }
        SweepFamily::Oracle => {
            let params = RandomGraphParams {
                min_vertices: 2,
                max_vertices: spec.n_max,
                edge_probability: 0.5,
                max_weight: 3,
            };
            for k in 0..spec.samples {
                let g = random_graph(&params, &mut rng);
                out.push(Instance {
                    label: format!("random #{k} n={}", g.vertex_count()),
                    graph: g,
                });
            }
        }
    }
    Ok(out)
}

fn check(name: &str, passed: bool) -> Check {
    Check {
        name: name.to_string(),
        passed,
    }
}

/// The structural and algebraic identities every graph must satisfy.
pub fn oracle_checks(
    graph: &WeightedOrientedGraph,
    s_max: u32,
    limits: &Limits,
) -> wopow_core::Result<Vec<Check>> {
    let mut out = Vec::new();
    for s in 1..=s_max {
        let cmp = compare_powers_detailed(graph, s, limits)?;
        out.push(check(&format!("s={s} methods agree"), cmp.report.methods_agree));
        out.push(check(
            &format!("s={s} ordinary within symbolic"),
            cmp.ordinary.is_subset(&cmp.symbolic)?,
        ));
        if let Some(w) = &cmp.report.witness {
            out.push(check(
                &format!("s={s} witness membership"),
                cmp.symbolic.contains(w)? && !cmp.ordinary.contains(w)?,
            ));
        }
        if s == 1 {
            out.push(check(
                "s=1 recovers the edge ideal",
                cmp.symbolic.ideal_equals(&graph.edge_ideal())?,
            ));
        }
        out.push(check(
            &format!("s={s} phi commutes"),
            phi_commutation_check(graph, s, limits)?.holds(),
        ));
    }
    out.push(check(
        "decomposition identity",
        match irreducible_decomposition(graph, limits.max_vertices) {
            Ok(_) => true,
            Err(Error::DecompositionMismatch) => false,
            Err(e) => return Err(e),
        },
    ));
    let covers = enumerate_covers(graph, limits.max_vertices)?;
    out.push(check(
        "minimal covers are strong",
        covers.iter().all(|p| !p.is_minimal || p.is_strong),
    ));
    out.push(check(
        "L3 empty iff minimal",
        covers.iter().all(|p| p.l3.is_empty() == p.is_minimal),
    ));
    let census = enumerate_strong_covers(graph, limits.max_vertices)?;
    let mut radicals = true;
    for p in &census.strong_covers {
        let prime = MonomialIdeal::prime(graph.universe().clone(), p.cover)?;
        radicals &= irreducible_ideal(graph, p).radical() == prime;
    }
    out.push(check("radical of each component is its prime", radicals));
    let sets = census.cover_sets();
    let clamped = enumerate_strong_covers(&graph.clamp_weights_to_two(), limits.max_vertices)?;
    out.push(check("strong covers invariant under clamp", clamped.cover_sets() == sets));
    let (reduced, _) = graph.sink_weights_to_one();
    let reduced = enumerate_strong_covers(&reduced, limits.max_vertices)?;
    out.push(check(
        "strong covers invariant under sink reset",
        reduced.cover_sets() == sets,
    ));
    out.push(check(
        "clamp structure check",
        clamp_structure_check(graph, s_max.min(2), limits)?.holds(),
    ));
    Ok(out)
}

fn evaluate(spec: &SweepSpec, index: usize, inst: &Instance) -> Result<InstanceReport, CliError> {
    let graph_json = inst.graph.to_json();
    let mut report = InstanceReport {
        index,
        label: inst.label.clone(),
        status: String::new(),
        graph: graph_json,
        verdict: None,
        checks: Vec::new(),
        reason: None,
    };
    match theorem_for(spec.family) {
        Some(tag) => match theorem_predicate(&inst.graph, tag, spec.s_max, &spec.limits) {
            Ok(v) => {
                report.status = status_name(v.status).to_string();
                if v.status == Status::Violated {
                    report.reason = Some(violation_reason(&v));
                }
                report.verdict = Some(VerdictReport::new(&inst.graph, &v));
            }
            Err(Error::FamilyPrecondition { clause, .. }) => {
                report.status = "skipped".into();
                report.reason = Some(clause);
            }
            Err(e) => return Err(CliError::Core(e)),
        },
        None => {
            let checks = oracle_checks(&inst.graph, spec.s_max, &spec.limits)?;
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            if failed.is_empty() {
                report.status = "satisfied".into();
            } else {
                report.status = "violated".into();
                report.reason = Some(format!("failed: {}", failed.join("; ")));
            }
            report.checks = checks;
        }
    }
    Ok(report)
}

fn violation_reason(v: &wopow_core::TheoremVerdict) -> String {
    if !v.methods_agree {
        return "grouped and localized symbolic powers disagree".into();
    }
    if let Some(w) = &v.witness_check {
        if !w.confirmed() {
            return format!("predicted witness fails at s={}", w.s);
        }
    }
    if v.hypothesis {
        "hypothesis holds but equality fails".into()
    } else {
        "hypothesis fails but equality holds at every tested power".into()
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport, CliError> {
    if spec.s_max < 2 && spec.family != SweepFamily::Oracle || spec.s_max < 1 {
        return Err(CliError::Usage(format!(
            "--s-max {} is too small for the {} sweep",
            spec.s_max,
            spec.family.name()
        )));
    }
    if spec.s_max > spec.limits.max_power {
        return Err(CliError::Core(Error::PowerCapExceeded {
            s: spec.s_max,
            cap: spec.limits.max_power,
        }));
    }
    let list = instances(spec)?;
    let work = || {
        list.par_iter()
            .enumerate()
            .map(|(i, inst)| evaluate(spec, i, inst))
            .collect::<Result<Vec<_>, _>>()
    };
    let reports = match spec.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {t} threads: {e}")))?
            .install(work)?,
        None => work()?,
    };

    let mut counts = Counts {
        total: reports.len(),
        ..Counts::default()
    };
    let mut failures = Vec::new();
    for r in &reports {
        match r.status.as_str() {
            "satisfied" => counts.satisfied += 1,
            "inconclusive" => counts.inconclusive += 1,
            "skipped" => counts.skipped += 1,
            _ => {
                counts.violated += 1;
                failures.push(Failure {
                    index: r.index,
                    label: r.label.clone(),
                    reason: r.reason.clone().unwrap_or_default(),
                    graph: r.graph.clone(),
                });
            }
        }
    }
    Ok(SweepReport {
        sweep: spec.family.name().to_string(),
        theorem: theorem_for(spec.family).map(|t| t.name().to_string()),
        seed: spec.seed,
        s_max: spec.s_max,
        instances: reports,
        counts,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_enumerate_the_cube() {
        let p = patterns(&[1, 2], 3);
        assert_eq!(p.len(), 8);
        assert_eq!(p[0], vec![1, 1, 1]);
        assert_eq!(p[1], vec![1, 1, 2]);
        assert_eq!(p[7], vec![2, 2, 2]);
    }

    #[test]
    fn instance_lists_are_seed_determined() {
        let spec = SweepSpec::new(SweepFamily::Star);
        let a: Vec<String> = instances(&spec).unwrap().into_iter().map(|i| i.label).collect();
        let b: Vec<String> = instances(&spec).unwrap().into_iter().map(|i| i.label).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
    }

    #[test]
    fn odd_cycle_samples_are_not_natural() {
        let spec = SweepSpec::new(SweepFamily::OddCycle);
        let list = instances(&spec).unwrap();
        assert_eq!(list.len(), 32 + 10);
        assert!(list[32..].iter().all(|i| !i.graph.is_naturally_oriented_cycle()));
    }
}
