//! Executable statements of the equality results for graph families.
//!
//! Each [`TheoremTag`] names one claim of the form "hypothesis ⟹ (or ⟺)
//! `I^(s) = I^s`". [`theorem_predicate`] checks the structural precondition,
//! evaluates both sides at finitely many powers and, when the hypothesis
//! fails, tests the explicit monomial that the converse argument predicts to
//! lie in `I^(s)` but not in `I^s`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cover::{has_minimal_strong_property, is_total_cover_strong};
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::monomial::Monomial;
use crate::symbolic::{compare_powers_detailed, EqualityReport, Limits, PowerComparison};
use crate::varset::VarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremTag {
    /// Odd cycle, any orientation: `V(D)` strong ⟺ equality for all `s ≥ 2`.
    OddCycle,
    /// Two odd cycles sharing a vertex: same biconditional.
    CliqueSum,
    /// Complete multipartite graph with at least three parts: same biconditional.
    Multipartite,
    /// Even cycle: `V(D)` strong or minimal-strong ⟹ equality for all `s ≥ 2`.
    EvenCycle,
    /// Naturally oriented `C_n`, `n ∉ {3, 4, 6}`: all weights non-trivial ⟺ `I^(2) = I^2`.
    NaturalCycle,
    /// Naturally oriented `C_3`: all weights non-trivial ⟺ `I^(2) = I^2`.
    C3,
    /// Naturally oriented `C_6`: all weights non-trivial ⟺ `I^(3) = I^3`.
    C6Cube,
    /// Naturally oriented `C_n`, `n ≠ 4`: all weights non-trivial ⟺ equality at `s = 2, 3`.
    NaturalCycleLowPowers,
    /// Star `S_n`, `n ≥ 2`, any orientation and weights: equality for all `s ≥ 2`.
    Star,
    /// Naturally oriented path of length at least 3 whose non-leaves carry
    /// non-trivial weight: equality for all `s ≥ 2`.
    Path,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 10] = [
        TheoremTag::OddCycle,
        TheoremTag::CliqueSum,
        TheoremTag::Multipartite,
        TheoremTag::EvenCycle,
        TheoremTag::NaturalCycle,
        TheoremTag::C3,
        TheoremTag::C6Cube,
        TheoremTag::NaturalCycleLowPowers,
        TheoremTag::Star,
        TheoremTag::Path,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremTag::OddCycle => "odd-cycle",
            TheoremTag::CliqueSum => "clique-sum",
            TheoremTag::Multipartite => "multipartite",
            TheoremTag::EvenCycle => "even-cycle",
            TheoremTag::NaturalCycle => "natural-cycle",
            TheoremTag::C3 => "c3",
            TheoremTag::C6Cube => "c6-cube",
            TheoremTag::NaturalCycleLowPowers => "natural-cycle-low",
            TheoremTag::Star => "star",
            TheoremTag::Path => "path",
        }
    }

    /// True when the claim is an equivalence rather than an implication.
    pub fn is_biconditional(self) -> bool {
        !matches!(
            self,
            TheoremTag::EvenCycle | TheoremTag::Star | TheoremTag::Path
        )
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown theorem tag".into(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Satisfied,
    Violated,
    /// The hypothesis fails, equality held at every tested power, and the
    /// power at which inequality is predicted was not tested.
    Inconclusive,
}

/// Membership test of a predicted witness `g ∈ I^(s) \ I^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub s: u32,
    pub monomial: Monomial,
    pub in_symbolic: bool,
    pub in_ordinary: bool,
}

impl WitnessCheck {
    pub fn confirmed(&self) -> bool {
        self.in_symbolic && !self.in_ordinary
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub tag: TheoremTag,
    pub hypothesis: bool,
    /// Powers at which the conclusion was evaluated.
    pub tested_powers: Vec<u32>,
    pub reports: Vec<EqualityReport>,
    /// Equality held at every tested power.
    pub conclusion: bool,
    pub biconditional: bool,
    /// Power at which a failing hypothesis is predicted to break equality.
    pub converse_power: Option<u32>,
    pub witness_check: Option<WitnessCheck>,
    pub methods_agree: bool,
    pub status: Status,
}

fn precondition(family: &'static str, clause: impl Into<String>) -> Error {
    Error::FamilyPrecondition {
        family,
        clause: clause.into(),
    }
}

fn all_weighted(graph: &WeightedOrientedGraph) -> bool {
    graph.v_plus() == graph.vertices()
}

fn product_of_powers(graph: &WeightedOrientedGraph, set: VarSet) -> Result<Monomial> {
    let exps: Vec<u32> = (0..graph.vertex_count())
        .map(|v| if set.contains(v) { graph.weight(v) } else { 0 })
        .collect();
    graph.universe().monomial(&exps)
}

/// Two odd cycles glued at one vertex: returns the shared vertex and the
/// halves `(n, m)` with `n ≤ m` of the cycle lengths `2n+1`, `2m+1`.
pub fn clique_sum_shape(graph: &WeightedOrientedGraph) -> Option<(usize, usize, usize)> {
    let n = graph.vertex_count();
    if n < 5 || !graph.is_connected() || graph.edges().len() != n + 1 {
        return None;
    }
    let degrees: Vec<usize> = (0..n).map(|v| graph.nbrs_of(v).len()).collect();
    let hubs: Vec<usize> = (0..n).filter(|&v| degrees[v] == 4).collect();
    if hubs.len() != 1 || (0..n).any(|v| v != hubs[0] && degrees[v] != 2) {
        return None;
    }
    let hub = hubs[0];
    let parts = graph.components(graph.vertices().difference(VarSet::singleton(hub)));
    if parts.len() != 2 || parts.iter().any(|p| p.len() % 2 != 0) {
        return None;
    }
    let (a, b) = (parts[0].len() / 2, parts[1].len() / 2);
    Some((hub, a.min(b), a.max(b)))
}

/// Parts of a complete multipartite graph: maximal sets of pairwise
/// non-adjacent vertices, provided every cross pair is an edge.
pub fn multipartite_parts(graph: &WeightedOrientedGraph) -> Option<Vec<VarSet>> {
    let all = graph.vertices();
    let mut parts: Vec<VarSet> = Vec::new();
    for v in 0..graph.vertex_count() {
        let part = all.difference(graph.nbrs_of(v));
        if !parts.contains(&part) {
            parts.push(part);
        }
    }
    let disjoint = parts
        .iter()
        .enumerate()
        .all(|(i, p)| parts[i + 1..].iter().all(|q| p.intersection(*q).is_empty()));
    let complete = parts.iter().all(|p| {
        p.iter()
            .all(|v| graph.nbrs_of(v) == all.difference(*p))
    });
    (disjoint && complete).then_some(parts)
}

fn is_star(graph: &WeightedOrientedGraph) -> bool {
    let n = graph.vertex_count();
    n >= 3
        && graph.edges().len() == n - 1
        && (0..n).any(|v| graph.nbrs_of(v).len() == n - 1)
}

struct Evaluator<'a> {
    graph: &'a WeightedOrientedGraph,
    limits: &'a Limits,
    cache: BTreeMap<u32, PowerComparison>,
}

impl<'a> Evaluator<'a> {
    fn at(&mut self, s: u32) -> Result<&PowerComparison> {
        if !self.cache.contains_key(&s) {
            let cmp = compare_powers_detailed(self.graph, s, self.limits)?;
            self.cache.insert(s, cmp);
        }
        Ok(&self.cache[&s])
    }

    fn check(&mut self, s: u32, monomial: Monomial) -> Result<WitnessCheck> {
        let cmp = self.at(s)?;
        Ok(WitnessCheck {
            s,
            in_symbolic: cmp.symbolic.contains(&monomial)?,
            in_ordinary: cmp.ordinary.contains(&monomial)?,
            monomial,
        })
    }
}

/// Witness for a naturally oriented cycle: with `x_i` weighted and its
/// successor unweighted, `x_{i-1}^w x_i^w x_{i+1}` (times `x_{i+4}^w` when
/// `n ≥ 7`) at `s = 2`, or `x_{i-1}^w x_i^w x_{i+1}^2 x_{i+2}^w` at `s = 3`
/// on `C_6`.
fn natural_cycle_witness(graph: &WeightedOrientedGraph, order: &[usize]) -> Option<(u32, Monomial)> {
    let n = order.len();
    let at = |k: usize| order[k % n];
    let i = (0..n).find(|&k| graph.weight(at(k)) >= 2 && graph.weight(at(k + 1)) == 1)?;
    let mut exps = vec![0u32; n];
    let (prev, cur, next) = (at(i + n - 1), at(i), at(i + 1));
    exps[prev] = graph.weight(prev);
    exps[cur] = graph.weight(cur);
    exps[next] = 1;
    let s = match n {
        3 => return Some((2, product_of_powers(graph, graph.vertices()).ok()?)),
        6 => {
            exps[next] = 2;
            exps[at(i + 2)] = graph.weight(at(i + 2));
            3
        }
        5 => 2,
        _ => {
            exps[at(i + 4)] = graph.weight(at(i + 4));
            2
        }
    };
    Some((s, graph.universe().monomial(&exps).ok()?))
}

/// Evaluates the claim named by `tag` on `graph`.
///
/// Claims "for all `s ≥ 2`" are tested at `2..=s_max`; claims about specific
/// powers are tested at exactly those powers.
pub fn theorem_predicate(
    graph: &WeightedOrientedGraph,
    tag: TheoremTag,
    s_max: u32,
    limits: &Limits,
) -> Result<TheoremVerdict> {
    if s_max < 2 {
        return Err(Error::InvalidPowerRange(format!(
            "s_max must be at least 2, got {s_max}"
        )));
    }
    let name = tag.name();
    let all_powers: Vec<u32> = (2..=s_max).collect();
    let natural_cycle = |allowed: &dyn Fn(usize) -> bool, what: &str| -> Result<Vec<usize>> {
        if !graph.is_naturally_oriented_cycle() {
            return Err(precondition(name, "graph is not a naturally oriented cycle"));
        }
        if !allowed(graph.vertex_count()) {
            return Err(precondition(name, format!("cycle length must be {what}")));
        }
        if graph.v_plus().is_empty() {
            return Err(precondition(name, "at least one vertex must have weight >= 2"));
        }
        Ok(graph.cycle_order().expect("cycle"))
    };

    let mut ev = Evaluator {
        graph,
        limits,
        cache: BTreeMap::new(),
    };
    // (hypothesis, tested powers, converse power, predicted witness)
    type Witness = Option<Result<WitnessCheck>>;
    let (hypothesis, tested, converse_power, witness): (bool, Vec<u32>, Option<u32>, Witness) =
        match tag {
            TheoremTag::OddCycle => {
                let order = graph
                    .cycle_order()
                    .filter(|o| o.len() % 2 == 1)
                    .ok_or_else(|| precondition(name, "underlying graph is not an odd cycle"))?;
                let hyp = is_total_cover_strong(graph);
                let s = (order.len() as u32 - 1) / 2 + 1;
                let w = (!hyp && s <= s_max).then(|| {
                    let g = product_of_powers(graph, graph.vertices())?;
                    ev.check(s, g)
                });
                (hyp, all_powers, Some(s), w)
            }
            TheoremTag::CliqueSum => {
                let (_, n, m) = clique_sum_shape(graph).ok_or_else(|| {
                    precondition(name, "underlying graph is not two odd cycles sharing one vertex")
                })?;
                let hyp = is_total_cover_strong(graph);
                let s = (n + m + 1) as u32;
                let w = (!hyp && s <= s_max).then(|| {
                    let g = product_of_powers(graph, graph.vertices())?;
                    ev.check(s, g)
                });
                (hyp, all_powers, Some(s), w)
            }
            TheoremTag::Multipartite => {
                let parts = multipartite_parts(graph)
                    .filter(|p| p.len() >= 3)
                    .ok_or_else(|| {
                        precondition(name, "graph is not complete multipartite with >= 3 parts")
                    })?;
                let hyp = is_total_cover_strong(graph);
                let w = (!hyp).then(|| multipartite_witness(&mut ev, &parts));
                (hyp, all_powers, Some(2), w)
            }
            TheoremTag::EvenCycle => {
                graph
                    .cycle_order()
                    .filter(|o| o.len() % 2 == 0)
                    .ok_or_else(|| precondition(name, "underlying graph is not an even cycle"))?;
                let hyp = is_total_cover_strong(graph)
                    || has_minimal_strong_property(graph, limits.max_vertices)?;
                (hyp, all_powers, None, None)
            }
            TheoremTag::NaturalCycle | TheoremTag::C3 | TheoremTag::C6Cube => {
                let order = match tag {
                    TheoremTag::NaturalCycle => {
                        natural_cycle(&|n| !matches!(n, 3 | 4 | 6), "other than 3, 4 and 6")?
                    }
                    TheoremTag::C3 => natural_cycle(&|n| n == 3, "3")?,
                    _ => natural_cycle(&|n| n == 6, "6")?,
                };
                let s = if tag == TheoremTag::C6Cube { 3 } else { 2 };
                let hyp = all_weighted(graph);
                let w = (!hyp).then(|| {
                    let (ws, g) = natural_cycle_witness(graph, &order).expect("mixed weights");
                    ev.check(ws, g)
                });
                (hyp, vec![s], Some(s), w)
            }
            TheoremTag::NaturalCycleLowPowers => {
                let order = natural_cycle(&|n| n != 4, "other than 4")?;
                let hyp = all_weighted(graph);
                let w = (!hyp).then(|| {
                    let (ws, g) = natural_cycle_witness(graph, &order).expect("mixed weights");
                    ev.check(ws, g)
                });
                (hyp, vec![2, 3], Some(3), w)
            }
            TheoremTag::Star => {
                if !is_star(graph) {
                    return Err(precondition(name, "underlying graph is not a star with >= 2 leaves"));
                }
                (true, all_powers, None, None)
            }
            TheoremTag::Path => {
                let order = graph
                    .natural_path_order()
                    .ok_or_else(|| precondition(name, "graph is not a naturally oriented path"))?;
                if order.len() < 4 {
                    return Err(precondition(name, "path length must be at least 3"));
                }
                let hyp = order[1..order.len() - 1]
                    .iter()
                    .all(|&v| graph.weight(v) >= 2);
                (hyp, all_powers, None, None)
            }
        };
    let witness_check = witness.transpose()?;

    let mut reports = Vec::with_capacity(tested.len());
    for &s in &tested {
        reports.push(ev.at(s)?.report.clone());
    }
    let conclusion = reports.iter().all(|r| r.equal);
    let methods_agree = ev.cache.values().all(|c| c.report.methods_agree);
    let biconditional = tag.is_biconditional();
    let max_tested = tested.iter().copied().max().unwrap_or(0);

    let status = if !methods_agree
        || (hypothesis && !conclusion)
        || witness_check.as_ref().is_some_and(|w| !w.confirmed())
    {
        Status::Violated
    } else if biconditional && !hypothesis && conclusion {
        match converse_power {
            Some(p) if p > max_tested => Status::Inconclusive,
            _ => Status::Violated,
        }
    } else {
        Status::Satisfied
    };

    Ok(TheoremVerdict {
        tag,
        hypothesis,
        tested_powers: tested,
        reports,
        conclusion,
        biconditional,
        converse_power,
        witness_check,
        methods_agree,
        status,
    })
}

/// `x^w y^w z^w` for three vertices from distinct parts, at `s = 2`. The
/// argument picks the triple up to relabelling, so every triple is tried and
/// the first confirmed one is kept.
fn multipartite_witness(ev: &mut Evaluator<'_>, parts: &[VarSet]) -> Result<WitnessCheck> {
    let graph = ev.graph;
    let mut first = None;
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for c in b + 1..parts.len() {
                for x in parts[a].iter() {
                    for y in parts[b].iter() {
                        for z in parts[c].iter() {
                            let set: VarSet = [x, y, z].into_iter().collect();
                            let check = ev.check(2, product_of_powers(graph, set)?)?;
                            if check.confirmed() {
                                return Ok(check);
                            }
                            first.get_or_insert(check);
                        }
                    }
                }
            }
        }
    }
    Ok(first.expect("at least three nonempty parts"))
}
