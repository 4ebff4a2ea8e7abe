//! Vertex covers, the `L1/L2/L3` partition and strong covers.
//!
//! For a cover `C` of `D`:
//!
//! * `L1` holds the vertices of `C` with an out-neighbour outside `C`,
//! * `L2` holds the remaining vertices with an in-neighbour outside `C`,
//! * `L3` is the rest, i.e. the vertices whose whole neighbourhood lies in `C`.
//!
//! `C` is strong when every `x` in `L3` has an in-neighbour of weight at
//! least 2 in `C \ L1`. The strong covers index the irreducible components
//! of the edge ideal.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::ideal::MonomialIdeal;
use crate::varset::VarSet;

/// Largest vertex count enumerated unless the caller raises the cap.
pub const DEFAULT_COVER_CAP: usize = 24;

/// Subsets per parallel work item.
const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverPartition {
    pub cover: VarSet,
    pub l1: VarSet,
    pub l2: VarSet,
    pub l3: VarSet,
    pub is_minimal: bool,
    pub is_strong: bool,
}

/// A maximal strong cover and every strong cover it contains, itself
/// included. Indices point into [`StrongCoverCensus::strong_covers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalGroup {
    pub maximal: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCoverCensus {
    /// Strong covers in canonical subset order.
    pub strong_covers: Vec<CoverPartition>,
    pub maximal_groups: Vec<MaximalGroup>,
}

impl StrongCoverCensus {
    pub fn maximal_covers(&self) -> impl Iterator<Item = &CoverPartition> + '_ {
        self.maximal_groups
            .iter()
            .map(|g| &self.strong_covers[g.maximal])
    }

    pub fn cover_sets(&self) -> Vec<VarSet> {
        self.strong_covers.iter().map(|p| p.cover).collect()
    }
}

fn covers_mask(graph: &WeightedOrientedGraph, c: VarSet) -> bool {
    graph
        .vertices()
        .difference(c)
        .iter()
        .all(|v| graph.nbrs_of(v).is_subset(c))
}

pub fn is_vertex_cover(graph: &WeightedOrientedGraph, c: VarSet) -> bool {
    c.is_subset(graph.vertices()) && covers_mask(graph, c)
}

fn partition_unchecked(graph: &WeightedOrientedGraph, c: VarSet) -> CoverPartition {
    let outside = graph.vertices().difference(c);
    let mut l1 = VarSet::EMPTY;
    let mut l2 = VarSet::EMPTY;
    for x in c.iter() {
        if !graph.out_of(x).intersection(outside).is_empty() {
            l1.insert(x);
        } else if !graph.in_of(x).intersection(outside).is_empty() {
            l2.insert(x);
        }
    }
    let l3 = c.difference(l1).difference(l2);
    let inner = c.difference(l1).intersection(graph.v_plus());
    let is_strong = l3
        .iter()
        .all(|x| !graph.in_of(x).intersection(inner).is_empty());
    CoverPartition {
        cover: c,
        l1,
        l2,
        l3,
        is_minimal: l3.is_empty(),
        is_strong,
    }
}

/// Splits a cover into `L1`, `L2`, `L3` and sets the minimal and strong flags.
pub fn partition_l(graph: &WeightedOrientedGraph, c: VarSet) -> Result<CoverPartition> {
    if !is_vertex_cover(graph, c) {
        return Err(Error::NotACover);
    }
    Ok(partition_unchecked(graph, c))
}

/// Strong-cover test on a precomputed partition.
pub fn is_strong(graph: &WeightedOrientedGraph, partition: &CoverPartition) -> bool {
    let inner = partition
        .cover
        .difference(partition.l1)
        .intersection(graph.v_plus());
    partition
        .l3
        .iter()
        .all(|x| !graph.in_of(x).intersection(inner).is_empty())
}

fn check_cap(graph: &WeightedOrientedGraph, cap: usize) -> Result<()> {
    let n = graph.vertex_count();
    if n > cap || n >= 64 {
        return Err(Error::CoverCapExceeded { vertices: n, cap });
    }
    Ok(())
}

fn scan(
    graph: &WeightedOrientedGraph,
    cap: usize,
    keep: impl Fn(&CoverPartition) -> bool + Sync,
) -> Result<Vec<CoverPartition>> {
    check_cap(graph, cap)?;
    let total = 1u64 << graph.vertex_count();
    let chunks = total.div_ceil(CHUNK);
    let mut found: Vec<CoverPartition> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|k| {
            let lo = k * CHUNK;
            let hi = (lo + CHUNK).min(total);
            (lo..hi).filter_map(|bits| {
                let c = VarSet::from_bits(bits);
                if !covers_mask(graph, c) {
                    return None;
                }
                let p = partition_unchecked(graph, c);
                keep(&p).then_some(p)
            })
        })
        .collect();
    found.sort_by(|a, b| a.cover.canonical_cmp(b.cover));
    Ok(found)
}

/// Every vertex cover with its partition, strong or not.
pub fn enumerate_covers(graph: &WeightedOrientedGraph, cap: usize) -> Result<Vec<CoverPartition>> {
    scan(graph, cap, |_| true)
}

pub fn enumerate_strong_covers(
    graph: &WeightedOrientedGraph,
    cap: usize,
) -> Result<StrongCoverCensus> {
    let strong_covers = scan(graph, cap, |p| p.is_strong)?;
    let sets: Vec<VarSet> = strong_covers.iter().map(|p| p.cover).collect();
    let maximal_groups = (0..sets.len())
        .filter(|&i| {
            !sets
                .iter()
                .any(|&other| other != sets[i] && sets[i].is_subset(other))
        })
        .map(|i| MaximalGroup {
            maximal: i,
            members: (0..sets.len())
                .filter(|&j| sets[j].is_subset(sets[i]))
                .collect(),
        })
        .collect();
    Ok(StrongCoverCensus {
        strong_covers,
        maximal_groups,
    })
}

/// `V(D)` is strong exactly when `N⁺(V⁺) = V`.
pub fn is_total_cover_strong(graph: &WeightedOrientedGraph) -> bool {
    graph.out_neighborhood(graph.v_plus()) == graph.vertices()
}

/// True when every strong cover is minimal.
pub fn has_minimal_strong_property(graph: &WeightedOrientedGraph, cap: usize) -> Result<bool> {
    Ok(scan(graph, cap, |p| p.is_strong && !p.is_minimal)?.is_empty())
}

/// `I_C = (L1) + (x^{w(x)} : x in L2 ∪ L3)`.
pub fn irreducible_ideal(graph: &WeightedOrientedGraph, partition: &CoverPartition) -> MonomialIdeal {
    let universe = graph.universe();
    let gens = partition
        .cover
        .iter()
        .map(|x| {
            let e = if partition.l1.contains(x) { 1 } else { graph.weight(x) };
            universe.var(x, e).expect("weights are below the exponent cap")
        })
        .collect();
    MonomialIdeal::from_raw(universe.clone(), gens)
}

/// One irreducible ideal per strong cover. Fails with
/// [`Error::DecompositionMismatch`] if their intersection is not `I(D)`.
pub fn irreducible_decomposition(
    graph: &WeightedOrientedGraph,
    cap: usize,
) -> Result<Vec<(CoverPartition, MonomialIdeal)>> {
    let census = enumerate_strong_covers(graph, cap)?;
    let parts: Vec<(CoverPartition, MonomialIdeal)> = census
        .strong_covers
        .into_iter()
        .map(|p| {
            let ideal = irreducible_ideal(graph, &p);
            (p, ideal)
        })
        .collect();
    let meet = MonomialIdeal::intersect_all(graph.universe().clone(), parts.iter().map(|(_, i)| i))?;
    if meet != graph.edge_ideal() {
        return Err(Error::DecompositionMismatch);
    }
    Ok(parts)
}
