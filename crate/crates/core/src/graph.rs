//! Weighted oriented graphs `D = (V, E, w)`.
//!
//! Vertices double as the variables of the polynomial ring, so every graph
//! carries the [`VariableUniverse`] its edge ideal lives in. Source vertices
//! always have weight 1; [`WeightedOrientedGraph::build`] resets any other
//! input weight on a source and records which vertices it touched.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::VariableUniverse;
use crate::varset::VarSet;

#[derive(Clone, Debug)]
pub struct WeightedOrientedGraph {
    universe: Arc<VariableUniverse>,
    weights: Vec<u32>,
    edges: Vec<(usize, usize)>,
    out_nbrs: Vec<VarSet>,
    in_nbrs: Vec<VarSet>,
    normalized: VarSet,
}

impl PartialEq for WeightedOrientedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.weights == other.weights
            && self.edges == other.edges
    }
}

impl Eq for WeightedOrientedGraph {}

/// How the edges of a family graph are directed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Every edge in the family's reference direction (index order for
    /// paths and cycles, hub outward for stars, lower part to higher part
    /// for multipartite graphs).
    Natural,
    /// Each edge independently reversed with probability 1/2 from a ChaCha8
    /// stream seeded with the given value.
    Seeded(u64),
    /// One flag per underlying edge in the family's edge order; `true`
    /// reverses that edge.
    Explicit(Vec<bool>),
}

impl Orientation {
    fn flips(&self, count: usize) -> Result<Vec<bool>> {
        match self {
            Orientation::Natural => Ok(vec![false; count]),
            Orientation::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..count).map(|_| rng.gen_bool(0.5)).collect())
            }
            Orientation::Explicit(flags) => {
                if flags.len() != count {
                    return Err(Error::LengthMismatch {
                        what: "orientation flags",
                        expected: count,
                        got: flags.len(),
                    });
                }
                Ok(flags.clone())
            }
        }
    }
}

impl WeightedOrientedGraph {
    /// Builds a graph from vertex names, weights and `(tail, head)` name pairs.
    pub fn build<S: AsRef<str>>(
        names: &[S],
        weights: &[u32],
        edges: &[(S, S)],
    ) -> Result<Self> {
        let universe = VariableUniverse::new(names.iter().map(|s| s.as_ref().to_string()))?;
        let edges = edges
            .iter()
            .map(|(t, h)| Ok((universe.lookup(t.as_ref())?, universe.lookup(h.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(universe, weights.to_vec(), edges)
    }

    pub fn from_indices(
        universe: Arc<VariableUniverse>,
        mut weights: Vec<u32>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = universe.len();
        if weights.len() != n {
            return Err(Error::LengthMismatch {
                what: "weights",
                expected: n,
                got: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight(universe.name(i).to_string()));
        }
        let mut out_nbrs = vec![VarSet::EMPTY; n];
        let mut in_nbrs = vec![VarSet::EMPTY; n];
        for &(t, h) in &edges {
            if t >= n || h >= n {
                return Err(Error::UnknownVariable(format!("#{}", t.max(h))));
            }
            let (tn, hn) = (universe.name(t).to_string(), universe.name(h).to_string());
            if t == h {
                return Err(Error::SelfLoop(tn));
            }
            if out_nbrs[t].contains(h) {
                return Err(Error::DuplicateEdge(tn, hn));
            }
            if out_nbrs[h].contains(t) {
                return Err(Error::AntiParallelEdge(tn, hn));
            }
            out_nbrs[t].insert(h);
            in_nbrs[h].insert(t);
        }
        edges.sort_unstable();
        let mut normalized = VarSet::EMPTY;
        for v in 0..n {
            if in_nbrs[v].is_empty() && weights[v] != 1 {
                weights[v] = 1;
                normalized.insert(v);
            }
        }
        Ok(WeightedOrientedGraph {
            universe,
            weights,
            edges,
            out_nbrs,
            in_nbrs,
            normalized,
        })
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn vertices(&self) -> VarSet {
        self.universe.all()
    }

    pub fn name(&self, v: usize) -> &str {
        self.universe.name(v)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    /// Directed edges `(tail, head)` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sources whose supplied weight was reset to 1 at construction.
    pub fn normalized_sources(&self) -> VarSet {
        self.normalized
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVariable(format!("#{v}")))
        }
    }

    pub fn out_neighbors(&self, v: usize) -> Result<VarSet> {
        self.check_vertex(v)?;
        Ok(self.out_nbrs[v])
    }

    pub fn in_neighbors(&self, v: usize) -> Result<VarSet> {
        self.check_vertex(v)?;
        Ok(self.in_nbrs[v])
    }

    pub fn neighbors(&self, v: usize) -> Result<VarSet> {
        self.check_vertex(v)?;
        Ok(self.out_nbrs[v].union(self.in_nbrs[v]))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub(crate) fn out_of(&self, v: usize) -> VarSet {
        self.out_nbrs[v]
    }

    pub(crate) fn in_of(&self, v: usize) -> VarSet {
        self.in_nbrs[v]
    }

    pub(crate) fn nbrs_of(&self, v: usize) -> VarSet {
        self.out_nbrs[v].union(self.in_nbrs[v])
    }

    /// Vertices of non-trivial weight.
    pub fn v_plus(&self) -> VarSet {
        (0..self.vertex_count())
            .filter(|&v| self.weights[v] >= 2)
            .collect()
    }

    /// Vertices with no incoming edge.
    pub fn sources(&self) -> VarSet {
        (0..self.vertex_count())
            .filter(|&v| self.in_nbrs[v].is_empty())
            .collect()
    }

    /// Vertices with no outgoing edge.
    pub fn sinks(&self) -> VarSet {
        (0..self.vertex_count())
            .filter(|&v| self.out_nbrs[v].is_empty())
            .collect()
    }

    /// True when every vertex of non-trivial weight is a sink.
    pub fn is_sink_only_vplus(&self) -> bool {
        self.v_plus().is_subset(self.sinks())
    }

    /// `N⁺(S)`: union of out-neighbourhoods.
    pub fn out_neighborhood(&self, set: VarSet) -> VarSet {
        set.iter()
            .fold(VarSet::EMPTY, |acc, v| acc.union(self.out_nbrs[v]))
    }

    /// Induced subgraph on `V \ removed`, in a fresh universe of the remaining
    /// names. Vertices that end up as sources get weight 1.
    pub fn delete_vertices(&self, removed: VarSet) -> Result<WeightedOrientedGraph> {
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !removed.contains(*v))
            .collect();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in keep.iter().enumerate() {
            new_index[v] = k;
        }
        let universe = VariableUniverse::new(keep.iter().map(|&v| self.name(v).to_string()))?;
        let weights = keep.iter().map(|&v| self.weights[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|(t, h)| !removed.contains(*t) && !removed.contains(*h))
            .map(|&(t, h)| (new_index[t], new_index[h]))
            .collect();
        Self::from_indices(universe, weights, edges)
    }

    fn with_weights(&self, weights: Vec<u32>) -> WeightedOrientedGraph {
        Self::from_indices(self.universe.clone(), weights, self.edges.clone())
            .expect("reweighting keeps a valid graph")
    }

    /// `I(D)`: one generator `x_t * x_h^{w_h}` per edge `(x_t, x_h)`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let n = self.vertex_count();
        let gens = self
            .edges
            .iter()
            .map(|&(t, h)| {
                let mut exps = vec![0; n];
                exps[t] = 1;
                exps[h] = self.weights[h];
                self.universe.monomial(&exps).expect("weights are below the exponent cap")
            })
            .collect();
        MonomialIdeal::from_raw(self.universe.clone(), gens)
    }

    /// Resets weighted sinks to weight 1. Returns the new graph and the set
    /// `U` of vertices that were reset.
    pub fn sink_weights_to_one(&self) -> (WeightedOrientedGraph, VarSet) {
        let reset = self.sinks().intersection(self.v_plus());
        let weights = (0..self.vertex_count())
            .map(|v| if reset.contains(v) { 1 } else { self.weights[v] })
            .collect();
        (self.with_weights(weights), reset)
    }

    /// Maps every weight `w` to `min(w, 2)`.
    pub fn clamp_weights_to_two(&self) -> WeightedOrientedGraph {
        self.with_weights(self.weights.iter().map(|&w| w.min(2)).collect())
    }

    /// Connected components of the underlying graph restricted to `within`.
    pub fn components(&self, within: VarSet) -> Vec<VarSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.iter().next() {
            let mut comp = VarSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VarSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.nbrs_of(v));
                }
                frontier = next.intersection(within).difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(self.vertices()).len() <= 1
    }

    /// Vertex order around the cycle when the underlying graph is a single
    /// cycle, starting at vertex 0 and following its out-edge when it has one.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n < 3 || !self.is_connected() || (0..n).any(|v| self.nbrs_of(v).len() != 2) {
            return None;
        }
        let first = self
            .out_nbrs[0]
            .iter()
            .next()
            .unwrap_or_else(|| self.nbrs_of(0).iter().next().unwrap());
        let mut order = vec![0, first];
        while order.len() < n {
            let cur = order[order.len() - 1];
            let prev = order[order.len() - 2];
            let next = self.nbrs_of(cur).difference(VarSet::singleton(prev));
            order.push(next.iter().next()?);
        }
        Some(order)
    }

    /// True when the underlying graph is a cycle and every vertex has exactly
    /// one in- and one out-neighbour.
    pub fn is_naturally_oriented_cycle(&self) -> bool {
        self.cycle_order().is_some()
            && (0..self.vertex_count())
                .all(|v| self.out_nbrs[v].len() == 1 && self.in_nbrs[v].len() == 1)
    }

    /// Vertex order of a naturally oriented path, from its source to its sink.
    pub fn natural_path_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() || self.edges.len() != n - 1 {
            return None;
        }
        let starts: Vec<usize> = self.sources().iter().collect();
        if starts.len() != 1 || (0..n).any(|v| self.out_nbrs[v].len() > 1) {
            return None;
        }
        let mut order = vec![starts[0]];
        while let Some(next) = self.out_nbrs[*order.last().unwrap()].iter().next() {
            order.push(next);
        }
        (order.len() == n).then_some(order)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: (0..self.vertex_count())
                .map(|v| VertexJson {
                    name: self.name(v).to_string(),
                    weight: self.weights[v],
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(t, h)| [self.name(t).to_string(), self.name(h).to_string()])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let names: Vec<&str> = json.vertices.iter().map(|v| v.name.as_str()).collect();
        let weights: Vec<u32> = json.vertices.iter().map(|v| v.weight).collect();
        let edges: Vec<(&str, &str)> = json
            .edges
            .iter()
            .map(|[t, h]| (t.as_str(), h.as_str()))
            .collect();
        Self::build(&names, &weights, &edges)
    }
}

/// File form of a graph. Vertex order fixes the variable order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub name: String,
    pub weight: u32,
}

fn oriented(
    names: Vec<String>,
    weights: &[u32],
    underlying: Vec<(usize, usize)>,
    orientation: &Orientation,
) -> Result<WeightedOrientedGraph> {
    if weights.len() != names.len() {
        return Err(Error::LengthMismatch {
            what: "weights",
            expected: names.len(),
            got: weights.len(),
        });
    }
    let flips = orientation.flips(underlying.len())?;
    let edges = underlying
        .into_iter()
        .zip(flips)
        .map(|((a, b), flip)| if flip { (b, a) } else { (a, b) })
        .collect();
    let universe = VariableUniverse::new(names)?;
    WeightedOrientedGraph::from_indices(universe, weights.to_vec(), edges)
}

/// Cycle `C_n` on `x1..xn`; natural edges are `(x_i, x_{i+1})` and `(x_n, x_1)`.
pub fn make_cycle(
    n: usize,
    weights: &[u32],
    orientation: &Orientation,
) -> Result<WeightedOrientedGraph> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    oriented(names, weights, edges, orientation)
}

/// Path of length `n` on `x1..x_{n+1}`; natural edges are `(x_i, x_{i+1})`.
pub fn make_path(
    n: usize,
    weights: &[u32],
    orientation: &Orientation,
) -> Result<WeightedOrientedGraph> {
    if n < 1 {
        return Err(Error::InvalidFamily("path needs length >= 1".into()));
    }
    let names = (1..=n + 1).map(|i| format!("x{i}")).collect();
    let edges = (0..n).map(|i| (i, i + 1)).collect();
    oriented(names, weights, edges, orientation)
}

/// Star `S_n`: hub `x0` joined to leaves `x1..xn`. Weights are indexed from
/// the hub. Natural edges point from the hub to the leaves.
pub fn make_star(
    n: usize,
    weights: &[u32],
    orientation: &Orientation,
) -> Result<WeightedOrientedGraph> {
    if n < 1 {
        return Err(Error::InvalidFamily("star needs at least one leaf".into()));
    }
    let names = (0..=n).map(|i| format!("x{i}")).collect();
    let edges = (1..=n).map(|i| (0, i)).collect();
    oriented(names, weights, edges, orientation)
}

/// Odd cycles `(x1, .., x_{2n+1})` and `(x1, y2, .., y_{2m+1})` glued at `x1`.
/// Weights list the `x` vertices first, then `y2..y_{2m+1}`.
pub fn make_clique_sum(
    n: usize,
    m: usize,
    weights: &[u32],
    orientation: &Orientation,
) -> Result<WeightedOrientedGraph> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidFamily(format!(
            "clique sum needs n, m >= 1, got n={n}, m={m}"
        )));
    }
    let xs = 2 * n + 1;
    let ys = 2 * m;
    let mut names: Vec<String> = (1..=xs).map(|i| format!("x{i}")).collect();
    names.extend((2..=ys + 1).map(|i| format!("y{i}")));
    let mut edges: Vec<(usize, usize)> = (0..xs).map(|i| (i, (i + 1) % xs)).collect();
    let y = |k: usize| xs + k; // y_{k+2}
    edges.push((0, y(0)));
    edges.extend((0..ys - 1).map(|k| (y(k), y(k + 1))));
    edges.push((y(ys - 1), 0));
    oriented(names, weights, edges, orientation)
}

/// Complete multipartite graph with parts of the given sizes. Vertex
/// `x{i}_{j}` is the `j`-th vertex of part `i`; every pair in different parts
/// is adjacent. Natural edges point from the lower part to the higher one.
pub fn make_complete_multipartite(
    part_sizes: &[usize],
    weights: &[u32],
    orientation: &Orientation,
) -> Result<WeightedOrientedGraph> {
    if part_sizes.len() < 2 || part_sizes.contains(&0) {
        return Err(Error::InvalidFamily(
            "multipartite graph needs at least two nonempty parts".into(),
        ));
    }
    let mut names = Vec::new();
    let mut part_of = Vec::new();
    for (p, &size) in part_sizes.iter().enumerate() {
        for j in 1..=size {
            names.push(format!("x{}_{}", p + 1, j));
            part_of.push(p);
        }
    }
    let mut edges = Vec::new();
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            if part_of[a] != part_of[b] {
                edges.push((a, b));
            }
        }
    }
    oriented(names, weights, edges, orientation)
}

/// Parameters for seeded random graphs on `x1..xn`.
#[derive(Clone, Debug)]
pub struct RandomGraphParams {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub edge_probability: f64,
    pub max_weight: u32,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        RandomGraphParams {
            min_vertices: 2,
            max_vertices: 7,
            edge_probability: 0.5,
            max_weight: 3,
        }
    }
}

/// Random graph with at least one edge: each vertex pair is joined with the
/// given probability in a random direction; weights are uniform in
/// `1..=max_weight`.
pub fn random_graph(params: &RandomGraphParams, rng: &mut impl Rng) -> WeightedOrientedGraph {
    let n = rng.gen_range(params.min_vertices.max(2)..=params.max_vertices.max(2));
    loop {
        let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=params.max_weight)).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(params.edge_probability) {
                    edges.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let universe = VariableUniverse::indexed(n).expect("indexed universe");
        return WeightedOrientedGraph::from_indices(universe, weights, edges)
            .expect("random edges are simple");
    }
}

/// Random orientation of a complete bipartite graph whose weighted vertices
/// are all sinks.
pub fn random_sink_weighted_bipartite(
    left: usize,
    right: usize,
    max_weight: u32,
    rng: &mut impl Rng,
) -> WeightedOrientedGraph {
    let n = left + right;
    let mut edges = Vec::new();
    for a in 0..left {
        for b in left..n {
            edges.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
        }
    }
    let universe = VariableUniverse::indexed(n).expect("indexed universe");
    let probe = WeightedOrientedGraph::from_indices(universe.clone(), vec![1; n], edges.clone())
        .expect("bipartite edges are simple");
    let sinks = probe.sinks();
    let weights = (0..n)
        .map(|v| {
            if sinks.contains(v) {
                rng.gen_range(1..=max_weight)
            } else {
                1
            }
        })
        .collect();
    WeightedOrientedGraph::from_indices(universe, weights, edges).expect("valid graph")
}
