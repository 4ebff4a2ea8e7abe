//! Edge ideals of weighted oriented graphs: strong vertex covers,
//! irreducible decompositions, and ordinary versus symbolic powers.
//!
//! Everything here is exact monomial arithmetic. A [`WeightedOrientedGraph`]
//! owns the [`VariableUniverse`] of its edge ideal; ideals and monomials
//! carry a fingerprint of that universe and refuse to mix with others.
//!
//! ```
//! use wopow_core::{compare_powers, make_path, Limits, Orientation};
//!
//! let d = make_path(3, &[1, 2, 1, 1], &Orientation::Natural).unwrap();
//! let report = compare_powers(&d, 2, &Limits::default()).unwrap();
//! assert!(!report.equal);
//! assert_eq!(report.witness.unwrap().display(d.universe()).to_string(), "x1*x2^2*x3");
//! ```

pub mod cover;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod monomial;
pub mod symbolic;
pub mod theorems;
pub mod varset;

pub use cover::{
    enumerate_covers, enumerate_strong_covers, has_minimal_strong_property, irreducible_decomposition,
    irreducible_ideal, is_strong, is_total_cover_strong, is_vertex_cover, partition_l, CoverPartition,
    MaximalGroup, StrongCoverCensus, DEFAULT_COVER_CAP,
};
pub use error::{Error, Result};
pub use graph::{
    make_clique_sum, make_complete_multipartite, make_cycle, make_path, make_star, random_graph,
    random_sink_weighted_bipartite, GraphJson, Orientation, RandomGraphParams, VertexJson,
    WeightedOrientedGraph,
};
pub use ideal::{IdealJson, MonomialIdeal};
pub use monomial::{Monomial, UniverseId, VariableUniverse, EXPONENT_CAP};
pub use symbolic::{
    clamp_structure_check, compare_powers, compare_powers_detailed, edge_ideal, ordinary_power,
    phi_commutation_check, phi_weights, symbolic_power_grouped, symbolic_power_localized, ClampCheck,
    EqualityReport, Limits, PhiCheck, PowerComparison,
};
pub use theorems::{theorem_predicate, Status, TheoremTag, TheoremVerdict, WitnessCheck};
pub use varset::{VarSet, MAX_VARS};
