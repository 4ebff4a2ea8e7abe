//! Graphs shared by the benchmarks in `benches/`.

use wopow_core::{make_cycle, Orientation, WeightedOrientedGraph};

/// Five-cycle with a single weighted vertex of weight 2.
pub fn five_cycle() -> WeightedOrientedGraph {
    WeightedOrientedGraph::build(
        &["x1", "x2", "x3", "x4", "x5"],
        &[1, 1, 1, 1, 2],
        &[("x1", "x2"), ("x1", "x5"), ("x3", "x2"), ("x3", "x4"), ("x5", "x4")],
    )
    .expect("valid graph")
}

/// Naturally oriented `C_n` with weights alternating 2, 1.
pub fn natural_cycle(n: usize) -> WeightedOrientedGraph {
    let weights: Vec<u32> = (0..n).map(|i| if i % 2 == 0 { 2 } else { 1 }).collect();
    make_cycle(n, &weights, &Orientation::Natural).expect("valid cycle")
}
