//! Shared inputs for the benchmarks in `benches/`.

use antimagic_core::{generate, GenSpec, Tree};

/// Seeded precondition tree with about `edges` edges and a spine of `2p`
/// even-degree vertices.
pub fn fixture(edges: usize, p: usize, seed: u64) -> Tree {
    let spine = 2 * p - 1;
    let budget = (edges.saturating_sub(spine).max(6) + 1) & !1;
    generate(&GenSpec::new(p, budget, seed)).expect("fixture spec is feasible")
}
